#include "efm/report.hpp"
#include "efm/sysio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace efm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 2;
constexpr int kExitInput = 3;

struct Options {
    std::string system;
    std::string xi = "1";
    std::string target;
    std::string approx;
    std::string eps1;
    std::string window;
    std::string csv;
    int n = 0;
    int n_start = 1;
    int n_max = 0;
    unsigned precision = 256;
    long bmax = 0;
    unsigned jobs = 1;
    long m = 0;
    long q = 0;
    std::string exponent_bound;
};

void print(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

ParsedSystem open_system(const std::string& source)
{
    ParsedSystem ps = resolve_system(source);
    for (const auto& w : ps.warnings) std::cerr << "warning: " << w << "\n";
    return ps;
}

std::vector<Integer> parse_target(const std::string& text)
{
    std::vector<Integer> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const Rational r = parse_rational(item);
        if (!is_integer(r)) throw Error(ErrorCode::Parse, "target entries must be integers, got \"" + item + "\"");
        out.push_back(num(r));
    }
    return out;
}

// Default n-max: four times the zero-estimate bound of the system.
int default_n_max(const DiffSystem& sys)
{
    const SystemParams p = extract_params(sys);
    const ExponentData ed = exponent_data(sys);
    return static_cast<int>(Integer(4 * n0_bound(sys.dim(), p.q, ed.bound_ceil).value).get_si());
}

BoundConfig bound_config(const Options& o, std::size_t m)
{
    BoundConfig c;
    c.eps1 = o.eps1.empty() ? default_eps1(m) : parse_rational(o.eps1);
    c.precision = o.precision;
    return c;
}

int run_params(const Options& o)
{
    const DiffSystem sys = open_system(o.system).system;
    Json j;
    j["command"] = {{"name", "params"}, {"system", o.system}};
    j["params"] = params_report(sys);
    print(j);
    return kExitOk;
}

int run_n0(const Options& o)
{
    const N0Bound b = n0_bound(static_cast<std::size_t>(o.m), static_cast<int>(o.q), ceil(parse_rational(o.exponent_bound)));
    Json j;
    j["command"] = {{"name", "n0"}, {"m", o.m}, {"q", o.q}, {"exponent_bound", o.exponent_bound}};
    j["n0"] = to_string(b.value);
    print(j);
    return kExitOk;
}

int run_construct(const Options& o)
{
    const DiffSystem sys = open_system(o.system).system;
    const Rational eps1 = o.eps1.empty() ? default_eps1(sys.dim()) : parse_rational(o.eps1);
    const AuxiliaryBasis basis = construct(sys, o.n, eps1);
    const SystemParams p = extract_params(sys);
    const int K = ladder_length(sys.dim(), p.q, p.p, o.n, eps1);
    Json j;
    j["command"] = {{"name", "construct"}, {"system", o.system}, {"n", o.n}, {"eps1", to_string(eps1)}};
    j["params"] = {{"p", p.p}, {"q", p.q}, {"E", to_string(p.E)}, {"T", to_string(p.T)}, {"t1", K - static_cast<int>(sys.dim())}};
    j["basis"] = to_json(basis);
    j["ladder"] = to_json(build_ladder(basis, sys, K));
    print(j);
    return kExitOk;
}

int run_bound(const Options& o)
{
    const DiffSystem sys = open_system(o.system).system;
    const Rational xi = parse_rational(o.xi);
    const std::vector<Integer> target = parse_target(o.target);
    const int n_max = o.n_max > 0 ? o.n_max : default_n_max(sys);
    const BoundConfig config = bound_config(o, sys.dim());
    Json j;
    j["command"] = {{"name", "bound"},     {"system", o.system},       {"xi", to_string(xi)},
                    {"target", o.target},  {"n_start", o.n_start},     {"n_max", n_max},
                    {"eps1", to_string(*config.eps1)}, {"precision", config.precision}};
    try {
        const AdaptiveResult r = adaptive_bound(sys, xi, target, o.n_start, n_max, config);
        j["status"] = "certified";
        j["certificate"] = to_json(r.certificate);
        j["attempts"] = to_json(r.attempts);
        print(j);
        return kExitOk;
    } catch (const ExhaustedError& e) {
        j["status"] = "exhausted";
        j["error"] = e.what();
        j["attempts"] = to_json(e.attempts());
        print(j);
        return kExitNotCertified;
    }
}

LogConfig log_config(const Options& o)
{
    LogConfig c;
    c.bound.precision = o.precision;
    c.n_start = o.n_start;
    if (o.n_max > 0) c.n_max = o.n_max;
    c.jobs = o.jobs;
    return c;
}

int run_logbound(const Options& o)
{
    const DiffSystem sys = open_system(o.system).system;
    const Rational xi = parse_rational(o.xi);
    const Rational beta = parse_rational(o.approx);
    const LogConfig config = log_config(o);
    Json j;
    j["command"] = {{"name", "logbound"}, {"system", o.system}, {"xi", to_string(xi)},
                    {"approx", to_string(beta)}, {"n_max", o.n_max > 0 ? Json(o.n_max) : Json("4*n0")},
                    {"precision", o.precision}};
    const LogBoundResult r = log_lower_bound(sys, xi, beta, config);
    j["result"] = to_json(r);
    print(j);
    return r.status == LogBoundResult::Status::Certified ? kExitOk : kExitNotCertified;
}

int run_scan(const Options& o)
{
    const DiffSystem sys = open_system(o.system).system;
    const Rational xi = parse_rational(o.xi);
    const Rational window = parse_rational(o.window);
    const LogConfig config = log_config(o);
    const auto rows = measure_scan(sys, xi, o.bmax, window, config);
    // the job count is left out of the echo so reports match across --jobs
    Json j;
    j["command"] = {{"name", "scan"}, {"system", o.system}, {"xi", to_string(xi)}, {"bmax", o.bmax},
                    {"window", to_string(window)}, {"n_max", o.n_max > 0 ? Json(o.n_max) : Json("4*n0")},
                    {"precision", o.precision}};
    Json table = Json::array();
    bool all = true;
    for (const auto& r : rows) {
        Json row;
        row["b"] = to_string(den(r.beta));
        row["a"] = to_string(num(r.beta));
        row["status"] = to_string(r.status);
        row["bound"] = to_string(r.bound);
        row["bound_decimal"] = to_decimal(r.bound, 20);
        row["oracle_distance"] = r.oracle_distance;
        row["path"] = r.path;
        row["n_used"] = r.n_used();
        table.push_back(std::move(row));
        all = all && r.status == LogBoundResult::Status::Certified;
    }
    j["rows"] = std::move(table);
    try {
        const ExponentFit fit = exponent_fit(rows);
        std::ostringstream c, d;
        c.precision(6);
        d.precision(6);
        c << fit.c;
        d << fit.d;
        j["fit"] = {{"c", c.str()}, {"d", d.str()}, {"points", fit.points}};
    } catch (const Error& e) {
        j["fit"] = {{"error", e.what()}};
    }
    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.csv);
        out << scan_csv(rows);
    }
    print(j);
    return all ? kExitOk : kExitNotCertified;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ExhaustedN:
    case ErrorCode::RankDeficientLadder:
    case ErrorCode::TargetInSpanFailure:
        return kExitNotCertified;
    default:
        return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified lower bounds for linear forms in values of E-functions"};
    app.require_subcommand(1);
    Options o;

    auto* params = app.add_subcommand("params", "print p, q, E, T, exponent data and the n0 bound");
    params->add_option("system", o.system, "system file or catalog:NAME[:PARAM...]")->required();

    auto* cons = app.add_subcommand("construct", "auxiliary polynomials and ladder at a fixed n");
    cons->add_option("system", o.system)->required();
    cons->add_option("--n", o.n, "degree bound")->required()->check(CLI::NonNegativeNumber);
    cons->add_option("--eps1", o.eps1, "rational in (0, 1/(2m-1)); default 1/(2m)");

    auto* bound = app.add_subcommand("bound", "certified lower bound on |sum a_i f_i(xi)|");
    bound->add_option("system", o.system)->required();
    bound->add_option("--xi", o.xi, "evaluation point p/q")->required();
    bound->add_option("--target", o.target, "comma-separated integers a_1,...,a_m")->required();
    bound->add_option("--n-start", o.n_start)->check(CLI::PositiveNumber);
    bound->add_option("--n-max", o.n_max, "default 4 n0");
    bound->add_option("--eps1", o.eps1);
    bound->add_option("--precision", o.precision, "interval width 2^-BITS");

    auto* logb = app.add_subcommand("logbound", "certified lower bound on |ln f_1(xi) - a/b|");
    logb->add_option("system", o.system)->required();
    logb->add_option("--xi", o.xi)->required();
    logb->add_option("--approx", o.approx, "rational a/b")->required();
    logb->add_option("--n-start", o.n_start)->check(CLI::PositiveNumber);
    logb->add_option("--n-max", o.n_max, "default 4 n0 of the augmented system");
    logb->add_option("--precision", o.precision);

    auto* scan = app.add_subcommand("scan", "log bounds for every reduced a/b near ln f_1(xi)");
    scan->add_option("system", o.system)->required();
    scan->add_option("--xi", o.xi)->required();
    scan->add_option("--bmax", o.bmax)->required()->check(CLI::PositiveNumber);
    scan->add_option("--window", o.window)->required();
    scan->add_option("--csv", o.csv, "write the table as CSV");
    scan->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    scan->add_option("--n-start", o.n_start)->check(CLI::PositiveNumber);
    scan->add_option("--n-max", o.n_max);
    scan->add_option("--precision", o.precision);

    auto* n0 = app.add_subcommand("n0", "zero-estimate bound 2(q+1)m^2(E+(q+1)m+1)");
    n0->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
    n0->add_option("--q", o.q)->required()->check(CLI::NonNegativeNumber);
    n0->add_option("--exponent-bound", o.exponent_bound)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*params) return run_params(o);
        if (*n0) return run_n0(o);
        if (*cons) return run_construct(o);
        if (*bound) return run_bound(o);
        if (*logb) return run_logbound(o);
        if (*scan) return run_scan(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitInput;
}
