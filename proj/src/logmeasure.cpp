#include "efm/logmeasure.hpp"

#include "efm/zeroestimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace efm {

const char* to_string(LogBoundResult::Status s)
{
    return s == LogBoundResult::Status::Certified ? "certified" : "not-certified";
}

namespace {

constexpr unsigned kResultBits = 128;

Rational width_for(unsigned precision)
{
    return make_rational(1, pow(Integer(2), precision));
}

}  // namespace

LogBoundResult log_lower_bound(const DiffSystem& f_sys, const Rational& xi, const Rational& beta,
                               const LogConfig& config)
{
    if (xi == 0 || f_sys.ladder_multiplier().evaluate(xi) == 0) {
        throw Error(ErrorCode::SingularEvaluationPoint, "xi T(xi) = 0 at xi = " + to_string(xi));
    }
    const Rational width = width_for(config.bound.precision);
    LogBoundResult out;
    out.xi = xi;
    out.beta = beta;

    const DiffSystem at_one = rescale(f_sys, xi);
    out.f_value = eval_component(at_one, 0, Rational(1), width);
    if (!strictly_positive(out.f_value)) {
        throw Error(ErrorCode::NonPositiveValue,
                    "f_1(" + to_string(xi) + ") is not certified positive; negate f or move xi");
    }
    const DiffSystem aug = augment_exp(at_one, beta);
    const SystemParams params = extract_params(aug);
    out.m = aug.dim();
    out.p = params.p;
    out.q = params.q;
    out.T = params.T;
    out.E = params.E;
    out.C = aug.require_growth().C;
    out.D = aug.require_growth().D;
    try {
        const ExponentData ed = exponent_data(aug);
        out.n0 = n0_bound(aug.dim(), params.q, ed.bound_ceil).value;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::MissingExponentBound || !config.n_max) throw;
    }
    const int n_max = config.n_max ? *config.n_max : static_cast<int>(Integer(4 * *out.n0).get_si());

    out.exp_value = eval_exp(beta, width);
    out.omega_upper = std::max(out.f_value.hi, out.exp_value.hi);
    const RatInterval diff = out.f_value - out.exp_value;
    out.direct_bound = round_down(abs_lower(diff) / out.omega_upper, kResultBits);
    out.guard_holds = 2 * abs_upper(diff) < out.f_value.lo;

    std::vector<Integer> target(aug.dim(), Integer(0));
    target.front() = 1;
    target.back() = -1;
    std::optional<Error> forms_error;
    try {
        AdaptiveResult r = adaptive_bound(aug, Rational(1), target, config.n_start, n_max, config.bound);
        out.attempts = std::move(r.attempts);
        out.forms_bound = round_down(r.certificate.lower_bound / out.omega_upper, kResultBits);
        out.forms = std::move(r.certificate);
    } catch (const ExhaustedError& e) {
        out.attempts = e.attempts();
        out.forms_failure = e.what();
        forms_error = e;
    }

    if (out.forms && out.forms_bound >= out.direct_bound) {
        out.bound = out.forms_bound;
        out.path = "forms";
    } else {
        out.bound = out.direct_bound;
        out.path = "interval";
    }
    if (out.bound <= 0) {
        if (forms_error) throw *forms_error;
        out.path.clear();
        return out;
    }
    out.status = LogBoundResult::Status::Certified;

    const RatInterval ln_f = eval_ln(out.f_value, width);
    out.oracle_distance = to_decimal(abs((ln_f - RatInterval(beta)).mid()), 30);
    return out;
}

std::vector<LogBoundResult> measure_scan(const DiffSystem& f_sys, const Rational& xi, long b_max,
                                         const Rational& window, const LogConfig& config)
{
    if (b_max < 1) throw Error(ErrorCode::InvalidArgument, "b_max must be at least 1");
    if (window < 0) throw Error(ErrorCode::InvalidArgument, "window must be nonnegative");
    if (xi == 0 || f_sys.ladder_multiplier().evaluate(xi) == 0) {
        throw Error(ErrorCode::SingularEvaluationPoint, "xi T(xi) = 0 at xi = " + to_string(xi));
    }

    std::vector<std::pair<long, Integer>> pairs;
    for (long b = 1; b <= b_max; ++b) {
        // membership |a/b - ln f| <= window is decided exactly; tighten the
        // interval for ln f until every candidate is settled
        for (unsigned precision = config.bound.precision;; precision *= 2) {
            if (precision > (1U << 14)) {
                throw Error(ErrorCode::InvalidArgument, "window boundary cannot be decided at b = " + std::to_string(b));
            }
            const Rational width = width_for(precision);
            const RatInterval ln_f = eval_ln(eval_component(f_sys, 0, xi, width), width);
            const Integer lo = floor((ln_f.lo - window) * b);
            const Integer hi = ceil((ln_f.hi + window) * b);
            std::vector<Integer> keep;
            bool undecided = false;
            for (Integer a = lo; a <= hi; ++a) {
                if (gcd(a, Integer(b)) != 1) continue;
                const RatInterval dist = RatInterval(make_rational(a, b)) - ln_f;
                if (abs_upper(dist) <= window) {
                    keep.push_back(a);
                } else if (abs_lower(dist) <= window) {
                    undecided = true;
                    break;
                }
            }
            if (!undecided) {
                for (auto& a : keep) pairs.emplace_back(b, a);
                break;
            }
        }
    }

    std::vector<std::optional<LogBoundResult>> rows(pairs.size());
    std::vector<std::exception_ptr> failures(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            try {
                rows[i] = log_lower_bound(f_sys, xi, make_rational(pairs[i].second, pairs[i].first), config);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(pairs.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<LogBoundResult> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
        out.push_back(std::move(*rows[i]));
    }
    return out;
}

ExponentFit exponent_fit(const std::vector<std::pair<long, Rational>>& samples)
{
    std::vector<std::pair<double, double>> pts;
    std::set<long> distinct;
    for (const auto& [b, bound] : samples) {
        if (b < 1 || bound <= 0 || bound >= 1) continue;
        pts.emplace_back(std::log(static_cast<double>(b)), std::log(-log_abs(bound)));
        distinct.insert(b);
    }
    if (distinct.size() < 3) {
        throw Error(ErrorCode::DegenerateFit, "need bounds below 1 at three or more distinct b");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(pts.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / k;
    return {std::exp(intercept), slope, pts.size()};
}

ExponentFit exponent_fit(const std::vector<LogBoundResult>& table)
{
    std::vector<std::pair<long, Rational>> samples;
    for (const auto& row : table) {
        if (row.status == LogBoundResult::Status::Certified) samples.emplace_back(den(row.beta).get_si(), row.bound);
    }
    return exponent_fit(samples);
}

}  // namespace efm
