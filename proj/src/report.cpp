#include "efm/report.hpp"

#include <sstream>

namespace efm {

namespace {

Json strings(const std::vector<Integer>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json strings(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json matrix_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
    return out;
}

}  // namespace

Json to_json(const RatInterval& iv)
{
    return {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
}

Json to_json(const IntPoly& p)
{
    return to_string(p);
}

Json to_json(const ExponentData& ed)
{
    Json points = Json::array();
    for (const auto& pe : ed.points) {
        Json j;
        j["point"] = pe.point;
        j["kind"] = to_string(pe.kind);
        if (pe.kind == PointExponents::Kind::Regular) {
            j["rational_exponents"] = strings(pe.exponents.rational);
            j["other_roots"] = pe.exponents.other_count;
        }
        j["modulus_bound"] = to_string(pe.modulus_bound);
        points.push_back(std::move(j));
    }
    return {{"points", std::move(points)}, {"bound", to_string(ed.bound)}, {"bound_ceil", to_string(ed.bound_ceil)}};
}

Json to_json(const AuxiliaryBasis& b)
{
    Json j;
    j["n"] = b.n;
    j["eps1"] = to_string(b.eps1);
    j["tau"] = b.tau;
    j["kernel_dimension"] = b.kernel_dimension;
    Json polys = Json::array();
    for (const auto& p : b.P) polys.push_back(to_string(p));
    j["P"] = std::move(polys);
    j["achieved_order"] = b.achieved_order;
    j["achieved_order_is_lower_bound"] = b.order_at_limit;
    j["height"] = to_string(b.height);
    return j;
}

Json to_json(const FormsLadder& ladder)
{
    Json rows = Json::array();
    for (const auto& row : ladder.P) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(to_string(p));
        rows.push_back(std::move(r));
    }
    return {{"length", ladder.length()},
            {"T", to_string(ladder.T)},
            {"P", std::move(rows)},
            {"strict_degree_bound", ladder.strict_degree_bound},
            {"verified_order", ladder.verified_order}};
}

Json to_json(const BoundCertificate& c)
{
    Json j;
    j["status"] = to_string(c.status);
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["n"] = c.n;
    j["eps1"] = to_string(c.eps1);
    j["tau"] = c.tau;
    j["achieved_order"] = c.achieved_order;
    j["height"] = to_string(c.height);
    j["ladder_length"] = c.ladder_length;
    j["strict_degree_bound"] = c.strict_degree_bound;
    j["target"] = strings(c.target);
    j["selected_rows"] = c.selected_rows;
    j["matrix"] = matrix_json(c.matrix);
    j["ell"] = c.ell;
    j["delta"] = to_string(c.delta);
    j["cofactors"] = strings(c.cofactors);
    j["form_bounds"] = strings(c.form_bounds);
    j["f_ell"] = to_json(c.f_ell);
    if (c.status == BoundCertificate::Status::Certified) {
        j["lower_bound"] = to_string(c.lower_bound);
        j["lower_bound_decimal"] = to_decimal(c.lower_bound, 20);
    }
    return j;
}

Json to_json(const std::vector<Attempt>& attempts)
{
    Json out = Json::array();
    for (const auto& a : attempts) {
        Json j;
        j["n"] = a.n;
        j["outcome"] = a.outcome;
        if (!a.detail.empty()) j["detail"] = a.detail;
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const LogBoundResult& r)
{
    Json j;
    j["xi"] = to_string(r.xi);
    j["beta"] = to_string(r.beta);
    j["status"] = to_string(r.status);
    j["path"] = r.path;
    j["bound"] = to_string(r.bound);
    j["bound_decimal"] = to_decimal(r.bound, 20);
    j["forms_bound"] = to_string(r.forms_bound);
    j["direct_bound"] = to_string(r.direct_bound);
    j["omega_upper"] = to_string(r.omega_upper);
    j["f_value"] = to_json(r.f_value);
    j["exp_value"] = to_json(r.exp_value);
    j["guard_holds"] = r.guard_holds;
    j["oracle_distance"] = r.oracle_distance;
    j["beta_dependent"] = {{"E", to_string(r.E)}, {"C", to_string(r.C)}, {"D", to_string(r.D)}};
    Json fixed;
    fixed["m"] = r.m;
    fixed["p"] = r.p;
    fixed["q"] = r.q;
    fixed["T"] = to_string(r.T);
    fixed["n0"] = r.n0 ? Json(to_string(*r.n0)) : Json(nullptr);
    j["beta_independent"] = std::move(fixed);
    j["n_used"] = r.n_used();
    if (r.forms) j["forms_certificate"] = to_json(*r.forms);
    if (!r.forms_failure.empty()) j["forms_failure"] = r.forms_failure;
    j["attempts"] = to_json(r.attempts);
    return j;
}

Json params_report(const DiffSystem& sys)
{
    const SystemParams p = extract_params(sys);
    Json j;
    j["m"] = sys.dim();
    j["labels"] = sys.labels();
    j["p"] = p.p;
    j["q"] = p.q;
    j["E"] = to_string(p.E);
    j["T"] = to_string(p.T);
    j["ladder_T"] = to_string(sys.ladder_multiplier());
    if (sys.growth()) {
        j["growth"] = {{"C", to_string(sys.growth()->C)},
                       {"D", to_string(sys.growth()->D)},
                       {"provenance", to_string(sys.growth()->provenance)}};
    } else {
        j["growth"] = nullptr;
    }
    try {
        const ExponentData ed = exponent_data(sys);
        j["exponents"] = to_json(ed);
        const N0Bound n0 = n0_bound(sys.dim(), p.q, ed.bound_ceil);
        j["n0"] = to_string(n0.value);
    } catch (const Error& e) {
        j["exponents"] = {{"error", e.what()}};
        j["n0"] = nullptr;
    }
    return j;
}

std::string scan_csv(const std::vector<LogBoundResult>& rows)
{
    std::ostringstream out;
    out << "b,a,bound,oracle_distance,path,n_used\n";
    for (const auto& r : rows) {
        out << to_string(den(r.beta)) << ',' << to_string(num(r.beta)) << ',' << to_string(r.bound) << ','
            << r.oracle_distance << ',' << r.path << ',' << r.n_used() << '\n';
    }
    return out.str();
}

}  // namespace efm
