#include "efm/forms.hpp"

#include "efm/matrix.hpp"

#include <algorithm>

namespace efm {

namespace {

constexpr unsigned kBoundBits = 128;
constexpr int kCutoffRounds = 5;

}  // namespace

int ladder_length(std::size_t m, int q, int p, int n, const Rational& eps1)
{
    const int mi = static_cast<int>(m);
    const int t1 = q * (mi - 1) * mi / 2 + static_cast<int>(floor(eps1 * n).get_si()) + p;
    return mi + t1;
}

FormsLadder build_ladder(const AuxiliaryBasis& basis, const DiffSystem& sys, int K)
{
    if (K < 1) throw Error(ErrorCode::InvalidArgument, "ladder length must be at least 1");
    const std::size_t m = sys.dim();
    const IntPoly& t = sys.ladder_multiplier();
    const IntPolyMatrix& ta = sys.cleared_matrix();

    FormsLadder out;
    out.n = basis.n;
    out.q = extract_params(sys).q;
    out.T = t;
    out.P.push_back(basis.P);
    out.degree_bounds.push_back(basis.n);
    for (int k = 1; k < K; ++k) {
        const auto& prev = out.P.back();
        std::vector<IntPoly> next(m);
        for (std::size_t j = 0; j < m; ++j) {
            IntPoly acc = t * prev[j].derivative();
            for (std::size_t i = 0; i < m; ++i) acc += prev[i] * ta(i, j);
            next[j] = std::move(acc);
        }
        const int bound = basis.n + k * out.q;
        for (const auto& p : next) {
            if (p.degree() > bound) throw std::logic_error("ladder polynomial exceeds its degree bound");
            if (p.degree() == bound) out.strict_degree_bound = false;
        }
        out.P.push_back(std::move(next));
        out.degree_bounds.push_back(bound);
    }

    const int order = basis.achieved_order + K * (out.q + 1) + 8;
    RatSeries prev = combination_series(sys, out.P[0], order);
    for (int k = 1; k < K; ++k) {
        RatSeries cur = combination_series(sys, out.P[static_cast<std::size_t>(k)], order);
        if (prev.derivative().times(t) != cur.truncate(order - 1)) {
            throw std::logic_error("ladder series identity fails at row " + std::to_string(k + 1));
        }
        prev = std::move(cur);
    }
    out.verified_order = order;
    return out;
}

IntegerForms evaluate_forms(const FormsLadder& ladder, const Rational& xi)
{
    if (xi == 0 || ladder.T.evaluate(xi) == 0) {
        throw Error(ErrorCode::SingularEvaluationPoint, "xi T(xi) = 0 at xi = " + to_string(xi));
    }
    const std::size_t K = ladder.P.size();
    const std::size_t m = ladder.P.front().size();
    IntegerForms out;
    out.xi = xi;
    out.rows = IntMatrix(K, m);
    for (std::size_t k = 0; k < K; ++k) {
        const Integer s = pow(den(xi), static_cast<unsigned long>(ladder.degree_bounds[k]));
        out.scales.push_back(s);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational v = ladder.P[k][i].evaluate(xi) * Rational(s);
            if (!is_integer(v)) throw std::logic_error("scaled form value is not an integer");
            out.rows(k, i) = num(v);
        }
    }
    return out;
}

const char* to_string(BoundCertificate::Status s)
{
    return s == BoundCertificate::Status::Certified ? "certified" : "not-certified";
}

namespace {

IntMatrix stack(const std::vector<std::vector<Integer>>& rows, std::size_t m)
{
    IntMatrix out(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < m; ++c) out(r, c) = rows[r][c];
    }
    return out;
}

struct FormValueBounds {
    std::vector<Rational> bounds;  // per ladder row 1..kmax
    bool tails_matter = false;
};

// |R_k(xi)| <= |(T d/dz)^{k-1} head (xi)| + propagated tail, for k <= kmax.
FormValueBounds bound_form_values(const AuxiliaryBasis& basis, const DiffSystem& sys, const Rational& xi,
                                  int kmax, int cutoff)
{
    const IntPoly& t = sys.ladder_multiplier();
    const RatPoly t_rat = to_rat(t);
    const RemainderSeries rem = remainder(basis, sys, cutoff);
    RatPoly head(rem.head.coefficients());
    TailMajorant tail = rem.tail;
    const Rational r = abs(xi);
    FormValueBounds out;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) {
            head = t_rat * head.derivative();
            tail = tail.derivative().times(t);
        }
        const Rational h = abs(head.evaluate(xi));
        const Rational tl = tail.sum(r);
        if (tl * Rational(1 << 20) > h) out.tails_matter = true;
        out.bounds.push_back(round_up(h + tl, kBoundBits));
    }
    return out;
}

}  // namespace

BoundCertificate certified_lower_bound(const DiffSystem& sys, const Rational& xi, const std::vector<Integer>& target,
                                       int n, const BoundConfig& config)
{
    const std::size_t m = sys.dim();
    if (target.size() != m) {
        throw Error(ErrorCode::InvalidArgument, "target has " + std::to_string(target.size()) +
                                                    " entries, expected " + std::to_string(m));
    }
    if (std::all_of(target.begin(), target.end(), [](const Integer& a) { return a == 0; })) {
        throw Error(ErrorCode::InvalidArgument, "target must be a nonzero vector");
    }
    if (xi == 0 || sys.ladder_multiplier().evaluate(xi) == 0) {
        throw Error(ErrorCode::SingularEvaluationPoint, "xi T(xi) = 0 at xi = " + to_string(xi));
    }
    sys.require_growth();

    BoundCertificate cert;
    cert.n = n;
    cert.eps1 = config.eps1.value_or(default_eps1(m));
    cert.target = target;
    const SystemParams params = extract_params(sys);
    const AuxiliaryBasis basis = construct(sys, n, cert.eps1);
    cert.tau = basis.tau;
    cert.achieved_order = basis.achieved_order;
    cert.order_at_limit = basis.order_at_limit;
    cert.height = basis.height;
    const int K = ladder_length(m, params.q, params.p, n, cert.eps1);
    cert.ladder_length = K;
    const FormsLadder ladder = build_ladder(basis, sys, K);
    cert.strict_degree_bound = ladder.strict_degree_bound;
    const IntegerForms forms = evaluate_forms(ladder, xi);

    if (rank(forms.rows) < m) {
        throw Error(ErrorCode::RankDeficientLadder,
                    "ladder rows at n = " + std::to_string(n) + " have rank below " + std::to_string(m));
    }
    // greedy selection in ladder order, seeded with the target row
    std::vector<std::vector<Integer>> chosen{target};
    std::vector<int> picked;
    for (int k = 0; k < K && chosen.size() < m; ++k) {
        chosen.push_back(forms.rows.row(static_cast<std::size_t>(k)));
        if (rank(stack(chosen, m)) == chosen.size()) {
            picked.push_back(k + 1);
        } else {
            chosen.pop_back();
        }
    }
    if (chosen.size() < m) {
        throw Error(ErrorCode::TargetInSpanFailure, "no ladder rows complete the target to a nonsingular matrix");
    }
    std::vector<std::vector<Integer>> ordered(chosen.begin() + 1, chosen.end());
    ordered.push_back(target);
    cert.selected_rows = picked;
    cert.matrix = stack(ordered, m);
    cert.delta = det_exact(cert.matrix);
    if (cert.delta == 0) {
        throw Error(ErrorCode::TargetInSpanFailure, "selected rows give a zero determinant");
    }

    // l maximizing the certified lower endpoint of |f_l(xi)| with Delta_{m,l} != 0
    const Rational width = make_rational(1, pow(Integer(2), config.precision));
    Rational best_lo = -1;
    for (std::size_t l = 0; l < m; ++l) {
        if (cofactor(cert.matrix, m - 1, l) == 0) continue;
        const RatInterval iv = eval_component(sys, l, xi, width);
        if (abs_lower(iv) > best_lo) {
            best_lo = abs_lower(iv);
            cert.ell = l + 1;
            cert.f_ell = iv;
        }
    }
    for (std::size_t j = 0; j < m; ++j) cert.cofactors.push_back(cofactor(cert.matrix, j, cert.ell - 1));
    if (best_lo <= 0) {
        cert.reason = "no component value with a nonzero cofactor is bounded away from 0";
        return cert;
    }

    const Rational lead = Rational(::abs(cert.delta)) * best_lo;
    const Integer& cof_target = cert.cofactors.back();
    Integer cof_max = 0;
    for (std::size_t j = 0; j + 1 < m; ++j) cof_max = std::max(cof_max, Integer(::abs(cert.cofactors[j])));

    const int kmax = picked.empty() ? 0 : *std::max_element(picked.begin(), picked.end());
    int cutoff = std::max(basis.achieved_order, basis.n) + K * (params.q + 1) + 16;
    Rational bound;
    for (int round = 0;; ++round) {
        cert.form_bounds.clear();
        Rational u_max = 0;
        bool tails_matter = false;
        if (kmax > 0) {
            const FormValueBounds fv = bound_form_values(basis, sys, xi, kmax, cutoff);
            tails_matter = fv.tails_matter;
            for (const int k : picked) {
                const Rational u = fv.bounds[static_cast<std::size_t>(k - 1)] *
                                   Rational(forms.scales[static_cast<std::size_t>(k - 1)]);
                cert.form_bounds.push_back(u);
                u_max = std::max(u_max, u);
            }
        }
        bound = (lead - Rational(static_cast<unsigned long>(m - 1)) * Rational(cof_max) * u_max) /
                Rational(::abs(cof_target));
        if (bound > 0 || !tails_matter || round + 1 == kCutoffRounds) break;
        cutoff *= 2;
    }
    if (bound > 0) {
        cert.status = BoundCertificate::Status::Certified;
        cert.lower_bound = round_down(bound, kBoundBits);
    } else {
        cert.reason = "form values too large relative to |Delta| |f_l(xi)|";
    }
    return cert;
}

ExhaustedError::ExhaustedError(const std::string& what, std::vector<Attempt> attempts)
    : Error(ErrorCode::ExhaustedN, what), attempts_(std::move(attempts))
{
}

AdaptiveResult adaptive_bound(const DiffSystem& sys, const Rational& xi, const std::vector<Integer>& target,
                              int n_start, int n_max, const BoundConfig& config)
{
    if (n_start < 1) throw Error(ErrorCode::InvalidArgument, "n_start must be at least 1");
    AdaptiveResult out;
    for (int n = n_start; n <= n_max; ++n) {
        try {
            BoundCertificate cert = certified_lower_bound(sys, xi, target, n, config);
            if (cert.status == BoundCertificate::Status::Certified) {
                out.attempts.push_back({n, "certified", ""});
                out.certificate = std::move(cert);
                return out;
            }
            out.attempts.push_back({n, "not-certified", cert.reason});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::RankDeficientLadder && e.code() != ErrorCode::TargetInSpanFailure) throw;
            out.attempts.push_back({n, to_string(e.code()), e.what()});
        }
    }
    std::string msg = "no certificate for n in [" + std::to_string(n_start) + ", " + std::to_string(n_max) + "]";
    if (!out.attempts.empty()) {
        const Attempt& last = out.attempts.back();
        msg += "; last attempt n = " + std::to_string(last.n) + ": " + last.outcome;
    }
    throw ExhaustedError(msg, std::move(out.attempts));
}

}  // namespace efm
