#include "efm/matrix.hpp"

#include <utility>

namespace efm {

namespace {

struct Echelon {
    IntMatrix m;                       // upper echelon form (fraction free)
    std::vector<std::size_t> pivots;   // pivot column of each leading row
    int sign = 1;                      // parity of row swaps
};

// Bareiss forward elimination to row echelon form. Entries stay integral
// because each division is by the previous pivot, which divides exactly.
Echelon bareiss(IntMatrix a)
{
    Echelon out;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
            out.sign = -out.sign;
        }
        const Integer piv = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * a(i, j) - lead * a(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, c) = 0;
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(a);
    return out;
}

}  // namespace

IntMatrix clear_row_denominators(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer d = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j).get_num() * (d / m(i, j).get_den());
        }
    }
    return out;
}

std::vector<Integer> primitive_vector(const std::vector<Rational>& v)
{
    Integer d = 1;
    for (const auto& x : v) d = lcm(d, x.get_den());
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer y = x.get_num() * (d / x.get_den());
        g = gcd(g, y);
        out.push_back(std::move(y));
    }
    if (g == 0) return out;
    for (const auto& y : out) {
        if (y != 0) {
            if (y < 0) g = -g;
            break;
        }
    }
    for (auto& y : out) y /= g;
    return out;
}

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m)
{
    if (m.cols() == 0) {
        throw Error(ErrorCode::InvalidArgument, "kernel of a matrix with no columns");
    }
    const Echelon e = bareiss(clear_row_denominators(m));
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (const auto c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t i = e.pivots.size(); i-- > 0;) {
            const std::size_t pc = e.pivots[i];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j] != 0 && e.m(i, j) != 0) acc += Rational(e.m(i, j)) * x[j];
            }
            x[pc] = -acc / Rational(e.m(i, pc));
        }
        basis.push_back(primitive_vector(x));
    }
    return basis;
}

Integer det_exact(const IntMatrix& m)
{
    if (!m.square()) {
        throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    const Echelon e = bareiss(m);
    if (e.pivots.size() < n) return 0;
    return e.sign < 0 ? Integer(-e.m(n - 1, n - 1)) : e.m(n - 1, n - 1);
}

Integer cofactor(const IntMatrix& m, std::size_t j, std::size_t l)
{
    if (!m.square()) {
        throw Error(ErrorCode::InvalidArgument, "cofactor of a non-square matrix");
    }
    if (j >= m.rows() || l >= m.cols()) {
        throw Error(ErrorCode::InvalidArgument, "cofactor index out of range");
    }
    const std::size_t n = m.rows();
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == j) continue;
        for (std::size_t k = 0, c = 0; k < n; ++k) {
            if (k == l) continue;
            minor(r, c++) = m(i, k);
        }
        ++r;
    }
    const Integer d = det_exact(minor);
    return (j + l) % 2 == 0 ? d : Integer(-d);
}

std::size_t rank(const IntMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m).pivots.size();
}

LinearSolve solve_linear(const RatMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows) {
        throw Error(ErrorCode::InvalidArgument, "right-hand side has wrong length");
    }
    // Gauss-Jordan on the augmented matrix over Q; systems here are tiny.
    RatMatrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
        aug(i, cols) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && aug(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(p, j), aug(r, j));
        }
        const Rational inv = 1 / aug(r, c);
        for (std::size_t j = c; j <= cols; ++j) aug(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            const Rational f = aug(i, c);
            for (std::size_t j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (aug(i, cols) != 0) return {LinearSolve::Status::Inconsistent, {}};
    }
    if (pivots.size() < cols) return {LinearSolve::Status::Underdetermined, {}};
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols);
    return {LinearSolve::Status::Unique, std::move(x)};
}

}  // namespace efm
