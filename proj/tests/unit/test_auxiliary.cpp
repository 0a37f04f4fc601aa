#include <doctest.h>

#include "efm/auxiliary.hpp"

#include <thread>

using namespace efm;

namespace {

// Closed-form ordinary Taylor coefficients, independent of the recurrence.
std::vector<std::vector<Rational>> closed_form(const std::string& name, std::size_t order)
{
    std::vector<std::vector<Rational>> out;
    if (name == "exp_pair") {
        for (long beta : {1L, 2L}) {
            std::vector<Rational> c;
            Rational t = 1;
            for (std::size_t k = 0; k <= order; ++k) {
                c.push_back(t);
                t *= Rational(beta) / Rational(static_cast<long>(k + 1));
            }
            out.push_back(c);
        }
    } else if (name == "bessel_j0") {
        std::vector<Rational> j(order + 2, Rational(0));
        Rational t = 1;
        for (std::size_t n = 0; 2 * n <= order + 1; ++n) {
            j[2 * n] = t;
            t *= Rational(-1) / Rational(static_cast<long>(4 * (n + 1) * (n + 1)));
        }
        std::vector<Rational> d;
        for (std::size_t k = 0; k <= order; ++k) d.push_back(j[k + 1] * Rational(static_cast<long>(k + 1)));
        j.resize(order + 1);
        out = {j, d};
    } else {
        // 1F1(1/3; 1/2)
        const Rational a(1, 3), b(1, 2);
        std::vector<Rational> y;
        Rational t = 1;
        for (std::size_t k = 0; k <= order + 1; ++k) {
            y.push_back(t);
            t *= (a + static_cast<long>(k)) / ((b + static_cast<long>(k)) * static_cast<long>(k + 1));
        }
        std::vector<Rational> d;
        for (std::size_t k = 0; k <= order; ++k) d.push_back(y[k + 1] * Rational(static_cast<long>(k + 1)));
        y.resize(order + 1);
        out = {y, d};
    }
    return out;
}

std::vector<Rational> combine(const std::vector<std::vector<Rational>>& f, const std::vector<IntPoly>& P, std::size_t order)
{
    std::vector<Rational> r(order + 1, Rational(0));
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t d = 0; d < P[i].size(); ++d) {
            for (std::size_t k = 0; k + d <= order; ++k) r[k + d] += Rational(P[i].coeff(d)) * f[i][k];
        }
    }
    return r;
}

DiffSystem by_name(const std::string& name)
{
    if (name == "exp_pair") return catalog_exp_pair();
    if (name == "bessel_j0") return catalog_bessel_j0();
    return catalog_hyp1f1(Rational(1, 3), Rational(1, 2));
}

}  // namespace

TEST_SUITE("auxiliary") {

TEST_CASE("vanishing order target")
{
    CHECK(vanishing_order_target(2, 1, Rational(1, 4)) == 3);
    CHECK(vanishing_order_target(2, 8, Rational(1, 4)) == 15);
    CHECK(vanishing_order_target(3, 10, Rational(1, 6)) == 31);
    CHECK(default_eps1(2) == Rational(1, 4));
    CHECK(default_eps1(3) == Rational(1, 6));
    CHECK_THROWS_AS(vanishing_order_target(2, 1, Rational(1, 3)), Error);
    CHECK_THROWS_AS(vanishing_order_target(2, 1, Rational(0)), Error);
    CHECK_THROWS_AS(vanishing_order_target(2, 1, Rational(-1, 5)), Error);
}

TEST_CASE("exp pair basis at n = 1")
{
    const AuxiliaryBasis b = construct(catalog_exp_pair(), 1, Rational(1, 4));
    CHECK(b.tau == 3);
    CHECK(b.achieved_order == 3);
    CHECK_FALSE(b.order_at_limit);
    REQUIRE(b.P.size() == 2);
    const IntPoly p1(std::vector<Integer>{2, 1});
    const IntPoly p2(std::vector<Integer>{-2, 1});
    const bool plus = b.P[0] == p1 && b.P[1] == p2;
    const bool minus = b.P[0] == -p1 && b.P[1] == -p2;
    CHECK((plus || minus));
    CHECK(b.height == 2);
    CHECK(b.kernel_dimension >= 1);

    const RemainderSeries r = remainder(b, catalog_exp_pair(), 5);
    CHECK(abs(r.head[3]) == Rational(1, 6));
    for (std::size_t k = 0; k < 3; ++k) CHECK(r.head[k] == 0);
    // m(n+1) B C^{nu+1} / (nu-n)! with m = 2, n = 1, B = 2, C = 2
    for (long nu = 6; nu <= 20; ++nu) {
        CHECK(r.tail.at(nu) == Rational(8) * pow(Rational(2), static_cast<unsigned long>(nu + 1)) /
                                   Rational(factorial(static_cast<unsigned long>(nu - 1))));
    }
    CHECK_THROWS_AS(remainder(b, catalog_exp_pair(), 2), Error);
}

TEST_CASE("bessel basis at n = 2 vanishes to order five")
{
    const AuxiliaryBasis b = construct(catalog_bessel_j0(), 2, Rational(1, 4));
    CHECK(b.tau == 5);
    CHECK(b.achieved_order >= 5);
    const auto r = combine(closed_form("bessel_j0", 12), b.P, 12);
    for (int k = 0; k < 5; ++k) CHECK(r[static_cast<std::size_t>(k)] == 0);
    for (int k = 5; k < b.achieved_order; ++k) CHECK(r[static_cast<std::size_t>(k)] == 0);
    if (!b.order_at_limit) CHECK(r[static_cast<std::size_t>(b.achieved_order)] != 0);
}

TEST_CASE("kernel dimension count")
{
    for (int n = 1; n <= 10; ++n) {
        const AuxiliaryBasis b = construct(catalog_bessel_j0(), n, Rational(1, 4));
        CHECK(static_cast<long>(b.kernel_dimension) >= 2 * (n + 1) - b.tau);
    }
}

TEST_CASE("property: the combination vanishes to the target order")
{
    for (const std::string name : {"exp_pair", "bessel_j0", "1F1"}) {
        const DiffSystem sys = by_name(name);
        const Rational eps1 = default_eps1(sys.dim());
        for (int n = 2; n <= 24; ++n) {
            const AuxiliaryBasis b = construct(sys, n, eps1);
            CHECK(b.tau == vanishing_order_target(sys.dim(), n, eps1));
            CHECK(b.achieved_order >= b.tau);
            bool nonzero = false;
            Integer content = 0;
            for (const auto& p : b.P) {
                CHECK(p.degree() <= n);
                for (const auto& c : p.coefficients()) content = gcd(content, c);
                nonzero = nonzero || !p.is_zero();
            }
            CHECK(nonzero);
            CHECK(content == 1);
            const std::size_t order = static_cast<std::size_t>(b.achieved_order);
            const auto r = combine(closed_form(name, order), b.P, order);
            for (std::size_t k = 0; k < order; ++k) CHECK(r[k] == 0);
            if (!b.order_at_limit) CHECK(r[order] != 0);
        }
    }
}

TEST_CASE("property: tail majorants dominate the exact coefficients")
{
    for (const std::string name : {"exp_pair", "bessel_j0", "1F1"}) {
        const DiffSystem sys = by_name(name);
        for (int n : {1, 3, 6}) {
            const AuxiliaryBasis b = construct(sys, n, default_eps1(sys.dim()));
            // cutoff as small as allowed so the majorant is exercised early
            const int cutoff = std::max(b.achieved_order, n);
            const RemainderSeries rem = remainder(b, sys, cutoff);
            const auto exact = combine(closed_form(name, 60), b.P, 60);
            for (long nu = cutoff + 1; nu <= 50; ++nu) CHECK(abs(exact[static_cast<std::size_t>(nu)]) <= rem.tail.at(nu));

            // derivative and multiplication by T
            std::vector<Rational> next(60, Rational(0));
            for (std::size_t k = 0; k + 1 <= 59; ++k) next[k] = exact[k + 1] * Rational(static_cast<long>(k + 1));
            const IntPoly& t = sys.ladder_multiplier();
            std::vector<Rational> shifted(60, Rational(0));
            for (std::size_t d = 0; d < t.size(); ++d) {
                for (std::size_t k = 0; k + d < 60; ++k) shifted[k + d] += Rational(t.coeff(d)) * next[k];
            }
            const TailMajorant stepped = rem.tail.derivative().times(t);
            for (long nu = stepped.start; nu <= 50; ++nu) {
                CHECK(abs(shifted[static_cast<std::size_t>(nu)]) <= stepped.at(nu));
            }

            // the sum bound covers the partial sum of the true tail
            for (const Rational& r : {Rational(1), Rational(1, 2), Rational(3, 2)}) {
                Rational partial = 0;
                Rational power = pow(r, static_cast<unsigned long>(rem.tail.start));
                for (long nu = rem.tail.start; nu <= 60; ++nu) {
                    partial += abs(exact[static_cast<std::size_t>(nu)]) * power;
                    power *= r;
                }
                CHECK(partial <= rem.tail.sum(r));
            }
        }
    }
}

TEST_CASE("property: construction is deterministic across threads")
{
    const DiffSystem sys = catalog_hyp1f1(Rational(1, 3), Rational(1, 2));
    const AuxiliaryBasis ref = construct(sys, 9, Rational(1, 4));
    std::vector<int> same(6, 0);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < same.size(); ++t) {
        pool.emplace_back([&, t] {
            const AuxiliaryBasis b = construct(catalog_hyp1f1(Rational(1, 3), Rational(1, 2)), 9, Rational(1, 4));
            same[t] = b.P == ref.P && b.achieved_order == ref.achieved_order && b.height == ref.height ? 1 : 0;
        });
    }
    for (auto& th : pool) th.join();
    for (int s : same) CHECK(s == 1);
}

}
