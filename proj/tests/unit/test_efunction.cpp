#include <doctest.h>

#include "efm/efunction.hpp"

#include <thread>

using namespace efm;

namespace {

std::vector<Rational> rats(std::initializer_list<long> nums, long d = 1)
{
    std::vector<Rational> out;
    for (long n : nums) out.push_back(make_rational(n, d));
    return out;
}

RatFunc rf(const char* text)
{
    return parse_ratfunc(text);
}

// closed forms of the ordinary Taylor coefficients
Rational j0_coefficient(long k)
{
    if (k % 2 != 0) return 0;
    const long n = k / 2;
    const Rational v = Rational(1) / (Rational(pow(Integer(4), static_cast<unsigned long>(n))) *
                                      Rational(factorial(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n))));
    return n % 2 == 0 ? v : Rational(-v);
}

Rational hyp1f1_coefficient(const Rational& a, const Rational& b, long k)
{
    Rational c = 1;
    for (long j = 0; j < k; ++j) c *= (a + j) / ((b + j) * (j + 1));
    return c;
}

void check_certificate(const DiffSystem& sys, std::size_t order)
{
    const GrowthCertificate& g = sys.require_growth();
    const auto series = sys.coefficients(order);
    for (std::size_t i = 0; i < sys.dim(); ++i) {
        Integer common = 1;
        Rational c_power = g.C;
        Rational d_power = g.D;
        for (std::size_t k = 0; k <= order; ++k) {
            const Rational phi = series[i][k] * Rational(factorial(k));
            common = lcm(common, den(phi));
            CHECK(abs(phi) <= c_power);
            CHECK(Rational(common) <= d_power);
            c_power *= g.C;
            d_power *= g.D;
        }
    }
}

}  // namespace

TEST_SUITE("efunction") {

TEST_CASE("exp pair coefficients")
{
    const auto s = catalog_exp_pair().coefficients(2);
    CHECK(s[0].coefficients() == std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2)});
    CHECK(s[1].coefficients() == rats({1, 2, 2}));
}

TEST_CASE("bessel coefficients")
{
    const auto s = catalog_bessel_j0().coefficients(4);
    CHECK(s[0].coefficients() == std::vector<Rational>{Rational(1), Rational(0), Rational(-1, 4), Rational(0), Rational(1, 64)});
}

TEST_CASE("coefficients agree with closed forms")
{
    const auto j0 = catalog_bessel_j0().coefficients(80);
    for (long k = 0; k <= 80; ++k) {
        CHECK(j0[0][static_cast<std::size_t>(k)] == j0_coefficient(k));
        CHECK(j0[1][static_cast<std::size_t>(k)] == j0_coefficient(k + 1) * (k + 1));
    }
    const Rational a(1, 3), b(1, 2);
    const auto h = catalog_hyp1f1(a, b).coefficients(60);
    for (long k = 0; k <= 60; ++k) {
        CHECK(h[0][static_cast<std::size_t>(k)] == hyp1f1_coefficient(a, b, k));
        CHECK(h[1][static_cast<std::size_t>(k)] == hyp1f1_coefficient(a, b, k + 1) * (k + 1));
    }
}

TEST_CASE("seed validation")
{
    const RatFuncMatrix j0{{rf("0"), rf("1")}, {rf("-1"), rf("-1/z")}};
    try {
        DiffSystem(j0, {rats({1}), rats({1})});
        FAIL("expected InconsistentSeeds");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentSeeds);
    }
    // z y' = y leaves the linear coefficient free
    const RatFuncMatrix shift{{rf("1/z")}};
    try {
        DiffSystem(shift, {rats({0})});
        FAIL("expected UnderdeterminedSeeds");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnderdeterminedSeeds);
    }
    const DiffSystem linear(shift, {rats({0, 5})});
    CHECK(linear.coefficients(4)[0].coefficients() == rats({0, 5, 0, 0, 0}));
}

TEST_CASE("an explicit T must clear the denominators")
{
    CHECK_THROWS_AS(DiffSystem(RatFuncMatrix{{rf("1/z")}}, {rats({0, 1})}, {}, std::nullopt, {}, IntPoly(1)), Error);
    const DiffSystem ok(RatFuncMatrix{{rf("1/z")}}, {rats({0, 1})}, {}, std::nullopt, {}, IntPoly(std::vector<Integer>{0, 2}));
    // the content of a supplied T is dropped
    CHECK(ok.denominator() == IntPoly(std::vector<Integer>{0, 1}));
}

TEST_CASE("ladder multiplier clears rational T*A")
{
    // T = z, T*A = 1/2, so the ladder uses 2z
    const DiffSystem sys(RatFuncMatrix{{rf("1/(2*z)")}}, {rats({0})});
    CHECK(sys.denominator() == IntPoly(std::vector<Integer>{0, 1}));
    CHECK(sys.ladder_scale() == 2);
    CHECK(sys.ladder_multiplier() == IntPoly(std::vector<Integer>{0, 2}));
    CHECK(sys.cleared_matrix()(0, 0) == IntPoly(1));
}

TEST_CASE("params")
{
    const SystemParams j0 = extract_params(catalog_bessel_j0());
    CHECK(j0.p == 0);
    CHECK(j0.q == 1);
    CHECK(j0.E == 1);
    CHECK(j0.T == IntPoly(std::vector<Integer>{0, 1}));

    const SystemParams pair = extract_params(catalog_exp_pair());
    CHECK(pair.p == 0);
    CHECK(pair.q == 0);
    CHECK(pair.E == 2);

    CHECK(extract_params(augment_exp(catalog_bessel_j0(), Rational(5, 2))).E == Rational(5, 2));

    const DiffSystem odd(RatFuncMatrix{{rf("1/z")}}, {rats({0, 1})});
    CHECK(extract_params(odd).p == 1);

    try {
        extract_params(DiffSystem(RatFuncMatrix{{rf("1")}}, {rats({0})}));
        FAIL("expected AllComponentsZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AllComponentsZero);
    }
}

TEST_CASE("augment")
{
    const DiffSystem a = augment_exp(catalog_exp(Rational(1)), Rational(2));
    const DiffSystem pair = catalog_exp_pair();
    CHECK(a.matrix() == pair.matrix());
    CHECK(a.seeds() == pair.seeds());
    CHECK(a.growth()->C == 2);
    CHECK(a.growth()->D == 1);

    const DiffSystem j = augment_exp(catalog_bessel_j0(), Rational(1, 2));
    CHECK(j.dim() == 3);
    CHECK(j.denominator() == IntPoly(std::vector<Integer>{0, 1}));
    CHECK(j.growth()->C == 1);
    CHECK(j.growth()->D == 4);

    const DiffSystem z = augment_exp(catalog_bessel_j0(), Rational(0));
    const auto s = z.coefficients(5);
    CHECK(s[2].coefficients() == rats({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("rescale")
{
    const DiffSystem e2 = rescale(catalog_exp(Rational(1)), Rational(2));
    const DiffSystem ref = catalog_exp(Rational(2));
    CHECK(e2.matrix() == ref.matrix());
    CHECK(e2.seeds() == ref.seeds());
    CHECK(e2.growth() == ref.growth());

    const DiffSystem j0 = catalog_bessel_j0();
    CHECK(rescale(j0, Rational(1)) == j0);

    const DiffSystem half = rescale(j0, Rational(1, 2));
    CHECK(half.matrix()(1, 1) == rf("-1/z"));
    CHECK(half.matrix()(0, 1) == rf("1/2"));
    CHECK(half.matrix()(1, 0) == rf("-1/2"));
    CHECK(half.growth()->C == 1);
    CHECK(half.growth()->D == 4);

    CHECK_THROWS_AS(rescale(j0, Rational(0)), Error);
}

TEST_CASE("rescale moves finite exponent keys")
{
    const DiffSystem sys(RatFuncMatrix{{rf("1/(z-1)")}}, {rats({1})}, {}, std::nullopt, {{"1", Rational(3)}, {"inf", Rational(1)}});
    const DiffSystem r = rescale(sys, Rational(1, 2));
    CHECK(r.exponent_bounds().at("2") == 3);
    CHECK(r.exponent_bounds().at("inf") == 1);
}

TEST_CASE("catalog")
{
    const DiffSystem j0 = catalog("bessel_j0");
    CHECK(j0.dim() == 2);
    CHECK(j0.growth()->C == 1);
    CHECK(j0.growth()->D == 2);
    CHECK(j0.growth()->provenance == GrowthCertificate::Provenance::Catalog);

    const DiffSystem e = catalog("exp", {Rational(3, 7)});
    CHECK(e.dim() == 1);
    CHECK(e.matrix()(0, 0) == RatFunc(Rational(3, 7)));
    CHECK(e.growth()->C == 1);
    CHECK(e.growth()->D == 7);

    const DiffSystem h = catalog("1F1", {Rational(1, 3), Rational(1, 2)});
    CHECK(h.dim() == 2);
    CHECK(h.seeds()[0][0] == 1);
    CHECK(h.seeds()[1][0] == Rational(2, 3));
    // z y'' + (1/2 - z) y' - (1/3) y = 0
    CHECK(h.matrix()(1, 0) == rf("(1/3)/z"));
    CHECK(h.matrix()(1, 1) == rf("(z-1/2)/z"));

    CHECK_THROWS_AS(catalog("airy"), Error);
    CHECK_THROWS_AS(catalog("1F1", {Rational(1), Rational(-2)}), Error);
    CHECK_THROWS_AS(catalog("exp"), Error);
}

TEST_CASE("property: growth certificates hold up to order 200")
{
    check_certificate(catalog_exp(Rational(3, 7)), 200);
    check_certificate(catalog_exp(Rational(-5, 2)), 200);
    check_certificate(catalog_exp_pair(), 200);
    check_certificate(catalog_bessel_j0(), 200);
    check_certificate(catalog_hyp1f1(Rational(1, 3), Rational(1, 2)), 200);
    check_certificate(catalog_hyp1f1(Rational(-7, 3), Rational(3, 4)), 200);
    check_certificate(augment_exp(catalog_bessel_j0(), Rational(-3, 5)), 200);
    check_certificate(rescale(catalog_bessel_j0(), Rational(-5, 3)), 200);
}

TEST_CASE("property: rescaling dilates the coefficients")
{
    for (const DiffSystem& sys : {catalog_exp_pair(), catalog_bessel_j0(), catalog_hyp1f1(Rational(1, 3), Rational(1, 2))}) {
        for (const Rational& xi : {Rational(2), Rational(1, 2), Rational(-3, 5)}) {
            const auto base = sys.coefficients(40);
            const auto scaled = rescale(sys, xi).coefficients(40);
            for (std::size_t i = 0; i < sys.dim(); ++i) {
                Rational power = 1;
                for (std::size_t k = 0; k <= 40; ++k) {
                    CHECK(scaled[i][k] == base[i][k] * power);
                    power *= xi;
                }
            }
        }
    }
}

TEST_CASE("property: the appended component is exp(beta z)")
{
    for (const Rational& beta : {Rational(1, 4), Rational(-7, 3), Rational(0), Rational(5)}) {
        const auto s = augment_exp(catalog_bessel_j0(), beta).coefficients(30);
        Rational c = 1;
        for (std::size_t k = 0; k <= 30; ++k) {
            CHECK(s[2][k] == c);
            c *= beta / Rational(static_cast<long>(k + 1));
        }
    }
}

TEST_CASE("property: augmentation keeps T, p and q")
{
    for (const DiffSystem& sys : {catalog_bessel_j0(), catalog_hyp1f1(Rational(1, 3), Rational(1, 2))}) {
        const SystemParams base = extract_params(sys);
        for (const Rational& beta : {Rational(1, 4), Rational(-7, 3), Rational(11, 2)}) {
            const SystemParams aug = extract_params(augment_exp(sys, beta));
            CHECK(aug.q == base.q);
            CHECK(aug.p == base.p);
            CHECK(aug.T == base.T);
        }
    }
}

TEST_CASE("coefficients are safe to request concurrently")
{
    const DiffSystem sys = catalog_hyp1f1(Rational(1, 3), Rational(1, 2));
    const auto expected = catalog_hyp1f1(Rational(1, 3), Rational(1, 2)).coefficients(120);
    std::vector<std::thread> threads;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            const DiffSystem copy = sys;
            const auto got = copy.coefficients(static_cast<std::size_t>(40 + 10 * t));
            bool same = true;
            for (std::size_t i = 0; i < 2; ++i) {
                same = same && got[i].coefficients() == expected[i].truncate(40 + 10 * t).coefficients();
            }
            ok[static_cast<std::size_t>(t)] = same ? 1 : 0;
        });
    }
    for (auto& th : threads) th.join();
    for (int v : ok) CHECK(v == 1);
}

}
