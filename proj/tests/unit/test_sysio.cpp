#include <doctest.h>

#include "efm/sysio.hpp"

#include <fstream>
#include <sstream>

using namespace efm;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ErrorCode code_of(const std::string& text)
{
    try {
        parse_system(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::InvalidArgument;
}

std::string message_of(const std::string& text)
{
    try {
        parse_system(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("sysio") {

TEST_CASE("shipped files match the catalog")
{
    CHECK(read_file(std::string(EFM_DATA_DIR) + "/exp_pair.json") == emit_system(catalog_exp_pair()));
    CHECK(read_file(std::string(EFM_DATA_DIR) + "/bessel_j0.json") == emit_system(catalog_bessel_j0()));
    CHECK(read_file(std::string(EFM_DATA_DIR) + "/hyp1f1_1_3_1_2.json") ==
          emit_system(catalog_hyp1f1(Rational(1, 3), Rational(1, 2))));
}

TEST_CASE("bessel file parses to the expected parameters")
{
    const ParsedSystem ps = load_system(std::string(EFM_DATA_DIR) + "/bessel_j0.json");
    CHECK(ps.warnings.empty());
    CHECK(ps.system == catalog_bessel_j0());
    const SystemParams p = extract_params(ps.system);
    CHECK(p.p == 0);
    CHECK(p.q == 1);
    CHECK(p.E == 1);
}

TEST_CASE("resolve catalog names")
{
    CHECK(resolve_system("catalog:bessel_j0").system == catalog_bessel_j0());
    CHECK(resolve_system("catalog:exp_pair").system == catalog_exp_pair());
    CHECK(resolve_system("catalog:exp:3/7").system == catalog_exp(Rational(3, 7)));
    CHECK(resolve_system("catalog:1F1:1/3:1/2").system == catalog_hyp1f1(Rational(1, 3), Rational(1, 2)));
    CHECK_THROWS_AS(resolve_system("catalog:airy"), Error);
}

TEST_CASE("a T that does not clear A is repaired with a warning")
{
    const ParsedSystem ps = parse_system(
        R"({"m": 2, "A": [["0","1"],["-1","-1/z"]], "T": "1", "seeds": [["1"],["0"]], "exponent_bound": {"inf": "2"}})");
    REQUIRE(ps.warnings.size() == 1);
    CHECK(ps.system.denominator() == IntPoly::z());
    const ParsedSystem absent = parse_system(R"({"m": 2, "A": [["0","1"],["-1","-1/z"]], "seeds": [["1"],["0"]]})");
    CHECK(absent.warnings.empty());
    CHECK(absent.system.denominator() == IntPoly::z());
}

TEST_CASE("malformed input")
{
    CHECK(code_of(R"({"m": 1, "A": [["1/0"]], "seeds": [["1"]]})") == ErrorCode::Parse);
    CHECK(message_of(R"({"m": 1, "A": [["1/0"]], "seeds": [["1"]]})").find("A[0][0]") != std::string::npos);
    CHECK(code_of("{\"m\": 1,\n \"A\": [[\"1\"]\n") == ErrorCode::Parse);
    CHECK(message_of("{\"m\": 1,\n \"A\": [[\"1\"]\n").find("line") != std::string::npos);
    CHECK(code_of(R"({"m": 2, "A": [["1"]], "seeds": [["1"]]})") == ErrorCode::Parse);
    CHECK(code_of(R"({"m": 1, "A": [["1"]], "seeds": [["x"]]})") == ErrorCode::Parse);
    CHECK(code_of(R"({"A": [["1"]], "seeds": [["1"]]})") == ErrorCode::Parse);
}

TEST_CASE("property: emit and parse round trip")
{
    std::vector<DiffSystem> systems{catalog_exp_pair(), catalog_bessel_j0(), catalog_hyp1f1(Rational(-2, 5), Rational(7, 3)),
                                    catalog_exp(Rational(-9, 4)), augment_exp(catalog_bessel_j0(), Rational(5, 6)),
                                    rescale(catalog_bessel_j0(), Rational(-3, 7))};
    for (const DiffSystem& s : systems) {
        const std::string text = emit_system(s);
        const ParsedSystem ps = parse_system(text);
        // a ladder scale note may appear, a T repair may not
        for (const auto& w : ps.warnings) CHECK(w.rfind("T = ", 0) == std::string::npos);
        CHECK(ps.system == s);
        CHECK(ps.system.labels() == s.labels());
        CHECK(ps.system.growth() == s.growth());
        CHECK(ps.system.exponent_bounds() == s.exponent_bounds());
        CHECK(emit_system(ps.system) == text);
        CHECK(text.back() == '\n');
    }
}

}
