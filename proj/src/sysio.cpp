#include "efm/sysio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace efm {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw Error(ErrorCode::Parse, "field " + field + ": " + what);
}

std::string position(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational rational_field(const Json& j, const std::string& field)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(j.dump()));
    } catch (const Error& e) {
        field_error(field, e.what());
    }
    field_error(field, "expected a rational string such as \"3/7\"");
}

const Json& member(const Json& j, const char* key)
{
    if (!j.contains(key)) field_error(key, "missing");
    return j.at(key);
}

std::string canonical_point(const std::string& key)
{
    if (key == "inf" || key == "*") return key;
    try {
        return to_string(parse_rational(key));
    } catch (const Error&) {
        field_error("exponent_bound", "unknown singular point \"" + key + "\"");
    }
}

}  // namespace

ParsedSystem parse_system(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, "malformed JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!j.is_object()) throw Error(ErrorCode::Parse, "system description must be a JSON object");

    const Json& jm = member(j, "m");
    if (!jm.is_number_integer() || jm.get<long>() < 1) field_error("m", "expected a positive integer");
    const auto m = static_cast<std::size_t>(jm.get<long>());

    const Json& ja = member(j, "A");
    if (!ja.is_array() || ja.size() != m) field_error("A", "expected " + std::to_string(m) + " rows");
    RatFuncMatrix a(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        if (!ja[r].is_array() || ja[r].size() != m) {
            field_error("A[" + std::to_string(r) + "]", "expected " + std::to_string(m) + " entries");
        }
        for (std::size_t c = 0; c < m; ++c) {
            const std::string name = "A[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            const Json& e = ja[r][c];
            if (e.is_number_integer()) {
                a(r, c) = RatFunc(Rational(Integer(e.dump())));
                continue;
            }
            if (!e.is_string()) field_error(name, "expected a rational function string");
            try {
                a(r, c) = parse_ratfunc(e.get<std::string>());
            } catch (const Error& err) {
                field_error(name, err.what());
            }
        }
    }

    const Json& js = member(j, "seeds");
    if (!js.is_array() || js.size() != m) field_error("seeds", "expected one list per component");
    std::vector<std::vector<Rational>> seeds(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!js[i].is_array()) field_error("seeds[" + std::to_string(i) + "]", "expected a list");
        for (std::size_t k = 0; k < js[i].size(); ++k) {
            seeds[i].push_back(rational_field(js[i][k], "seeds[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        }
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const Json& jl = j.at("labels");
        if (!jl.is_array() || jl.size() != m) field_error("labels", "expected one label per component");
        for (const auto& l : jl) {
            if (!l.is_string()) field_error("labels", "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    std::optional<GrowthCertificate> growth;
    if (j.contains("growth")) {
        const Json& jg = j.at("growth");
        if (!jg.is_object()) field_error("growth", "expected an object with C and D");
        GrowthCertificate g;
        g.C = rational_field(member(jg, "C"), "growth.C");
        g.D = rational_field(member(jg, "D"), "growth.D");
        g.provenance = GrowthCertificate::Provenance::User;
        if (jg.contains("provenance")) {
            const Json& p = jg.at("provenance");
            if (p == "catalog") {
                g.provenance = GrowthCertificate::Provenance::Catalog;
            } else if (p != "user") {
                field_error("growth.provenance", "expected \"catalog\" or \"user\"");
            }
        }
        if (g.C < 1 || g.D < 1) field_error("growth", "C and D must be at least 1");
        growth = g;
    }

    ExponentBounds bounds;
    if (j.contains("exponent_bound")) {
        const Json& jb = j.at("exponent_bound");
        if (!jb.is_object()) field_error("exponent_bound", "expected an object keyed by singular point");
        for (const auto& [key, value] : jb.items()) {
            const Rational v = rational_field(value, "exponent_bound." + key);
            if (v < 0) field_error("exponent_bound." + key, "bound must be nonnegative");
            bounds[canonical_point(key)] = v;
        }
    }

    std::vector<std::string> warnings;
    std::optional<IntPoly> t;
    if (j.contains("T")) {
        const Json& jt = j.at("T");
        if (!jt.is_string()) field_error("T", "expected a polynomial string");
        RatFunc parsed;
        try {
            parsed = parse_ratfunc(jt.get<std::string>());
        } catch (const Error& err) {
            field_error("T", err.what());
        }
        if (!parsed.is_polynomial() || parsed.is_zero()) field_error("T", "expected a nonzero polynomial");
        RatPoly common(Rational(1));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) common = lcm(common, a(r, c).den());
        }
        if (divmod(parsed.num(), common).second.is_zero()) {
            t = primitive_part(parsed.num());
        } else {
            warnings.push_back("T = " + jt.get<std::string>() +
                               " does not clear the denominators of A; recomputed from A");
        }
    }

    try {
        DiffSystem sys(std::move(a), std::move(seeds), std::move(labels), growth, std::move(bounds), t);
        if (sys.ladder_scale() != 1) {
            warnings.push_back("T*A has non-integral coefficients; the ladder uses " + to_string(sys.ladder_scale()) +
                               "*T = " + to_string(sys.ladder_multiplier()));
        }
        return {std::move(sys), std::move(warnings)};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::Parse, e.what());
        throw;
    }
}

ParsedSystem load_system(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_system(ss.str());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw Error(ErrorCode::Parse, path + ": " + e.what());
        throw;
    }
}

std::string emit_system(const DiffSystem& sys)
{
    const std::size_t m = sys.dim();
    Json j;
    j["m"] = m;
    j["labels"] = sys.labels();
    Json a = Json::array();
    for (std::size_t r = 0; r < m; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m; ++c) row.push_back(to_string(sys.matrix()(r, c)));
        a.push_back(std::move(row));
    }
    j["A"] = std::move(a);
    j["T"] = to_string(sys.denominator());
    Json seeds = Json::array();
    for (const auto& s : sys.seeds()) {
        Json list = Json::array();
        for (const auto& c : s) list.push_back(to_string(c));
        seeds.push_back(std::move(list));
    }
    j["seeds"] = std::move(seeds);
    if (sys.growth()) {
        j["growth"] = {{"C", to_string(sys.growth()->C)},
                       {"D", to_string(sys.growth()->D)},
                       {"provenance", to_string(sys.growth()->provenance)}};
    }
    Json bounds = Json::object();
    for (const auto& [key, value] : sys.exponent_bounds()) bounds[key] = to_string(value);
    j["exponent_bound"] = std::move(bounds);
    return j.dump(2) + "\n";
}

ParsedSystem resolve_system(const std::string& source)
{
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) != 0) return load_system(source);
    std::vector<std::string> parts;
    std::stringstream ss(source.substr(prefix.size()));
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.empty()) throw Error(ErrorCode::UnsupportedCatalogEntry, "empty catalog name");
    std::vector<Rational> params;
    for (std::size_t i = 1; i < parts.size(); ++i) params.push_back(parse_rational(parts[i]));
    return {catalog(parts[0], params), {}};
}

}  // namespace efm
