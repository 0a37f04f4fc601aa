#pragma once

#include "efm/logmeasure.hpp"
#include "efm/zeroestimate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace efm {

/// Reports keep insertion order; exact values are strings ("p/q").
using Json = nlohmann::ordered_json;

Json to_json(const RatInterval& iv);
Json to_json(const IntPoly& p);
Json to_json(const ExponentData& ed);
Json to_json(const AuxiliaryBasis& basis);
Json to_json(const FormsLadder& ladder);
Json to_json(const BoundCertificate& cert);
Json to_json(const std::vector<Attempt>& attempts);
Json to_json(const LogBoundResult& r);

/// p, q, E, T, growth, exponent data and n0 of a system. Exponent data
/// that cannot be assembled is reported as an "error" entry.
Json params_report(const DiffSystem& sys);

/// Header "b,a,bound,oracle_distance,path,n_used", one line per row.
std::string scan_csv(const std::vector<LogBoundResult>& rows);

}  // namespace efm
