#pragma once

#include "efm/efunction.hpp"

#include <string>
#include <vector>

namespace efm {

struct ParsedSystem {
    DiffSystem system;
    std::vector<std::string> warnings;
};

/// Reads a system description:
///   {"m": 2, "labels": [...], "A": [["0","1"],["-1","-1/z"]], "T": "z",
///    "seeds": [["1"],["0"]], "growth": {"C": "1", "D": "2",
///    "provenance": "catalog"}, "exponent_bound": {"inf": "2"}}
/// "T", "labels", "growth" and "exponent_bound" are optional. A T that
/// does not clear the denominators of A is replaced (with a warning).
/// Errors: ErrorCode::Parse with line/column or the failing field.
ParsedSystem parse_system(const std::string& text);
ParsedSystem load_system(const std::string& path);

/// Canonical JSON text (two-space indent, trailing newline). Stable under
/// emit(parse(emit(s))).
std::string emit_system(const DiffSystem& sys);

/// "catalog:bessel_j0", "catalog:exp:3/7", "catalog:1F1:1/3:1/2", or a path.
ParsedSystem resolve_system(const std::string& source);

}  // namespace efm
