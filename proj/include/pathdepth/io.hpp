#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "pathdepth/homology.hpp"
#include "pathdepth/monomial_ideal.hpp"
#include "pathdepth/sdepth.hpp"

namespace pathdepth {

using Json = nlohmann::json;

/// {"n": n, "gens": [[e1, ..., en], ...]} with generators in lex order.
/// The unit ideal is written as the single generator 0...0, the zero ideal
/// as an empty list.
Json to_json(const MonomialIdeal& ideal);

/// Accepts "gens" entries as exponent arrays or as strings like "x1^2*x3".
MonomialIdeal ideal_from_json(const Json& j);

Json to_json(const DepthReport& report);
Json to_json(const SdepthReport& report, bool with_certificate = true);
Json to_json(const IntervalPartition& partition);
IntervalPartition partition_from_json(const Json& j);

/// Resolves "cycle:n:m[:t]", "path:n:m[:t]", "u:n:d", "max:n", or otherwise
/// a path to a JSON file holding an ideal.
MonomialIdeal resolve_ideal(std::string_view spec);

}  // namespace pathdepth
