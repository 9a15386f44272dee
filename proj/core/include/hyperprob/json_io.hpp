#pragma once

// JSON documents of the toolkit.
//
//   number  {"x": .., "y": ..}
//   state   {"basis": "b", "components": [number, number]}
//   matrix  [[number, number], [number, number]]  (row-major; a flat array of
//           four numbers, or {"V": matrix}, is accepted on input)
//   space   {"atoms": [{"id": "w1", "weight": 0.1, "a": "a1", "b": "b1",
//                       "in": ["C"]}, ...], "contexts": ["C", ...]}
//
// Output objects use insertion-ordered keys so that emitting, parsing and
// re-emitting a report yields identical bytes.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperprob/expsim.hpp"
#include "hyperprob/forward.hpp"
#include "hyperprob/hyperspace.hpp"
#include "hyperprob/interference.hpp"
#include "hyperprob/kolmogorov.hpp"
#include "hyperprob/qlra.hpp"

namespace hyperprob {

using Json = nlohmann::ordered_json;

std::string_view version();

/// Reads and parses a JSON file. Throws Error(InvalidDocument).
Json read_json_file(const std::filesystem::path& path);

/// Throws Error(InvalidDocument) for malformed input, plus the validation
/// errors of FiniteContextSpace.
FiniteContextSpace load_space(const Json& document);
FiniteContextSpace load_space_file(const std::filesystem::path& path);
Json space_to_json(const FiniteContextSpace& space);

Json to_json(const HyperNumber& z);
HyperNumber hyper_number_from_json(const Json& j);

Json to_json(const HyperState& s);
HyperState state_from_json(const Json& j);

Json to_json(const GMatrix2& v);
/// Source basis "a", target basis "b".
GMatrix2 matrix_from_json(const Json& j);

Json to_json(const ContextStatistics& s);
/// Interference fragment: lambda, epsilon, theta, class, balance_residual.
Json interference_fragment(const ContextStatistics& s,
                           const DisturbanceProfile& profile);
/// Interference fragment extended with amplitude, a-basis, V and residuals.
Json to_json(const Representation& rep);

Json to_json(const TrialCounts& c);
Json to_json(const RegimeReport& r);
Json to_json(const ForwardResult& r);

}  // namespace hyperprob
