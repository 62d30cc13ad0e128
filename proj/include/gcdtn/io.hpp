#pragma once

#include "gcdtn/divisibility.hpp"
#include "gcdtn/exactmatrix.hpp"
#include "gcdtn/setmodel.hpp"
#include "gcdtn/tncore.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace gcdtn {

using Json = nlohmann::ordered_json;

/// One decimal integer per line, or whitespace-separated. Errors name the
/// offending line.
auto parse_ordered_set_text(std::string_view text) -> OrderedSet;

/// A JSON object with a "primes" key is an exponent matrix; any other JSON
/// object must carry "elements". Anything not starting with '{' is plain
/// text and parsed as an ordered set.
auto parse_input(std::string_view text) -> std::variant<OrderedSet, ExponentMatrix>;
auto ordered_set_from_json(const Json &doc) -> OrderedSet;
auto exponent_matrix_from_json(const Json &doc) -> ExponentMatrix;
auto matrix_from_json(const Json &doc) -> ExactMatrix;

// Integers are emitted as decimal strings and rationals as "p/q"; index
// lists (witnesses, permutations) are one-based.
auto to_json(const OrderedSet &s) -> Json;
auto to_json(const ExponentMatrix &m) -> Json;
auto to_json(const ExactMatrix &m) -> Json;
auto to_json(const Permutation &p) -> Json;
auto to_json(const TnVerdict &v) -> Json;
auto to_json(const TridiagonalInverse &t) -> Json;
auto to_json(const DivisibilityReport &r) -> Json;

/// Plain-text rendering of a report object: one "key: value" line per
/// field, nested objects indented, matrices one row per line.
auto render_text(const Json &report) -> std::string;

} // namespace gcdtn
