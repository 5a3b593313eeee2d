#pragma once

// JSON and text renderings shared by the CLI and the round-trip tests.
//
//   TeslerMatrix  {"n": int, "hooks": [int], "rows": [[int]]}
//   Flow          {"n": int, "edges": {"i,j": int}}
//   TeslerTableau {"n": int, "hooks": [int], "rows": [[0|1]]}
//   QTPoly        [{"q": int, "t": int, "c": "decimal"}] sorted by (q, t)
//
// Integers too large for a 64-bit JSON number are written as decimal
// strings; parsers accept either form.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tesler/arith.hpp"
#include "tesler/core.hpp"
#include "tesler/harmonics.hpp"

namespace tesler::io {

using Json = nlohmann::ordered_json;

/// Parse errors. Carries a message fit for the error stream.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const HookSums& a);
Json to_json(const TeslerMatrix& m);
Json to_json(const Flow& f);
Json to_json(const TeslerTableau& t);
Json to_json(const QTPoly& p);

TeslerMatrix tesler_from_json(const Json& j);
Flow flow_from_json(const Json& j);
TeslerTableau tableau_from_json(const Json& j);
QTPoly qtpoly_from_json(const Json& j);

/// "1,0,3" -> HookSums. Throws ParseError on anything else.
HookSums parse_hooks(std::string_view text);

/// "q,t" -> two integers. Throws ParseError.
std::pair<BigInt, BigInt> parse_point(std::string_view text);

/// Comma-joined decimal values.
std::string join(const std::vector<BigInt>& values, std::string_view sep = ",");

/// Upper-triangular rows, right-aligned in columns; lower cells shown as '.'.
std::string render_matrix(const TeslerMatrix& m);

/// Rows of 0/1 cells, each row indented by its index.
std::string render_tableau(const TeslerTableau& t);

}  // namespace tesler::io
