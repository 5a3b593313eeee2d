#include "tesler/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace tesler::io {

namespace {

BigInt parse_big(std::string_view token, std::string_view what) {
  std::size_t start = (!token.empty() && token[0] == '-') ? 1 : 0;
  if (token.size() == start) throw ParseError("empty " + std::string(what));
  for (std::size_t k = start; k < token.size(); ++k) {
    if (token[k] < '0' || token[k] > '9') {
      throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
  }
  return BigInt(std::string(token));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.push_back(trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

Json rows_to_json(const std::vector<std::vector<BigInt>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(big_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

HookSums hooks_from_json(const Json& j) {
  const Json& h = field(j, "hooks");
  if (!h.is_array()) throw ParseError("'hooks' must be an array");
  std::vector<BigInt> values;
  for (const auto& v : h) values.push_back(big_from_json(v));
  return HookSums(std::move(values));
}

std::size_t size_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) throw ParseError("'n' must be a positive integer");
  return n.get<std::size_t>();
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_big(j.get<std::string>(), "integer");
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const HookSums& a) {
  Json out = Json::array();
  for (const auto& v : a.values()) out.push_back(big_to_json(v));
  return out;
}

Json to_json(const TeslerMatrix& m) {
  Json out;
  out["n"] = m.size();
  out["hooks"] = to_json(m.hooks());
  out["rows"] = rows_to_json(m.rows());
  return out;
}

Json to_json(const Flow& f) {
  Json out;
  out["n"] = f.size();
  Json edges = Json::object();
  for (std::size_t i = 1; i <= f.size(); ++i) {
    for (std::size_t j = i + 1; j <= f.vertex_count(); ++j) {
      edges[std::to_string(i) + "," + std::to_string(j)] = big_to_json(f(i, j));
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const TeslerTableau& t) {
  Json out;
  out["n"] = t.size();
  out["hooks"] = to_json(t.hooks());
  out["rows"] = t.rows();
  return out;
}

Json to_json(const QTPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["q"] = e.first;
    term["t"] = e.second;
    term["c"] = c.str();
    out.push_back(std::move(term));
  }
  return out;
}

TeslerMatrix tesler_from_json(const Json& j) {
  const std::size_t n = size_from_json(j);
  HookSums hooks = hooks_from_json(j);
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != n || hooks.size() != n) {
    throw ParseError("'rows' and 'hooks' must both have n entries");
  }
  std::vector<std::vector<BigInt>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    std::vector<BigInt> r;
    for (const auto& v : row) r.push_back(big_from_json(v));
    values.push_back(std::move(r));
  }
  return TeslerMatrix::from_rows(hooks, values);
}

Flow flow_from_json(const Json& j) {
  const std::size_t n = size_from_json(j);
  const Json& edges = field(j, "edges");
  if (!edges.is_object()) throw ParseError("'edges' must be an object");
  std::vector<BigInt> values(n * (n + 1) / 2);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [key, value] : edges.items()) {
    const auto parts = split(key, ',');
    std::size_t i = 0, k = 0;
    if (parts.size() != 2 ||
        std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), i).ec != std::errc{} ||
        std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), k).ec != std::errc{} ||
        i < 1 || k <= i || k > n + 1) {
      throw ParseError("bad edge key '" + key + "'");
    }
    // Edges (i, j) in lexicographic order: same slot as tri_index(n, i, j - 1).
    const std::size_t idx = tri_index(n, i, k - 1);
    values[idx] = big_from_json(value);
    seen[idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ParseError("flow must list every edge of the complete graph");
  }
  return Flow(n, std::move(values));
}

TeslerTableau tableau_from_json(const Json& j) {
  const std::size_t n = size_from_json(j);
  HookSums hooks = hooks_from_json(j);
  if (hooks.size() != n) throw ParseError("'hooks' must have n entries");
  const Json& rows = field(j, "rows");
  std::vector<std::vector<int>> cells;
  try {
    cells = rows.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("'rows' must be a list of 0/1 rows");
  }
  return TeslerTableau::from_rows(std::move(hooks), cells);
}

QTPoly qtpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  QTPoly p;
  for (const auto& term : j) {
    const Json& q = field(term, "q");
    const Json& t = field(term, "t");
    if (!q.is_number_integer() || !t.is_number_integer() || q.get<int>() < 0 || t.get<int>() < 0) {
      throw ParseError("term exponents must be nonnegative integers");
    }
    p.add_term(q.get<int>(), t.get<int>(), big_from_json(field(term, "c")));
  }
  return p;
}

HookSums parse_hooks(std::string_view text) {
  std::vector<BigInt> values;
  for (const auto& token : split(text, ',')) {
    const BigInt v = parse_big(token, "hook sum");
    if (v < 0) throw ParseError("hook sums must be nonnegative, got " + token);
    values.push_back(v);
  }
  return HookSums(std::move(values));
}

std::pair<BigInt, BigInt> parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("expected q,t but got '" + std::string(text) + "'");
  return {parse_big(parts[0], "q value"), parse_big(parts[1], "t value")};
}

std::string join(const std::vector<BigInt>& values, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += sep;
    out += values[k].str();
  }
  return out;
}

std::string render_matrix(const TeslerMatrix& m) {
  const std::size_t n = m.size();
  std::size_t width = 1;
  for (const auto& v : m.entries().packed()) width = std::max(width, v.str().size());
  std::ostringstream os;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::string cell = j < i ? "." : m(i, j).str();
      if (j > 1) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_tableau(const TeslerTableau& t) {
  std::ostringstream os;
  const std::size_t n = t.size();
  for (std::size_t i = 1; i <= n; ++i) {
    os << std::string(2 * (i - 1), ' ');
    for (std::size_t j = i; j <= n; ++j) os << (j > i ? " " : "") << (t(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

}  // namespace tesler::io
