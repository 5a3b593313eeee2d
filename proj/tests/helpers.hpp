#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tesler/core.hpp"

namespace testing {

inline tesler::HookSums hooks(std::initializer_list<std::int64_t> values) {
  return tesler::HookSums(std::vector<tesler::BigInt>(values.begin(), values.end()));
}

inline std::vector<std::vector<tesler::BigInt>> big_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<tesler::BigInt>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Tesler matrix from upper-triangular rows; hook sums are read off the rows.
inline tesler::TeslerMatrix tesler_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const auto m = tesler::UpperTriangular::from_rows(big_rows(rows));
  std::vector<tesler::BigInt> a;
  for (std::size_t k = 1; k <= m.size(); ++k) a.push_back(tesler::hook_sum(m, k));
  return tesler::TeslerMatrix(tesler::HookSums(std::move(a)), m);
}

inline std::vector<tesler::BigInt> bigs(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace testing
