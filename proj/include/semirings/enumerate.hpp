/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exhaustive enumeration of small semirings: all valid (add, mul) table
// pairs, streamed in lexicographic table order, with optional predicate
// filters and deduplication up to isomorphism.

#ifndef SEMIRINGS_ENUMERATE_HPP_
#define SEMIRINGS_ENUMERATE_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "congruences.hpp"
#include "core.hpp"
#include "elements.hpp"
#include "error.hpp"
#include "structures.hpp"

namespace semirings {

//! All associative n-by-n tables, in lexicographic order (tables read as
//! row-major base-n numerals).
inline std::vector<std::vector<int>> associative_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int>              t(n * n, 0);
  auto                          at = [&](int i, int j) { return t[i * n + j]; };
  auto assoc = [&] {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int ij = at(i, j);
        for (int k = 0; k < n; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            return false;
          }
        }
      }
    }
    return true;
  };
  while (true) {
    if (assoc()) {
      out.push_back(t);
    }
    int pos = n * n - 1;
    while (pos >= 0 && t[pos] == n - 1) {
      t[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++t[pos];
  }
  return out;
}

//! Predicate filters for the enumeration stream.
struct EnumFilter {
  bool quasi_completely_regular = false;
  bool completely_archimedean   = false;
  bool quasi_orthodox           = false;

  bool pass(FiniteSemiring const& s) const {
    if (quasi_completely_regular && !is_quasi_completely_regular(s)) {
      return false;
    }
    if (completely_archimedean && !is_completely_archimedean(s)) {
      return false;
    }
    if (quasi_orthodox && !is_quasi_orthodox(s)) {
      return false;
    }
    return true;
  }
};

//! Canonical labeling key: the lexicographically least (add, mul) table
//! pair over all relabelings.  Two semirings are isomorphic iff their keys
//! coincide.
inline std::vector<int> canonical_key(FiniteSemiring const& s) {
  int              n = s.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
      inv[perm[i]] = i;
    }
    std::vector<int> key;
    key.reserve(2 * n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        key.push_back(perm[s.add(inv[i], inv[j])]);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        key.push_back(perm[s.mul(inv[i], inv[j])]);
      }
    }
    if (best.empty() || key < best) {
      best = std::move(key);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

//! Streams every valid semiring of order n to the callback, in
//! lexicographic (add, mul) order.  Exhaustive mode is limited to n <= 3;
//! larger instances should be built constructively (Rees matrix semirings,
//! products, quotients, nil-adjunctions).
inline void enumerate_semirings(
    int n, EnumFilter const& filter, bool upto_iso,
    std::function<void(FiniteSemiring const&)> const& fn) {
  if (n <= 0) {
    throw SemiringError("enumeration order must be positive");
  }
  if (n > 3) {
    throw SemiringError(
        "exhaustive enumeration is limited to order <= 3; larger instances "
        "come from the constructive corpus (rees, products, quotients)");
  }
  auto assoc = associative_tables(n);
  std::set<std::vector<int>> seen;
  for (auto const& add : assoc) {
    for (auto const& mul : assoc) {
      bool distributive = true;
      for (int i = 0; i < n && distributive; ++i) {
        for (int j = 0; j < n && distributive; ++j) {
          for (int k = 0; k < n; ++k) {
            if (mul[i * n + add[j * n + k]]
                    != add[mul[i * n + j] * n + mul[i * n + k]]
                || mul[add[j * n + k] * n + i]
                       != add[mul[j * n + i] * n + mul[k * n + i]]) {
              distributive = false;
              break;
            }
          }
        }
      }
      if (!distributive) {
        continue;
      }
      FiniteSemiring s = FiniteSemiring::validated(n, add, mul);
      if (!filter.pass(s)) {
        continue;
      }
      if (upto_iso && !seen.insert(canonical_key(s)).second) {
        continue;
      }
      fn(s);
    }
  }
}

}  // namespace semirings

#endif  // SEMIRINGS_ENUMERATE_HPP_
