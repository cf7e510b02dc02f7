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

// Element classification on the additive reduct: idempotents, inverse sets,
// regularity and complete-regularity indices, and the canonical idempotent
// 0_a attached to each element of a quasi completely regular semiring.

#ifndef SEMIRINGS_ELEMENTS_HPP_
#define SEMIRINGS_ELEMENTS_HPP_

#include <optional>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace semirings {

//! The distinct additive multiples a, 2a, 3a, ... in order, up to (not
//! including) the first repetition.  The orbit of any element is eventually
//! periodic, so scanning it bounds every index search without an arbitrary
//! iteration cap.
inline std::vector<int> additive_orbit(FiniteSemiring const& s, int a) {
  std::vector<bool> seen(s.order(), false);
  std::vector<int>  orbit;
  int               cur = a;
  while (!seen[cur]) {
    seen[cur] = true;
    orbit.push_back(cur);
    cur = s.add(cur, a);
  }
  return orbit;
}

//! Least n with n*x = (n+1)*x, if the additive orbit of x stabilizes (it
//! does exactly when the orbit's cycle has length one).
inline std::optional<int> stabilization_index(FiniteSemiring const& s,
                                              int x) {
  auto orbit = additive_orbit(s, x);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    int next = i + 1 < orbit.size() ? orbit[i + 1] : s.add(orbit[i], x);
    if (orbit[i] == next) {
      return static_cast<int>(i) + 1;
    }
  }
  return std::nullopt;
}

//! E+(S), the additive idempotents.
inline std::vector<int> additive_idempotents(FiniteSemiring const& s) {
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e) {
    if (s.add(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

//! V+(a) = { x : a+x+a = a and x+a+x = x }.
inline std::vector<int> additive_inverses(FiniteSemiring const& s, int a) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (s.add(s.add(a, x), a) == a && s.add(s.add(x, a), x) == x) {
      out.push_back(x);
    }
  }
  return out;
}

inline bool is_additively_regular(FiniteSemiring const& s, int a) {
  for (int x = 0; x < s.order(); ++x) {
    if (s.add(s.add(a, x), a) == a) {
      return true;
    }
  }
  return false;
}

//! Witness x with a = a+x+a and a+x = x+a, if any (the purely additive
//! notion, without the multiplicative coupling).
inline std::optional<int> additively_completely_regular_witness(
    FiniteSemiring const& s, int a) {
  for (int x = 0; x < s.order(); ++x) {
    if (s.add(s.add(a, x), a) == a && s.add(a, x) == s.add(x, a)) {
      return x;
    }
  }
  return std::nullopt;
}

//! Witness x with a = a+x+a, a+x = x+a and a(a+x) = a+x, if any.
inline std::optional<int> completely_regular_witness(FiniteSemiring const& s,
                                                     int a) {
  for (int x = 0; x < s.order(); ++x) {
    if (s.add(s.add(a, x), a) == a && s.add(a, x) == s.add(x, a)
        && s.mul(a, s.add(a, x)) == s.add(a, x)) {
      return x;
    }
  }
  return std::nullopt;
}

inline bool is_completely_regular_element(FiniteSemiring const& s, int a) {
  return completely_regular_witness(s, a).has_value();
}

//! Least p >= 1 with p*a additively regular.  In a finite semiring some
//! multiple is an additive idempotent, so this always exists; the optional
//! return keeps the contract honest anyway.
inline std::optional<int> reg_index(FiniteSemiring const& s, int a) {
  auto orbit = additive_orbit(s, a);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (is_additively_regular(s, orbit[i])) {
      return static_cast<int>(i) + 1;
    }
  }
  return std::nullopt;
}

//! Least n >= 1 with n*a completely regular, scanning one full additive
//! orbit of a.
inline std::optional<int> cr_index(FiniteSemiring const& s, int a) {
  auto orbit = additive_orbit(s, a);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (is_completely_regular_element(s, orbit[i])) {
      return static_cast<int>(i) + 1;
    }
  }
  return std::nullopt;
}

//! Some element with no completely regular multiple, if any.
inline std::optional<int> quasi_complete_regularity_witness(
    FiniteSemiring const& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (!cr_index(s, a).has_value()) {
      return a;
    }
  }
  return std::nullopt;
}

inline bool is_quasi_completely_regular(FiniteSemiring const& s) {
  return !quasi_complete_regularity_witness(s).has_value();
}

//! 0_a: the unique additive idempotent of the maximal additive subgroup
//! containing n*a, where n is the complete-regularity index of a.  Computed
//! as n*a + x for a witness x, then cross-checked: the idempotent must be
//! H+-equivalent to n*a, and no other additive idempotent may be.  A failed
//! cross-check would mean an internal bug, not bad input, hence
//! ConsistencyError.
inline int zero_of(FiniteSemiring const& s, int a) {
  auto n = cr_index(s, a);
  if (!n.has_value()) {
    throw SemiringError("element " + std::to_string(a)
                        + " is not quasi completely regular");
  }
  int  b = s.multiple(*n, a);
  auto x = completely_regular_witness(s, b);
  int  e = s.add(b, *x);
  if (s.add(e, e) != e || s.add(e, b) != b || s.add(b, e) != b) {
    throw ConsistencyError("0_a candidate is not an identity for n*a");
  }
  // H+-uniqueness among additive idempotents: e must be the only idempotent
  // generating the same principal left and right additive ideals as b.
  auto ideal = [&s](int v, bool left) {
    std::vector<bool> in(s.order(), false);
    in[v] = true;
    for (int t = 0; t < s.order(); ++t) {
      in[left ? s.add(t, v) : s.add(v, t)] = true;
    }
    return in;
  };
  auto lb = ideal(b, true), rb = ideal(b, false);
  for (int f = 0; f < s.order(); ++f) {
    if (s.add(f, f) != f) {
      continue;
    }
    if (ideal(f, true) == lb && ideal(f, false) == rb && f != e) {
      throw ConsistencyError("two additive idempotents share the H+-class of "
                             + std::to_string(b));
    }
  }
  return e;
}

//! Per-element classification record.
struct ElementProfile {
  int                index;
  std::optional<int> reg_index;   // least p with p*a additively regular
  std::optional<int> cr_index;    // least n with n*a completely regular
  std::optional<int> zero;        // 0_a, when cr_index exists
};

inline ElementProfile element_profile(FiniteSemiring const& s, int a) {
  ElementProfile p;
  p.index     = a;
  p.reg_index = reg_index(s, a);
  p.cr_index  = cr_index(s, a);
  if (p.cr_index.has_value()) {
    p.zero = zero_of(s, a);
  }
  return p;
}

}  // namespace semirings

#endif  // SEMIRINGS_ELEMENTS_HPP_
