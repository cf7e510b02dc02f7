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

// Congruence machinery: generation and closure, exhaustive enumeration, the
// named congruences (rho, nu, Y, Y*), the gaip property, and the
// quotient-shape predicates.

#ifndef SEMIRINGS_CONGRUENCES_HPP_
#define SEMIRINGS_CONGRUENCES_HPP_

#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "elements.hpp"
#include "error.hpp"
#include "relations.hpp"

namespace semirings {

//! Order bound for the brute-force congruence oracle, configurable through
//! the ORACLE_MAX_ORDER environment variable.
inline int oracle_max_order() {
  if (char const* env = std::getenv("ORACLE_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) {
      return v;
    }
  }
  return 8;
}

//! Least semiring congruence containing the given pairs.  Union-find seeded
//! with the pairs, then a work queue that re-merges all four translations of
//! every newly merged pair until the fixpoint; merges only ever decrease the
//! class count, so this terminates.
inline Partition generated_congruence(
    FiniteSemiring const& s, std::vector<std::pair<int, int>> const& pairs) {
  detail::UnionFind              uf(s.order());
  std::deque<std::pair<int, int>> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (uf.find(a) == uf.find(b)) {
      continue;
    }
    uf.unite(a, b);
    for (int c = 0; c < s.order(); ++c) {
      queue.emplace_back(s.add(a, c), s.add(b, c));
      queue.emplace_back(s.add(c, a), s.add(c, b));
      queue.emplace_back(s.mul(a, c), s.mul(b, c));
      queue.emplace_back(s.mul(c, a), s.mul(c, b));
    }
  }
  return Partition::from_union_find(uf);
}

//! The closure tau^natural: symmetrize and reflexivize the seed, close under
//! two-sided additive translation with each translator optional, then take
//! the transitive closure.  The result is an equivalence relation and is
//! compatible with addition, but not necessarily with multiplication, so it
//! is returned as a plain Partition rather than asserted to be a congruence.
inline Partition tau_natural(FiniteSemiring const& s,
                             std::vector<std::pair<int, int>> const& pairs) {
  int         n = s.order();
  BinRelation rel = BinRelation::identity(n);
  for (auto [c, d] : pairs) {
    // x, y range over S with "absent" allowed on either side
    for (int x = -1; x < n; ++x) {
      int u = c, v = d;
      if (x >= 0) {
        u = s.add(x, u);
        v = s.add(x, v);
      }
      for (int y = -1; y < n; ++y) {
        int uu = u, vv = v;
        if (y >= 0) {
          uu = s.add(uu, y);
          vv = s.add(vv, y);
        }
        rel.set(uu, vv);
        rel.set(vv, uu);
      }
    }
  }
  return transitive_closure(rel).to_partition();
}

namespace detail {

// restricted growth strings: every partition of an n-set exactly once
template <typename F>
void for_each_set_partition(int n, F&& fn) {
  std::vector<int> ids(n, 0);
  if (n == 0) {
    fn(ids);
    return;
  }
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      fn(ids);
      return;
    }
    for (int c = 0; c <= mx + 1 && c < n; ++c) {
      ids[i] = c;
      self(self, i + 1, std::max(mx, c));
    }
  };
  rec(rec, 1, 0);
}

}  // namespace detail

//! Every congruence of s.  Below order 6 this tests all set partitions
//! (Bell numbers are small); at or above, it builds the congruence lattice
//! by closing the principal congruences under join.  Both strategies return
//! the same set; the switch is purely for scaling.
inline std::vector<Partition> all_congruences(FiniteSemiring const& s,
                                              int bound = oracle_max_order()) {
  int n = s.order();
  if (n > bound) {
    throw SemiringError(
        "allCongruences: order " + std::to_string(n) + " exceeds the oracle "
        "bound " + std::to_string(bound)
        + " (raise ORACLE_MAX_ORDER to spend more, or keep the lattice "
          "method within budget)");
  }
  std::vector<Partition> out;
  if (n < 6) {
    detail::for_each_set_partition(n, [&](std::vector<int> const& ids) {
      Partition p = Partition::from_class_ids(ids);
      if (is_congruence(s, p)) {
        out.push_back(std::move(p));
      }
    });
    return out;
  }
  std::set<std::vector<int>> seen;
  auto key = [](Partition const& p) {
    std::vector<int> k(p.order());
    for (int i = 0; i < p.order(); ++i) {
      k[i] = p.class_of(i);
    }
    return k;
  };
  std::vector<Partition> work;
  auto push = [&](Partition p) {
    if (seen.insert(key(p)).second) {
      work.push_back(std::move(p));
    }
  };
  push(Partition::identity(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      push(generated_congruence(s, {{a, b}}));
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      push(join(work[i], work[j]));
    }
  }
  return {work.begin(), work.end()};
}

//! rho: the kernel of a |-> a + 0_a.  Requires quasi complete regularity.
//! On such semirings this is the least completely regular semiring
//! congruence (oracle-checked in the verification suite).
inline Partition rho(FiniteSemiring const& s) {
  std::vector<int> key(s.order());
  for (int a = 0; a < s.order(); ++a) {
    key[a] = s.add(a, zero_of(s, a));
  }
  return Partition::from_class_ids(std::move(key));
}

//! The idempotent *D+-pairs: (e, f) with e, f additive idempotents and
//! e *D+ f.  This is the seed of the nu construction.
inline std::vector<std::pair<int, int>> nu_seed(FiniteSemiring const& s) {
  auto sd = star_d(s);
  auto es = additive_idempotents(s);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (sd.get(es[i], es[j])) {
        out.emplace_back(es[i], es[j]);
      }
    }
  }
  return out;
}

// forward declaration; defined below
inline bool is_b_lattice_of_skew_rings(FiniteSemiring const& s);

//! nu: the least congruence whose quotient is a b-lattice of skew-rings.
//! Constructed as the congruence generated by the idempotent *D+-pairs
//! together with the pairs of rho.  The rho pairs are needed: on a semiring
//! with a nontrivial nil part (N2 is the smallest case) the idempotent seed
//! alone generates a strictly smaller congruence whose quotient is not a
//! b-lattice of skew-rings.  The quotient is verified before returning.
inline Partition nu(FiniteSemiring const& s) {
  auto pairs = nu_seed(s);
  auto rp    = rho(s);  // throws if not quasi completely regular
  for (auto pr : rp.pairs()) {
    pairs.push_back(pr);
  }
  Partition p = generated_congruence(s, pairs);
  if (!is_b_lattice_of_skew_rings(quotient(s, p))) {
    throw ConsistencyError(
        "nu construction produced a quotient that is not a b-lattice of "
        "skew-rings");
  }
  return p;
}

//! The relation Y: a Y b iff V+(a+0_a) = V+(b+0_b).  An equivalence by
//! construction; not necessarily a congruence.
inline BinRelation y_relation(FiniteSemiring const& s) {
  int                           n = s.order();
  std::vector<std::vector<int>> inv(n);
  for (int a = 0; a < n; ++a) {
    inv[a] = additive_inverses(s, s.add(a, zero_of(s, a)));
  }
  BinRelation out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (inv[i] == inv[j]) {
        out.set(i, j);
      }
    }
  }
  return out;
}

//! Y*: the congruence generated by Y.
inline Partition y_star(FiniteSemiring const& s) {
  auto yr = y_relation(s);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < s.order(); ++i) {
    for (int j = i + 1; j < s.order(); ++j) {
      if (yr.get(i, j)) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return generated_congruence(s, pairs);
}

//! Witness against the gaip property: an element a related to an additive
//! idempotent whose additive orbit never stabilizes.
struct GaipViolation {
  int element;
  int idempotent;
};

//! Generalized additive idempotent pure: whenever a is related to an
//! additive idempotent, some n has n*a = (n+1)*a.  The search is bounded by
//! one full additive orbit of a (if the orbit's cycle is longer than 1 the
//! equation never holds).
inline std::optional<GaipViolation> gaip_violation(FiniteSemiring const& s,
                                                   Partition const& p) {
  auto es = additive_idempotents(s);
  for (int a = 0; a < s.order(); ++a) {
    bool related = false;
    for (int e : es) {
      if (p.same(a, e)) {
        related = true;
        break;
      }
    }
    if (!related) {
      continue;
    }
    if (!stabilization_index(s, a).has_value()) {
      for (int e : es) {
        if (p.same(a, e)) {
          return GaipViolation{a, e};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_gaip_congruence(FiniteSemiring const& s, Partition const& p) {
  return !gaip_violation(s, p).has_value();
}

// ---------------------------------------------------------------------
// quotient-shape predicates

//! (T, +) is a group: finite + cancellative, i.e. every row and column of
//! the addition table is a permutation.
inline bool is_skew_ring(FiniteSemiring const& s) {
  int n = s.order();
  for (int i = 0; i < n; ++i) {
    uint64_t row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row |= uint64_t(1) << s.add(i, j);
      col |= uint64_t(1) << s.add(j, i);
    }
    uint64_t full = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    if (row != full || col != full) {
      return false;
    }
  }
  return true;
}

//! (T, .) is a band and (T, +) a semilattice.
inline bool is_b_lattice(FiniteSemiring const& s) {
  int n = s.order();
  for (int x = 0; x < n; ++x) {
    if (s.mul(x, x) != x || s.add(x, x) != x) {
      return false;
    }
    for (int y = 0; y < n; ++y) {
      if (s.add(x, y) != s.add(y, x)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_idempotent_semiring(FiniteSemiring const& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (s.add(x, x) != x || s.mul(x, x) != x) {
      return false;
    }
  }
  return true;
}

inline bool is_completely_regular_semiring(FiniteSemiring const& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (!is_completely_regular_element(s, x)) {
      return false;
    }
  }
  return true;
}

//! A b-lattice of skew-rings: every element additively completely regular
//! (in the additive sense), H+ a semiring congruence with a b-lattice
//! quotient, and every H+-class closed under both operations with group
//! addition.
inline bool is_b_lattice_of_skew_rings(FiniteSemiring const& s) {
  int n = s.order();
  for (int x = 0; x < n; ++x) {
    if (!additively_completely_regular_witness(s, x).has_value()) {
      return false;
    }
  }
  Partition h = green_h(s).to_partition();
  if (!is_congruence(s, h)) {
    return false;
  }
  if (!is_b_lattice(quotient(s, h))) {
    return false;
  }
  for (auto const& cls : h.classes()) {
    for (int x : cls) {
      uint64_t row = 0, col = 0;
      for (int y : cls) {
        if (!h.same(s.add(x, y), cls[0]) || !h.same(s.mul(x, y), cls[0])) {
          return false;
        }
        row |= uint64_t(1) << s.add(x, y);
        col |= uint64_t(1) << s.add(y, x);
      }
      uint64_t full = 0;
      for (int y : cls) {
        full |= uint64_t(1) << y;
      }
      if (row != full || col != full) {
        return false;
      }
    }
  }
  return true;
}

//! The named congruences, as surfaced by the CLI.
enum class CongruenceKind {
  equality,
  universal,
  least_completely_regular,        // rho
  least_skew_ring,                 // sigma
  least_b_lattice_of_skew_rings,   // nu
  y_relation,                      // Y (an equivalence, maybe not a congruence)
  y_star                           // Y*
};

}  // namespace semirings

#endif  // SEMIRINGS_CONGRUENCES_HPP_
