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

// Finite semirings as validated operation tables, plus the constructions
// everything else is built from: partitions, quotients, products, spined
// products and isomorphism search.  Elements are the indices 0..n-1; there
// is no distinguished zero or one unless the tables happen to provide one.

#ifndef SEMIRINGS_CORE_HPP_
#define SEMIRINGS_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semirings {

//! A single broken axiom, with the witness triple that breaks it.
struct AxiomViolation {
  enum class Kind {
    add_not_associative,
    mul_not_associative,
    left_distributivity,
    right_distributivity
  };

  Kind kind;
  int  i, j, k;  // witness triple
  int  lhs, rhs;

  std::string to_string() const {
    auto name = [](Kind kd) {
      switch (kd) {
        case Kind::add_not_associative: return "add not associative";
        case Kind::mul_not_associative: return "mul not associative";
        case Kind::left_distributivity: return "left distributivity fails";
        default: return "right distributivity fails";
      }
    };
    std::ostringstream os;
    os << name(kind) << " at (" << i << "," << j << "," << k << "): " << lhs
       << " != " << rhs;
    return os.str();
  }

  bool operator==(AxiomViolation const&) const = default;
};

//! A finite semiring: an order n and two n-by-n operation tables, both
//! associative and connected by two-sided distributivity.  Instances are
//! immutable values and safe to share freely.
//!
//! Neither operation is assumed commutative, and no identity or absorbing
//! element is assumed.
class FiniteSemiring {
 public:
  //! Checks that both tables are n-by-n with entries in [0, n).
  //! Throws ParseError otherwise (this is a shape problem, not an axiom
  //! violation).
  static void check_shape(int n, std::vector<int> const& add,
                          std::vector<int> const& mul) {
    if (n <= 0) {
      throw ParseError("order must be positive, got " + std::to_string(n));
    }
    auto check = [&](std::vector<int> const& t, char const* which) {
      if (static_cast<int>(t.size()) != n * n) {
        throw ParseError(std::string(which) + " table has "
                         + std::to_string(t.size()) + " entries, expected "
                         + std::to_string(n * n));
      }
      for (int v : t) {
        if (v < 0 || v >= n) {
          throw ParseError(std::string(which) + " table entry "
                           + std::to_string(v) + " out of range [0, "
                           + std::to_string(n) + ")");
        }
      }
    };
    check(add, "add");
    check(mul, "mul");
  }

  //! Every axiom violation in a fixed order (all triples scanned
  //! lexicographically).  Empty result means the tables form a semiring.
  static std::vector<AxiomViolation> axiom_violations(
      int n, std::vector<int> const& add, std::vector<int> const& mul) {
    check_shape(n, add, mul);
    std::vector<AxiomViolation> out;
    auto at = [n](std::vector<int> const& t, int i, int j) {
      return t[i * n + j];
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          int l = at(add, at(add, i, j), k);
          int r = at(add, i, at(add, j, k));
          if (l != r) {
            out.push_back({AxiomViolation::Kind::add_not_associative, i, j, k,
                           l, r});
          }
          l = at(mul, at(mul, i, j), k);
          r = at(mul, i, at(mul, j, k));
          if (l != r) {
            out.push_back({AxiomViolation::Kind::mul_not_associative, i, j, k,
                           l, r});
          }
          l = at(mul, i, at(add, j, k));
          r = at(add, at(mul, i, j), at(mul, i, k));
          if (l != r) {
            out.push_back({AxiomViolation::Kind::left_distributivity, i, j, k,
                           l, r});
          }
          l = at(mul, at(add, j, k), i);
          r = at(add, at(mul, j, i), at(mul, k, i));
          if (l != r) {
            out.push_back({AxiomViolation::Kind::right_distributivity, i, j,
                           k, l, r});
          }
        }
      }
    }
    return out;
  }

  //! Builds a semiring from tables, throwing SemiringError (with every
  //! violation listed) if the axioms fail.
  static FiniteSemiring validated(int n, std::vector<int> add,
                                  std::vector<int> mul) {
    auto bad = axiom_violations(n, add, mul);
    if (!bad.empty()) {
      std::ostringstream os;
      os << "not a semiring (" << bad.size() << " axiom violations):";
      for (auto const& v : bad) {
        os << "\n  " << v.to_string();
      }
      throw SemiringError(os.str());
    }
    return FiniteSemiring(n, std::move(add), std::move(mul));
  }

  int order() const noexcept { return n_; }

  int add(int i, int j) const { return add_[i * n_ + j]; }
  int mul(int i, int j) const { return mul_[i * n_ + j]; }

  std::vector<int> const& add_table() const noexcept { return add_; }
  std::vector<int> const& mul_table() const noexcept { return mul_; }

  //! k-th additive multiple of a (k >= 1), summed left to right.
  int multiple(int k, int a) const {
    int acc = a;
    for (int t = 1; t < k; ++t) {
      acc = add(acc, a);
    }
    return acc;
  }

  bool operator==(FiniteSemiring const&) const = default;

 private:
  FiniteSemiring(int n, std::vector<int> add, std::vector<int> mul)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)) {}

  int              n_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

namespace detail {

//! Plain union-find with path halving; the workhorse behind congruence
//! generation and partition joins.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  //! Returns true if the two classes were distinct.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      return false;
    }
    parent_[ra] = rb;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

//! An equivalence relation on 0..n-1 stored in canonical form: class ids are
//! assigned in order of each class's smallest member, so equal partitions
//! compare equal and serialization is deterministic.
class Partition {
 public:
  Partition() = default;

  static Partition identity(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_class_ids(std::move(ids));
  }

  static Partition universal(int n) {
    return from_class_ids(std::vector<int>(n, 0));
  }

  //! Canonicalizes an arbitrary element -> class-label map.
  static Partition from_class_ids(std::vector<int> raw) {
    Partition p;
    int       n = static_cast<int>(raw.size());
    p.class_of_.assign(n, -1);
    std::vector<int> relabel(n, -1);
    int              next = 0;
    for (int i = 0; i < n; ++i) {
      int c = raw[i];
      if (c < 0 || c >= n) {
        throw SemiringError("class id out of range in partition");
      }
      if (relabel[c] == -1) {
        relabel[c] = next++;
        p.classes_.emplace_back();
      }
      p.class_of_[i] = relabel[c];
      p.classes_[relabel[c]].push_back(i);
    }
    return p;
  }

  static Partition from_union_find(detail::UnionFind& uf) {
    int              n = uf.size();
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) {
      ids[i] = uf.find(i);
    }
    return from_class_ids(std::move(ids));
  }

  int order() const noexcept { return static_cast<int>(class_of_.size()); }
  int num_classes() const noexcept { return static_cast<int>(classes_.size()); }
  int class_of(int i) const { return class_of_[i]; }

  std::vector<std::vector<int>> const& classes() const noexcept {
    return classes_;
  }

  bool same(int i, int j) const { return class_of_[i] == class_of_[j]; }

  //! True when every class of *this is contained in a class of coarser.
  bool refines(Partition const& coarser) const {
    if (coarser.order() != order()) {
      throw SemiringError("partition orders differ");
    }
    for (auto const& cls : classes_) {
      for (std::size_t t = 1; t < cls.size(); ++t) {
        if (!coarser.same(cls[0], cls[t])) {
          return false;
        }
      }
    }
    return true;
  }

  //! All related pairs (i, j) with i < j.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (auto const& cls : classes_) {
      for (std::size_t s = 0; s < cls.size(); ++s) {
        for (std::size_t t = s + 1; t < cls.size(); ++t) {
          out.emplace_back(cls[s], cls[t]);
        }
      }
    }
    return out;
  }

  bool operator==(Partition const&) const = default;

  //! Renders as e.g. "{0 2 | 1 | 3}".
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (c != 0) {
        os << " | ";
      }
      for (std::size_t t = 0; t < classes_[c].size(); ++t) {
        if (t != 0) {
          os << ' ';
        }
        os << classes_[c][t];
      }
    }
    os << '}';
    return os.str();
  }

 private:
  std::vector<int>              class_of_;
  std::vector<std::vector<int>> classes_;
};

//! Least upper bound in the partition lattice (transitive closure of the
//! union).  The join of two congruences is again a congruence.
inline Partition join(Partition const& a, Partition const& b) {
  if (a.order() != b.order()) {
    throw SemiringError("partition orders differ");
  }
  detail::UnionFind uf(a.order());
  for (auto const& cls : a.classes()) {
    for (std::size_t t = 1; t < cls.size(); ++t) {
      uf.unite(cls[0], cls[t]);
    }
  }
  for (auto const& cls : b.classes()) {
    for (std::size_t t = 1; t < cls.size(); ++t) {
      uf.unite(cls[0], cls[t]);
    }
  }
  return Partition::from_union_find(uf);
}

inline Partition meet(Partition const& a, Partition const& b) {
  if (a.order() != b.order()) {
    throw SemiringError("partition orders differ");
  }
  int              n = a.order();
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = a.class_of(i) * n + b.class_of(i);
  }
  // relabel into range
  std::vector<int> seen;
  for (int& v : ids) {
    auto it = std::find(seen.begin(), seen.end(), v);
    if (it == seen.end()) {
      seen.push_back(v);
      v = static_cast<int>(seen.size()) - 1;
    } else {
      v = static_cast<int>(it - seen.begin());
    }
  }
  return Partition::from_class_ids(std::move(ids));
}

//! Witness that a partition fails to be a semiring congruence: a related
//! pair (a, b) and a translator c such that one of the four compatibility
//! conditions breaks.
struct CongruenceViolation {
  enum class Kind { add_right, add_left, mul_right, mul_left };
  Kind kind;
  int  a, b, c;

  std::string to_string() const {
    char const* what = kind == Kind::add_right   ? "(a+c, b+c)"
                       : kind == Kind::add_left  ? "(c+a, c+b)"
                       : kind == Kind::mul_right ? "(ac, bc)"
                                                 : "(ca, cb)";
    std::ostringstream os;
    os << "pair (" << a << "," << b << ") with c=" << c << " splits " << what;
    return os.str();
  }
};

inline std::optional<CongruenceViolation> congruence_violation(
    FiniteSemiring const& s, Partition const& p) {
  if (p.order() != s.order()) {
    throw SemiringError("partition order does not match semiring order");
  }
  for (auto const& cls : p.classes()) {
    for (std::size_t u = 0; u < cls.size(); ++u) {
      for (std::size_t v = u + 1; v < cls.size(); ++v) {
        int a = cls[u], b = cls[v];
        for (int c = 0; c < s.order(); ++c) {
          if (!p.same(s.add(a, c), s.add(b, c))) {
            return CongruenceViolation{CongruenceViolation::Kind::add_right,
                                       a, b, c};
          }
          if (!p.same(s.add(c, a), s.add(c, b))) {
            return CongruenceViolation{CongruenceViolation::Kind::add_left, a,
                                       b, c};
          }
          if (!p.same(s.mul(a, c), s.mul(b, c))) {
            return CongruenceViolation{CongruenceViolation::Kind::mul_right,
                                       a, b, c};
          }
          if (!p.same(s.mul(c, a), s.mul(c, b))) {
            return CongruenceViolation{CongruenceViolation::Kind::mul_left, a,
                                       b, c};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_congruence(FiniteSemiring const& s, Partition const& p) {
  return !congruence_violation(s, p).has_value();
}

//! Quotient by a congruence.  Classes are indexed by smallest member (the
//! Partition canonical order), so the class of element 0 is element 0 of the
//! quotient and the construction is deterministic.
inline FiniteSemiring quotient(FiniteSemiring const& s, Partition const& p) {
  if (auto v = congruence_violation(s, p)) {
    throw SemiringError("partition is not a congruence: " + v->to_string());
  }
  int              k = p.num_classes();
  std::vector<int> rep(k);
  for (int c = 0; c < k; ++c) {
    rep[c] = p.classes()[c].front();
  }
  std::vector<int> add(k * k), mul(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      add[i * k + j] = p.class_of(s.add(rep[i], rep[j]));
      mul[i * k + j] = p.class_of(s.mul(rep[i], rep[j]));
    }
  }
  return FiniteSemiring::validated(k, std::move(add), std::move(mul));
}

//! Componentwise product on pairs ordered lexicographically:
//! (a, b) has index a * |B| + b.
inline FiniteSemiring direct_product(FiniteSemiring const& a,
                                     FiniteSemiring const& b) {
  int              n = a.order() * b.order();
  std::vector<int> add(n * n), mul(n * n);
  auto             ix = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          int i          = ix(x1, y1);
          int j          = ix(x2, y2);
          add[i * n + j] = ix(a.add(x1, x2), b.add(y1, y2));
          mul[i * n + j] = ix(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  return FiniteSemiring::validated(n, std::move(add), std::move(mul));
}

//! A map between two semirings that has been checked to preserve both
//! operations; records whether it is onto.
struct HomomorphismWitness {
  FiniteSemiring   source;
  FiniteSemiring   target;
  std::vector<int> map;
  bool             surjective;

  static HomomorphismWitness checked(FiniteSemiring source,
                                     FiniteSemiring target,
                                     std::vector<int> map) {
    if (static_cast<int>(map.size()) != source.order()) {
      throw SemiringError("homomorphism map has wrong length");
    }
    for (int v : map) {
      if (v < 0 || v >= target.order()) {
        throw SemiringError("homomorphism map value out of range");
      }
    }
    for (int x = 0; x < source.order(); ++x) {
      for (int y = 0; y < source.order(); ++y) {
        if (map[source.add(x, y)] != target.add(map[x], map[y])) {
          throw SemiringError("map does not preserve addition at ("
                              + std::to_string(x) + "," + std::to_string(y)
                              + ")");
        }
        if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
          throw SemiringError("map does not preserve multiplication at ("
                              + std::to_string(x) + "," + std::to_string(y)
                              + ")");
        }
      }
    }
    std::vector<bool> hit(target.order(), false);
    for (int v : map) {
      hit[v] = true;
    }
    bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return HomomorphismWitness{std::move(source), std::move(target),
                               std::move(map), onto};
  }
};

//! Pullback of two epimorphisms onto a common image: the subsemiring of
//! A x B on the pairs (a, b) with a.phi = b.psi, pairs ordered
//! lexicographically.  With a one-element image this is exactly the direct
//! product, element for element.
inline FiniteSemiring spined_product(FiniteSemiring const& a,
                                     FiniteSemiring const& b,
                                     FiniteSemiring const& y,
                                     HomomorphismWitness const& phi,
                                     HomomorphismWitness const& psi) {
  if (phi.source != a || phi.target != y || psi.source != b
      || psi.target != y) {
    throw SemiringError("spined product maps do not match the factors");
  }
  if (!phi.surjective || !psi.surjective) {
    throw SemiringError("spined product requires surjective homomorphisms");
  }
  std::vector<std::pair<int, int>> elems;
  for (int x = 0; x < a.order(); ++x) {
    for (int z = 0; z < b.order(); ++z) {
      if (phi.map[x] == psi.map[z]) {
        elems.emplace_back(x, z);
      }
    }
  }
  int              n = static_cast<int>(elems.size());
  auto             find = [&](int x, int z) {
    auto it = std::lower_bound(elems.begin(), elems.end(),
                               std::make_pair(x, z));
    if (it == elems.end() || *it != std::make_pair(x, z)) {
      throw ConsistencyError("spined product not closed under operations");
    }
    return static_cast<int>(it - elems.begin());
  };
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [x1, z1]  = elems[i];
      auto [x2, z2]  = elems[j];
      add[i * n + j] = find(a.add(x1, x2), b.add(z1, z2));
      mul[i * n + j] = find(a.mul(x1, x2), b.mul(z1, z2));
    }
  }
  return FiniteSemiring::validated(n, std::move(add), std::move(mul));
}

//! A subsemiring induced on a subset (which must be closed under both
//! operations), with translation maps in both directions.
struct SubSemiring {
  FiniteSemiring   semiring;
  std::vector<int> global_of;  // local index -> element of the parent
  std::vector<int> local_of;   // element of the parent -> local index or -1
};

inline SubSemiring restriction(FiniteSemiring const& s,
                               std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<int> local(s.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    local[subset[i]] = static_cast<int>(i);
  }
  int              k = static_cast<int>(subset.size());
  std::vector<int> add(k * k), mul(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int sa = s.add(subset[i], subset[j]);
      int sm = s.mul(subset[i], subset[j]);
      if (local[sa] == -1 || local[sm] == -1) {
        throw SemiringError("subset is not closed under the operations");
      }
      add[i * k + j] = local[sa];
      mul[i * k + j] = local[sm];
    }
  }
  return SubSemiring{FiniteSemiring::validated(k, std::move(add),
                                               std::move(mul)),
                     std::move(subset), std::move(local)};
}

namespace detail {

// isomorphism-invariant per-element fingerprint used to prune the search
inline std::vector<int64_t> element_fingerprints(FiniteSemiring const& s) {
  int                  n = s.order();
  std::vector<int64_t> out(n);
  for (int a = 0; a < n; ++a) {
    int add_orbit = 0;
    {
      std::vector<bool> seen(n, false);
      int               cur = a;
      while (!seen[cur]) {
        seen[cur] = true;
        ++add_orbit;
        cur = s.add(cur, a);
      }
    }
    int mul_orbit = 0;
    {
      std::vector<bool> seen(n, false);
      int               cur = a;
      while (!seen[cur]) {
        seen[cur] = true;
        ++mul_orbit;
        cur = s.mul(cur, a);
      }
    }
    int fix = 0;
    for (int x = 0; x < n; ++x) {
      fix += (s.add(a, x) == a) + (s.add(x, a) == a) + (s.mul(a, x) == a)
             + (s.mul(x, a) == a);
    }
    int64_t f = (s.add(a, a) == a);
    f         = f * 2 + (s.mul(a, a) == a);
    f         = f * (n + 1) + add_orbit;
    f         = f * (n + 1) + mul_orbit;
    f         = f * (4 * n + 1) + fix;
    out[a]    = f;
  }
  return out;
}

// true if the table constraints between element u and the newly mapped
// element are consistent (results are only checked once they are mapped;
// elements are mapped in index order, so "mapped" means index <= next)
inline bool partial_consistent(FiniteSemiring const& a,
                               FiniteSemiring const& b,
                               std::vector<int> const& map, int next, int u) {
  int v = next;
  for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    int s = a.add(x, y);
    if (s <= next && map[s] != b.add(map[x], map[y])) {
      return false;
    }
    int m = a.mul(x, y);
    if (m <= next && map[m] != b.mul(map[x], map[y])) {
      return false;
    }
  }
  return true;
}

inline bool extend_isomorphism(FiniteSemiring const& a,
                               FiniteSemiring const& b,
                               std::vector<int64_t> const& fa,
                               std::vector<int64_t> const& fb,
                               std::vector<int>& map, std::vector<bool>& used,
                               int next) {
  int n = a.order();
  if (next == n) {
    return true;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w] || fa[next] != fb[w]) {
      continue;
    }
    map[next] = w;
    used[w]   = true;
    bool ok   = true;
    for (int u = 0; u <= next && ok; ++u) {
      ok = partial_consistent(a, b, map, next, u);
    }
    if (ok && extend_isomorphism(a, b, fa, fb, map, used, next + 1)) {
      return true;
    }
    map[next] = -1;
    used[w]   = false;
  }
  return false;
}

}  // namespace detail

//! Searches for a bijection preserving both operations; returns it if one
//! exists.  Backtracking with per-element fingerprint pruning; fine for the
//! orders this library targets (<= 10 or so).
inline std::optional<std::vector<int>> is_isomorphic(FiniteSemiring const& a,
                                                     FiniteSemiring const& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  auto fa = detail::element_fingerprints(a);
  auto fb = detail::element_fingerprints(b);
  {
    auto sa = fa;
    auto sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
  }
  std::vector<int>  map(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  if (detail::extend_isomorphism(a, b, fa, fb, map, used, 0)) {
    return map;
  }
  return std::nullopt;
}

}  // namespace semirings

#endif  // SEMIRINGS_CORE_HPP_
