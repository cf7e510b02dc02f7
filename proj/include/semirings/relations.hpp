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

// Green's relations on the additive reduct, their starred variants (which
// compare least additively-regular multiples), and a small relation algebra.

#ifndef SEMIRINGS_RELATIONS_HPP_
#define SEMIRINGS_RELATIONS_HPP_

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "elements.hpp"
#include "error.hpp"

namespace semirings {

//! A binary relation on 0..n-1 as a boolean matrix, one bit row per element.
//! Relations need not be reflexive, symmetric or transitive.
class BinRelation {
 public:
  explicit BinRelation(int n) : n_(n), rows_(n, 0) {
    if (n < 0 || n > 64) {
      throw SemiringError("relation order out of supported range [0, 64]");
    }
  }

  static BinRelation identity(int n) {
    BinRelation r(n);
    for (int i = 0; i < n; ++i) {
      r.set(i, i);
    }
    return r;
  }

  static BinRelation universal(int n) {
    BinRelation r(n);
    uint64_t    full = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (auto& row : r.rows_) {
      row = full;
    }
    return r;
  }

  static BinRelation from_partition(Partition const& p) {
    BinRelation r(p.order());
    for (auto const& cls : p.classes()) {
      for (int i : cls) {
        for (int j : cls) {
          r.set(i, j);
        }
      }
    }
    return r;
  }

  int  order() const noexcept { return n_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1; }
  void set(int i, int j) { rows_[i] |= uint64_t(1) << j; }
  void clear(int i, int j) { rows_[i] &= ~(uint64_t(1) << j); }

  bool operator==(BinRelation const&) const = default;

  BinRelation transpose() const {
    BinRelation r(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (get(i, j)) {
          r.set(j, i);
        }
      }
    }
    return r;
  }

  bool is_reflexive() const {
    for (int i = 0; i < n_; ++i) {
      if (!get(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric() const { return *this == transpose(); }

  bool is_transitive() const {
    for (int i = 0; i < n_; ++i) {
      uint64_t reach = 0;
      uint64_t row   = rows_[i];
      for (int k = 0; k < n_; ++k) {
        if ((row >> k) & 1) {
          reach |= rows_[k];
        }
      }
      if ((reach | row) != row) {
        return false;
      }
    }
    return true;
  }

  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  //! Converts to a Partition; requires an equivalence relation.
  Partition to_partition() const {
    if (!is_equivalence()) {
      throw SemiringError("relation is not an equivalence");
    }
    std::vector<int> ids(n_);
    for (int i = 0; i < n_; ++i) {
      int rep = 0;
      while (!get(i, rep)) {
        ++rep;
      }
      ids[i] = rep;
    }
    return Partition::from_class_ids(std::move(ids));
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        os << (get(i, j) ? '1' : '0');
        if (j + 1 < n_) {
          os << ' ';
        }
      }
      os << '\n';
    }
    return os.str();
  }

  friend BinRelation compose(BinRelation const& r1, BinRelation const& r2);
  friend BinRelation intersect(BinRelation const& r1, BinRelation const& r2);
  friend BinRelation unite(BinRelation const& r1, BinRelation const& r2);
  friend BinRelation transitive_closure(BinRelation const& r);

 private:
  int                   n_;
  std::vector<uint64_t> rows_;
};

//! Relational composition: i (r1 o r2) j iff i r1 k and k r2 j for some k.
inline BinRelation compose(BinRelation const& r1, BinRelation const& r2) {
  if (r1.order() != r2.order()) {
    throw SemiringError("relation orders differ");
  }
  BinRelation out(r1.order());
  for (int i = 0; i < r1.order(); ++i) {
    uint64_t acc = 0;
    uint64_t row = r1.rows_[i];
    for (int k = 0; k < r1.order(); ++k) {
      if ((row >> k) & 1) {
        acc |= r2.rows_[k];
      }
    }
    out.rows_[i] = acc;
  }
  return out;
}

inline BinRelation intersect(BinRelation const& r1, BinRelation const& r2) {
  if (r1.order() != r2.order()) {
    throw SemiringError("relation orders differ");
  }
  BinRelation out(r1.order());
  for (int i = 0; i < r1.order(); ++i) {
    out.rows_[i] = r1.rows_[i] & r2.rows_[i];
  }
  return out;
}

inline BinRelation unite(BinRelation const& r1, BinRelation const& r2) {
  if (r1.order() != r2.order()) {
    throw SemiringError("relation orders differ");
  }
  BinRelation out(r1.order());
  for (int i = 0; i < r1.order(); ++i) {
    out.rows_[i] = r1.rows_[i] | r2.rows_[i];
  }
  return out;
}

//! Iterated boolean product to the fixpoint.
inline BinRelation transitive_closure(BinRelation const& r) {
  BinRelation out = r;
  for (int k = 0; k < out.order(); ++k) {
    for (int i = 0; i < out.order(); ++i) {
      if (out.get(i, k)) {
        out.rows_[i] |= out.rows_[k];
      }
    }
  }
  return out;
}

inline bool is_equivalence(BinRelation const& r) { return r.is_equivalence(); }

namespace detail {

// principal additive ideals as bit masks; left = {a} ∪ (S+a),
// right = {a} ∪ (a+S), two-sided = {a} ∪ (S+a) ∪ (a+S) ∪ (S+a+S).
// Fixed sets realize the S^1-translations without adjoining an identity.
struct AdditiveIdeals {
  std::vector<uint64_t> left, right, two_sided;
};

inline AdditiveIdeals additive_ideals(FiniteSemiring const& s) {
  int            n = s.order();
  AdditiveIdeals out;
  out.left.assign(n, 0);
  out.right.assign(n, 0);
  out.two_sided.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    uint64_t l = uint64_t(1) << a, r = uint64_t(1) << a;
    for (int t = 0; t < n; ++t) {
      l |= uint64_t(1) << s.add(t, a);
      r |= uint64_t(1) << s.add(a, t);
    }
    uint64_t j = l | r;
    for (int t = 0; t < n; ++t) {
      int ta = s.add(t, a);
      for (int u = 0; u < n; ++u) {
        j |= uint64_t(1) << s.add(ta, u);
      }
    }
    out.left[a]      = l;
    out.right[a]     = r;
    out.two_sided[a] = j;
  }
  return out;
}

inline BinRelation equal_masks(std::vector<uint64_t> const& m) {
  int         n = static_cast<int>(m.size());
  BinRelation r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m[i] == m[j]) {
        r.set(i, j);
      }
    }
  }
  return r;
}

// least additively-regular multiple of each element; throws if some element
// has none (cannot happen for a validated finite semiring, but the starred
// relations are only defined on additively quasi regular semirings)
inline std::vector<int> regular_multiples(FiniteSemiring const& s) {
  std::vector<int> out(s.order());
  for (int a = 0; a < s.order(); ++a) {
    auto p = reg_index(s, a);
    if (!p.has_value()) {
      throw SemiringError("not additively quasi regular: element "
                          + std::to_string(a)
                          + " has no additively regular multiple");
    }
    out[a] = s.multiple(*p, a);
  }
  return out;
}

}  // namespace detail

inline BinRelation green_l(FiniteSemiring const& s) {
  return detail::equal_masks(detail::additive_ideals(s).left);
}

inline BinRelation green_r(FiniteSemiring const& s) {
  return detail::equal_masks(detail::additive_ideals(s).right);
}

inline BinRelation green_j(FiniteSemiring const& s) {
  return detail::equal_masks(detail::additive_ideals(s).two_sided);
}

inline BinRelation green_h(FiniteSemiring const& s) {
  return intersect(green_l(s), green_r(s));
}

//! D+ = L+ o R+.  The two composition orders agree in any semigroup; this is
//! recomputed both ways and a mismatch is reported rather than resolved.
inline BinRelation green_d(FiniteSemiring const& s) {
  auto l  = green_l(s);
  auto r  = green_r(s);
  auto lr = compose(l, r);
  if (lr != compose(r, l)) {
    throw ConsistencyError("L+ o R+ differs from R+ o L+");
  }
  return lr;
}

//! a *L+ b iff p*a L+ q*b, where p and q are the least indices making the
//! multiples additively regular.
inline BinRelation star_l(FiniteSemiring const& s) {
  auto rm = detail::regular_multiples(s);
  auto g  = green_l(s);
  BinRelation out(s.order());
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (g.get(rm[i], rm[j])) {
        out.set(i, j);
      }
    }
  }
  return out;
}

inline BinRelation star_r(FiniteSemiring const& s) {
  auto rm = detail::regular_multiples(s);
  auto g  = green_r(s);
  BinRelation out(s.order());
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (g.get(rm[i], rm[j])) {
        out.set(i, j);
      }
    }
  }
  return out;
}

inline BinRelation star_j(FiniteSemiring const& s) {
  auto rm = detail::regular_multiples(s);
  auto g  = green_j(s);
  BinRelation out(s.order());
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (g.get(rm[i], rm[j])) {
        out.set(i, j);
      }
    }
  }
  return out;
}

inline BinRelation star_h(FiniteSemiring const& s) {
  return intersect(star_l(s), star_r(s));
}

inline BinRelation star_d(FiniteSemiring const& s) {
  auto l  = star_l(s);
  auto r  = star_r(s);
  auto lr = compose(l, r);
  if (lr != compose(r, l)) {
    throw ConsistencyError("*L+ o *R+ differs from *R+ o *L+");
  }
  return lr;
}

}  // namespace semirings

#endif  // SEMIRINGS_RELATIONS_HPP_
