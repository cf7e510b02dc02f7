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

// Rees matrix semirings and their sandwich conditions, skew-ideals, the
// structural predicates (completely simple, completely Archimedean,
// quasi-orthodox), kernels of nil-extensions, Rees coordinatization, the
// b-lattice decomposition, and the least skew-ring congruence sigma read off
// from the coordinates.

#ifndef SEMIRINGS_STRUCTURES_HPP_
#define SEMIRINGS_STRUCTURES_HPP_

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "congruences.hpp"
#include "core.hpp"
#include "elements.hpp"
#include "error.hpp"
#include "relations.hpp"

namespace semirings {

//! A band: a finite set with one associative idempotent operation and a
//! distinguished element o (the element the two bands of a Rees spec share).
struct Band {
  int              order;
  std::vector<int> table;
  int              o;

  static Band validated(int n, std::vector<int> table, int o) {
    if (n <= 0) {
      throw ParseError("band order must be positive");
    }
    if (static_cast<int>(table.size()) != n * n) {
      throw ParseError("band table has wrong size");
    }
    for (int v : table) {
      if (v < 0 || v >= n) {
        throw ParseError("band table entry out of range");
      }
    }
    if (o < 0 || o >= n) {
      throw ParseError("band distinguished element out of range");
    }
    auto at = [&](int i, int j) { return table[i * n + j]; };
    for (int i = 0; i < n; ++i) {
      if (at(i, i) != i) {
        throw SemiringError("band operation not idempotent at "
                            + std::to_string(i));
      }
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (at(at(i, j), k) != at(i, at(j, k))) {
            throw SemiringError("band operation not associative at ("
                                + std::to_string(i) + "," + std::to_string(j)
                                + "," + std::to_string(k) + ")");
          }
        }
      }
    }
    return Band{n, std::move(table), o};
  }

  int mul(int i, int j) const { return table[i * order + j]; }

  bool operator==(Band const&) const = default;
};

//! The additive identity of a skew-ring (its unique additive idempotent).
inline int ring_zero(FiniteSemiring const& r) {
  for (int e = 0; e < r.order(); ++e) {
    if (r.add(e, e) == e) {
      return e;
    }
  }
  throw SemiringError("skew-ring has no additive idempotent");
}

//! Additive group inverse in a skew-ring.
inline int ring_neg(FiniteSemiring const& r, int x) {
  int zero = ring_zero(r);
  for (int y = 0; y < r.order(); ++y) {
    if (r.add(x, y) == zero && r.add(y, x) == zero) {
      return y;
    }
  }
  throw SemiringError("element has no additive inverse in skew-ring");
}

//! Ingredients of a Rees matrix semiring: two bands sharing a distinguished
//! element, a skew-ring, and the sandwich matrix P (rows indexed by the
//! second band Lambda, columns by the first band I).
struct ReesSpec {
  Band             band_i;
  Band             band_l;
  FiniteSemiring   ring;
  std::vector<int> p;  // row-major: p[lambda * |I| + i]

  static ReesSpec checked(Band band_i, Band band_l, FiniteSemiring ring,
                          std::vector<int> p) {
    if (!is_skew_ring(ring)) {
      throw SemiringError("Rees spec ring is not a skew-ring");
    }
    if (static_cast<int>(p.size()) != band_l.order * band_i.order) {
      throw ParseError("sandwich matrix has wrong shape");
    }
    for (int v : p) {
      if (v < 0 || v >= ring.order()) {
        throw ParseError("sandwich matrix entry out of range");
      }
    }
    return ReesSpec{std::move(band_i), std::move(band_l), std::move(ring),
                    std::move(p)};
  }

  int p_at(int lambda, int i) const { return p[lambda * band_i.order + i]; }

  bool operator==(ReesSpec const&) const = default;
};

//! One violated sandwich-matrix condition, by number (1-6 for (i)-(vi)),
//! with the indices that witness it.
struct PViolation {
  int              condition;
  std::vector<int> indices;

  std::string to_string() const {
    static char const* roman[] = {"", "(i)", "(ii)", "(iii)", "(iv)", "(v)",
                                  "(vi)"};
    std::ostringstream os;
    os << "condition " << roman[condition] << " fails at (";
    for (std::size_t t = 0; t < indices.size(); ++t) {
      if (t != 0) {
        os << ',';
      }
      os << indices[t];
    }
    os << ')';
    return os.str();
  }
};

//! Exhaustively checks conditions (i)-(vi) on the sandwich matrix.  The
//! double-indexed entries p_{alpha beta, kl} are read at the band products:
//! row alpha*beta in Lambda, column k*l in I, consistent with the
//! multiplication formula.
inline std::vector<PViolation> validate_p(ReesSpec const& spec) {
  auto const& bi = spec.band_i;
  auto const& bl = spec.band_l;
  auto const& r  = spec.ring;
  int         ni = bi.order, nl = bl.order, nr = r.order();
  int         zero = ring_zero(r);
  auto        neg  = [&](int x) { return ring_neg(r, x); };
  std::vector<PViolation> out;

  for (int l = 0; l < nl; ++l) {
    if (spec.p_at(l, bi.o) != zero) {
      out.push_back({1, {l, bi.o}});
    }
  }
  for (int i = 0; i < ni; ++i) {
    if (spec.p_at(bl.o, i) != zero) {
      out.push_back({1, {bl.o, i}});
    }
  }
  for (int l = 0; l < nl; ++l) {
    for (int m = 0; m < nl; ++m) {
      for (int v = 0; v < nl; ++v) {
        for (int i = 0; i < ni; ++i) {
          for (int j = 0; j < ni; ++j) {
            for (int k = 0; k < ni; ++k) {
              // (ii): p_{lm,kj} = p_{lm,ij} - p_{vm,ij} + p_{vm,kj}
              int lm  = bl.mul(l, m);
              int vm  = bl.mul(v, m);
              int kj  = bi.mul(k, j);
              int ij  = bi.mul(i, j);
              int rhs = r.add(r.add(spec.p_at(lm, ij),
                                    neg(spec.p_at(vm, ij))),
                              spec.p_at(vm, kj));
              if (spec.p_at(lm, kj) != rhs) {
                out.push_back({2, {l, m, v, i, j, k}});
              }
              // (iii): p_{ml,jk} = p_{ml,ji} - p_{mv,ji} + p_{mv,jk}
              int ml = bl.mul(m, l);
              int mv = bl.mul(m, v);
              int jk = bi.mul(j, k);
              int ji = bi.mul(j, i);
              rhs    = r.add(r.add(spec.p_at(ml, ji),
                                   neg(spec.p_at(mv, ji))),
                             spec.p_at(mv, jk));
              if (spec.p_at(ml, jk) != rhs) {
                out.push_back({3, {m, l, v, j, k, i}});
              }
            }
          }
        }
      }
    }
  }
  for (int a = 0; a < nr; ++a) {
    for (int l = 0; l < nl; ++l) {
      for (int i = 0; i < ni; ++i) {
        if (r.mul(a, spec.p_at(l, i)) != zero
            || r.mul(spec.p_at(l, i), a) != zero) {
          out.push_back({4, {a, l, i}});
        }
      }
    }
  }
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      int ab = r.mul(a, b);
      for (int i = 0; i < ni; ++i) {
        for (int m = 0; m < nl; ++m) {
          int entry = spec.p_at(bl.mul(bl.o, m), bi.mul(i, bi.o));
          if (r.add(ab, entry) != r.add(entry, ab)) {
            out.push_back({5, {a, b, i, m}});
          }
        }
      }
      for (int l = 0; l < nl; ++l) {
        for (int j = 0; j < ni; ++j) {
          int entry = spec.p_at(bl.mul(l, bl.o), bi.mul(bi.o, j));
          if (r.add(ab, entry) != r.add(entry, ab)) {
            out.push_back({6, {a, b, l, j}});
          }
        }
      }
    }
  }
  return out;
}

//! Element index of (i, g, lambda) in the Rees matrix semiring, ordered
//! lexicographically.
inline int rees_index(ReesSpec const& spec, int i, int g, int lambda) {
  return (i * spec.ring.order() + g) * spec.band_l.order + lambda;
}

// declared further down; used by rees_matrix's output check
inline bool is_completely_simple(FiniteSemiring const& s);

//! Builds the Rees matrix semiring on I x R x Lambda:
//!   (i,a,l) + (j,b,m) = (i, a + p_{l,j} + b, m)
//!   (i,a,l) * (j,b,m) = (ij, -p_{lm,ij} + ab, lm).
//! Requires validate_p to pass; the output is validated as a semiring and
//! checked completely simple (a failure of either would contradict the
//! construction and raises ConsistencyError).
inline FiniteSemiring rees_matrix(ReesSpec const& spec) {
  auto bad = validate_p(spec);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "sandwich matrix rejected (" << bad.size() << " violations):";
    for (std::size_t t = 0; t < bad.size() && t < 8; ++t) {
      os << "\n  " << bad[t].to_string();
    }
    throw SemiringError(os.str());
  }
  auto const& bi = spec.band_i;
  auto const& bl = spec.band_l;
  auto const& r  = spec.ring;
  int         ni = bi.order, nl = bl.order, nr = r.order();
  int         n  = ni * nr * nl;
  auto        neg = [&](int x) { return ring_neg(r, x); };
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < ni; ++i) {
    for (int g = 0; g < nr; ++g) {
      for (int l = 0; l < nl; ++l) {
        int u = rees_index(spec, i, g, l);
        for (int j = 0; j < ni; ++j) {
          for (int h = 0; h < nr; ++h) {
            for (int m = 0; m < nl; ++m) {
              int v = rees_index(spec, j, h, m);
              add[u * n + v] = rees_index(
                  spec, i, r.add(r.add(g, spec.p_at(l, j)), h), m);
              int ij = bi.mul(i, j);
              int lm = bl.mul(l, m);
              mul[u * n + v] = rees_index(
                  spec, ij, r.add(neg(spec.p_at(lm, ij)), r.mul(g, h)), lm);
            }
          }
        }
      }
    }
  }
  FiniteSemiring out = [&] {
    try {
      return FiniteSemiring::validated(n, std::move(add), std::move(mul));
    } catch (SemiringError const& e) {
      throw ConsistencyError(std::string("Rees matrix output failed semiring "
                                         "validation: ")
                             + e.what());
    }
  }();
  if (!is_completely_simple(out)) {
    throw ConsistencyError("Rees matrix output is not completely simple");
  }
  return out;
}

//! Least skew-ideal of a skew-ring containing the given generators: the
//! smallest subset containing them and the zero, closed under the group
//! operations, conjugation, and multiplication by every ring element on
//! either side.  Worklist closure.
inline std::vector<int> skew_ideal_generated(FiniteSemiring const& r,
                                             std::vector<int> const& gens) {
  if (!is_skew_ring(r)) {
    throw SemiringError("skew-ideal closure requires a skew-ring");
  }
  int               zero = ring_zero(r);
  std::vector<bool> in(r.order(), false);
  std::vector<int>  work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  push(zero);
  for (int g : gens) {
    push(g);
  }
  for (std::size_t t = 0; t < work.size(); ++t) {
    int x = work[t];
    push(ring_neg(r, x));
    for (int c = 0; c < r.order(); ++c) {
      if (in[c]) {
        // sums in both orders; the later-processed member of any pair sees
        // the other one, so all pairs are eventually covered
        push(r.add(x, c));
        push(r.add(c, x));
      }
      // normality: c + x - c
      push(r.add(r.add(c, x), ring_neg(r, c)));
      push(r.mul(c, x));
      push(r.mul(x, c));
    }
  }
  std::vector<int> out;
  for (int x = 0; x < r.order(); ++x) {
    if (in[x]) {
      out.push_back(x);
    }
  }
  return out;
}

//! Completely simple: the additive reduct is a completely simple semigroup,
//! i.e. every element is additively completely regular and J+ is universal.
inline bool is_completely_simple(FiniteSemiring const& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (!additively_completely_regular_witness(s, x).has_value()) {
      return false;
    }
  }
  auto j = green_j(s);
  return j == BinRelation::universal(s.order());
}

//! Completely Archimedean: quasi completely regular with *J+ universal.
inline bool is_completely_archimedean(FiniteSemiring const& s) {
  if (!is_quasi_completely_regular(s)) {
    return false;
  }
  return star_j(s) == BinRelation::universal(s.order());
}

//! The kernel of a completely Archimedean semiring (the completely simple
//! semiring it is a nil-extension of), with every property re-verified.
//! Verification failures are returned as findings instead of thrown: they
//! would contradict the structure theory and deserve reporting.
struct KernelResult {
  std::vector<int>         elements;
  std::vector<std::string> findings;
};

inline KernelResult kernel(FiniteSemiring const& s) {
  if (!is_completely_archimedean(s)) {
    throw SemiringError("kernel requires a completely Archimedean semiring");
  }
  KernelResult res;
  for (int x = 0; x < s.order(); ++x) {
    if (additively_completely_regular_witness(s, x).has_value()) {
      res.elements.push_back(x);
    }
  }
  std::vector<bool> in(s.order(), false);
  for (int x : res.elements) {
    in[x] = true;
  }
  for (int k : res.elements) {
    for (int t = 0; t < s.order(); ++t) {
      if (!in[s.add(k, t)] || !in[s.add(t, k)]) {
        res.findings.push_back("kernel is not an additive ideal at ("
                               + std::to_string(k) + "," + std::to_string(t)
                               + ")");
      }
      if (!in[s.mul(k, t)] || !in[s.mul(t, k)]) {
        res.findings.push_back("kernel is not a multiplicative ideal at ("
                               + std::to_string(k) + "," + std::to_string(t)
                               + ")");
      }
    }
  }
  if (res.findings.empty()) {
    auto sub = restriction(s, res.elements);
    if (!is_completely_simple(sub.semiring)) {
      res.findings.push_back("kernel is not completely simple");
    }
  }
  for (int a = 0; a < s.order(); ++a) {
    bool hits = false;
    for (int m : additive_orbit(s, a)) {
      if (in[m]) {
        hits = true;
        break;
      }
    }
    if (!hits) {
      res.findings.push_back("element " + std::to_string(a)
                             + " has no multiple in the kernel");
    }
  }
  return res;
}

//! An explicit Rees coordinatization of the kernel of a completely
//! Archimedean semiring: the extracted spec plus the two-way translation
//! between kernel elements and coordinate triples.
struct ReesCoordinates {
  ReesSpec                        spec;
  std::vector<std::array<int, 3>> coord_of;  // global -> (i, g, lambda); -1s outside the kernel
  std::vector<int>                kernel_elements;
};

struct CoordinatizeResult {
  std::optional<ReesCoordinates> coords;
  std::vector<std::string>       findings;
};

//! Extracts Rees coordinates for a completely simple kernel: base point at
//! the least additive idempotent e, R the H+-class of e, I the R+-classes,
//! Lambda the L+-classes, row/column representatives normalized so that the
//! sandwich entries through o vanish, and P recovered from sums of
//! representatives.  Everything is re-verified against the Rees formulas by
//! exhaustive table comparison; any failure is reported as a finding.
inline CoordinatizeResult coordinatize(FiniteSemiring const& s,
                                       std::vector<int> const& kernel_elems) {
  CoordinatizeResult res;
  auto fail = [&](std::string msg) {
    res.findings.push_back(std::move(msg));
    return res;
  };
  SubSemiring sub = restriction(s, kernel_elems);
  auto const& k   = sub.semiring;
  int         n   = k.order();
  if (!is_completely_simple(k)) {
    return fail("coordinatize: kernel is not completely simple");
  }
  auto es = additive_idempotents(k);
  int  e  = es.front();  // least by construction
  if (k.mul(e, e) != e) {
    return fail("coordinatize: base idempotent is not multiplicatively "
                "idempotent");
  }
  auto rl = green_l(k);
  auto rr = green_r(k);
  auto rh = green_h(k);
  // R+ and L+ must be congruences of the multiplicative reduct for the
  // quotient bands to exist
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (rr.get(a, b)
            && (!rr.get(k.mul(a, c), k.mul(b, c))
                || !rr.get(k.mul(c, a), k.mul(c, b)))) {
          return fail("coordinatize: R+ is not a multiplicative congruence");
        }
        if (rl.get(a, b)
            && (!rl.get(k.mul(a, c), k.mul(b, c))
                || !rl.get(k.mul(c, a), k.mul(c, b)))) {
          return fail("coordinatize: L+ is not a multiplicative congruence");
        }
      }
    }
  }
  Partition pi = rr.to_partition();
  Partition pl = rl.to_partition();
  int       ni = pi.num_classes();
  int       nl = pl.num_classes();
  // bands on the class indices
  std::vector<int> ti(ni * ni), tl(nl * nl);
  for (int a = 0; a < ni; ++a) {
    for (int b = 0; b < ni; ++b) {
      ti[a * ni + b] =
          pi.class_of(k.mul(pi.classes()[a][0], pi.classes()[b][0]));
    }
  }
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nl; ++b) {
      tl[a * nl + b] =
          pl.class_of(k.mul(pl.classes()[a][0], pl.classes()[b][0]));
    }
  }
  int oi = pi.class_of(e);
  int ol = pl.class_of(e);
  Band band_i, band_l;
  try {
    band_i = Band::validated(ni, ti, oi);
    band_l = Band::validated(nl, tl, ol);
  } catch (SemiringError const& err) {
    return fail(std::string("coordinatize: class multiplication is not a "
                            "band: ")
                + err.what());
  }
  // the skew-ring: H+-class of e
  std::vector<int> g_elems;
  for (int x = 0; x < n; ++x) {
    if (rh.get(e, x)) {
      g_elems.push_back(x);
    }
  }
  SubSemiring gsub = [&]() -> SubSemiring {
    try {
      return restriction(k, g_elems);
    } catch (SemiringError const&) {
      return SubSemiring{FiniteSemiring::validated(1, {0}, {0}), {}, {}};
    }
  }();
  if (gsub.global_of.empty()) {
    return fail("coordinatize: H+-class of the base idempotent is not "
                "closed under the operations");
  }
  auto const& ring = gsub.semiring;
  if (!is_skew_ring(ring)) {
    return fail("coordinatize: H+-class of the base idempotent is not a "
                "skew-ring");
  }
  auto in_g = [&](int x) { return gsub.local_of[x] != -1; };
  auto ginv = [&](int x) {  // inverse within G, in k-local indices
    return gsub.global_of[ring_neg(ring, gsub.local_of[x])];
  };
  // H-class representatives through e's row and column, normalized so the
  // o-row and o-column of P vanish
  std::vector<int> r_rep(ni, -1), q_rep(nl, -1);
  for (int i = 0; i < ni; ++i) {
    int u = -1;
    for (int x : pi.classes()[i]) {
      if (pl.class_of(x) == ol) {
        u = x;
        break;
      }
    }
    if (u == -1) {
      return fail("coordinatize: empty H-class in the base column");
    }
    int t = k.add(e, u);
    if (!in_g(t)) {
      return fail("coordinatize: e + u leaves the base group");
    }
    r_rep[i] = k.add(u, ginv(t));
  }
  for (int l = 0; l < nl; ++l) {
    int v = -1;
    for (int x : pl.classes()[l]) {
      if (pi.class_of(x) == oi) {
        v = x;
        break;
      }
    }
    if (v == -1) {
      return fail("coordinatize: empty H-class in the base row");
    }
    int t = k.add(v, e);
    if (!in_g(t)) {
      return fail("coordinatize: v + e leaves the base group");
    }
    q_rep[l] = k.add(ginv(t), v);
  }
  std::vector<int> p(nl * ni);
  for (int l = 0; l < nl; ++l) {
    for (int i = 0; i < ni; ++i) {
      int v = k.add(q_rep[l], r_rep[i]);
      if (!in_g(v)) {
        return fail("coordinatize: sandwich entry leaves the base group");
      }
      p[l * ni + i] = gsub.local_of[v];
    }
  }
  std::optional<ReesSpec> spec_opt;
  try {
    spec_opt = ReesSpec::checked(band_i, band_l, ring, p);
  } catch (SemiringError const& err) {
    return fail(std::string("coordinatize: extracted spec rejected: ")
                + err.what());
  }
  ReesSpec const& spec = *spec_opt;
  auto            pbad = validate_p(spec);
  if (!pbad.empty()) {
    return fail("coordinatize: extracted sandwich matrix violates "
                + pbad.front().to_string());
  }
  // the bijection theta(i, g, l) = r_i + g + q_l, and both operations must
  // match the Rees formulas
  std::vector<int> theta(ni * ring.order() * nl, -1);
  std::vector<int> inv_theta(n, -1);
  for (int i = 0; i < ni; ++i) {
    for (int g = 0; g < ring.order(); ++g) {
      for (int l = 0; l < nl; ++l) {
        int x = k.add(k.add(r_rep[i], gsub.global_of[g]), q_rep[l]);
        int t = rees_index(spec, i, g, l);
        theta[t] = x;
        if (inv_theta[x] != -1) {
          return fail("coordinatize: coordinate map is not injective");
        }
        inv_theta[x] = t;
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (inv_theta[x] == -1) {
      return fail("coordinatize: coordinate map is not surjective");
    }
  }
  std::optional<FiniteSemiring> model_opt;
  try {
    model_opt = rees_matrix(spec);
  } catch (SemiringError const& err) {
    return fail(std::string("coordinatize: extracted spec does not build: ")
                + err.what());
  }
  FiniteSemiring const& model = *model_opt;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (inv_theta[k.add(u, v)] != model.add(inv_theta[u], inv_theta[v])
          || inv_theta[k.mul(u, v)]
                 != model.mul(inv_theta[u], inv_theta[v])) {
        return fail("coordinatize: operations do not match the Rees "
                    "formulas at (" + std::to_string(u) + ","
                    + std::to_string(v) + ")");
      }
    }
  }
  std::vector<std::array<int, 3>> coord_of(s.order(),
                                           std::array<int, 3>{-1, -1, -1});
  for (int x = 0; x < n; ++x) {
    int t = inv_theta[x];
    int l = t % nl;
    int g = (t / nl) % ring.order();
    int i = t / (nl * ring.order());
    coord_of[sub.global_of[x]] = {i, g, l};
  }
  res.coords = ReesCoordinates{std::move(*spec_opt), std::move(coord_of),
                               sub.global_of};
  return res;
}

//! sigma on a completely Archimedean semiring, read off from Rees
//! coordinates of its kernel: a sigma b iff g - h lies in the skew-ideal
//! generated by the sandwich entries, where a+0_a = (i,g,lambda) and
//! b+0_b = (j,h,mu).
inline Partition sigma_archimedean(FiniteSemiring const& s,
                                   ReesCoordinates const& coords) {
  auto const& ring = coords.spec.ring;
  auto        ideal = skew_ideal_generated(ring, coords.spec.p);
  std::vector<bool> in_ideal(ring.order(), false);
  for (int x : ideal) {
    in_ideal[x] = true;
  }
  std::vector<int> g_of(s.order());
  for (int a = 0; a < s.order(); ++a) {
    int u = s.add(a, zero_of(s, a));
    if (coords.coord_of[u][0] < 0) {
      throw SemiringError("a + 0_a fell outside the coordinatized kernel");
    }
    g_of[a] = coords.coord_of[u][1];
  }
  std::vector<int> ids(s.order(), -1);
  int              next = 0;
  for (int a = 0; a < s.order(); ++a) {
    if (ids[a] != -1) {
      continue;
    }
    ids[a] = next;
    for (int b = a + 1; b < s.order(); ++b) {
      if (ids[b] == -1
          && in_ideal[ring.add(g_of[a], ring_neg(ring, g_of[b]))]) {
        ids[b] = next;
      }
    }
    ++next;
  }
  return Partition::from_class_ids(std::move(ids));
}

//! Convenience form: computes the kernel and a coordinatization first.
//! Throws when the semiring is not completely Archimedean or the
//! coordinatization is unavailable.
inline Partition sigma_archimedean(FiniteSemiring const& s) {
  auto k = kernel(s);
  if (!k.findings.empty()) {
    throw SemiringError("sigma: kernel verification failed: "
                        + k.findings.front());
  }
  auto c = coordinatize(s, k.elements);
  if (!c.coords.has_value()) {
    throw SemiringError("sigma: coordinatization unavailable: "
                        + (c.findings.empty() ? std::string("unknown")
                                              : c.findings.front()));
  }
  return sigma_archimedean(s, *c.coords);
}

//! The b-lattice decomposition of a quasi completely regular semiring into
//! completely Archimedean components (the *J+-classes), with each component
//! carrying its kernel and, when extraction succeeds, Rees coordinates.
//! Verification failures land in findings.
struct Decomposition {
  Partition                                     component_partition;
  std::optional<FiniteSemiring>                 blattice;
  std::vector<SubSemiring>                      components;
  std::vector<std::vector<int>>                 kernels;  // local indices
  std::vector<std::optional<ReesCoordinates>>   coords;   // on the component
  std::vector<std::string>                      findings;
};

inline Decomposition decompose(FiniteSemiring const& s) {
  if (auto w = quasi_complete_regularity_witness(s)) {
    throw SemiringError("decompose requires quasi complete regularity; "
                        "element " + std::to_string(*w)
                        + " has no completely regular multiple");
  }
  Decomposition d;
  d.component_partition = star_j(s).to_partition();
  if (!is_congruence(s, d.component_partition)) {
    d.findings.push_back("*J+ is not a semiring congruence");
  } else {
    auto q = quotient(s, d.component_partition);
    if (!is_b_lattice(q)) {
      d.findings.push_back("quotient by *J+ is not a b-lattice");
    }
    d.blattice = std::move(q);
  }
  for (auto const& cls : d.component_partition.classes()) {
    SubSemiring sub = restriction(s, cls);
    if (!is_completely_archimedean(sub.semiring)) {
      d.findings.push_back("component of " + std::to_string(cls.front())
                           + " is not completely Archimedean");
      d.kernels.emplace_back();
      d.coords.emplace_back();
    } else {
      auto k = kernel(sub.semiring);
      for (auto const& f : k.findings) {
        d.findings.push_back("component of " + std::to_string(cls.front())
                             + ": " + f);
      }
      if (k.findings.empty()) {
        auto c = coordinatize(sub.semiring, k.elements);
        for (auto const& f : c.findings) {
          d.findings.push_back("component of " + std::to_string(cls.front())
                               + ": " + f);
        }
        d.coords.push_back(std::move(c.coords));
      } else {
        d.coords.emplace_back();
      }
      d.kernels.push_back(std::move(k.elements));
    }
    d.components.push_back(std::move(sub));
  }
  return d;
}

//! Quasi-orthodox: for every pair of additive idempotents e, f, the orbit
//! of e+f stabilizes (n(e+f) = (n+1)(e+f) for some n).  Returns a failing
//! pair if not.
inline std::optional<std::pair<int, int>> quasi_orthodox_witness(
    FiniteSemiring const& s) {
  auto es = additive_idempotents(s);
  for (int e : es) {
    for (int f : es) {
      if (!stabilization_index(s, s.add(e, f)).has_value()) {
        return std::make_pair(e, f);
      }
    }
  }
  return std::nullopt;
}

inline bool is_quasi_orthodox(FiniteSemiring const& s) {
  return !quasi_orthodox_witness(s).has_value();
}

//! The identity 0_a + 0_b + 0_{(a+b)} = 0_{(a+b)}, checked for all pairs.
//! Requires quasi complete regularity (otherwise some 0_x does not exist).
inline std::optional<std::pair<int, int>> zero_identity_witness(
    FiniteSemiring const& s) {
  std::vector<int> z(s.order());
  for (int a = 0; a < s.order(); ++a) {
    z[a] = zero_of(s, a);
  }
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      int zab = z[s.add(a, b)];
      if (s.add(s.add(z[a], z[b]), zab) != zab) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

inline bool zero_identity_check(FiniteSemiring const& s) {
  return !zero_identity_witness(s).has_value();
}

//! Dispatcher for the named congruences.  Each kind determines exactly one
//! partition per instance.  The Y relation is surfaced as a partition (it
//! is an equivalence by construction, though not always a congruence).
inline Partition congruence_of_kind(FiniteSemiring const& s,
                                    CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::equality: return Partition::identity(s.order());
    case CongruenceKind::universal: return Partition::universal(s.order());
    case CongruenceKind::least_completely_regular: return rho(s);
    case CongruenceKind::least_skew_ring: return sigma_archimedean(s);
    case CongruenceKind::least_b_lattice_of_skew_rings: return nu(s);
    case CongruenceKind::y_relation: return y_relation(s).to_partition();
    default: return y_star(s);
  }
}

}  // namespace semirings

#endif  // SEMIRINGS_STRUCTURES_HPP_
