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

// The verification harness: evaluates each structural statement the library
// implements against a concrete instance and produces a deterministic,
// machine-readable report.  A `fails` verdict always carries a concrete
// witness; `notApplicable` always names the violated hypothesis.

#ifndef SEMIRINGS_VERIFY_HPP_
#define SEMIRINGS_VERIFY_HPP_

#include <algorithm>
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
#include "structures.hpp"

namespace semirings {

enum class Theorem {
  T3_1,   // *J+ = *D+
  L3_2,   // nu as closure of idempotent *D+-pairs (least blsr congruence)
  L3_3,   // translation identities across comparable components
  T4_2,   // Y least blsr congruence iff quasi-orthodox
  L4_3,   // E+(S_alpha) rectangular; a+b = a+e+b below
  T4_4,   // Y iff the 0_a-sandwich identities (quasi-orthodox)
  T4_5,   // *D+ = *H+ o Y (quasi-orthodox)
  T4_7,   // quasi-orthodox iff spined-product shape of S/rho iff 0-identity
  C4_8,   // *H+ ∩ Y = rho (quasi-orthodox)
  L5_2,   // per-component characterization of Y
  L5_5,   // sigma via <P> is the least skew-ring congruence (Archimedean)
  L5_6,   // Y* ⊆ nu
  T5_8,   // Y is the greatest gaip congruence (Archimedean)
  T5_9,   // Y* = eps iff eps is the unique gaip congruence per component
  T5_10,  // Y* ∈ [eps, nu]
};

inline std::vector<Theorem> const& all_theorems() {
  static std::vector<Theorem> const v = {
      Theorem::T3_1, Theorem::L3_2, Theorem::L3_3, Theorem::T4_2,
      Theorem::L4_3, Theorem::T4_4, Theorem::T4_5, Theorem::T4_7,
      Theorem::C4_8, Theorem::L5_2, Theorem::L5_5, Theorem::L5_6,
      Theorem::T5_8, Theorem::T5_9, Theorem::T5_10};
  return v;
}

inline std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T3_1: return "T3.1";
    case Theorem::L3_2: return "L3.2";
    case Theorem::L3_3: return "L3.3";
    case Theorem::T4_2: return "T4.2";
    case Theorem::L4_3: return "L4.3";
    case Theorem::T4_4: return "T4.4";
    case Theorem::T4_5: return "T4.5";
    case Theorem::T4_7: return "T4.7";
    case Theorem::C4_8: return "C4.8";
    case Theorem::L5_2: return "L5.2";
    case Theorem::L5_5: return "L5.5";
    case Theorem::L5_6: return "L5.6";
    case Theorem::T5_8: return "T5.8";
    case Theorem::T5_9: return "T5.9";
    default: return "T5.10";
  }
}

inline std::optional<Theorem> parse_theorem(std::string const& s) {
  for (Theorem t : all_theorems()) {
    if (to_string(t) == s) {
      return t;
    }
  }
  return std::nullopt;
}

struct Verdict {
  enum class Kind { holds, fails, not_applicable };
  Kind        kind;
  std::string detail;  // witness for fails, reason for notApplicable

  static Verdict holds(std::string note = "") {
    return {Kind::holds, std::move(note)};
  }
  static Verdict fails(std::string witness) {
    return {Kind::fails, std::move(witness)};
  }
  static Verdict na(std::string reason) {
    return {Kind::not_applicable, std::move(reason)};
  }
};

struct TheoremReport {
  std::string instance_id;
  int         order = 0;
  bool        quasi_completely_regular = false;
  bool        quasi_orthodox           = false;
  bool        completely_archimedean   = false;
  int         components               = 0;
  std::vector<std::pair<Theorem, Verdict>> results;
  std::vector<std::string>                 findings;

  int count(Verdict::Kind k) const {
    int c = 0;
    for (auto const& [t, v] : results) {
      if (v.kind == k) {
        ++c;
      }
    }
    return c;
  }
};

struct VerifyOptions {
  int                  oracle_bound = oracle_max_order();
  std::vector<Theorem> selection;  // empty means all
};

namespace detail {

// the unique least element of a congruence family, if one exists
inline std::optional<Partition> least_of(std::vector<Partition> const& cands) {
  for (auto const& p : cands) {
    bool least = true;
    for (auto const& q : cands) {
      if (!p.refines(q)) {
        least = false;
        break;
      }
    }
    if (least) {
      return p;
    }
  }
  return std::nullopt;
}

inline std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// first pair on which two relations disagree
inline std::string diff_witness(BinRelation const& x, BinRelation const& y) {
  for (int i = 0; i < x.order(); ++i) {
    for (int j = 0; j < x.order(); ++j) {
      if (x.get(i, j) != y.get(i, j)) {
        return pair_text(i, j) + (x.get(i, j) ? " related" : " unrelated")
               + " on the left, opposite on the right";
      }
    }
  }
  return "";
}

}  // namespace detail

//! Evaluates every selected statement on one instance.
inline TheoremReport verify(FiniteSemiring const& s, std::string instance_id,
                            VerifyOptions const& opts = {}) {
  TheoremReport rep;
  rep.instance_id = std::move(instance_id);
  rep.order       = s.order();

  std::vector<Theorem> which =
      opts.selection.empty() ? all_theorems() : opts.selection;
  auto selected = [&](Theorem t) {
    return std::find(which.begin(), which.end(), t) != which.end();
  };
  auto put = [&](Theorem t, Verdict v) {
    if (selected(t)) {
      rep.results.emplace_back(t, std::move(v));
    }
  };

  rep.quasi_orthodox = is_quasi_orthodox(s);
  if (auto w = quasi_complete_regularity_witness(s)) {
    std::string reason = "not quasi completely regular: element "
                         + std::to_string(*w)
                         + " has no completely regular multiple";
    for (Theorem t : all_theorems()) {
      put(t, Verdict::na(reason));
    }
    return rep;
  }
  rep.quasi_completely_regular = true;

  // shared computations
  auto sl = star_l(s);
  auto sr = star_r(s);
  auto sj = star_j(s);
  auto sh = intersect(sl, sr);
  auto sd = star_d(s);
  auto gl = green_l(s);
  auto gr = green_r(s);

  std::vector<int> zero(s.order());
  for (int a = 0; a < s.order(); ++a) {
    zero[a] = zero_of(s, a);
  }
  auto aplus = [&](int a) { return s.add(a, zero[a]); };

  auto      yr     = y_relation(s);
  Partition y_part = yr.to_partition();
  bool      y_cong = is_congruence(s, y_part);
  Partition ys     = y_star(s);
  Partition rho_p  = rho(s);
  Partition nu_p   = nu(s);

  auto qo_wit = quasi_orthodox_witness(s);
  rep.quasi_orthodox = !qo_wit.has_value();
  std::string qo_reason;
  if (qo_wit.has_value()) {
    qo_reason = "not quasi-orthodox: n(e+f) never stabilizes for e="
                + std::to_string(qo_wit->first)
                + ", f=" + std::to_string(qo_wit->second);
  }

  Decomposition dec = decompose(s);
  for (auto const& f : dec.findings) {
    rep.findings.push_back("decompose: " + f);
  }
  rep.components = dec.component_partition.num_classes();
  rep.completely_archimedean = rep.components == 1;

  bool oracle_ok = s.order() <= opts.oracle_bound;
  std::vector<Partition> congs;
  if (oracle_ok) {
    congs = all_congruences(s, opts.oracle_bound);
  }
  std::string oracle_na = "oracle bound exceeded: order "
                          + std::to_string(s.order()) + " > ORACLE_MAX_ORDER="
                          + std::to_string(opts.oracle_bound);

  // T3.1: *J+ = *D+, and *D+ is an equivalence
  if (selected(Theorem::T3_1)) {
    if (sj != sd) {
      put(Theorem::T3_1, Verdict::fails("*J+ and *D+ differ at "
                                        + detail::diff_witness(sj, sd)));
    } else if (!sd.is_equivalence()) {
      put(Theorem::T3_1, Verdict::fails("*D+ is not an equivalence"));
    } else {
      put(Theorem::T3_1, Verdict::holds());
    }
  }

  // L3.2: the nu construction gives the least b-lattice-of-skew-rings
  // congruence.  The literal seed (idempotent *D+-pairs alone) is also
  // compared and a shortfall is reported as a finding: on instances with a
  // nontrivial nil part it generates strictly less than nu.
  if (selected(Theorem::L3_2)) {
    auto seed        = nu_seed(s);
    auto seed_only   = generated_congruence(s, seed);
    auto tau_on_seed = tau_natural(s, seed);
    if (tau_on_seed != seed_only) {
      rep.findings.push_back(
          "L3.2: tau-natural closure of the idempotent *D+-seed differs "
          "from its congruence closure (the closure is not multiplicatively "
          "compatible here)");
    }
    if (seed_only != nu_p) {
      rep.findings.push_back(
          "L3.2: the idempotent *D+-seed alone generates "
          + seed_only.to_string() + ", strictly finer than nu = "
          + nu_p.to_string() + "; the rho-pairs are required");
    }
    if (!oracle_ok) {
      put(Theorem::L3_2, Verdict::na(oracle_na));
    } else {
      std::vector<Partition> blsr;
      for (auto const& p : congs) {
        if (is_b_lattice_of_skew_rings(quotient(s, p))) {
          blsr.push_back(p);
        }
      }
      auto least = detail::least_of(blsr);
      if (!least.has_value()) {
        put(Theorem::L3_2,
            Verdict::fails("no least b-lattice-of-skew-rings congruence "
                           "exists"));
      } else if (*least != nu_p) {
        put(Theorem::L3_2,
            Verdict::fails("nu = " + nu_p.to_string()
                           + " but the least b-lattice-of-skew-rings "
                             "congruence is "
                           + least->to_string()));
      } else {
        put(Theorem::L3_2, Verdict::holds("oracle over "
                                          + std::to_string(congs.size())
                                          + " congruences"));
      }
    }
  }

  // component order: beta <= alpha iff beta + alpha = alpha in the quotient
  // b-lattice (the sum of two components is the higher one)
  auto comp_le = [&](int beta, int alpha) {
    return dec.blattice.has_value() && dec.blattice->add(beta, alpha) == alpha;
  };
  auto comp = [&](int a) { return dec.component_partition.class_of(a); };

  // L3.3
  if (selected(Theorem::L3_3)) {
    if (!dec.blattice.has_value()) {
      put(Theorem::L3_3,
          Verdict::fails("decomposition quotient unavailable: "
                         + (dec.findings.empty() ? std::string("?")
                                                 : dec.findings.front())));
    } else {
      std::optional<std::string> wit;
      for (int a = 0; a < s.order() && !wit; ++a) {
        for (int b = 0; b < s.order() && !wit; ++b) {
          if (!comp_le(comp(b), comp(a))) {
            continue;
          }
          int aza = aplus(a);
          int ba  = s.add(b, aza);
          int ab  = s.add(aza, b);
          if (!gl.get(aza, ba)) {
            wit = "a=" + std::to_string(a) + ", b=" + std::to_string(b)
                  + ": (a+0_a) not L+ (b+a+0_a)";
          } else if (!gr.get(aza, ab)) {
            wit = "a=" + std::to_string(a) + ", b=" + std::to_string(b)
                  + ": (a+0_a) not R+ (a+0_a+b)";
          } else if (s.add(aza, zero[ba]) != aza
                     || s.add(zero[ab], aza) != aza) {
            wit = "a=" + std::to_string(a) + ", b=" + std::to_string(b)
                  + ": translation identity fails";
          }
        }
      }
      put(Theorem::L3_3, wit ? Verdict::fails(*wit) : Verdict::holds());
    }
  }

  // T4.2: [Y is a congruence, equal to nu] iff quasi-orthodox
  if (selected(Theorem::T4_2)) {
    bool y_is_least = y_cong && y_part == nu_p;
    if (y_is_least == rep.quasi_orthodox) {
      put(Theorem::T4_2, Verdict::holds());
    } else if (y_is_least) {
      put(Theorem::T4_2,
          Verdict::fails("Y is the least b-lattice-of-skew-rings congruence "
                         "but the instance is not quasi-orthodox: "
                         + qo_reason));
    } else {
      std::string why = !y_cong ? "Y is not a congruence"
                                : "Y = " + y_part.to_string() + " != nu = "
                                      + nu_p.to_string();
      put(Theorem::T4_2,
          Verdict::fails("quasi-orthodox but " + why));
    }
  }

  // L4.3 (quasi-orthodox only)
  if (selected(Theorem::L4_3)) {
    if (!rep.quasi_orthodox) {
      put(Theorem::L4_3, Verdict::na(qo_reason));
    } else {
      std::optional<std::string> wit;
      auto es = additive_idempotents(s);
      for (int e : es) {
        for (int f : es) {
          if (comp(e) != comp(f)) {
            continue;
          }
          int ef = s.add(e, f);
          if (s.add(ef, e) != e) {
            wit = "E+ of a component is not a rectangular band at e="
                  + std::to_string(e) + ", f=" + std::to_string(f);
          } else if (s.add(ef, ef) != ef || comp(ef) != comp(e)) {
            wit = "E+ of a component is not closed at e=" + std::to_string(e)
                  + ", f=" + std::to_string(f);
          }
        }
      }
      for (int a = 0; a < s.order() && !wit; ++a) {
        if (!is_completely_regular_element(s, a)) {
          continue;
        }
        for (int b = 0; b < s.order() && !wit; ++b) {
          if (comp(b) != comp(a) || !is_completely_regular_element(s, b)) {
            continue;
          }
          for (int e : es) {
            if (!comp_le(comp(e), comp(a))) {
              continue;
            }
            if (s.add(a, b) != s.add(s.add(a, e), b)) {
              wit = "a+b != a+e+b at a=" + std::to_string(a)
                    + ", b=" + std::to_string(b) + ", e=" + std::to_string(e);
              break;
            }
          }
        }
      }
      put(Theorem::L4_3, wit ? Verdict::fails(*wit) : Verdict::holds());
    }
  }

  // T4.4 (quasi-orthodox only): a Y b iff the 0-sandwich identities
  if (selected(Theorem::T4_4)) {
    if (!rep.quasi_orthodox) {
      put(Theorem::T4_4, Verdict::na(qo_reason));
    } else {
      std::optional<std::string> wit;
      for (int a = 0; a < s.order() && !wit; ++a) {
        for (int b = 0; b < s.order() && !wit; ++b) {
          bool iii =
              aplus(a) == s.add(s.add(s.add(zero[a], b), zero[b]), zero[a])
              && aplus(b)
                     == s.add(s.add(s.add(zero[b], a), zero[a]), zero[b]);
          if (iii != yr.get(a, b)) {
            wit = detail::pair_text(a, b)
                  + (yr.get(a, b) ? ": Y holds but the identities fail"
                                  : ": identities hold but not Y");
          }
        }
      }
      put(Theorem::T4_4, wit ? Verdict::fails(*wit) : Verdict::holds());
    }
  }

  // T4.5 (quasi-orthodox only): *D+ = *H+ o Y
  if (selected(Theorem::T4_5)) {
    if (!rep.quasi_orthodox) {
      put(Theorem::T4_5, Verdict::na(qo_reason));
    } else {
      auto hy = compose(sh, yr);
      put(Theorem::T4_5,
          sd == hy ? Verdict::holds()
                   : Verdict::fails("*D+ and *H+ o Y differ at "
                                    + detail::diff_witness(sd, hy)));
    }
  }

  // T4.7: three-way agreement
  if (selected(Theorem::T4_7)) {
    bool b1 = rep.quasi_orthodox;
    bool b2 = zero_identity_check(s);
    std::ostringstream detail_os;
    detail_os << "quasiOrthodox=" << (b1 ? "true" : "false")
              << " zeroIdentity=" << (b2 ? "true" : "false");
    std::optional<bool> b3;
    if (y_cong) {
      bool built = false;
      bool iso   = false;
      try {
        do {
          if (!dec.blattice.has_value()) {
            break;
          }
          Partition h_part = sh.to_partition();
          if (!is_congruence(s, h_part) || !is_congruence(s, rho_p)) {
            break;
          }
          auto sh_q = quotient(s, h_part);
          auto sy_q = quotient(s, y_part);
          if (!is_idempotent_semiring(sh_q)
              || !is_b_lattice_of_skew_rings(sy_q)) {
            break;
          }
          // natural projections onto the component b-lattice
          if (!h_part.refines(dec.component_partition)
              || !y_part.refines(dec.component_partition)) {
            break;
          }
          std::vector<int> m1(h_part.num_classes());
          for (int c = 0; c < h_part.num_classes(); ++c) {
            m1[c] = comp(h_part.classes()[c].front());
          }
          std::vector<int> m2(y_part.num_classes());
          for (int c = 0; c < y_part.num_classes(); ++c) {
            m2[c] = comp(y_part.classes()[c].front());
          }
          auto phi = HomomorphismWitness::checked(sh_q, *dec.blattice, m1);
          auto psi = HomomorphismWitness::checked(sy_q, *dec.blattice, m2);
          auto sp  = spined_product(sh_q, sy_q, *dec.blattice, phi, psi);
          built    = true;
          iso = is_isomorphic(quotient(s, rho_p), sp).has_value();
        } while (false);
      } catch (SemiringError const& e) {
        rep.findings.push_back(std::string("T4.7: spined construction "
                                           "failed: ")
                               + e.what());
        built = false;
      }
      b3 = built && iso;
      detail_os << " spinedProductShape=" << (*b3 ? "true" : "false");
    } else {
      detail_os << " spinedProductShape=skipped(Y not a congruence)";
    }
    bool agree = (b1 == b2) && (!b3.has_value() || *b3 == b1);
    put(Theorem::T4_7, agree ? Verdict::holds(detail_os.str())
                             : Verdict::fails(detail_os.str()));
  }

  // C4.8 (quasi-orthodox only): *H+ ∩ Y = rho
  if (selected(Theorem::C4_8)) {
    if (!rep.quasi_orthodox) {
      put(Theorem::C4_8, Verdict::na(qo_reason));
    } else {
      auto lhs = intersect(sh, yr);
      auto rhs = BinRelation::from_partition(rho_p);
      put(Theorem::C4_8,
          lhs == rhs ? Verdict::holds()
                     : Verdict::fails("*H+ ∩ Y and rho differ at "
                                      + detail::diff_witness(lhs, rhs)));
    }
  }

  // L5.2: per-component, a Y b iff the 0_(..)-framed identities for all x
  if (selected(Theorem::L5_2)) {
    std::optional<std::string> wit;
    for (auto const& cls : dec.component_partition.classes()) {
      for (int a : cls) {
        for (int b : cls) {
          bool iii = true;
          for (int x : cls) {
            int aza = aplus(a), bzb = aplus(b);
            int l1  = zero[s.add(aza, x)];
            int r1  = zero[s.add(x, aza)];
            int l2  = zero[s.add(bzb, x)];
            int r2  = zero[s.add(x, bzb)];
            if (s.add(s.add(l1, bzb), r1) != aza
                || s.add(s.add(l2, aza), r2) != bzb) {
              iii = false;
              break;
            }
          }
          if (iii != yr.get(a, b)) {
            wit = detail::pair_text(a, b)
                  + (yr.get(a, b) ? ": Y holds but (iii) fails"
                                  : ": (iii) holds but not Y");
            break;
          }
        }
        if (wit) {
          break;
        }
      }
      if (wit) {
        break;
      }
    }
    put(Theorem::L5_2, wit ? Verdict::fails(*wit) : Verdict::holds());
  }

  // L5.5 (completely Archimedean only)
  if (selected(Theorem::L5_5)) {
    if (!rep.completely_archimedean) {
      put(Theorem::L5_5,
          Verdict::na("not completely Archimedean: " + std::to_string(
              rep.components) + " *J+-classes"));
    } else if (!dec.coords[0].has_value()) {
      put(Theorem::L5_5, Verdict::fails("coordinatization unavailable: "
                                        + (dec.findings.empty()
                                               ? std::string("?")
                                               : dec.findings.front())));
    } else {
      // the single component is all of S; its local indexing is the
      // identity, so the coordinates apply to S directly
      Partition sigma = sigma_archimedean(dec.components[0].semiring,
                                          *dec.coords[0]);
      if (!is_congruence(s, sigma)) {
        put(Theorem::L5_5, Verdict::fails("sigma is not a congruence"));
      } else if (!is_skew_ring(quotient(s, sigma))) {
        put(Theorem::L5_5,
            Verdict::fails("S/sigma is not a skew-ring"));
      } else if (!oracle_ok) {
        put(Theorem::L5_5, Verdict::na(oracle_na));
      } else {
        std::vector<Partition> skew;
        for (auto const& p : congs) {
          if (is_skew_ring(quotient(s, p))) {
            skew.push_back(p);
          }
        }
        auto least = detail::least_of(skew);
        if (!least.has_value()) {
          put(Theorem::L5_5,
              Verdict::fails("no least skew-ring congruence exists"));
        } else if (*least != sigma) {
          put(Theorem::L5_5,
              Verdict::fails("sigma = " + sigma.to_string()
                             + " but the least skew-ring congruence is "
                             + least->to_string()));
        } else {
          put(Theorem::L5_5, Verdict::holds("oracle over "
                                            + std::to_string(congs.size())
                                            + " congruences"));
        }
      }
    }
  }

  // L5.6: Y* ⊆ nu
  if (selected(Theorem::L5_6)) {
    put(Theorem::L5_6,
        ys.refines(nu_p)
            ? Verdict::holds()
            : Verdict::fails("Y* = " + ys.to_string()
                             + " is not contained in nu = "
                             + nu_p.to_string()));
  }

  // T5.8 (completely Archimedean only): Y is the greatest gaip congruence
  if (selected(Theorem::T5_8)) {
    if (!rep.completely_archimedean) {
      put(Theorem::T5_8,
          Verdict::na("not completely Archimedean: " + std::to_string(
              rep.components) + " *J+-classes"));
    } else if (!y_cong) {
      put(Theorem::T5_8, Verdict::fails("Y is not a congruence"));
    } else if (auto gv = gaip_violation(s, y_part)) {
      put(Theorem::T5_8,
          Verdict::fails("Y is not gaip: element "
                         + std::to_string(gv->element) + " ~ idempotent "
                         + std::to_string(gv->idempotent)
                         + " but its orbit never stabilizes"));
    } else if (!oracle_ok) {
      put(Theorem::T5_8, Verdict::na(oracle_na));
    } else {
      std::optional<std::string> wit;
      for (auto const& p : congs) {
        if (is_gaip_congruence(s, p) && !p.refines(y_part)) {
          wit = "gaip congruence " + p.to_string()
                + " is not contained in Y = " + y_part.to_string();
          break;
        }
      }
      put(Theorem::T5_8, wit ? Verdict::fails(*wit)
                             : Verdict::holds("oracle over "
                                              + std::to_string(congs.size())
                                              + " congruences"));
    }
  }

  // T5.9: Y* = eps iff eps is the unique gaip congruence on each component
  if (selected(Theorem::T5_9)) {
    bool lhs = ys == Partition::identity(s.order());
    bool component_too_big = false;
    bool rhs = true;
    std::string rhs_wit;
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
      auto const& sub = dec.components[c].semiring;
      if (sub.order() > opts.oracle_bound) {
        component_too_big = true;
        break;
      }
      for (auto const& p : all_congruences(sub, opts.oracle_bound)) {
        if (p != Partition::identity(sub.order())
            && is_gaip_congruence(sub, p)) {
          rhs     = false;
          rhs_wit = "component of "
                    + std::to_string(dec.components[c].global_of.front())
                    + " has the nontrivial gaip congruence " + p.to_string();
          break;
        }
      }
      if (!rhs) {
        break;
      }
    }
    if (component_too_big) {
      put(Theorem::T5_9, Verdict::na(oracle_na));
    } else if (lhs == rhs) {
      put(Theorem::T5_9, Verdict::holds());
    } else if (lhs) {
      put(Theorem::T5_9, Verdict::fails("Y* = eps but " + rhs_wit));
    } else {
      put(Theorem::T5_9,
          Verdict::fails("every component admits only the trivial gaip "
                         "congruence but Y* = " + ys.to_string()));
    }
  }

  // T5.10: eps ⊆ Y* ⊆ nu
  if (selected(Theorem::T5_10)) {
    bool lower = Partition::identity(s.order()).refines(ys);
    bool upper = ys.refines(nu_p);
    put(Theorem::T5_10,
        lower && upper
            ? Verdict::holds()
            : Verdict::fails("Y* = " + ys.to_string() + " outside [eps, nu="
                             + nu_p.to_string() + "]"));
  }

  return rep;
}

}  // namespace semirings

#endif  // SEMIRINGS_VERIFY_HPP_
