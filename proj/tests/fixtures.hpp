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

// The test corpus: a fixed set of named instances exercising every
// structural situation the library handles (b-lattices, rings, nil parts,
// completely simple semirings with and without commutative addition,
// multi-component decompositions, and a non-quasi-orthodox instance).

#ifndef SEMIRINGS_TESTS_FIXTURES_HPP_
#define SEMIRINGS_TESTS_FIXTURES_HPP_

#include <array>
#include <string>
#include <vector>

#include <semirings/semirings.hpp>

namespace semirings::test {

struct Named {
  std::string    name;
  FiniteSemiring s;
};

inline FiniteSemiring make(int n, std::vector<int> add, std::vector<int> mul) {
  return FiniteSemiring::validated(n, std::move(add), std::move(mul));
}

// ({0,1}, max, min): the two-element b-lattice
inline FiniteSemiring boolean_blattice() {
  return make(2, {0, 1, 1, 1}, {0, 0, 0, 1});
}

// the two-element ring
inline FiniteSemiring z2() { return make(2, {0, 1, 1, 0}, {0, 0, 0, 1}); }

inline FiniteSemiring z_ring(int n) {
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = (i + j) % n;
      mul[i * n + j] = (i * j) % n;
    }
  }
  return make(n, std::move(add), std::move(mul));
}

// cyclic addition with identically-zero multiplication
inline FiniteSemiring z_null(int n) {
  std::vector<int> add(n * n), mul(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = (i + j) % n;
    }
  }
  return make(n, std::move(add), std::move(mul));
}

// the two-element nil semiring {a=0, e=1}: every sum and product is e
inline FiniteSemiring n2() { return make(2, {1, 1, 1, 1}, {1, 1, 1, 1}); }

// left-zero addition with first-projection multiplication
inline FiniteSemiring left_zero2() {
  return make(2, {0, 0, 1, 1}, {0, 0, 1, 1});
}

// chain b-lattice 0 < 1 < ... < n-1 under (max, min)
inline FiniteSemiring chain_blattice(int n) {
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = std::max(i, j);
      mul[i * n + j] = std::min(i, j);
    }
  }
  return make(n, std::move(add), std::move(mul));
}

// S3 under composition as addition (a nonabelian additive group) with
// constant-identity multiplication
inline FiniteSemiring s3_null() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](std::array<int, 3> const& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  std::vector<int> add(36), mul(36, 0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int t = 0; t < 3; ++t) {
        c[t] = perms[i][perms[j][t]];
      }
      add[i * 6 + j] = index(c);
    }
  }
  return make(6, std::move(add), std::move(mul));
}

// adjoins one new generator behaving additively and multiplicatively like
// the existing element z but distinct (so it is not additively regular);
// its double lands back in the original semiring
inline FiniteSemiring nil_adjoin(FiniteSemiring const& k, int z) {
  int              n = k.order() + 1;
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < k.order(); ++i) {
    for (int j = 0; j < k.order(); ++j) {
      add[i * n + j] = k.add(i, j);
      mul[i * n + j] = k.mul(i, j);
    }
  }
  int a = k.order();
  for (int i = 0; i < k.order(); ++i) {
    add[a * n + i] = k.add(z, i);
    add[i * n + a] = k.add(i, z);
    mul[a * n + i] = k.mul(z, i);
    mul[i * n + a] = k.mul(i, z);
  }
  add[a * n + a] = k.add(z, z);
  mul[a * n + a] = k.mul(z, z);
  return make(n, std::move(add), std::move(mul));
}

inline Band left_zero_band(int n, int o = 0) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i * n + j] = i;
    }
  }
  return Band::validated(n, std::move(t), o);
}

inline Band right_zero_band(int n, int o = 0) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i * n + j] = j;
    }
  }
  return Band::validated(n, std::move(t), o);
}

inline Band chain_band(int n, int o = 0) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i * n + j] = std::max(i, j);
    }
  }
  return Band::validated(n, std::move(t), o);
}

inline Band trivial_band() { return Band::validated(1, {0}, 0); }

// order-4 completely simple: M(I2 left-zero, Z2, {o}; P = 0)
inline FiniteSemiring m4() {
  auto spec = ReesSpec::checked(left_zero_band(2), trivial_band(), z2(),
                                {0, 0});
  return rees_matrix(spec);
}

// order-8 completely simple, NOT quasi-orthodox:
// M(I2 left-zero, Z2-null, Lambda2 right-zero; P = [[0,0],[0,1]])
inline ReesSpec m8_spec() {
  return ReesSpec::checked(left_zero_band(2), right_zero_band(2), z_null(2),
                           {0, 0, 0, 1});
}

inline FiniteSemiring m8() { return rees_matrix(m8_spec()); }

// first valid-but-not-quasi-completely-regular semiring in enumeration
// order: ({0,1}, min, constant 0); element 1 has no completely regular
// multiple because 1*(1+1) = 0 != 1
inline FiniteSemiring non_qcr2() {
  return make(2, {0, 0, 0, 1}, {0, 0, 0, 0});
}

inline std::vector<Named> const& corpus() {
  static std::vector<Named> const v = [] {
    std::vector<Named> out;
    out.push_back({"T1", make(1, {0}, {0})});
    out.push_back({"B", boolean_blattice()});
    out.push_back({"Z2", z2()});
    out.push_back({"N2", n2()});
    out.push_back({"Z3", z_ring(3)});
    out.push_back({"Z4", z_ring(4)});
    out.push_back({"LZ2", left_zero2()});
    out.push_back({"Z2null", z_null(2)});
    out.push_back({"Z3null", z_null(3)});
    out.push_back({"B3", chain_blattice(3)});
    out.push_back({"BxZ2", direct_product(boolean_blattice(), z2())});
    out.push_back({"Z2xZ2", direct_product(z2(), z2())});
    out.push_back({"BxB",
                   direct_product(boolean_blattice(), boolean_blattice())});
    out.push_back({"NilZ2", nil_adjoin(z2(), 1)});
    out.push_back({"NilB", nil_adjoin(boolean_blattice(), 1)});
    out.push_back({"M4", m4()});
    out.push_back({"NilM4", nil_adjoin(m4(), 1)});
    out.push_back({"S3null", s3_null()});
    out.push_back({"M8", m8()});
    return out;
  }();
  return v;
}

//! Corpus instances of order at most max_order.
inline std::vector<Named> corpus_upto(int max_order) {
  std::vector<Named> out;
  for (auto const& c : corpus()) {
    if (c.s.order() <= max_order) {
      out.push_back(c);
    }
  }
  return out;
}

//! Quasi completely regular corpus instances.
inline std::vector<Named> qcr_corpus() {
  std::vector<Named> out;
  for (auto const& c : corpus()) {
    if (is_quasi_completely_regular(c.s)) {
      out.push_back(c);
    }
  }
  return out;
}

//! A batch of valid Rees specs: bands of order <= 3, skew-rings of order
//! <= 4, sandwich matrices found by search over the free entries (rows and
//! columns through o are pinned to zero by condition (i)).
inline std::vector<ReesSpec> rees_spec_batch() {
  std::vector<ReesSpec> out;
  std::vector<Band>     bands = {trivial_band(),      left_zero_band(2),
                                 right_zero_band(2),  chain_band(2),
                                 left_zero_band(3, 1), right_zero_band(3)};
  std::vector<FiniteSemiring> rings = {z_ring(2), z_ring(3), z_ring(4),
                                       z_null(2), z_null(3),
                                       direct_product(z_ring(2), z_ring(2)),
                                       direct_product(z_ring(2), z_null(2))};
  for (auto const& bi : bands) {
    for (auto const& bl : bands) {
      for (auto const& ring : rings) {
        int ni = bi.order, nl = bl.order, nr = ring.order();
        if (ni * nr * nl > 24) {
          continue;
        }
        int zero = ring_zero(ring);
        // free cells: everything off the distinguished row and column
        std::vector<int> free_cells;
        for (int l = 0; l < nl; ++l) {
          for (int i = 0; i < ni; ++i) {
            if (l != bl.o && i != bi.o) {
              free_cells.push_back(l * ni + i);
            }
          }
        }
        long total = 1;
        for (std::size_t t = 0; t < free_cells.size() && total <= 4096; ++t) {
          total *= nr;
        }
        if (total > 4096) {
          continue;
        }
        int kept_nonzero = 0;
        for (long code = 0; code < total; ++code) {
          std::vector<int> p(nl * ni, zero);
          long             c = code;
          for (int cell : free_cells) {
            p[cell] = static_cast<int>(c % nr);
            c /= nr;
          }
          auto spec = ReesSpec::checked(bi, bl, ring, p);
          if (!validate_p(spec).empty()) {
            continue;
          }
          bool zero_p = code == 0;
          if (!zero_p && kept_nonzero >= 2) {
            continue;
          }
          if (!zero_p) {
            ++kept_nonzero;
          }
          out.push_back(std::move(spec));
        }
      }
    }
  }
  return out;
}

}  // namespace semirings::test

#endif  // SEMIRINGS_TESTS_FIXTURES_HPP_
