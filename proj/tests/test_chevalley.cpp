#include <doctest.h>

#include <algorithm>
#include <random>

#include "chevcert/chevalley.hpp"

using namespace chevcert;

namespace {

const std::vector<std::string> kJacobiTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};

LieElement basis_element(const ChevalleyBasis& cb, int flat, long long mod) {
  return flat < cb.rank() ? cb.basis_toral(flat, mod) : cb.basis_root(flat - cb.rank(), mod);
}

LieElement add(const LieElement& a, const LieElement& b) {
  LieElement c = a;
  for (size_t i = 0; i < c.toral.size(); ++i) c.toral[i] += b.toral[i];
  for (size_t i = 0; i < c.root_part.size(); ++i) c.root_part[i] += b.root_part[i];
  c.reduce();
  return c;
}

void check_jacobi_exhaustive(const ChevalleyBasis& cb, long long mod) {
  const int d = cb.dim();
  for (int ia = 0; ia < d; ++ia) {
    LieElement x = basis_element(cb, ia, mod);
    for (int ib = ia; ib < d; ++ib) {
      LieElement y = basis_element(cb, ib, mod);
      LieElement xy = cb.bracket(x, y);
      for (int ic = ib; ic < d; ++ic) {
        LieElement z = basis_element(cb, ic, mod);
        LieElement s = add(add(cb.bracket(xy, z), cb.bracket(cb.bracket(y, z), x)),
                           cb.bracket(cb.bracket(z, x), y));
        if (!s.is_zero()) {
          CAPTURE(ia);
          CAPTURE(ib);
          CAPTURE(ic);
          REQUIRE(s.is_zero());
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("A1 fixture relations") {
  ChevalleyBasis cb{RootSystem(parse_cartan_type("A1"))};
  const int pos = 0, neg = 1;
  LieElement h = cb.bracket(cb.basis_root(pos, 0), cb.basis_root(neg, 0));
  CHECK(h.toral == std::vector<long long>{1});  // [X, X_-] = H_alpha
  LieElement hx = cb.bracket(cb.basis_toral(0, 0), cb.basis_root(pos, 0));
  CHECK(hx.root_part[pos] == 2);  // [H, X] = 2X
  CHECK(hx.toral[0] == 0);
}

TEST_CASE("A2 structure constants have magnitude 1 and signs are consistent") {
  RootSystem rs(parse_cartan_type("A2"));
  ChevalleyBasis cb(rs);
  const int a1 = rs.simple_root_index(0), a2 = rs.simple_root_index(1);
  const int n = cb.structure_constant(a1, a2);
  CHECK(std::abs(n) == 1);
  LieElement br = cb.bracket(cb.basis_root(a1, 0), cb.basis_root(a2, 0));
  const int sum = cb.sum_index(a1, a2);
  CHECK(br.root_part[sum] == n);
  CHECK(cb.structure_constant(a2, a1) == -n);
}

TEST_CASE("maximal structure constants per family") {
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("A2"))) == 1);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("A3"))) == 1);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("D4"))) == 1);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("E6"))) == 1);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("B2"))) == 2);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("B3"))) == 2);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("C3"))) == 2);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("F4"))) == 2);
  CHECK(max_structure_constant(RootSystem(parse_cartan_type("G2"))) == 3);
}

TEST_CASE("|N| equals the root-string bound for every pair") {
  for (const auto& name : kJacobiTypes) {
    RootSystem rs(parse_cartan_type(name));
    ChevalleyBasis cb(rs);
    int seen_max = 0;
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        const int s = cb.sum_index(a, b);
        if (s < 0) continue;
        const int n = cb.structure_constant(a, b);
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(std::abs(n) == cb.root_string_down(a, b) + 1);
        CHECK(cb.structure_constant(b, a) == -n);
        seen_max = std::max(seen_max, std::abs(n));
      }
    CHECK(seen_max == max_structure_constant(rs));
  }
}

TEST_CASE("brackets vanish exactly off the root system") {
  for (const auto& name : kJacobiTypes) {
    RootSystem rs(parse_cartan_type(name));
    ChevalleyBasis cb(rs);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        LieElement br = cb.bracket(cb.basis_root(a, 0), cb.basis_root(b, 0));
        const int s = cb.sum_index(a, b);
        if (s == ChevalleyBasis::kSumZero) {
          CHECK(br.root_part == std::vector<long long>(rs.num_roots(), 0));
        } else if (s < 0) {
          CHECK(br.is_zero());
        } else {
          CHECK(br.root_part[s] != 0);
        }
      }
  }
}

TEST_CASE("coroot expansion matches [X_alpha, X_{-alpha}]") {
  for (const auto& name : kJacobiTypes) {
    RootSystem rs(parse_cartan_type(name));
    ChevalleyBasis cb(rs);
    for (int a = 0; a < rs.num_roots(); ++a) {
      LieElement h = cb.bracket(cb.basis_root(a, 0), cb.basis_root(rs.negate(a), 0));
      const auto& d = cb.coroot_expansion(a);
      for (int j = 0; j < rs.rank(); ++j) CHECK(h.toral[j] == d[j]);
      CHECK(h.root_part == std::vector<long long>(rs.num_roots(), 0));
    }
  }
}

TEST_CASE("Jacobi identity, exhaustive basis triples, over Z and F_p") {
  for (const auto& name : kJacobiTypes) {
    CAPTURE(name);
    RootSystem rs(parse_cartan_type(name));
    ChevalleyBasis cb(rs);
    check_jacobi_exhaustive(cb, 0);
    const int n_max = max_structure_constant(rs);
    for (long long p : {5LL, 7LL, 11LL}) {
      if (p <= n_max) continue;
      check_jacobi_exhaustive(cb, p);
    }
  }
}

TEST_CASE("bracket is antisymmetric and bilinear on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& name : {std::string("A2"), std::string("G2"), std::string("B3")}) {
    RootSystem rs(parse_cartan_type(name));
    ChevalleyBasis cb(rs);
    const long long p = 11;
    for (int trial = 0; trial < 25; ++trial) {
      LieElement x = cb.zero(p), y = cb.zero(p);
      for (auto* e : {&x, &y}) {
        for (auto& c : e->toral) c = static_cast<long long>(rng() % p);
        for (auto& c : e->root_part) c = static_cast<long long>(rng() % p);
      }
      CHECK(cb.bracket(x, x).is_zero());
      LieElement xy = cb.bracket(x, y), yx = cb.bracket(y, x);
      CHECK(add(xy, yx).is_zero());
    }
  }
}

TEST_CASE("bracket rejects mismatched inputs") {
  ChevalleyBasis cb{RootSystem(parse_cartan_type("A2"))};
  ChevalleyBasis other{RootSystem(parse_cartan_type("A3"))};
  LieElement a = cb.zero(5), b = cb.zero(7);
  CHECK_THROWS_AS(cb.bracket(a, b), std::invalid_argument);
  CHECK_THROWS_AS(cb.bracket(a, other.zero(5)), std::invalid_argument);
}

TEST_CASE("cochar_to_toral solves the simple-root pairings") {
  ChevalleyBasis a1{RootSystem(parse_cartan_type("A1"))};
  LieElement h = cochar_to_toral(a1, CocharVec{{3}}, 11);
  CHECK(a1.root_value(0, h) == 3);              // alpha(H) = 3
  CHECK(a1.root_value(1, h) == (11 - 3) % 11);  // -alpha
  CHECK(h.toral[0] == 3 * 6 % 11);              // (3 * 2^{-1}) H_alpha

  LieElement z = cochar_to_toral(a1, CocharVec{{0}}, 11);
  CHECK(z.is_zero());

  RootSystem rs2(parse_cartan_type("A2"));
  ChevalleyBasis a2(rs2);
  LieElement h2 = cochar_to_toral(a2, CocharVec{{1, 1}}, 5);
  CHECK(a2.root_value(rs2.simple_root_index(0), h2) == 1);
  CHECK(a2.root_value(rs2.simple_root_index(1), h2) == 1);
  const int sum12 = a2.sum_index(rs2.simple_root_index(0), rs2.simple_root_index(1));
  CHECK(a2.root_value(sum12, h2) == 2);

  CHECK_THROWS_AS(cochar_to_toral(a2, CocharVec{{1, 1}}, 3), degenerate_cartan_error);
  ChevalleyBasis a3{RootSystem(parse_cartan_type("A3"))};
  CHECK_THROWS_AS(cochar_to_toral(a3, CocharVec{{1, 1, 1}}, 2), degenerate_cartan_error);
}

TEST_CASE("root values track pairings for arbitrary roots") {
  RootSystem rs(parse_cartan_type("G2"));
  ChevalleyBasis cb(rs);
  const long long p = 11;
  CocharVec lambda{{3, 5}};
  LieElement h = cochar_to_toral(cb, lambda, p);
  for (int a = 0; a < rs.num_roots(); ++a) {
    const long long want = ((rs.pairing(rs.roots()[a], lambda) % p) + p) % p;
    CHECK(cb.root_value(a, h) == want);
  }
}

TEST_CASE("structure constant CSV is stable and complete") {
  ChevalleyBasis cb{RootSystem(parse_cartan_type("A2"))};
  const std::string csv = cb.structure_constants_csv();
  CHECK(csv.substr(0, 13) == "alpha,beta,N\n");
  // A2: each root has exactly two ordered decompositions -> 12 rows.
  size_t rows = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  CHECK(rows == 12);
  CHECK(csv == ChevalleyBasis{RootSystem(parse_cartan_type("A2"))}.structure_constants_csv());
}
