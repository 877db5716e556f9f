#include <doctest.h>

#include <random>

#include "chevcert/chevgroup.hpp"
#include "chevcert/errors.hpp"

using namespace chevcert;

namespace {

// Elements of <gens> as random words, for randomized subgroup picks.
GroupElement random_word(const std::vector<GroupElement>& gens, std::mt19937_64& rng, int len) {
  GroupElement g = identity_element(gens[0].p, gens[0].k, gens[0].d);
  for (int i = 0; i < len; ++i) g = mul(g, gens[rng() % gens.size()]);
  return g;
}

}  // namespace

TEST_CASE("one-parameter subgroups are unipotent") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  auto x0 = one_parameter_integral(cb, 0, 0);
  const int d = cb.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) CHECK(x0[static_cast<size_t>(i) * d + j] == (i == j ? 1 : 0));

  auto x1 = one_parameter_integral(cb, 0, 1);
  // (x1 - I)^3 = 0 and unit diagonal
  std::vector<long long> n = x1;
  for (int i = 0; i < d; ++i) {
    CHECK(x1[static_cast<size_t>(i) * d + i] == 1);
    n[static_cast<size_t>(i) * d + i] -= 1;
  }
  auto mulm = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size(), 0);
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        for (int j = 0; j < d; ++j)
          c[static_cast<size_t>(i) * d + j] +=
              a[static_cast<size_t>(i) * d + l] * b[static_cast<size_t>(l) * d + j];
    return c;
  };
  auto n3 = mulm(mulm(n, n), n);
  CHECK(std::all_of(n3.begin(), n3.end(), [](long long v) { return v == 0; }));

  // x_alpha(1) x_alpha(-1) = I
  auto inv = one_parameter_integral(cb, 0, -1);
  auto prod = mulm(x1, inv);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) CHECK(prod[static_cast<size_t>(i) * d + j] == (i == j ? 1 : 0));
}

TEST_CASE("A1 adjoint BFS orders") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);

  auto g31 = enumerate_subgroup(chevalley_generators(cb, 3, 1));
  CHECK(g31.size() == 12);  // frozen BFS fixture

  auto g51 = enumerate_subgroup(chevalley_generators(cb, 5, 1));
  CHECK(g51.size() == 60);

  auto g32 = enumerate_subgroup(chevalley_generators(cb, 3, 2));
  CHECK(g32.size() == 12 * 27);  // kernel layer has size p^dim

  auto g52 = enumerate_subgroup(chevalley_generators(cb, 5, 2));
  CHECK(g52.size() == 60 * 125);
}

TEST_CASE("trivial subgroup enumerates to the identity") {
  auto id = identity_element(5, 2, 3);
  auto g = enumerate_subgroup({id});
  CHECK(g.size() == 1);
  CHECK(g[0].is_identity());
}

TEST_CASE("enumeration cap is enforced") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  CHECK_THROWS_AS(enumerate_subgroup(chevalley_generators(cb, 5, 2), 100), cap_exceeded_error);
}

TEST_CASE("exp_layer basics and bounds") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  LieElement zero = cb.zero(5);
  CHECK(exp_layer(cb, zero, 1, 2).is_identity());
  CHECK_THROWS_AS(exp_layer(cb, zero, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(exp_layer(cb, zero, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(exp_layer(cb, zero, 1, 4), std::invalid_argument);
}

TEST_CASE("exp/log round trip, exhaustive when small") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  const long long p = 5;
  AdSolver solver(cb, p);
  for (long long t = 0; t < p; ++t)
    for (long long u = 0; u < p; ++u)
      for (long long v = 0; v < p; ++v) {
        LieElement e = cb.zero(p);
        e.toral[0] = t;
        e.root_part[0] = u;
        e.root_part[1] = v;
        GroupElement g = exp_layer(cb, e, 1, 2);
        CHECK(solver.log_layer(g, 1) == e);
      }
}

TEST_CASE("exp_layer is a homomorphism on the layer") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  const long long p = 3;
  std::mt19937_64 rng(29);
  for (int m : {1, 2}) {
    for (int trial = 0; trial < 50; ++trial) {
      LieElement a = cb.zero(p), b = cb.zero(p), ab = cb.zero(p);
      for (int i = 0; i < cb.dim(); ++i) {
        const long long x = static_cast<long long>(rng() % p);
        const long long y = static_cast<long long>(rng() % p);
        if (i < cb.rank()) {
          a.toral[i] = x;
          b.toral[i] = y;
          ab.toral[i] = (x + y) % p;
        } else {
          a.root_part[i - cb.rank()] = x;
          b.root_part[i - cb.rank()] = y;
          ab.root_part[i - cb.rank()] = (x + y) % p;
        }
      }
      CHECK(mul(exp_layer(cb, a, m, m + 1), exp_layer(cb, b, m, m + 1)) ==
            exp_layer(cb, ab, m, m + 1));
    }
  }
}

TEST_CASE("log_layer rejects elements off the layer") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  AdSolver solver(cb, 5);
  auto gens = chevalley_generators(cb, 5, 2);
  CHECK_THROWS_AS(solver.log_layer(gens[0], 1), std::invalid_argument);  // not = I mod 5
}

TEST_CASE("phi_m of the full level-2 group is the full algebra") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  auto group = enumerate_subgroup(chevalley_generators(cb, 3, 2));
  PhiLayer l1 = phi_m(cb, group, 1);
  CHECK(l1.space.dim() == 3);
  CHECK(l1.element_count == 27);

  auto trivial = std::vector<GroupElement>{identity_element(3, 2, 3)};
  PhiLayer l0 = phi_m(cb, trivial, 1);
  CHECK(l0.space.dim() == 0);
  CHECK(l0.element_count == 1);
}

TEST_CASE("layer subgroup generated by exp_layer seeds") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  const long long p = 5;
  std::vector<GroupElement> gens{exp_layer(cb, cb.basis_root(0, p), 1, 3),
                                 exp_layer(cb, cb.basis_root(1, p), 1, 3)};
  auto group = enumerate_subgroup(gens);
  PhiLayer l1 = phi_m(cb, group, 1);
  CHECK(l1.space.dim() == 2);  // spans X_alpha, X_{-alpha}
  PhiLayer l2 = phi_m(cb, group, 2);
  CHECK(subspace_leq(bracket_space(cb, l1.space, l1.space), l2.space));
  CHECK(verify_bracket_containment(cb, group, 1, 1));
  // p-th powers push the layer down: Phi_2 is everything here
  CHECK(l2.space.dim() == 3);
}

TEST_CASE("bracket containment on randomized subgroups") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  std::mt19937_64 rng(31);
  auto gens = chevalley_generators(cb, 3, 4);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<GroupElement> sub{random_word(gens, rng, 6), random_word(gens, rng, 5)};
    auto group = enumerate_subgroup(sub);
    CHECK(verify_bracket_containment(cb, group, 1, 1));
    CHECK(verify_bracket_containment(cb, group, 1, 2));
  }
}

TEST_CASE("kernel layer sizes are p^dim for the full adjoint group") {
  RootSystem rs(parse_cartan_type("A1"));
  ChevalleyBasis cb(rs);
  for (long long p : {3LL, 5LL}) {
    auto k1 = enumerate_subgroup(chevalley_generators(cb, p, 1));
    auto k2 = enumerate_subgroup(chevalley_generators(cb, p, 2));
    CHECK(k2.size() == k1.size() * static_cast<size_t>(p * p * p));
  }
}

TEST_CASE("tits lift orders") {
  TitsLiftOrder a1 = tits_lift_order(ChevalleyBasis{RootSystem(parse_cartan_type("A1"))});
  CHECK(a1.order_adjoint == 2);
  CHECK(a1.sc_order_bound == 4);
  CHECK(!a1.sc_exact);

  TitsLiftOrder a2 = tits_lift_order(ChevalleyBasis{RootSystem(parse_cartan_type("A2"))});
  CHECK(a2.sc_order_bound == 3 * a2.order_adjoint);

  TitsLiftOrder g2 = tits_lift_order(ChevalleyBasis{RootSystem(parse_cartan_type("G2"))});
  CHECK(g2.sc_exact);
  CHECK(g2.sc_order_bound == g2.order_adjoint);
  CHECK(g2.order_adjoint % RootSystem(parse_cartan_type("G2")).coxeter_number() == 0);
}

TEST_CASE("the defining-representation lift of the A1 Coxeter element has order 4") {
  // n_alpha = [[0,1],[-1,0]] in SL2; independent of the adjoint computation.
  int m[2][2] = {{0, 1}, {-1, 0}};
  int acc[2][2] = {{1, 0}, {0, 1}};
  int order = 0;
  do {
    const int a = acc[0][0] * m[0][0] + acc[0][1] * m[1][0];
    const int b = acc[0][0] * m[0][1] + acc[0][1] * m[1][1];
    const int c = acc[1][0] * m[0][0] + acc[1][1] * m[1][0];
    const int d = acc[1][0] * m[0][1] + acc[1][1] * m[1][1];
    acc[0][0] = a;
    acc[0][1] = b;
    acc[1][0] = c;
    acc[1][1] = d;
    ++order;
  } while (!(acc[0][0] == 1 && acc[0][1] == 0 && acc[1][0] == 0 && acc[1][1] == 1));
  CHECK(order == 4);
}
