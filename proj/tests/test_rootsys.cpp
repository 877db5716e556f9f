#include <doctest.h>

#include <random>

#include <json.hpp>

#include "chevcert/root_system.hpp"

using namespace chevcert;

namespace {

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3",
                                            "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

Root root_of(const std::vector<int>& v) { return Root{v}; }

}  // namespace

TEST_CASE("cartan type parsing") {
  CHECK(parse_cartan_type("A1").to_string() == "A1");
  CHECK(parse_cartan_type("g2").family == Family::G);
  CHECK(parse_cartan_type("d4").rank == 4);
  CHECK_THROWS_AS(parse_cartan_type("A0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("D3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("E9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("F5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("G3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("H4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("B2x"), std::invalid_argument);
}

TEST_CASE("root counts match the classical formulas") {
  for (const auto& name : kAllTypes) {
    RootSystem rs(parse_cartan_type(name));
    CAPTURE(name);
    CHECK(rs.num_roots() == classical_root_count(rs.type()));
    CHECK(rs.num_roots() % 2 == 0);
    CHECK(rs.num_positive() * 2 == rs.num_roots());
  }
}

TEST_CASE("A1 is {+-alpha}") {
  RootSystem rs(parse_cartan_type("A1"));
  REQUIRE(rs.num_roots() == 2);
  CHECK(rs.roots()[0].coeffs == std::vector<int>{1});
  CHECK(rs.roots()[1].coeffs == std::vector<int>{-1});
  CHECK(rs.highest_root_coeffs() == std::vector<int>{1});
}

TEST_CASE("negatives mirror positives") {
  for (const auto& name : kSmallTypes) {
    RootSystem rs(parse_cartan_type(name));
    for (int a = 0; a < rs.num_positive(); ++a) {
      const int n = rs.negate(a);
      CHECK(n == a + rs.num_positive());
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.roots()[n].coeffs[j] == -rs.roots()[a].coeffs[j]);
    }
  }
}

TEST_CASE("highest roots and heights") {
  CHECK(RootSystem(parse_cartan_type("A2")).highest_root_coeffs() == std::vector<int>{1, 1});
  CHECK(RootSystem(parse_cartan_type("G2")).highest_root_coeffs() == std::vector<int>{3, 2});
  CHECK(RootSystem(parse_cartan_type("B2")).highest_root_coeffs() == std::vector<int>{1, 2});
  CHECK(RootSystem(parse_cartan_type("C3")).highest_root_coeffs() == std::vector<int>{2, 2, 1});
  CHECK(RootSystem(parse_cartan_type("D4")).highest_root_coeffs() == std::vector<int>{1, 2, 1, 1});
  CHECK(RootSystem(parse_cartan_type("E8")).highest_root_coeffs() ==
        std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});

  RootSystem g2(parse_cartan_type("G2"));
  CHECK(g2.height(g2.highest_root_index()) == 5);
  for (int i = 0; i < g2.rank(); ++i) CHECK(g2.height(g2.simple_root_index(i)) == 1);
  CHECK(g2.height(g2.negate(g2.simple_root_index(0))) == -1);
}

TEST_CASE("highest root dominates coefficientwise") {
  for (const auto& name : kAllTypes) {
    RootSystem rs(parse_cartan_type(name));
    const auto& top = rs.highest_root().coeffs;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int j = 0; j < rs.rank(); ++j) CHECK(rs.roots()[a].coeffs[j] <= top[j]);
  }
}

TEST_CASE("pairing against fundamental coweights") {
  RootSystem rs(parse_cartan_type("A3"));
  for (int i = 0; i < rs.rank(); ++i) {
    CocharVec lj;
    for (int j = 0; j < rs.rank(); ++j) lj.pairings.push_back(j == i ? 1 : 0);
    for (int t = 0; t < rs.rank(); ++t)
      CHECK(rs.pairing(rs.roots()[rs.simple_root_index(t)], lj) == (t == i ? 1 : 0));
  }
  RootSystem g2(parse_cartan_type("G2"));
  CHECK(g2.pairing(g2.highest_root(), CocharVec{{3, 5}}) == 19);

  CHECK_THROWS_AS(rs.pairing(rs.roots()[0], CocharVec{{1, 2}}), std::invalid_argument);
}

TEST_CASE("pairing is bilinear and odd under negation") {
  std::mt19937_64 rng(7);
  for (const auto& name : kSmallTypes) {
    RootSystem rs(parse_cartan_type(name));
    for (int trial = 0; trial < 20; ++trial) {
      CocharVec a, b, ab;
      for (int j = 0; j < rs.rank(); ++j) {
        const long long x = static_cast<long long>(rng() % 19) - 9;
        const long long y = static_cast<long long>(rng() % 19) - 9;
        a.pairings.push_back(x);
        b.pairings.push_back(y);
        ab.pairings.push_back(x + y);
      }
      const int idx = static_cast<int>(rng() % rs.num_roots());
      const Root& r = rs.roots()[idx];
      CHECK(rs.pairing(r, ab) == rs.pairing(r, a) + rs.pairing(r, b));
      CHECK(rs.pairing(rs.roots()[rs.negate(idx)], a) == -rs.pairing(r, a));
    }
  }
}

TEST_CASE("reflection closure: s_beta(alpha) stays in the system") {
  for (const auto& name : kSmallTypes) {
    RootSystem rs(parse_cartan_type(name));
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) CHECK_NOTHROW(rs.reflect(a, b));
  }
}

TEST_CASE("coroot data is consistent") {
  for (const auto& name : kAllTypes) {
    RootSystem rs(parse_cartan_type(name));
    for (int a = 0; a < rs.num_roots(); ++a) {
      // <alpha, alpha^vee> = 2
      CHECK(rs.pairing_with_coroot(a, a) == 2);
      // the coroot of a simple root is the matching simple coroot
    }
    for (int i = 0; i < rs.rank(); ++i) {
      const auto& d = rs.coroot_coords(rs.simple_root_index(i));
      for (int j = 0; j < rs.rank(); ++j) CHECK(d[j] == (j == i ? 1 : 0));
    }
  }
}

TEST_CASE("coxeter numbers") {
  auto h = [](const std::string& s) { return RootSystem(parse_cartan_type(s)).coxeter_number(); };
  CHECK(h("A1") == 2);
  CHECK(h("A2") == 3);
  CHECK(h("A3") == 4);
  CHECK(h("A5") == 6);
  CHECK(h("B2") == 4);
  CHECK(h("B3") == 6);
  CHECK(h("B4") == 8);
  CHECK(h("C3") == 6);
  CHECK(h("C4") == 8);
  CHECK(h("D4") == 6);
  CHECK(h("D5") == 8);
  CHECK(h("E6") == 12);
  CHECK(h("E7") == 18);
  CHECK(h("E8") == 30);
  CHECK(h("F4") == 12);
  CHECK(h("G2") == 6);
}

TEST_CASE("coxeter element order equals ht(highest)+1") {
  for (const auto& name : kAllTypes) {
    RootSystem rs(parse_cartan_type(name));
    CAPTURE(name);
    CHECK(rs.coxeter_element_order() == rs.coxeter_number());
  }
}

TEST_CASE("canonical ordering: positives first by (height, lex)") {
  RootSystem rs(parse_cartan_type("B3"));
  int prev_h = 0;
  for (int a = 0; a < rs.num_positive(); ++a) {
    CHECK(rs.height(a) >= 1);
    CHECK(rs.height(a) >= prev_h);
    if (a > 0 && rs.height(a) == prev_h)
      CHECK(rs.roots()[a - 1].coeffs < rs.roots()[a].coeffs);
    prev_h = rs.height(a);
  }
  CHECK(rs.index_of(root_of({0, 0, 0})) == -1);
  CHECK(rs.index_of(root_of({9, 9, 9})) == -1);
}

TEST_CASE("root system JSON document") {
  RootSystem rs(parse_cartan_type("G2"));
  auto j = nlohmann::json::parse(rs.to_json());
  CHECK(j["type"] == "G2");
  CHECK(j["roots"].size() == 12);
  CHECK(j["highest_root"] == std::vector<int>{3, 2});
  CHECK(j["cartan_matrix"].size() == 2);
  CHECK(rs.to_json() == RootSystem(parse_cartan_type("G2")).to_json());
}
