#include "chevcert/filtration.hpp"

#include <stdexcept>

#include <json.hpp>

namespace chevcert {

FiltrationTrace closure_filtration(const ChevalleyBasis& cb, const std::vector<LieElement>& seeds,
                                   long long p, int depth, bool allow_small_p) {
  if (depth < 1) throw std::invalid_argument("closure depth must be >= 1");
  const int n_max = max_structure_constant(cb.root_system());
  if (p <= n_max && !allow_small_p)
    throw std::invalid_argument("structure constants vanish mod p (p <= n_max)");

  FiltrationTrace t;
  t.p = p;
  t.depth = depth;
  t.levels.reserve(depth);
  t.levels.push_back(span(cb, seeds, p));
  t.witnesses.resize(depth);

  for (int k = 2; k <= depth; ++k) {
    Subspace w(p, cb.dim());
    for (int l = 1; l + l <= k; ++l) {
      const int m = k - l;
      const Subspace& wl = t.level(l);
      const Subspace& wm = t.level(m);
      for (int i = 0; i < wl.dim() && !w.full(); ++i) {
        LieElement a = unflatten(cb, wl.basis()[i], p);
        for (int j = 0; j < wm.dim() && !w.full(); ++j) {
          LieElement br = cb.bracket(a, unflatten(cb, wm.basis()[j], p));
          if (w.insert(flatten(cb, br))) t.witnesses[k - 1].push_back({l, m, i, j});
        }
      }
    }
    t.levels.push_back(std::move(w));
  }
  return t;
}

std::string FiltrationTrace::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["depth"] = depth;
  nlohmann::ordered_json lv = nlohmann::ordered_json::array();
  for (int k = 1; k <= depth; ++k) {
    nlohmann::ordered_json e;
    e["k"] = k;
    e["dim"] = level(k).dim();
    e["basis"] = level(k).basis();
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : witnesses[static_cast<size_t>(k) - 1])
      ws.push_back({{"l", w.l}, {"m", w.m}, {"i", w.i}, {"j", w.j}});
    e["witnesses"] = std::move(ws);
    lv.push_back(std::move(e));
  }
  j["levels"] = std::move(lv);
  return j.dump();
}

RootHeightReport check_root_height_lemma(const ChevalleyBasis& cb, long long p,
                                         const LieElement& h, bool allow_small_p, int depth) {
  if (depth < 4) throw std::invalid_argument("the lemma asserts levels up to 4; depth must be >= 4");
  const RootSystem& rs = cb.root_system();
  RootHeightReport rep;

  if (h.modulus != p) throw std::invalid_argument("H carries the wrong modulus");
  for (auto c : h.root_part)
    if (c % p != 0) throw std::invalid_argument("H must be toral");

  for (int a = 0; a < rs.num_roots(); ++a)
    if (cb.root_value(a, h) == 0) rep.zero_value_roots.push_back(a);
  rep.hypothesis_ok = rep.zero_value_roots.empty();
  if (!rep.hypothesis_ok) return rep;

  std::vector<LieElement> seeds;
  seeds.push_back(h);
  for (int a = 0; a < rs.num_roots(); ++a)
    if (rs.height(a) % 2 != 0) seeds.push_back(cb.basis_root(a, p));

  rep.trace = closure_filtration(cb, seeds, p, depth, allow_small_p);
  const Subspace& w2 = rep.trace.level(2);
  const Subspace& w3 = rep.trace.level(3);
  const Subspace& w4 = rep.trace.level(4);

  rep.even_height_in_w2 = true;
  rep.all_roots_in_w3_w4 = true;
  rep.coroots_in_w4 = true;
  for (int a = 0; a < rs.num_roots(); ++a) {
    const LieElement xa = cb.basis_root(a, p);
    if (rs.height(a) % 2 == 0 && !contains(cb, w2, xa)) {
      rep.even_height_in_w2 = false;
      rep.failing_roots_a.push_back(a);
    }
    if (!contains(cb, w3, xa) || !contains(cb, w4, xa)) {
      rep.all_roots_in_w3_w4 = false;
      rep.failing_roots_b.push_back(a);
    }
    LieElement ha = cb.zero(p);
    const auto& d = cb.coroot_expansion(a);
    for (int j = 0; j < rs.rank(); ++j) ha.toral[j] = d[j];
    ha.reduce();
    if (!contains(cb, w4, ha)) {
      rep.coroots_in_w4 = false;
      rep.failing_roots_c.push_back(a);
    }
  }
  // g^der is the whole ambient space here: every simple coroot is some H_alpha.
  rep.derived_algebra_in_w4 = w4.full();
  return rep;
}

namespace {

bool pairing_vector_valid(const RootSystem& rs, const CocharVec& x, long long p) {
  for (int a = 0; a < rs.num_positive(); ++a)
    if (rs.pairing(rs.roots()[a], x) % p == 0) return false;
  return true;
}

}  // namespace

std::optional<bool> hypothesis_satisfiable(const RootSystem& rs, long long p) {
  const int r = rs.rank();
  double size = 1;
  for (int i = 0; i < r; ++i) size *= static_cast<double>(p - 1);
  if (size > 2e5) return std::nullopt;

  CocharVec x;
  x.pairings.assign(static_cast<size_t>(r), 1);
  while (true) {
    if (pairing_vector_valid(rs, x, p)) return true;
    int i = 0;
    while (i < r && x.pairings[static_cast<size_t>(i)] == p - 1) {
      x.pairings[static_cast<size_t>(i)] = 1;
      ++i;
    }
    if (i == r) return false;
    ++x.pairings[static_cast<size_t>(i)];
  }
}

LieElement sample_valid_toral(const ChevalleyBasis& cb, long long p, std::mt19937_64& rng) {
  const RootSystem& rs = cb.root_system();
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    CocharVec x;
    for (int i = 0; i < rs.rank(); ++i)
      x.pairings.push_back(
          1 + static_cast<long long>(rng() % static_cast<unsigned long long>(p - 1)));
    if (pairing_vector_valid(rs, x, p)) return cochar_to_toral(cb, x, p);
    if (attempt == 5000 && hypothesis_satisfiable(rs, p) == std::optional<bool>(false))
      throw std::domain_error("no toral element has all roots nonvanishing for " +
                              rs.type().to_string() + " at p=" + std::to_string(p));
  }
  throw std::runtime_error("could not sample a toral element with all roots nonvanishing");
}

std::string RootHeightReport::to_json() const {
  nlohmann::ordered_json j;
  j["hypothesis_ok"] = hypothesis_ok;
  j["zero_value_roots"] = zero_value_roots;
  if (hypothesis_ok) {
    j["assertions"] = {{"even_height_in_w2", even_height_in_w2},
                       {"all_roots_in_w3_w4", all_roots_in_w3_w4},
                       {"coroots_in_w4", coroots_in_w4},
                       {"derived_algebra_in_w4", derived_algebra_in_w4}};
    j["failing_roots"] = {{"a", failing_roots_a}, {"b", failing_roots_b}, {"c", failing_roots_c}};
    j["trace"] = nlohmann::ordered_json::parse(trace.to_json());
  }
  j["passed"] = all_passed();
  return j.dump();
}

}  // namespace chevcert
