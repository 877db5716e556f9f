#include "chevcert/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace chevcert {

namespace {

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

RootSystem::RootSystem(const CartanType& t) : type_(t) {
  if (!t.valid()) throw std::invalid_argument("invalid Cartan type " + t.to_string());
  cartan_ = cartan_matrix(t);
  simple_norms_ = simple_root_norms(t);
  const int r = t.rank;

  // <v, alpha_i^vee> for a coefficient vector v.
  auto pair_simple = [&](const std::vector<int>& v, int i) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += cartan_[i][j] * v[j];
    return s;
  };

  // Enumerate positive roots by height layers. A candidate alpha + alpha_i is a
  // root iff q = p - <alpha, alpha_i^vee> > 0, where p is the number of steps
  // down the alpha_i-string from alpha.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  std::vector<std::vector<int>> positives;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    for (auto& v : layer) positives.push_back(v);
    std::vector<std::vector<int>> next;
    for (const auto& v : layer) {
      for (int i = 0; i < r; ++i) {
        std::vector<int> down = v;
        int p = 0;
        const std::vector<int> zero(r, 0);
        while (true) {
          down[i] -= 1;
          if (down == zero) break;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int x) { return x >= 0; });
          if (!nonneg || !seen.count(down)) break;
          ++p;
        }
        int q = p - pair_simple(v, i);
        if (q > 0) {
          std::vector<int> up = v;
          up[i] += 1;
          if (!seen.count(up)) {
            seen.insert(up);
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }

  auto ht = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(positives.begin(), positives.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  num_positive_ = static_cast<int>(positives.size());
  if (2 * num_positive_ != classical_root_count(t))
    throw std::logic_error("root count mismatch for " + t.to_string());

  roots_.reserve(2 * num_positive_);
  for (const auto& v : positives) roots_.push_back(Root{v});
  for (const auto& v : positives) {
    std::vector<int> n(v.size());
    for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    roots_.push_back(Root{std::move(n)});
  }

  heights_.resize(roots_.size());
  simple_pairings_.resize(roots_.size());
  norms_.resize(roots_.size());
  coroot_coords_.resize(roots_.size());
  // (alpha_j, alpha_i) = A[i][j] * norm_i / 2; all integral by the norm scaling.
  std::vector<std::vector<int>> gram(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if ((cartan_[i][j] * simple_norms_[i]) % 2 != 0)
        throw std::logic_error("non-integral Gram entry for " + t.to_string());
      gram[i][j] = cartan_[i][j] * simple_norms_[i] / 2;
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (gram[i][j] != gram[j][i]) throw std::logic_error("Gram matrix not symmetric");

  for (size_t a = 0; a < roots_.size(); ++a) {
    const auto& v = roots_[a].coeffs;
    heights_[a] = ht(v);
    simple_pairings_[a].resize(r);
    for (int i = 0; i < r; ++i) simple_pairings_[a][i] = pair_simple(v, i);
    long long nn = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) nn += static_cast<long long>(v[i]) * v[j] * gram[i][j];
    norms_[a] = static_cast<int>(nn);
    coroot_coords_[a].resize(r);
    for (int j = 0; j < r; ++j) {
      long long num = static_cast<long long>(v[j]) * simple_norms_[j];
      if (num % nn != 0) throw std::logic_error("non-integral coroot coordinate");
      coroot_coords_[a][j] = static_cast<int>(num / nn);
    }
  }

  highest_ = num_positive_ - 1;  // maximal height, last in sorted positives
  // The highest root must dominate every positive root coefficientwise.
  for (int a = 0; a < num_positive_; ++a)
    for (int j = 0; j < r; ++j)
      if (roots_[a].coeffs[j] > roots_[highest_].coeffs[j])
        throw std::logic_error("highest root fails dominance for " + t.to_string());

  index_.reserve(roots_.size());
  for (size_t a = 0; a < roots_.size(); ++a) index_.emplace_back(roots_[a].coeffs, static_cast<int>(a));
  std::sort(index_.begin(), index_.end());
}

RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

int RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) return -1;
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(r.coeffs, -1));
  if (it == index_.end() || it->first != r.coeffs) return -1;
  return it->second;
}

int RootSystem::simple_root_index(int i) const {
  Root e{std::vector<int>(rank(), 0)};
  e.coeffs[i] = 1;
  return index_of(e);
}

int RootSystem::height(const Root& r) const {
  return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0);
}

std::vector<int> RootSystem::highest_root_coeffs() const { return roots_[highest_].coeffs; }

long long RootSystem::pairing(const Root& r, const CocharVec& lambda) const {
  if (lambda.pairings.size() != r.coeffs.size())
    throw std::invalid_argument("rank mismatch in pairing");
  long long s = 0;
  for (size_t i = 0; i < r.coeffs.size(); ++i) s += r.coeffs[i] * lambda.pairings[i];
  return s;
}

int RootSystem::pairing_with_coroot(int root_index, int beta_index) const {
  const auto& d = coroot_coords_[beta_index];
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += d[j] * simple_pairings_[root_index][j];
  return s;
}

int RootSystem::reflect(int root_index, int beta_index) const {
  int c = pairing_with_coroot(root_index, beta_index);
  Root out = roots_[root_index];
  const auto& b = roots_[beta_index].coeffs;
  for (int j = 0; j < rank(); ++j) out.coeffs[j] -= c * b[j];
  int idx = index_of(out);
  if (idx < 0) throw std::logic_error("reflection left the root system");
  return idx;
}

long long RootSystem::coxeter_element_order() const {
  const int n = num_roots();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // w = s_1 s_2 ... s_r applied right-to-left.
  for (int i = rank() - 1; i >= 0; --i) {
    for (int a = 0; a < n; ++a) perm[a] = reflect(perm[a], i);
  }
  // lcm of cycle lengths
  std::vector<bool> visited(n, false);
  long long order = 1;
  for (int a = 0; a < n; ++a) {
    if (visited[a]) continue;
    int len = 0, b = a;
    while (!visited[b]) {
      visited[b] = true;
      b = perm[b];
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return order;
}

std::string RootSystem::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type_.to_string();
  j["cartan_matrix"] = cartan_;
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const auto& r : roots_) roots.push_back(r.coeffs);
  j["roots"] = std::move(roots);
  j["highest_root"] = roots_[highest_].coeffs;
  return j.dump(2);
}

}  // namespace chevcert
