#include "chevcert/chevgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "chevcert/errors.hpp"

namespace chevcert {

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    if (b != 0 && r > (1LL << 62) / b) throw std::overflow_error("p^k too large");
    r *= b;
  }
  return r;
}

}  // namespace

bool GroupElement::is_identity() const {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (mat[static_cast<size_t>(i) * d + j] != (i == j ? 1 : 0)) return false;
  return true;
}

GroupElement identity_element(long long p, int k, int d) {
  GroupElement g{p, k, pow_ll(p, k), d, std::vector<long long>(static_cast<size_t>(d) * d, 0)};
  for (int i = 0; i < d; ++i) g.mat[static_cast<size_t>(i) * d + i] = 1;
  return g;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (a.p != b.p || a.k != b.k || a.d != b.d)
    throw std::invalid_argument("group element level mismatch");
  GroupElement c{a.p, a.k, a.q, a.d, std::vector<long long>(a.mat.size(), 0)};
  const int d = a.d;
  // entries stay below d*q^2; defer the reduction when that fits in 63 bits
  const bool lazy = a.q <= 3037000499LL / (d + 1);
  for (int i = 0; i < d; ++i) {
    long long* crow = &c.mat[static_cast<size_t>(i) * d];
    for (int l = 0; l < d; ++l) {
      const long long v = a.mat[static_cast<size_t>(i) * d + l];
      if (v == 0) continue;
      const long long* brow = &b.mat[static_cast<size_t>(l) * d];
      if (lazy) {
        for (int j = 0; j < d; ++j) crow[j] += v * brow[j];
      } else {
        for (int j = 0; j < d; ++j) crow[j] = (crow[j] + v * brow[j]) % a.q;
      }
    }
    if (lazy)
      for (int j = 0; j < d; ++j) crow[j] %= a.q;
  }
  return c;
}

GroupElement reduce_level(const GroupElement& g, int k) {
  if (k > g.k) throw std::invalid_argument("cannot raise the level of a group element");
  GroupElement out{g.p, k, pow_ll(g.p, k), g.d, g.mat};
  for (auto& v : out.mat) v %= out.q;
  return out;
}

bool congruent_identity(const GroupElement& g, int level) {
  const long long q = pow_ll(g.p, level);
  for (int i = 0; i < g.d; ++i)
    for (int j = 0; j < g.d; ++j)
      if ((g.mat[static_cast<size_t>(i) * g.d + j] - (i == j ? 1 : 0)) % q != 0) return false;
  return true;
}

std::vector<long long> ad_matrix(const ChevalleyBasis& cb, const LieElement& v) {
  const int d = cb.dim();
  const int r = cb.rank();
  std::vector<long long> m(static_cast<size_t>(d) * d, 0);
  for (int col = 0; col < d; ++col) {
    LieElement e = col < r ? cb.basis_toral(col, v.modulus) : cb.basis_root(col - r, v.modulus);
    LieElement img = cb.bracket(v, e);
    for (int i = 0; i < r; ++i) m[static_cast<size_t>(i) * d + col] = img.toral[i];
    for (int a = 0; a < cb.num_roots(); ++a)
      m[static_cast<size_t>(r + a) * d + col] = img.root_part[a];
  }
  return m;
}

std::vector<long long> one_parameter_integral(const ChevalleyBasis& cb, int root_index,
                                              long long t) {
  const int d = cb.dim();
  LieElement x = cb.basis_root(root_index, 0);
  const std::vector<long long> ad = ad_matrix(cb, x);
  std::vector<long long> result(static_cast<size_t>(d) * d, 0);
  std::vector<long long> term = result;
  for (int i = 0; i < d; ++i) result[static_cast<size_t>(i) * d + i] = term[static_cast<size_t>(i) * d + i] = 1;
  for (long long k = 1;; ++k) {
    // term <- term * (t * ad) / k ; exact because (ad X)^k / k! is integral
    std::vector<long long> next(static_cast<size_t>(d) * d, 0);
    bool nonzero = false;
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        const long long v = term[static_cast<size_t>(i) * d + l];
        if (v == 0) continue;
        for (int j = 0; j < d; ++j)
          next[static_cast<size_t>(i) * d + j] += v * t * ad[static_cast<size_t>(l) * d + j];
      }
    for (auto& v : next) {
      if (v % k != 0) throw std::logic_error("divided power not integral");
      v /= k;
      nonzero |= v != 0;
    }
    if (!nonzero) break;
    for (size_t i = 0; i < result.size(); ++i) result[i] += next[i];
    term = std::move(next);
    if (k > 2 * d) throw std::logic_error("ad X failed to nilpotate");
  }
  return result;
}

std::vector<GroupElement> chevalley_generators(const ChevalleyBasis& cb, long long p, int k) {
  if (p <= max_structure_constant(cb.root_system()))
    throw std::invalid_argument("p must exceed max structure constant");
  const int d = cb.dim();
  std::vector<GroupElement> gens;
  std::vector<int> simples;
  for (int a = 0; a < cb.num_roots(); ++a)
    if (std::abs(cb.root_system().height(a)) == 1) simples.push_back(a);
  for (int a : simples) {
    GroupElement g = identity_element(p, k, d);
    auto m = one_parameter_integral(cb, a, 1);
    for (size_t i = 0; i < m.size(); ++i) g.mat[i] = ((m[i] % g.q) + g.q) % g.q;
    gens.push_back(std::move(g));
  }
  return gens;
}

GroupElement exp_layer(const ChevalleyBasis& cb, const LieElement& v, int m, int k) {
  if (!(1 <= m && m < k && k <= 2 * m + 1))
    throw std::invalid_argument("exp_layer level bounds violated (need 1 <= m < k <= 2m+1)");
  if (v.modulus <= 0) throw std::invalid_argument("exp_layer expects a mod-p element");
  const long long p = v.modulus;
  GroupElement g = identity_element(p, k, cb.dim());
  LieElement lift = v;
  lift.reduce();
  lift.modulus = 0;  // canonical [0,p) lift
  auto ad = ad_matrix(cb, lift);
  const long long pm = pow_ll(p, m);
  for (size_t i = 0; i < ad.size(); ++i)
    g.mat[i] = ((g.mat[i] + ad[i] % g.q * pm) % g.q + g.q) % g.q;
  return g;
}

AdSolver::AdSolver(const ChevalleyBasis& cb, long long p) : cb_(cb), p_(p) {
  const int d = cb.dim();
  // Columns: vec(ad e_c) mod p. Find d pivot rows making the system solvable.
  std::vector<std::vector<long long>> cols(d);
  for (int c = 0; c < d; ++c) {
    LieElement e = c < cb.rank() ? cb.basis_toral(c, p) : cb.basis_root(c - cb.rank(), p);
    e.modulus = 0;
    auto m = ad_matrix(cb, e);
    cols[c].assign(m.begin(), m.end());
    for (auto& v : cols[c]) v = ((v % p) + p) % p;
  }
  auto inv_mod = [&](long long a) {
    long long res = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  // Gaussian elimination tracking which vec-rows are used as pivots.
  std::vector<std::vector<long long>> work(d);  // work[c] = current column c
  for (int c = 0; c < d; ++c) work[c] = cols[c];
  std::vector<int> pivot_of_col(d, -1);
  const size_t rows = cols[0].size();
  for (int c = 0; c < d; ++c) {
    size_t pr = rows;
    for (size_t rI = 0; rI < rows; ++rI)
      if (work[c][rI] != 0) {
        pr = rI;
        break;
      }
    if (pr == rows)
      throw degenerate_cartan_error(
          "adjoint map is not injective: p divides det(Cartan matrix)");
    pivot_of_col[c] = static_cast<int>(pr);
    const long long iv = inv_mod(work[c][pr]);
    for (int c2 = c + 1; c2 < d; ++c2) {
      const long long f = work[c2][pr] * iv % p;
      if (f == 0) continue;
      for (size_t rI = 0; rI < rows; ++rI)
        work[c2][rI] = ((work[c2][rI] - f * work[c][rI]) % p + p) % p;
    }
  }
  pivot_rows_.assign(pivot_of_col.begin(), pivot_of_col.end());
  // Invert T[t][c] = cols[c][pivot_rows_[t]] so x = inv * m[pivot_rows_].
  std::vector<std::vector<long long>> t(d, std::vector<long long>(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int c = 0; c < d; ++c) t[i][c] = cols[c][pivot_rows_[i]];
    t[i][d + i] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int row = col; row < d; ++row)
      if (t[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("pivot system singular");
    std::swap(t[col], t[piv]);
    const long long iv = inv_mod(t[col][col]);
    for (int j = 0; j < 2 * d; ++j) t[col][j] = t[col][j] * iv % p;
    for (int row = 0; row < d; ++row) {
      if (row == col || t[row][col] == 0) continue;
      const long long f = t[row][col];
      for (int j = 0; j < 2 * d; ++j) t[row][j] = ((t[row][j] - f * t[col][j]) % p + p) % p;
    }
  }
  inv_.assign(d, std::vector<long long>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv_[i][j] = t[i][d + j];
}

LieElement AdSolver::log_layer(const GroupElement& g, int m) const {
  if (g.p != p_) throw std::invalid_argument("log_layer prime mismatch");
  if (g.k < m + 1) throw std::invalid_argument("log_layer level bounds violated");
  if (!congruent_identity(g, m))
    throw std::invalid_argument("element is not in the m-th congruence layer");
  const int d = cb_.dim();
  const long long pm = pow_ll(p_, m);
  std::vector<long long> vecm(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      long long e = g.mat[static_cast<size_t>(i) * d + j] - (i == j ? 1 : 0);
      vecm[static_cast<size_t>(i) * d + j] = (((e / pm) % p_) + p_) % p_;
    }
  LieElement v = cb_.zero(p_);
  for (int i = 0; i < d; ++i) {
    long long s = 0;
    for (int j = 0; j < d; ++j) s += inv_[i][j] * vecm[static_cast<size_t>(pivot_rows_[j])];
    s = ((s % p_) + p_) % p_;
    if (i < cb_.rank())
      v.toral[i] = s;
    else
      v.root_part[i - cb_.rank()] = s;
  }
  // The layer is exactly the image of ad; verify to reject stray input.
  LieElement lift = v;
  lift.modulus = 0;
  auto ad = ad_matrix(cb_, lift);
  for (size_t i = 0; i < ad.size(); ++i)
    if (((ad[i] - vecm[i]) % p_ + p_) % p_ != 0)
      throw std::invalid_argument("element is not in the image of the layer exponential");
  return v;
}

namespace {

// Packs a matrix into a 64-bit key when q^(d*d) fits; BFS falls back to an
// ordered set otherwise.
bool packable(long long q, int d) {
  unsigned long long acc = 1;
  for (int i = 0; i < d * d; ++i) {
    if (acc > (~0ULL) / static_cast<unsigned long long>(q)) return false;
    acc *= static_cast<unsigned long long>(q);
  }
  return true;
}

unsigned long long pack(const GroupElement& g) {
  unsigned long long key = 0;
  for (auto v : g.mat) key = key * static_cast<unsigned long long>(g.q) + static_cast<unsigned long long>(v);
  return key;
}

}  // namespace

std::vector<GroupElement> enumerate_subgroup(const std::vector<GroupElement>& gens, size_t cap) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const GroupElement id = identity_element(gens[0].p, gens[0].k, gens[0].d);
  std::vector<GroupElement> elements{id};

  if (packable(id.q, id.d)) {
    std::unordered_set<unsigned long long> seen{pack(id)};
    for (size_t head = 0; head < elements.size(); ++head) {
      const GroupElement cur = elements[head];
      for (const auto& g : gens) {
        GroupElement nx = mul(cur, g);
        if (seen.insert(pack(nx)).second) {
          if (elements.size() >= cap)
            throw cap_exceeded_error("subgroup enumeration exceeded cap");
          elements.push_back(std::move(nx));
        }
      }
    }
  } else {
    std::set<std::vector<long long>> seen{id.mat};
    for (size_t head = 0; head < elements.size(); ++head) {
      const GroupElement cur = elements[head];
      for (const auto& g : gens) {
        GroupElement nx = mul(cur, g);
        if (seen.insert(nx.mat).second) {
          if (elements.size() >= cap)
            throw cap_exceeded_error("subgroup enumeration exceeded cap");
          elements.push_back(std::move(nx));
        }
      }
    }
  }
  return elements;
}

namespace {

PhiLayer phi_m_with_solver(const ChevalleyBasis& cb, const AdSolver& solver,
                           const std::vector<GroupElement>& subgroup, int m) {
  const int k = subgroup[0].k;
  if (k < m + 1) throw std::invalid_argument("subgroup enumerated below level m+1");
  const long long p = subgroup[0].p;
  const long long q = pow_ll(p, m + 1);
  const int d = subgroup[0].d;

  PhiLayer out{Subspace(p, cb.dim()), 0};
  auto consider = [&](const GroupElement& g) {
    if (!congruent_identity(g, m)) return;
    ++out.element_count;
    out.space.insert(flatten(cb, solver.log_layer(g, m)));
  };
  if (packable(q, d)) {
    std::unordered_set<unsigned long long> seen;
    seen.reserve(subgroup.size() * 2);
    for (const auto& g : subgroup) {
      GroupElement r = reduce_level(g, m + 1);
      if (seen.insert(pack(r)).second) consider(r);
    }
  } else {
    std::set<std::vector<long long>> seen;
    for (const auto& g : subgroup) {
      GroupElement r = reduce_level(g, m + 1);
      if (seen.insert(r.mat).second) consider(r);
    }
  }
  return out;
}

}  // namespace

PhiLayer phi_m(const ChevalleyBasis& cb, const std::vector<GroupElement>& subgroup, int m) {
  if (subgroup.empty()) throw std::invalid_argument("empty subgroup");
  AdSolver solver(cb, subgroup[0].p);
  return phi_m_with_solver(cb, solver, subgroup, m);
}

bool verify_bracket_containment(const ChevalleyBasis& cb,
                                const std::vector<GroupElement>& subgroup, int l, int m) {
  if (subgroup.empty()) throw std::invalid_argument("empty subgroup");
  if (subgroup[0].k < l + m + 1)
    throw std::invalid_argument("subgroup enumerated below level l+m+1");
  AdSolver solver(cb, subgroup[0].p);
  const Subspace pl = phi_m_with_solver(cb, solver, subgroup, l).space;
  const Subspace pm = l == m ? pl : phi_m_with_solver(cb, solver, subgroup, m).space;
  const Subspace plm = phi_m_with_solver(cb, solver, subgroup, l + m).space;
  return subspace_leq(bracket_space(cb, pl, pm), plm);
}

TitsLiftOrder tits_lift_order(const ChevalleyBasis& cb) {
  const int d = cb.dim();
  const int r = cb.rank();
  auto matmul = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        const long long v = a[static_cast<size_t>(i) * d + l];
        if (v == 0) continue;
        for (int j = 0; j < d; ++j) c[static_cast<size_t>(i) * d + j] += v * b[static_cast<size_t>(l) * d + j];
      }
    return c;
  };
  std::vector<long long> w(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) w[static_cast<size_t>(i) * d + i] = 1;
  for (int i = 0; i < r; ++i) {
    int pos = cb.root_system().simple_root_index(i);
    int neg = cb.root_system().negate(pos);
    auto n = matmul(matmul(one_parameter_integral(cb, pos, 1), one_parameter_integral(cb, neg, -1)),
                    one_parameter_integral(cb, pos, 1));
    w = matmul(w, n);
  }
  std::vector<long long> id(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) id[static_cast<size_t>(i) * d + i] = 1;
  std::vector<long long> acc = w;
  long long order = 1;
  while (acc != id) {
    acc = matmul(acc, w);
    ++order;
    if (order > 10000) throw std::logic_error("Coxeter lift order did not terminate");
  }
  TitsLiftOrder out;
  out.order_adjoint = order;
  const int ce = center_exponent(cb.root_system().type());
  out.sc_order_bound = order * ce;
  out.sc_exact = ce == 1;
  return out;
}

}  // namespace chevcert
