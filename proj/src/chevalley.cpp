#include "chevcert/chevalley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chevcert {

namespace {

// Exact rational arithmetic on tiny values; final structure constants must
// come out integral.
struct Frac {
  long long num = 0;
  long long den = 1;

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  static Frac of(long long n, long long d = 1) {
    Frac f{n, d};
    f.normalize();
    return f;
  }
  Frac operator*(const Frac& o) const { return of(num * o.num, den * o.den); }
  Frac operator-(const Frac& o) const { return of(num * o.den - o.num * den, den * o.den); }
  long long as_integer() const {
    if (den != 1) throw std::logic_error("structure constant not integral");
    return num;
  }
};

}  // namespace

bool LieElement::is_zero() const {
  auto nz = [](long long v) { return v != 0; };
  return std::none_of(toral.begin(), toral.end(), nz) &&
         std::none_of(root_part.begin(), root_part.end(), nz);
}

void LieElement::reduce() {
  if (modulus <= 0) return;
  for (auto& v : toral) v = ((v % modulus) + modulus) % modulus;
  for (auto& v : root_part) v = ((v % modulus) + modulus) % modulus;
}

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(rs) {
  const int R = rs_.num_roots();
  const int P = rs_.num_positive();
  sum_idx_.assign(static_cast<size_t>(R) * R, -1);
  n_table_.assign(static_cast<size_t>(R) * R, 0);

  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      if (b == rs_.negate(a)) {
        sum_idx_[a * R + b] = kSumZero;
        continue;
      }
      Root s{rs_.roots()[a].coeffs};
      for (int j = 0; j < rs_.rank(); ++j) s.coeffs[j] += rs_.roots()[b].coeffs[j];
      sum_idx_[a * R + b] = static_cast<int16_t>(rs_.index_of(s));
    }
  }

  // Signed constants on positive special pairs, by increasing sum.
  // npos(a, b) looks a positive pair up in either order.
  std::vector<int> npos_table(static_cast<size_t>(P) * P, 0);
  auto npos = [&](int a, int b) -> int {
    int v = npos_table[a * P + b];
    if (v == 0) throw std::logic_error("structure constant referenced before computed");
    return v;
  };
  auto set_npos = [&](int a, int b, int v) {
    npos_table[a * P + b] = v;
    npos_table[b * P + a] = -v;
  };

  for (int g = 0; g < P; ++g) {
    if (rs_.height(g) < 2) continue;
    // Extraspecial pair: minimal xi with gamma - xi a positive root.
    int xi = -1, eta = -1;
    for (int a = 0; a < P; ++a) {
      int rest = sum_idx_[g * R + rs_.negate(a)];
      if (rest >= 0 && rest < P) {
        xi = a;
        eta = rest;
        break;
      }
    }
    if (xi < 0) throw std::logic_error("positive root with no decomposition");
    set_npos(xi, eta, root_string_down(xi, eta) + 1);

    const long long gg = rs_.norm(g), ee = rs_.norm(eta), xx = rs_.norm(xi);
    (void)xx;
    for (int a = xi + 1; a < P; ++a) {
      int b = sum_idx_[g * R + rs_.negate(a)];
      if (b < 0 || b >= P) continue;   // gamma - alpha not a positive root
      if (a >= b) continue;            // handle each unordered pair once, alpha < beta
      const long long aa = rs_.norm(a), bb = rs_.norm(b);
      // tau = beta - xi, sigma = alpha - xi; both positive roots when roots at all.
      Frac t1 = Frac::of(0);
      int tau = sum_idx_[b * R + rs_.negate(xi)];
      if (tau == kSumZero) throw std::logic_error("degenerate special pair");
      if (tau >= 0) {
        const long long tt = rs_.norm(tau);
        t1 = Frac::of(tt, ee) * Frac::of(npos(a, tau)) * Frac::of(npos(xi, tau));
      }
      Frac t2 = Frac::of(0);
      int sigma = sum_idx_[a * R + rs_.negate(xi)];
      if (sigma >= 0) {
        const long long ss = rs_.norm(sigma);
        t2 = Frac::of(ss * bb, aa * ee) * Frac::of(npos(xi, sigma)) * Frac::of(npos(b, sigma));
      }
      Frac n = Frac::of(gg, bb * npos(xi, eta)) * (t1 - t2);
      long long v = n.as_integer();
      if (v == 0) throw std::logic_error("vanishing structure constant on a special pair");
      set_npos(a, b, static_cast<int>(v));
    }
  }

  // Extend to all sign combinations via the standard length-ratio identities.
  auto store = [&](int a, int b, long long v) {
    if (v == 0 || v < -127 || v > 127) throw std::logic_error("structure constant out of range");
    n_table_[a * R + b] = static_cast<int8_t>(v);
  };
  auto frac_int = [](long long num, long long den) {
    if (num % den != 0) throw std::logic_error("non-integral derived structure constant");
    return num / den;
  };
  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      if (sum_idx_[a * R + b] < 0) continue;  // not a root (or zero sum)
      const bool apos = a < P, bpos = b < P;
      if (apos && bpos) {
        store(a, b, npos_table[a * P + b]);
      } else if (!apos && !bpos) {
        store(a, b, -npos_table[rs_.negate(a) * P + rs_.negate(b)]);
      } else if (apos && !bpos) {
        const int theta = a, delta = rs_.negate(b);
        int phi = sum_idx_[theta * R + b];  // theta - delta
        if (phi < P) {
          // phi positive: N = -(phi,phi)/(theta,theta) * N_{delta,phi}
          store(a, b,
                frac_int(-static_cast<long long>(rs_.norm(phi)) * npos_table[delta * P + phi],
                         rs_.norm(theta)));
        } else {
          const int psi = rs_.negate(phi);  // delta - theta, positive
          store(a, b,
                frac_int(-static_cast<long long>(rs_.norm(psi)) * npos_table[theta * P + psi],
                         rs_.norm(delta)));
        }
      } else {
        // negative first: antisymmetry against the mixed case above
        const int theta = b, delta = rs_.negate(a);
        int phi = sum_idx_[theta * R + a];
        long long v;
        if (phi < P && phi >= 0) {
          v = frac_int(-static_cast<long long>(rs_.norm(phi)) * npos_table[delta * P + phi],
                       rs_.norm(theta));
        } else {
          const int psi = rs_.negate(phi);
          v = frac_int(-static_cast<long long>(rs_.norm(psi)) * npos_table[theta * P + psi],
                       rs_.norm(delta));
        }
        store(a, b, -v);
      }
    }
  }
}

ChevalleyBasis build_chevalley_basis(const RootSystem& rs) { return ChevalleyBasis(rs); }

int ChevalleyBasis::structure_constant(int a, int b) const {
  if (sum_idx_[a * num_roots() + b] < 0)
    throw std::invalid_argument("structure constant requested for a non-root sum");
  return n_table_[a * num_roots() + b];
}

int ChevalleyBasis::root_string_down(int a, int b) const {
  const int R = num_roots();
  int p = 0;
  int cur = b;
  const int na = rs_.negate(a);
  while (true) {
    int next = sum_idx_[cur * R + na];
    if (next < 0) break;  // fell out of Phi (or reached zero)
    cur = next;
    ++p;
  }
  return p;
}

LieElement ChevalleyBasis::zero(long long modulus) const {
  LieElement e;
  e.modulus = modulus;
  e.toral.assign(rank(), 0);
  e.root_part.assign(num_roots(), 0);
  return e;
}

LieElement ChevalleyBasis::basis_toral(int i, long long modulus) const {
  LieElement e = zero(modulus);
  e.toral[i] = 1;
  return e;
}

LieElement ChevalleyBasis::basis_root(int a, long long modulus) const {
  LieElement e = zero(modulus);
  e.root_part[a] = 1;
  return e;
}

LieElement ChevalleyBasis::bracket(const LieElement& x, const LieElement& y) const {
  if (x.modulus != y.modulus) throw std::invalid_argument("bracket: modulus mismatch");
  if (static_cast<int>(x.toral.size()) != rank() || static_cast<int>(y.toral.size()) != rank() ||
      static_cast<int>(x.root_part.size()) != num_roots() ||
      static_cast<int>(y.root_part.size()) != num_roots())
    throw std::invalid_argument("bracket: element does not match this basis");

  const int R = num_roots();
  LieElement out = zero(x.modulus);

  // [H_i, X_b] = <beta_b, alpha_i^vee> X_b
  for (int i = 0; i < rank(); ++i) {
    if (x.toral[i] == 0) continue;
    for (int b = 0; b < R; ++b) {
      if (y.root_part[b] == 0) continue;
      out.root_part[b] += x.toral[i] * y.root_part[b] * cartan_integer(b, i);
    }
  }
  for (int i = 0; i < rank(); ++i) {
    if (y.toral[i] == 0) continue;
    for (int a = 0; a < R; ++a) {
      if (x.root_part[a] == 0) continue;
      out.root_part[a] -= y.toral[i] * x.root_part[a] * cartan_integer(a, i);
    }
  }
  // [X_a, X_b]
  for (int a = 0; a < R; ++a) {
    if (x.root_part[a] == 0) continue;
    for (int b = 0; b < R; ++b) {
      if (y.root_part[b] == 0) continue;
      const long long c = x.root_part[a] * y.root_part[b];
      const int s = sum_idx_[a * R + b];
      if (s == kSumZero) {
        const auto& d = rs_.coroot_coords(a);
        for (int j = 0; j < rank(); ++j) out.toral[j] += c * d[j];
      } else if (s >= 0) {
        out.root_part[s] += c * n_table_[a * R + b];
      }
    }
  }
  out.reduce();
  return out;
}

long long ChevalleyBasis::root_value(int root_index, const LieElement& h) const {
  long long v = 0;
  for (int i = 0; i < rank(); ++i) v += h.toral[i] * cartan_integer(root_index, i);
  if (h.modulus > 0) v = ((v % h.modulus) + h.modulus) % h.modulus;
  return v;
}

std::string ChevalleyBasis::structure_constants_csv() const {
  std::ostringstream os;
  os << "alpha,beta,N\n";
  const int R = num_roots();
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b)
      if (sum_idx_[a * R + b] >= 0)
        os << a << ',' << b << ',' << static_cast<int>(n_table_[a * R + b]) << '\n';
  return os.str();
}

int max_structure_constant(const RootSystem& rs) {
  // |N_{a,b}| = p_{a,b} + 1 depends only on root strings.
  const int R = rs.num_roots();
  int best = 0;
  for (int a = 0; a < R; ++a) {
    for (int b = 0; b < R; ++b) {
      if (b == a || b == rs.negate(a)) continue;
      Root s{rs.roots()[a].coeffs};
      for (int j = 0; j < rs.rank(); ++j) s.coeffs[j] += rs.roots()[b].coeffs[j];
      if (!rs.is_root(s)) continue;
      int p = 0;
      Root cur{rs.roots()[b].coeffs};
      while (true) {
        for (int j = 0; j < rs.rank(); ++j) cur.coeffs[j] -= rs.roots()[a].coeffs[j];
        if (!rs.is_root(cur)) break;
        ++p;
      }
      best = std::max(best, p + 1);
    }
  }
  return best;
}

LieElement cochar_to_toral(const ChevalleyBasis& cb, const CocharVec& lambda, long long p) {
  const RootSystem& rs = cb.root_system();
  const int r = rs.rank();
  if (static_cast<int>(lambda.pairings.size()) != r)
    throw std::invalid_argument("cocharacter rank mismatch");
  if (p < 2) throw std::invalid_argument("modulus must be a prime");

  // Solve A^T c = x (mod p): alpha_i(sum_j c_j H_j) = sum_j c_j A[j][i].
  std::vector<std::vector<long long>> m(r, std::vector<long long>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = ((rs.cartan()[j][i]) % p + p) % p;
    m[i][r] = ((lambda.pairings[i] % p) + p) % p;
  }
  auto inv_mod = [&](long long a) {
    long long res = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) res = res * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return res;
  };
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0)
      throw degenerate_cartan_error("degenerate Cartan pairing: p divides det(Cartan matrix)");
    std::swap(m[col], m[piv]);
    const long long inv = inv_mod(m[col][col]);
    for (int j = col; j <= r; ++j) m[col][j] = m[col][j] * inv % p;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const long long f = m[row][col];
      for (int j = col; j <= r; ++j) m[row][j] = ((m[row][j] - f * m[col][j]) % p + p) % p;
    }
  }
  LieElement h = cb.zero(p);
  for (int j = 0; j < r; ++j) h.toral[j] = m[j][r];
  return h;
}

}  // namespace chevcert
