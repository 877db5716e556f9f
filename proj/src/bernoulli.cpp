#include "chevcert/bernoulli.hpp"

#include <stdexcept>

namespace chevcert {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit with the base set above
  auto mulmod = [](unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  const unsigned long long u = static_cast<unsigned long long>(n);
  unsigned long long d = u - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    unsigned long long x = powmod(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, u);
      if (x == u - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<long long> primes_in(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::vector<mpq_class> exact_bernoulli_oracle(int max_index) {
  if (max_index < 0) throw std::invalid_argument("negative Bernoulli index");
  std::vector<mpq_class> b(static_cast<size_t>(max_index) + 1);
  b[0] = 1;
  std::vector<mpz_class> binom(static_cast<size_t>(max_index) + 2);
  for (int m = 1; m <= max_index; ++m) {
    // Pascal row for C(m+1, j), j = 0..m
    binom[0] = 1;
    for (int j = 1; j <= m + 1; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
      binom[static_cast<size_t>(j)] = c;
    }
    mpq_class acc = 0;
    for (int j = 0; j < m; ++j) {
      if (b[static_cast<size_t>(j)] == 0) continue;
      acc += mpq_class(binom[static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
    }
    b[static_cast<size_t>(m)] = -acc / mpq_class(binom[static_cast<size_t>(m)]);
  }
  return b;
}

long long reduce_mod_p(const mpq_class& q, long long p) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<long>(p));
  if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
    throw std::invalid_argument("denominator divisible by p");
  mpz_class n = num % pz, d = den % pz, dinv;
  if (n < 0) n += pz;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = n * dinv % pz;
  return r.get_si();
}

std::vector<long long> bernoulli_mod_p(long long p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("bernoulli_mod_p needs a prime p >= 5");
  const long long n = p - 2;  // work with series coefficients 0..p-3
  // factorials and inverse factorials mod p
  std::vector<long long> fact(static_cast<size_t>(n) + 2), inv_fact(static_cast<size_t>(n) + 2);
  fact[0] = 1;
  for (long long i = 1; i <= n + 1; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i % p;
  auto powmod = [&](long long a, long long e) {
    long long r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  inv_fact[static_cast<size_t>(n + 1)] = powmod(fact[static_cast<size_t>(n + 1)], p - 2);
  for (long long i = n + 1; i >= 1; --i)
    inv_fact[static_cast<size_t>(i - 1)] = inv_fact[static_cast<size_t>(i)] * i % p;

  // f_i = 1/(i+1)!; g = f^{-1} mod t^{p-2}; B_k = k! g_k.
  std::vector<long long> f(static_cast<size_t>(n)), g(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = inv_fact[static_cast<size_t>(i + 1)];
  g[0] = 1;  // f_0 = 1
  // Lazy-reduction accumulator: terms < p^2, safe for ~2^63/p^2 adds per flush.
  const unsigned long long flush_every = p < 3037000499LL ? (~0ULL) / static_cast<unsigned long long>(p * p) : 1;
  for (long long k = 1; k < n; ++k) {
    unsigned long long acc = 0;
    unsigned long long pending = 0;
    for (long long i = 1; i <= k; ++i) {
      acc += static_cast<unsigned long long>(f[static_cast<size_t>(i)]) *
             static_cast<unsigned long long>(g[static_cast<size_t>(k - i)]);
      if (++pending == flush_every) {
        acc %= static_cast<unsigned long long>(p);
        pending = 0;
      }
    }
    const long long s = static_cast<long long>(acc % static_cast<unsigned long long>(p));
    g[static_cast<size_t>(k)] = (p - s) % p;  // f_0^{-1} = 1
  }
  std::vector<long long> b(static_cast<size_t>(p), 0);
  for (long long k = 2; k <= p - 3; k += 2)
    b[static_cast<size_t>(k)] = fact[static_cast<size_t>(k)] * g[static_cast<size_t>(k)] % p;
  return b;
}

}  // namespace chevcert
