#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace chevcert {

bool is_prime(long long n);
std::vector<long long> primes_in(long long lo, long long hi);  // inclusive range

// Exact Bernoulli numbers B_0..B_max via the defining recurrence
// sum_{j=0}^{m} C(m+1,j) B_j = 0, with arbitrary-precision rationals.
// Brute-force oracle; keep max_index modest (default cap 400 in callers).
std::vector<mpq_class> exact_bernoulli_oracle(int max_index);

// Reduction of an exact Bernoulli number mod p. Requires p not dividing the
// denominator (true for k <= p-3 by von Staudt-Clausen).
long long reduce_mod_p(const mpq_class& q, long long p);

// B_k mod p for every even k in [2, p-3], indexed by k (odd/out-of-range
// slots unused). Power-series inversion of (e^t - 1)/t, O(p^2) word ops.
// Requires p an odd prime >= 5.
std::vector<long long> bernoulli_mod_p(long long p);

}  // namespace chevcert
