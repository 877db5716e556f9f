#pragma once

#include <string>
#include <vector>

namespace chevcert {

// Irregular indices of a prime under the Kummer criterion: even k in [2, p-3]
// with B_k = 0 mod p. e_p equates to the paper's index of irregularity under
// Vandiver's conjecture, which every consumer must surface via the flag.
struct IrregularData {
  long long p = 0;
  std::vector<long long> irregular_indices;  // sorted even k
  long long e_p = 0;
  bool vandiver_assumed = true;
};

IrregularData index_of_irregularity(long long p);

enum class EigenspaceVerdict { ProvablyZero, NonzeroOdd, AssumedZeroVandiver };

bool is_zero_verdict(EigenspaceVerdict v);
const char* verdict_name(EigenspaceVerdict v);

// Vanishing of the class-group eigenspace C(chibar^j), j taken mod p-1:
//  j = 0, 1           -> ProvablyZero
//  j odd              -> Herbrand-Ribet: NonzeroOdd iff p | B_{p-j}
//  j even, j != 0     -> AssumedZeroVandiver
EigenspaceVerdict eigenspace_is_zero(const IrregularData& irr, long long j);

// Residues n mod p-1 with a nonzero eigenspace at exponent 1+n or 1-n.
struct BadSet {
  long long p = 0;
  std::vector<long long> members;  // sorted, in [0, p-2]
  bool vandiver_assumed = true;

  bool contains(long long n) const;
};

BadSet bad_set(const IrregularData& irr);

// Heuristic density of primes with index of irregularity exactly r, and the
// lower bound for index at most r.
struct DensityEstimate {
  double point = 0;             // e^{-1/2} / (2^r r!)
  double cumulative_lower = 0;  // 1 - e^{-1/2} / 2^r
};

DensityEstimate irregularity_density_estimate(int r);

}  // namespace chevcert
