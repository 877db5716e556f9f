#include "chevcert/irregular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chevcert/bernoulli.hpp"

namespace chevcert {

IrregularData index_of_irregularity(long long p) {
  IrregularData out;
  out.p = p;
  const auto b = bernoulli_mod_p(p);
  for (long long k = 2; k <= p - 3; k += 2)
    if (b[static_cast<size_t>(k)] == 0) out.irregular_indices.push_back(k);
  out.e_p = static_cast<long long>(out.irregular_indices.size());
  return out;
}

bool is_zero_verdict(EigenspaceVerdict v) { return v != EigenspaceVerdict::NonzeroOdd; }

const char* verdict_name(EigenspaceVerdict v) {
  switch (v) {
    case EigenspaceVerdict::ProvablyZero: return "ProvablyZero";
    case EigenspaceVerdict::NonzeroOdd: return "NonzeroOdd";
    case EigenspaceVerdict::AssumedZeroVandiver: return "AssumedZeroVandiver";
  }
  return "?";
}

EigenspaceVerdict eigenspace_is_zero(const IrregularData& irr, long long j) {
  const long long p = irr.p;
  j = ((j % (p - 1)) + (p - 1)) % (p - 1);
  if (j == 0 || j == 1) return EigenspaceVerdict::ProvablyZero;
  if (j % 2 == 0) return EigenspaceVerdict::AssumedZeroVandiver;
  const long long k = p - j;  // even, in [3, p-3+... ] -> [2, p-3] for j in [3, p-2]
  const bool irregular = std::binary_search(irr.irregular_indices.begin(),
                                            irr.irregular_indices.end(), k);
  return irregular ? EigenspaceVerdict::NonzeroOdd : EigenspaceVerdict::ProvablyZero;
}

bool BadSet::contains(long long n) const {
  n = ((n % (p - 1)) + (p - 1)) % (p - 1);
  return std::binary_search(members.begin(), members.end(), n);
}

BadSet bad_set(const IrregularData& irr) {
  BadSet out;
  out.p = irr.p;
  out.vandiver_assumed = irr.vandiver_assumed;
  for (long long n = 0; n <= irr.p - 2; ++n) {
    if (!is_zero_verdict(eigenspace_is_zero(irr, 1 + n)) ||
        !is_zero_verdict(eigenspace_is_zero(irr, 1 - n)))
      out.members.push_back(n);
  }
  return out;
}

DensityEstimate irregularity_density_estimate(int r) {
  if (r < 0) throw std::invalid_argument("negative index of irregularity");
  DensityEstimate d;
  double fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  d.point = std::exp(-0.5) / (std::ldexp(1.0, r) * fact);
  d.cumulative_lower = 1.0 - std::exp(-0.5) / std::ldexp(1.0, r);
  return d;
}

}  // namespace chevcert
