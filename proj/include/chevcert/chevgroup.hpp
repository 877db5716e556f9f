#pragma once

#include <cstdint>
#include <vector>

#include "chevcert/chevalley.hpp"
#include "chevcert/subspace.hpp"

namespace chevcert {

// Element of the adjoint Chevalley group over Z/p^k: a dim(g) x dim(g) matrix,
// entries reduced to [0, p^k).
struct GroupElement {
  long long p = 0;
  int k = 1;
  long long q = 0;  // p^k
  int d = 0;
  std::vector<long long> mat;  // row-major

  bool is_identity() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(long long p, int k, int d);
GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement reduce_level(const GroupElement& g, int k);
bool congruent_identity(const GroupElement& g, int level);

// Integer matrix of ad(v) on the Chevalley basis (modulus 0 input).
std::vector<long long> ad_matrix(const ChevalleyBasis& cb, const LieElement& v);

// x_alpha(t) = exp(t ad X_alpha) over Z; exact since ad X_alpha is nilpotent
// and the divided powers are integral.
std::vector<long long> one_parameter_integral(const ChevalleyBasis& cb, int root_index,
                                              long long t);

// x_alpha(1) for alpha over the positive and negative simple roots, mod p^k.
std::vector<GroupElement> chevalley_generators(const ChevalleyBasis& cb, long long p, int k);

// I + p^m ad(v) mod p^k, the image of v in the m-th congruence layer.
// Requires 1 <= m < k <= 2m+1.
GroupElement exp_layer(const ChevalleyBasis& cb, const LieElement& v, int m, int k);

// Recovers v from a group element congruent to I mod p^m. Inverse of
// exp_layer on the layer.
class AdSolver {
 public:
  AdSolver(const ChevalleyBasis& cb, long long p);
  LieElement log_layer(const GroupElement& g, int m) const;

 private:
  const ChevalleyBasis& cb_;
  long long p_;
  std::vector<int> pivot_rows_;           // d positions into vec(ad)
  std::vector<std::vector<long long>> inv_;  // d x d, solves the pivot system
};

// Exact BFS closure of <gens> under multiplication. Throws cap_exceeded_error
// past `cap` elements.
std::vector<GroupElement> enumerate_subgroup(const std::vector<GroupElement>& gens,
                                             size_t cap = 1000000);

struct PhiLayer {
  Subspace space;
  size_t element_count = 0;  // elements of the reduced subgroup in the layer
};

// Phi_m of an enumerated subgroup: reduce mod p^{m+1}, keep elements congruent
// to I mod p^m, identify them with Lie elements via the layer logarithm.
PhiLayer phi_m(const ChevalleyBasis& cb, const std::vector<GroupElement>& subgroup, int m);

// [Phi_l, Phi_m] subset Phi_{l+m}; requires the subgroup enumerated at level
// >= l+m+1.
bool verify_bracket_containment(const ChevalleyBasis& cb,
                                const std::vector<GroupElement>& subgroup, int l, int m);

struct TitsLiftOrder {
  long long order_adjoint = 0;
  long long sc_order_bound = 0;  // order_adjoint * exponent of the center
  bool sc_exact = false;         // true when the center is trivial
};

// Order of n_{alpha_1}...n_{alpha_r} in the adjoint representation over Z,
// with n_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1).
TitsLiftOrder tits_lift_order(const ChevalleyBasis& cb);

}  // namespace chevcert
