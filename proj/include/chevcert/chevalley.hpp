#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevcert/root_system.hpp"

namespace chevcert {

// p divides det(Cartan matrix): the simple-root pairings do not determine a
// toral element. Callers must reject such p.
struct degenerate_cartan_error : std::domain_error {
  explicit degenerate_cartan_error(const std::string& what) : std::domain_error(what) {}
};

// Element of g = t + sum F_p X_alpha (or of the Z-form when modulus == 0),
// in the basis {H_beta : beta simple} u {X_alpha : alpha in Phi}.
struct LieElement {
  long long modulus = 0;  // 0 = integers, otherwise a prime
  std::vector<long long> toral;      // length rank
  std::vector<long long> root_part;  // length |Phi|, canonical root order

  bool is_zero() const;
  void reduce();  // map coefficients to [0, modulus) when modulus > 0
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

// Chevalley basis over the root system: Cartan integers alpha(H_beta), signed
// structure constants N_{alpha,beta}, and the coroot expansions H_alpha.
//
// Sign convention: positive roots ordered by (height, lex); for each
// non-simple positive gamma the extraspecial pair (xi, eta), xi minimal with
// xi + eta = gamma, gets N_{xi,eta} = +(p_{xi,eta} + 1). Everything else
// follows from the Jacobi identity and antisymmetry.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int num_roots() const { return rs_.num_roots(); }
  int dim() const { return rs_.rank() + rs_.num_roots(); }

  // N_{alpha,beta} for root indices; requires alpha + beta in Phi.
  int structure_constant(int a, int b) const;
  // Index of root(a) + root(b), -1 if not a root, kSumZero if b = -a.
  int sum_index(int a, int b) const { return sum_idx_[a * num_roots() + b]; }
  static constexpr int kSumZero = -2;

  // alpha(H_{beta_i}) = <alpha, alpha_i^vee> for the i-th simple coroot.
  int cartan_integer(int root_index, int i) const { return rs_.simple_pairing(root_index, i); }

  // H_alpha as an integer combination of the simple coroots H_{beta}.
  const std::vector<int>& coroot_expansion(int root_index) const {
    return rs_.coroot_coords(root_index);
  }

  LieElement zero(long long modulus) const;
  LieElement basis_toral(int i, long long modulus) const;
  LieElement basis_root(int a, long long modulus) const;

  // Bilinear antisymmetric extension of the basis relations. Throws on
  // modulus or dimension mismatch.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // alpha(H) for toral-or-general H: the eigenvalue of ad H on X_alpha.
  long long root_value(int root_index, const LieElement& h) const;

  // Largest k with root(b) - k*root(a) in Phi; defined for b != +-a.
  int root_string_down(int a, int b) const;

  // CSV "alpha,beta,N" over all ordered root-index pairs with alpha+beta in Phi.
  std::string structure_constants_csv() const;

 private:
  RootSystem rs_;
  std::vector<int16_t> sum_idx_;
  std::vector<int8_t> n_table_;
};

ChevalleyBasis build_chevalley_basis(const RootSystem& rs);

// max |N_{alpha,beta}|, computed from root strings alone (independent of the
// signed construction).
int max_structure_constant(const RootSystem& rs);

// The toral element H with alpha_i(H) = lambda_i mod p for every simple root,
// hence alpha(H) = <alpha, lambda> mod p for all roots. Throws
// degenerate_cartan_error when p divides det(Cartan).
LieElement cochar_to_toral(const ChevalleyBasis& cb, const CocharVec& lambda, long long p);

}  // namespace chevcert
