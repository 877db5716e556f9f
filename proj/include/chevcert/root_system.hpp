#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevcert/cartan.hpp"

namespace chevcert {

// A root in simple-root coordinates: coeffs[j] is the coefficient of alpha_j.
struct Root {
  std::vector<int> coeffs;

  friend bool operator==(const Root&, const Root&) = default;
};

// A cocharacter given by its pairings against the simple roots:
// pairings[j] = <alpha_j, lambda>. The fundamental coweights are the unit vectors.
struct CocharVec {
  std::vector<long long> pairings;
};

// Enumerated reduced root system of a simple Cartan type, with the Cartan
// matrix, heights, the highest root and coroot data. Immutable once built.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // A[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Canonical order: positive roots sorted by (height, lex), then their
  // negatives in the same relative order.
  const std::vector<Root>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }

  bool is_positive(int index) const { return index < num_positive_; }
  // Index of -roots()[index].
  int negate(int index) const {
    return index < num_positive_ ? index + num_positive_ : index - num_positive_;
  }

  // Index of a root given its coefficient vector, or -1 if not a root.
  int index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }

  // Root index of the i-th simple root (0-based Bourbaki numbering). Note the
  // canonical (height, lex) order does not place alpha_{i+1} at index i.
  int simple_root_index(int i) const;

  int height(int index) const { return heights_[index]; }
  int height(const Root& r) const;

  int highest_root_index() const { return highest_; }
  const Root& highest_root() const { return roots_[highest_]; }
  // The c_i with highest root = sum c_i alpha_i.
  std::vector<int> highest_root_coeffs() const;

  // <root, alpha_i^vee> for the i-th simple coroot.
  int simple_pairing(int root_index, int i) const { return simple_pairings_[root_index][i]; }

  // Coordinates of root^vee in the simple-coroot basis.
  const std::vector<int>& coroot_coords(int root_index) const { return coroot_coords_[root_index]; }

  // Squared length of the root under the integral W-invariant form.
  int norm(int root_index) const { return norms_[root_index]; }

  // <alpha, lambda> = sum_j n_j * x_j. Throws on rank mismatch.
  long long pairing(const Root& r, const CocharVec& lambda) const;

  // <root, beta^vee> for an arbitrary root beta, via its coroot coordinates.
  int pairing_with_coroot(int root_index, int beta_index) const;

  // s_beta(alpha) = alpha - <alpha, beta^vee> beta; the result is again a root.
  int reflect(int root_index, int beta_index) const;

  // h = height(highest root) + 1.
  int coxeter_number() const { return heights_[highest_] + 1; }

  // Order of w_{alpha_1}...w_{alpha_r} as a permutation of the root list.
  long long coxeter_element_order() const;

  // {type, cartan_matrix, roots, highest_root} as a JSON document.
  std::string to_json() const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_norms_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  int highest_ = 0;
  std::vector<int> heights_;
  std::vector<int> norms_;
  std::vector<std::vector<int>> simple_pairings_;   // per root, length rank
  std::vector<std::vector<int>> coroot_coords_;     // per root, length rank
  std::vector<std::pair<std::vector<int>, int>> index_;  // sorted (coeffs, root index)
};

RootSystem build_root_system(const CartanType& t);

}  // namespace chevcert
