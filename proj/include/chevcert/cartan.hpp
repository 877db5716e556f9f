#pragma once

#include <string>
#include <vector>

namespace chevcert {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Rank constraints: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
  bool valid() const;
  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Parses "A1", "g2", "D4" (case-insensitive). Throws std::invalid_argument on
// malformed strings or rank constraint violations.
CartanType parse_cartan_type(const std::string& s);

// Cartan matrix in Bourbaki numbering, entries A[i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);

// Squared lengths of the simple roots under a W-invariant form, scaled so all
// pairwise products (alpha_i, alpha_j) are integers. Only ratios matter.
std::vector<int> simple_root_norms(const CartanType& t);

// Determinant of the Cartan matrix (index of the root lattice in the weight lattice).
long long cartan_determinant(const CartanType& t);

// Exponent of the center of the simply-connected form.
int center_exponent(const CartanType& t);

// Number of roots by the classical count (A: r(r+1); B,C: 2r^2; D: 2r(r-1); ...).
int classical_root_count(const CartanType& t);

}  // namespace chevcert
