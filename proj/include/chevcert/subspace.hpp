#pragma once

#include <cstdint>
#include <vector>

#include "chevcert/chevalley.hpp"

namespace chevcert {

// Flat coordinates of a LieElement: [toral | root_part] mod p.
std::vector<uint32_t> flatten(const ChevalleyBasis& cb, const LieElement& e);
LieElement unflatten(const ChevalleyBasis& cb, const std::vector<uint32_t>& v, long long p);

// Subspace of F_p^d kept in reduced row echelon form, so equal subspaces have
// identical basis matrices regardless of how they were assembled.
class Subspace {
 public:
  Subspace(long long p, int ambient_dim) : p_(p), dim_(ambient_dim) {}

  long long p() const { return p_; }
  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool full() const { return dim() == dim_; }
  const std::vector<std::vector<uint32_t>>& basis() const { return rows_; }

  // Inserts a vector, returns true if it enlarged the span.
  bool insert(std::vector<uint32_t> v);
  bool contains(const std::vector<uint32_t>& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  long long p_;
  int dim_;
  std::vector<std::vector<uint32_t>> rows_;  // RREF, sorted by pivot
  std::vector<int> pivots_;
};

Subspace span(const ChevalleyBasis& cb, const std::vector<LieElement>& vectors, long long p);
Subspace sum(const Subspace& v, const Subspace& w);
bool subspace_leq(const Subspace& v, const Subspace& w);  // v subset of w
bool contains(const ChevalleyBasis& cb, const Subspace& v, const LieElement& x);

// Span of all brackets [v_i, w_j] over basis vectors of V and W.
Subspace bracket_space(const ChevalleyBasis& cb, const Subspace& v, const Subspace& w);

}  // namespace chevcert
