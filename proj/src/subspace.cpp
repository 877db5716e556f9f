#include "chevcert/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevcert {

std::vector<uint32_t> flatten(const ChevalleyBasis& cb, const LieElement& e) {
  if (e.modulus <= 0) throw std::invalid_argument("flatten requires a mod-p element");
  std::vector<uint32_t> v;
  v.reserve(cb.dim());
  for (auto c : e.toral) v.push_back(static_cast<uint32_t>(((c % e.modulus) + e.modulus) % e.modulus));
  for (auto c : e.root_part)
    v.push_back(static_cast<uint32_t>(((c % e.modulus) + e.modulus) % e.modulus));
  return v;
}

LieElement unflatten(const ChevalleyBasis& cb, const std::vector<uint32_t>& v, long long p) {
  LieElement e = cb.zero(p);
  for (int i = 0; i < cb.rank(); ++i) e.toral[i] = v[i];
  for (int a = 0; a < cb.num_roots(); ++a) e.root_part[a] = v[cb.rank() + a];
  return e;
}

namespace {

uint32_t inv_mod(uint32_t a, long long p) {
  long long res = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) res = res * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(res);
}

}  // namespace

bool Subspace::insert(std::vector<uint32_t> v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("subspace dimension mismatch");
  const long long p = p_;
  // reduce against existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    const uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    for (int j = pivots_[r]; j < dim_; ++j)
      v[j] = static_cast<uint32_t>((v[j] + static_cast<long long>(p - c) * row[j]) % p);
  }
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const uint32_t inv = inv_mod(v[piv], p);
  for (int j = piv; j < dim_; ++j) v[j] = static_cast<uint32_t>(static_cast<long long>(v[j]) * inv % p);
  // back-substitute into existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    const uint32_t c = rows_[r][piv];
    if (c == 0) continue;
    auto& row = rows_[r];
    for (int j = piv; j < dim_; ++j)
      row[j] = static_cast<uint32_t>((row[j] + static_cast<long long>(p - c) * v[j]) % p);
  }
  // keep rows sorted by pivot
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
  return true;
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("subspace dimension mismatch");
  std::vector<uint32_t> w = v;
  const long long p = p_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const uint32_t c = w[pivots_[r]];
    if (c == 0) continue;
    const auto& row = rows_[r];
    for (int j = pivots_[r]; j < dim_; ++j)
      w[j] = static_cast<uint32_t>((w[j] + static_cast<long long>(p - c) * row[j]) % p);
  }
  return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

Subspace span(const ChevalleyBasis& cb, const std::vector<LieElement>& vectors, long long p) {
  Subspace s(p, cb.dim());
  for (const auto& e : vectors) {
    if (e.modulus != p) throw std::invalid_argument("span: modulus mismatch");
    s.insert(flatten(cb, e));
  }
  return s;
}

Subspace sum(const Subspace& v, const Subspace& w) {
  if (v.p() != w.p() || v.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("sum: incompatible subspaces");
  Subspace s = v;
  for (const auto& row : w.basis()) s.insert(row);
  return s;
}

bool subspace_leq(const Subspace& v, const Subspace& w) {
  for (const auto& row : v.basis())
    if (!w.contains(row)) return false;
  return true;
}

bool contains(const ChevalleyBasis& cb, const Subspace& v, const LieElement& x) {
  return v.contains(flatten(cb, x));
}

Subspace bracket_space(const ChevalleyBasis& cb, const Subspace& v, const Subspace& w) {
  if (v.p() != w.p()) throw std::invalid_argument("bracket_space: prime mismatch");
  const long long p = v.p();
  Subspace out(p, cb.dim());
  for (const auto& a : v.basis()) {
    LieElement ea = unflatten(cb, a, p);
    for (const auto& b : w.basis()) {
      if (out.full()) return out;  // span cannot grow further
      out.insert(flatten(cb, cb.bracket(ea, unflatten(cb, b, p))));
    }
  }
  return out;
}

}  // namespace chevcert
