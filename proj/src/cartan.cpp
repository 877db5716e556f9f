#include "chevcert/cartan.hpp"

#include <cctype>
#include <stdexcept>

namespace chevcert {

bool CartanType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank == 6 || rank == 7 || rank == 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("Cartan type too short: '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown Cartan family in '" + s + "'");
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed Cartan rank in '" + s + "'");
  int rank = std::stoi(s.substr(1));
  CartanType t{static_cast<Family>(f), rank};
  if (!t.valid())
    throw std::invalid_argument("invalid family/rank combination '" + s + "'");
  return t;
}

namespace {

// Fills the off-diagonal entries for one Dynkin edge. `from` is the node whose
// coroot pairs to -weight against the other simple root:
//   A[i][j] = <alpha_j, alpha_i^vee>.
void edge(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  if (!t.valid()) throw std::invalid_argument("invalid Cartan type " + t.to_string());
  const int r = t.rank;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edge(a, i, i + 1, -1, -1);
  };
  switch (t.family) {
    case Family::A:
      chain(r);
      break;
    case Family::B:
      // alpha_r short: <alpha_r, alpha_{r-1}^vee> = -1, <alpha_{r-1}, alpha_r^vee> = -2.
      chain(r - 1);
      edge(a, r - 2, r - 1, -1, -2);
      break;
    case Family::C:
      // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2, <alpha_{r-1}, alpha_r^vee> = -1.
      chain(r - 1);
      edge(a, r - 2, r - 1, -2, -1);
      break;
    case Family::D:
      chain(r - 1);
      edge(a, r - 3, r - 1, -1, -1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-r, node 2 attached to node 4.
      edge(a, 0, 2, -1, -1);
      edge(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < r; ++i) edge(a, i, i + 1, -1, -1);
      break;
    case Family::F:
      // 1-2=>3-4 with alpha_1, alpha_2 long.
      edge(a, 0, 1, -1, -1);
      edge(a, 1, 2, -1, -2);
      edge(a, 2, 3, -1, -1);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
      edge(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

std::vector<int> simple_root_norms(const CartanType& t) {
  const int r = t.rank;
  std::vector<int> n(r, 2);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i < r - 1; ++i) n[i] = 4;
      n[r - 1] = 2;
      break;
    case Family::C:
      for (int i = 0; i < r - 1; ++i) n[i] = 2;
      n[r - 1] = 4;
      break;
    case Family::F:
      n[0] = n[1] = 4;
      n[2] = n[3] = 2;
      break;
    case Family::G:
      n[0] = 2;
      n[1] = 6;
      break;
    default:
      break;  // simply laced
  }
  return n;
}

long long cartan_determinant(const CartanType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank;  // E6:3, E7:2, E8:1
    case Family::F:
    case Family::G: return 1;
  }
  return 0;
}

int center_exponent(const CartanType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return t.rank % 2 == 0 ? 2 : 4;
    case Family::E: return 9 - t.rank;
    case Family::F:
    case Family::G: return 1;
  }
  return 1;
}

int classical_root_count(const CartanType& t) {
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return r == 6 ? 72 : (r == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace chevcert
