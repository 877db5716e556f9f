#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chevcert/subspace.hpp"

namespace chevcert {

// One bracket that enlarged a filtration level: basis vector i of W_l against
// basis vector j of W_m landed a new direction in W_{l+m}.
struct BracketWitness {
  int l = 0;
  int m = 0;
  int i = 0;
  int j = 0;
};

// Levels W_1..W_depth of the minimal bracket filtration generated by the
// seeds: W_1 = span(seeds), W_k = sum over l+m=k of [W_l, W_m].
struct FiltrationTrace {
  long long p = 0;
  int depth = 0;
  std::vector<Subspace> levels;                      // levels[k-1] = W_k
  std::vector<std::vector<BracketWitness>> witnesses;  // per level k >= 2

  const Subspace& level(int k) const { return levels[static_cast<size_t>(k) - 1]; }
  std::string to_json() const;
};

// Requires p > max_structure_constant(rs) unless allow_small_p is set (the
// constants would vanish mod p and the filtration lose its meaning).
FiltrationTrace closure_filtration(const ChevalleyBasis& cb, const std::vector<LieElement>& seeds,
                                   long long p, int depth, bool allow_small_p = false);

// Outcome of checking the bracket-generation lemma for one (type, p, H).
struct RootHeightReport {
  bool hypothesis_ok = false;
  std::vector<int> zero_value_roots;  // roots with alpha(H) = 0 mod p

  bool even_height_in_w2 = false;  // (a)
  bool all_roots_in_w3_w4 = false;  // (b)
  bool coroots_in_w4 = false;       // (c)
  bool derived_algebra_in_w4 = false;  // (d): W_4 = t + sum F_p X_alpha

  std::vector<int> failing_roots_a, failing_roots_b, failing_roots_c;
  FiltrationTrace trace;

  bool all_passed() const {
    return hypothesis_ok && even_height_in_w2 && all_roots_in_w3_w4 && coroots_in_w4 &&
           derived_algebra_in_w4;
  }
  std::string to_json() const;
};

// Validates alpha(H) != 0 for all roots, then seeds {H} u {X_alpha : ht odd}
// and closes brackets, asserting where each generator must appear. The
// assertions live at levels 2..4; depth >= 4 extends the recorded trace only.
// On a hypothesis violation the closure is not run.
RootHeightReport check_root_height_lemma(const ChevalleyBasis& cb, long long p,
                                         const LieElement& h, bool allow_small_p = false,
                                         int depth = 4);

// Whether some pairing vector in [1, p-1]^rank avoids every root hyperplane
// mod p. Decided exhaustively when the search space is small enough,
// std::nullopt otherwise. For small p the set can be genuinely empty (e.g.
// G2, B3, C3, D4 at p = 5) and the lemma has no valid instances.
std::optional<bool> hypothesis_satisfiable(const RootSystem& rs, long long p);

// Draws pairing vectors uniformly from [1, p-1]^rank and rejects until every
// root pairs to a nonzero value mod p, then solves for the toral element.
// Requires p not dividing det(Cartan). Raw engine draws with modulo keep the
// stream portable across standard libraries. Throws std::domain_error when no
// valid vector exists at all.
LieElement sample_valid_toral(const ChevalleyBasis& cb, long long p, std::mt19937_64& rng);

}  // namespace chevcert
