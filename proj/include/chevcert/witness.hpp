#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chevcert/chevalley.hpp"
#include "chevcert/filtration.hpp"
#include "chevcert/irregular.hpp"
#include "chevcert/root_system.hpp"

namespace chevcert {

// N_0 = 1, N_{k+1} = sum_i c_i (N_k* + 2i) with c the highest-root
// coefficients; N* rounds up to odd.
struct NSequence {
  CartanType type;
  std::vector<long long> values;   // N_0..N_upto
  std::vector<long long> starred;  // N_k*
};

NSequence n_sequence(const RootSystem& rs, int upto);

struct ConditionResult {
  int id = 0;
  bool passed = false;
  std::string note;  // offending root / residue / verdict when failed
};

// Verdicts for the five lifting-theorem conditions on (p, lambda).
struct CheckReport {
  std::array<ConditionResult, 5> conditions;
  bool vandiver_assumed = true;

  bool overall() const {
    for (const auto& c : conditions)
      if (!c.passed) return false;
    return true;
  }
  const ConditionResult* first_failure() const {
    for (const auto& c : conditions)
      if (!c.passed) return &c;
    return nullptr;
  }
};

CheckReport check_theorem_conditions(const RootSystem& rs, long long p, const CocharVec& lambda,
                                     const IrregularData& irr);

// The proof's candidate cocharacters: base i gives x_j = N_i* + 2j.
CocharVec candidate_cocharacter(const NSequence& ns, int base_index);

struct SelectionResult {
  bool found = false;
  CocharVec lambda;
  int base_index = -1;
  std::vector<CheckReport> candidate_reports;  // one per candidate tried
};

// Tries bases 0..e in order, returns the first candidate passing all five
// conditions. Guaranteed to succeed when p > max(n_max, 1 + 2 N_{e+1}) and
// e_p <= e; a failure there is a build-breaking defect surfaced by callers.
SelectionResult select_cocharacter(const RootSystem& rs, long long p, long long e,
                                   const IrregularData& irr);

struct Rejection {
  std::string code;     // machine-readable
  std::string message;  // human-readable
};

struct Certificate {
  CartanType type;
  long long p = 0;
  long long e = 0;
  CocharVec lambda;
  int base_index = -1;
  std::vector<long long> pairings_positive;  // S over positive roots, canonical order
  NSequence nseq;                            // N_0..N_{e+1}
  IrregularData irr;
  CheckReport report;
  RootHeightReport root_height;

  std::string to_json() const;
};

// Checks the one-prime hypotheses, selects the cocharacter, runs the
// root-height lemma with H = cochar_to_toral(lambda), assembles the
// certificate. Theorem-contradicting outcomes throw internal_defect_error.
std::variant<Certificate, Rejection> certify_one_prime(const RootSystem& rs, long long p,
                                                       long long e,
                                                       const IrregularData* cached_irr = nullptr);

// Re-runs the full pipeline from the certificate's (type, p, e) and compares
// the regenerated document byte-for-byte.
bool validate_certificate(const std::string& certificate_json);

struct FactorBound {
  CartanType type;
  long long coxeter_number = 0;
  long long two_h_minus_2 = 0;
  long long h_tilde_adjoint = 0;
  long long h_tilde_sc_bound = 0;
  bool sc_exact = false;  // false = "sc order undetermined", bound only
  long long least_prime_1_mod_h_tilde = 0;
  long long analytic_bound = 0;  // 2^{phi(h_tilde_sc_bound)+1} - 1
};

struct EffectiveBoundReport {
  std::vector<FactorBound> factors;
  long long c_exact = 0;                  // min-max distinct primes p_i = 1 mod h_tilde_i
  std::vector<long long> c_assignment;    // chosen primes, one per factor
  long long overall_excluding_cg = 0;     // max of 2h-2, h_tilde, c
  std::string cg_note;

  std::string to_json() const;
};

EffectiveBoundReport effective_bound(const std::vector<CartanType>& types,
                                     long long prime_ceiling = 1000000);

}  // namespace chevcert
