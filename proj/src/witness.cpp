#include "chevcert/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "chevcert/bernoulli.hpp"
#include "chevcert/chevgroup.hpp"
#include "chevcert/errors.hpp"
#include "chevcert/version.hpp"

namespace chevcert {

NSequence n_sequence(const RootSystem& rs, int upto) {
  if (upto < 1) throw std::invalid_argument("n_sequence needs upto >= 1");
  const auto c = rs.highest_root_coeffs();
  NSequence ns;
  ns.type = rs.type();
  ns.values.push_back(1);
  auto star = [](long long n) { return n % 2 != 0 ? n : n + 1; };
  for (int k = 0; k < upto; ++k) {
    const long long s = star(ns.values.back());
    long long next = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      long long term;
      if (__builtin_mul_overflow(static_cast<long long>(c[i]), s + 2 * static_cast<long long>(i + 1), &term) ||
          __builtin_add_overflow(next, term, &next))
        throw std::overflow_error("N-sequence overflow");
    }
    if (next <= ns.values.back()) throw internal_defect_error("N-sequence not increasing");
    ns.values.push_back(next);
  }
  for (auto v : ns.values) ns.starred.push_back(star(v));
  return ns;
}

CocharVec candidate_cocharacter(const NSequence& ns, int base_index) {
  const long long s = ns.starred.at(static_cast<size_t>(base_index));
  CocharVec l;
  for (int j = 1; j <= ns.type.rank; ++j) l.pairings.push_back(s + 2 * j);
  return l;
}

CheckReport check_theorem_conditions(const RootSystem& rs, long long p, const CocharVec& lambda,
                                     const IrregularData& irr) {
  if (p < 5) throw std::invalid_argument("conditions require p >= 5");
  if (irr.p != p) throw std::invalid_argument("irregular data is for a different prime");
  CheckReport rep;
  rep.vandiver_assumed = irr.vandiver_assumed;
  for (int i = 0; i < 5; ++i) {
    rep.conditions[static_cast<size_t>(i)].id = i + 1;
    rep.conditions[static_cast<size_t>(i)].passed = true;
  }
  auto fail = [&](int id, const std::string& note) {
    auto& c = rep.conditions[static_cast<size_t>(id - 1)];
    if (c.passed) {
      c.passed = false;
      c.note = note;
    }
  };

  const int n_max = max_structure_constant(rs);
  if (!(p > n_max)) {
    std::ostringstream os;
    os << "p=" << p << " <= n_max=" << n_max;
    fail(1, os.str());
  }

  for (int a = 0; a < rs.num_roots(); ++a) {
    const long long s = rs.pairing(rs.roots()[a], lambda);
    if (!(0 < std::llabs(s) && std::llabs(s) < p - 1)) {
      std::ostringstream os;
      os << "root " << a << " has pairing " << s << " outside (0, p-1)";
      fail(2, os.str());
      break;
    }
  }

  for (int i = 0; i < rs.rank(); ++i) {
    const long long x = lambda.pairings[static_cast<size_t>(i)];
    if (x % 2 == 0) {
      std::ostringstream os;
      os << "simple root alpha_" << (i + 1) << " has even pairing " << x;
      fail(3, os.str());
      break;
    }
  }

  {
    std::map<long long, int> seen;
    for (int a = 0; a < rs.num_roots(); ++a) {
      const long long s = rs.pairing(rs.roots()[a], lambda);
      const long long res = ((s % (p - 1)) + (p - 1)) % (p - 1);
      if (res == 1) {
        std::ostringstream os;
        os << "root " << a << " has residue 1 (the cyclotomic character)";
        fail(4, os.str());
        break;
      }
      auto [it, fresh] = seen.emplace(res, a);
      if (!fresh) {
        std::ostringstream os;
        os << "roots " << it->second << " and " << a << " share residue " << res;
        fail(4, os.str());
        break;
      }
    }
  }

  for (int a = 0; a < rs.num_roots(); ++a) {
    const long long s = rs.pairing(rs.roots()[a], lambda);
    const long long j = (((p - s) % (p - 1)) + (p - 1)) % (p - 1);
    const auto v = eigenspace_is_zero(irr, j);
    if (!is_zero_verdict(v)) {
      std::ostringstream os;
      os << "root " << a << " (pairing " << s << ") hits eigenspace exponent " << j << ": "
         << verdict_name(v);
      fail(5, os.str());
      break;
    }
  }
  return rep;
}

SelectionResult select_cocharacter(const RootSystem& rs, long long p, long long e,
                                   const IrregularData& irr) {
  if (e < 0) throw std::invalid_argument("e must be >= 0");
  const NSequence ns = n_sequence(rs, static_cast<int>(e) + 1);
  SelectionResult out;
  for (int i = 0; i <= e; ++i) {
    CocharVec lambda = candidate_cocharacter(ns, i);
    CheckReport rep = check_theorem_conditions(rs, p, lambda, irr);
    out.candidate_reports.push_back(rep);
    if (rep.overall()) {
      out.found = true;
      out.lambda = std::move(lambda);
      out.base_index = i;
      return out;
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json report_json(const CheckReport& rep) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : rep.conditions)
    arr.push_back({{"id", c.id}, {"passed", c.passed}, {"note", c.note}});
  return arr;
}

nlohmann::ordered_json irr_json(const IrregularData& irr) {
  return {{"p", irr.p},
          {"e_p", irr.e_p},
          {"indices", irr.irregular_indices},
          {"vandiver_assumed", irr.vandiver_assumed}};
}

}  // namespace

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["kind"] = "witness-certificate";
  j["type"] = type.to_string();
  j["p"] = p;
  j["e"] = e;
  j["vandiver_assumed"] = irr.vandiver_assumed;
  j["sign_convention"] = "extraspecial-height-lex";
  j["root_numbering"] = "bourbaki";
  j["lambda"] = lambda.pairings;
  j["base_index"] = base_index;
  j["pairings_positive_roots"] = pairings_positive;
  j["n_sequence"] = nseq.values;
  j["n_sequence_starred"] = nseq.starred;
  j["irregular"] = irr_json(irr);
  j["conditions"] = report_json(report);
  j["root_height"] = nlohmann::ordered_json::parse(root_height.to_json());
  return j.dump(2);
}

std::variant<Certificate, Rejection> certify_one_prime(const RootSystem& rs, long long p,
                                                       long long e,
                                                       const IrregularData* cached_irr) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 0) throw std::invalid_argument("e must be >= 0");

  const int n_max = max_structure_constant(rs);
  if (!(p > n_max)) {
    std::ostringstream os;
    os << "p=" << p << " <= n_max=" << n_max;
    return Rejection{"P_LEQ_NMAX", os.str()};
  }
  const NSequence ns = n_sequence(rs, static_cast<int>(e) + 1);
  const long long bound = 1 + 2 * ns.values.back();
  if (!(p > bound)) {
    std::ostringstream os;
    os << "p=" << p << " <= 1+2N_" << (e + 1) << " = " << bound;
    return Rejection{"P_LEQ_PRIME_BOUND", os.str()};
  }
  IrregularData irr;
  if (cached_irr && cached_irr->p == p)
    irr = *cached_irr;
  else
    irr = index_of_irregularity(p);
  if (irr.e_p > e) {
    std::ostringstream os;
    os << "e_p=" << irr.e_p << " > e=" << e;
    return Rejection{"IRREGULARITY_INDEX_EXCEEDS_E", os.str()};
  }

  SelectionResult sel = select_cocharacter(rs, p, e, irr);
  if (!sel.found)
    throw internal_defect_error("cocharacter selection failed under valid hypotheses for " +
                                rs.type().to_string() + " p=" + std::to_string(p));

  const ChevalleyBasis cb(rs);
  LieElement h;
  try {
    h = cochar_to_toral(cb, sel.lambda, p);
  } catch (const degenerate_cartan_error& ex) {
    return Rejection{"DEGENERATE_CARTAN_PAIRING", ex.what()};
  }
  RootHeightReport rh = check_root_height_lemma(cb, p, h);
  if (!rh.hypothesis_ok)
    throw internal_defect_error("selected cocharacter violates the nonvanishing hypothesis");
  if (!rh.all_passed())
    throw internal_defect_error("root-height lemma conclusion failed on valid hypotheses for " +
                                rs.type().to_string() + " p=" + std::to_string(p));

  Certificate cert;
  cert.type = rs.type();
  cert.p = p;
  cert.e = e;
  cert.lambda = sel.lambda;
  cert.base_index = sel.base_index;
  for (int a = 0; a < rs.num_positive(); ++a)
    cert.pairings_positive.push_back(rs.pairing(rs.roots()[a], sel.lambda));
  cert.nseq = ns;
  cert.irr = irr;
  cert.report = sel.candidate_reports.back();
  cert.root_height = std::move(rh);
  return cert;
}

bool validate_certificate(const std::string& certificate_json) {
  const auto j = nlohmann::json::parse(certificate_json);
  const CartanType t = parse_cartan_type(j.at("type").get<std::string>());
  const RootSystem rs(t);
  auto res = certify_one_prime(rs, j.at("p").get<long long>(), j.at("e").get<long long>());
  if (std::holds_alternative<Rejection>(res)) return false;
  return std::get<Certificate>(res).to_json() == certificate_json;
}

namespace {

long long euler_phi(long long n) {
  long long res = n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res -= res / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) res -= res / n;
  return res;
}

// Minimal B such that distinct primes p_i = 1 mod m_i, p_i <= B exist; fills
// the assignment. Kuhn matching over candidate primes <= B.
bool feasible(const std::vector<std::vector<long long>>& candidates, long long b,
              std::vector<long long>* assignment) {
  const size_t n = candidates.size();
  std::vector<std::vector<long long>> avail(n);
  for (size_t i = 0; i < n; ++i) {
    for (auto p : candidates[i])
      if (p <= b) avail[i].push_back(p);
    if (avail[i].empty()) return false;
  }
  std::map<long long, int> owner;  // prime -> factor
  std::function<bool(size_t, std::map<long long, bool>&)> try_assign =
      [&](size_t i, std::map<long long, bool>& visited) -> bool {
    for (auto p : avail[i]) {
      if (visited[p]) continue;
      visited[p] = true;
      auto it = owner.find(p);
      if (it == owner.end() || try_assign(static_cast<size_t>(it->second), visited)) {
        owner[p] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < n; ++i) {
    std::map<long long, bool> visited;
    if (!try_assign(i, visited)) return false;
  }
  if (assignment) {
    assignment->assign(n, 0);
    for (const auto& [p, i] : owner) (*assignment)[static_cast<size_t>(i)] = p;
  }
  return true;
}

}  // namespace

EffectiveBoundReport effective_bound(const std::vector<CartanType>& types, long long prime_ceiling) {
  if (types.empty()) throw std::invalid_argument("effective_bound needs at least one type");
  EffectiveBoundReport rep;
  for (const auto& t : types) {
    const RootSystem rs(t);
    const ChevalleyBasis cb(rs);
    FactorBound f;
    f.type = t;
    f.coxeter_number = rs.coxeter_number();
    f.two_h_minus_2 = 2 * f.coxeter_number - 2;
    const TitsLiftOrder lift = tits_lift_order(cb);
    f.h_tilde_adjoint = lift.order_adjoint;
    f.h_tilde_sc_bound = lift.sc_order_bound;
    f.sc_exact = lift.sc_exact;
    const long long phi = euler_phi(f.h_tilde_sc_bound);
    if (phi + 1 > 62) throw std::overflow_error("analytic bound overflow");
    f.analytic_bound = (1LL << (phi + 1)) - 1;
    f.least_prime_1_mod_h_tilde = 0;
    for (long long q = f.h_tilde_sc_bound + 1; q <= prime_ceiling; q += f.h_tilde_sc_bound) {
      if (q % 2 != 0 && is_prime(q)) {
        f.least_prime_1_mod_h_tilde = q;
        break;
      }
    }
    if (f.least_prime_1_mod_h_tilde == 0)
      throw std::runtime_error("prime search exceeded the configured ceiling");
    rep.factors.push_back(std::move(f));
  }

  // Exact c: minimize max over assignments of distinct odd primes = 1 mod
  // h_tilde_i. Scan candidate bounds over the union of candidate primes.
  std::vector<std::vector<long long>> candidates;
  std::vector<long long> all;
  for (const auto& f : rep.factors) {
    std::vector<long long> c;
    const long long m = f.h_tilde_sc_bound;
    for (long long q = m + 1; q <= prime_ceiling && c.size() < 64; q += m)
      if (q % 2 != 0 && is_prime(q)) {
        c.push_back(q);
        all.push_back(q);
      }
    candidates.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  bool found = false;
  for (long long b : all) {
    std::vector<long long> assignment;
    if (feasible(candidates, b, &assignment)) {
      rep.c_exact = b;
      rep.c_assignment = std::move(assignment);
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("prime search exceeded the configured ceiling");

  rep.overall_excluding_cg = rep.c_exact;
  for (const auto& f : rep.factors) {
    rep.overall_excluding_cg = std::max(rep.overall_excluding_cg, f.two_h_minus_2);
    rep.overall_excluding_cg = std::max(rep.overall_excluding_cg, f.h_tilde_sc_bound);
  }
  rep.cg_note = "c_G from external reference, not computable here";
  return rep;
}

std::string EffectiveBoundReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : factors) {
    fs.push_back({{"type", f.type.to_string()},
                  {"coxeter_number", f.coxeter_number},
                  {"two_h_minus_2", f.two_h_minus_2},
                  {"h_tilde_adjoint", f.h_tilde_adjoint},
                  {"h_tilde_sc_bound", f.h_tilde_sc_bound},
                  {"sc_exact", f.sc_exact},
                  {"least_prime_1_mod_h_tilde", f.least_prime_1_mod_h_tilde},
                  {"analytic_bound", f.analytic_bound}});
  }
  j["factors"] = std::move(fs);
  j["c_exact"] = c_exact;
  j["c_assignment"] = c_assignment;
  j["overall_excluding_cg"] = overall_excluding_cg;
  j["c_G"] = cg_note;
  return j.dump(2);
}

}  // namespace chevcert
