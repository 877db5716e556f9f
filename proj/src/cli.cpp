#include "chevcert/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevcert/bernoulli.hpp"
#include "chevcert/cache.hpp"
#include "chevcert/chevalley.hpp"
#include "chevcert/chevgroup.hpp"
#include "chevcert/errors.hpp"
#include "chevcert/filtration.hpp"
#include "chevcert/irregular.hpp"
#include "chevcert/version.hpp"
#include "chevcert/witness.hpp"

namespace chevcert::cli {

namespace {

constexpr unsigned long long kDefaultSeed = 0x9e3779b97f4a7c15ULL;

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    std::ofstream f(output_path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + output_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

std::optional<IrregularCache> open_cache(const std::string& flag_dir) {
  std::string dir = flag_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnvVar)) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return IrregularCache(dir);
}

long long require_prime(long long p) {
  if (!is_prime(p)) throw CLI::ValidationError("P", std::to_string(p) + " is not prime");
  return p;
}

int cmd_root_data(const std::string& type, const std::string& output, std::ostream& out) {
  RootSystem rs(parse_cartan_type(type));
  emit(rs.to_json(), output, out);
  return 0;
}

int cmd_struct_consts(const std::string& type, const std::string& output, std::ostream& out) {
  ChevalleyBasis cb{RootSystem(parse_cartan_type(type))};
  emit(cb.structure_constants_csv(), output, out);
  return 0;
}

int cmd_check_lemma(const std::string& type, long long p, int trials, int depth,
                    unsigned long long seed, bool allow_small_p, bool emit_trace,
                    const std::string& output, std::ostream& out) {
  require_prime(p);
  RootSystem rs(parse_cartan_type(type));
  ChevalleyBasis cb(rs);
  if (p <= max_structure_constant(rs) && !allow_small_p)
    throw std::invalid_argument("structure constants vanish mod p (p <= n_max); "
                                "pass --allow-small-p for an exploratory run");
  std::mt19937_64 rng(seed);
  nlohmann::ordered_json doc;
  doc["type"] = rs.type().to_string();
  doc["p"] = p;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["exploratory_below_n_max"] = p <= max_structure_constant(rs);
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  bool all_passed = true;
  for (int t = 0; t < trials; ++t) {
    LieElement h = sample_valid_toral(cb, p, rng);
    RootHeightReport rep = check_root_height_lemma(cb, p, h, allow_small_p, depth);
    all_passed = all_passed && rep.all_passed();
    nlohmann::ordered_json rj;
    rj["trial"] = t;
    rj["toral"] = h.toral;
    rj["passed"] = rep.all_passed();
    if (emit_trace) rj["report"] = nlohmann::ordered_json::parse(rep.to_json());
    runs.push_back(std::move(rj));
  }
  doc["runs"] = std::move(runs);
  doc["all_passed"] = all_passed;
  emit(doc.dump(2), output, out);
  if (all_passed) return 0;
  // Below the bound the lemma carries no claim; above it a failure is a defect.
  if (doc["exploratory_below_n_max"].get<bool>()) return 0;
  throw internal_defect_error("root-height lemma failed on valid hypotheses");
}

int cmd_scan_irregular(long long pmin, long long pmax, int jobs, const std::string& cache_dir,
                       std::ostream& out, std::ostream& err) {
  auto cache = open_cache(cache_dir);
  size_t computed = 0;
  std::vector<std::string> warnings;
  auto table = scan_irregular(cache ? &*cache : nullptr, pmin, pmax, jobs, &computed, &warnings);
  for (const auto& w : warnings) err << w << '\n';
  for (const auto& [p, d] : table) {
    out << p << ' ' << d.e_p;
    for (auto k : d.irregular_indices) out << ' ' << k;
    out << '\n';
  }
  err << "scanned " << table.size() << " primes, computed " << computed << " fresh\n";
  return 0;
}

int cmd_select_cochar(const std::string& type, long long p, long long e,
                      const std::string& cache_dir, const std::string& output,
                      std::ostream& out) {
  require_prime(p);
  if (p < 5) throw std::invalid_argument("p must be at least 5");
  RootSystem rs(parse_cartan_type(type));
  auto cache = open_cache(cache_dir);
  IrregularData irr;
  if (cache) {
    auto table = cache->load();
    auto it = table.find(p);
    irr = it != table.end() ? it->second : index_of_irregularity(p);
  } else {
    irr = index_of_irregularity(p);
  }
  SelectionResult sel = select_cocharacter(rs, p, e, irr);
  nlohmann::ordered_json doc;
  doc["type"] = rs.type().to_string();
  doc["p"] = p;
  doc["e"] = e;
  doc["found"] = sel.found;
  if (sel.found) {
    doc["lambda"] = sel.lambda.pairings;
    doc["base_index"] = sel.base_index;
  }
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (size_t i = 0; i < sel.candidate_reports.size(); ++i) {
    const auto* f = sel.candidate_reports[i].first_failure();
    cands.push_back({{"base_index", i},
                     {"passed", f == nullptr},
                     {"first_failing_condition", f ? f->id : 0},
                     {"note", f ? f->note : ""}});
  }
  doc["candidates"] = std::move(cands);
  emit(doc.dump(2), output, out);
  return sel.found ? 0 : 1;
}

int cmd_certify(const std::string& type, long long p, long long e, const std::string& cache_dir,
                const std::string& output, std::ostream& out) {
  require_prime(p);
  RootSystem rs(parse_cartan_type(type));
  auto cache = open_cache(cache_dir);
  std::optional<IrregularData> cached;
  if (cache) {
    auto table = cache->load();
    auto it = table.find(p);
    if (it != table.end()) cached = it->second;
  }
  auto res = certify_one_prime(rs, p, e, cached ? &*cached : nullptr);
  if (std::holds_alternative<Rejection>(res)) {
    const auto& rej = std::get<Rejection>(res);
    nlohmann::ordered_json doc;
    doc["kind"] = "rejection";
    doc["type"] = rs.type().to_string();
    doc["p"] = p;
    doc["e"] = e;
    doc["reason_code"] = rej.code;
    doc["reason"] = rej.message;
    emit(doc.dump(2), output, out);
    return 1;
  }
  emit(std::get<Certificate>(res).to_json(), output, out);
  return 0;
}

int cmd_simulate_filtration(const std::string& type, long long p, int k, size_t cap,
                            const std::string& output, std::ostream& out) {
  require_prime(p);
  if (k < 2) throw std::invalid_argument("K must be at least 2 to expose a congruence layer");
  RootSystem rs(parse_cartan_type(type));
  ChevalleyBasis cb(rs);
  auto gens = chevalley_generators(cb, p, k);
  auto group = enumerate_subgroup(gens, cap);
  nlohmann::ordered_json doc;
  doc["type"] = rs.type().to_string();
  doc["p"] = p;
  doc["k"] = k;
  doc["order"] = group.size();
  bool defect = false;
  nlohmann::ordered_json layers = nlohmann::ordered_json::array();
  for (int m = 1; m < k; ++m) {
    PhiLayer layer = phi_m(cb, group, m);
    long long expected = 1;
    for (int i = 0; i < layer.space.dim(); ++i) expected *= p;
    const bool size_ok = layer.element_count == static_cast<size_t>(expected);
    defect = defect || !size_ok;
    layers.push_back({{"m", m},
                      {"dim", layer.space.dim()},
                      {"elements", layer.element_count},
                      {"is_subspace_sized", size_ok}});
  }
  doc["layers"] = std::move(layers);
  nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
  for (int l = 1; l < k; ++l)
    for (int m = l; l + m + 1 <= k; ++m) {
      const bool ok = verify_bracket_containment(cb, group, l, m);
      defect = defect || !ok;
      brackets.push_back({{"l", l}, {"m", m}, {"contained", ok}});
    }
  doc["bracket_containments"] = std::move(brackets);
  emit(doc.dump(2), output, out);
  if (defect) throw internal_defect_error("congruence-layer bracket containment failed");
  return 0;
}

int cmd_effective_bound(const std::string& types_csv, long long ceiling,
                        const std::string& output, std::ostream& out) {
  std::vector<CartanType> types;
  std::stringstream ss(types_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) types.push_back(parse_cartan_type(tok));
  }
  if (types.empty()) throw std::invalid_argument("no Cartan types given");
  emit(effective_bound(types, ceiling).to_json(), output, out);
  return 0;
}

int cmd_density(int r, std::ostream& out) {
  DensityEstimate d = irregularity_density_estimate(r);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "point %.4f\n", d.point);
  out << buf;
  std::snprintf(buf, sizeof(buf), "cumulative_lower %.4f\n", d.cumulative_lower);
  out << buf;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chevcert: root-system and irregular-prime witness certificates"};
  app.require_subcommand(1);

  std::string type, types_csv, cache_dir, output;
  long long p = 0, pmin = 0, pmax = 0, e = 0, ceiling = 1000000;
  int trials = 20, jobs = 1, k = 2, r = 0, depth = 4;
  size_t cap = 1000000;
  unsigned long long seed = kDefaultSeed;
  bool allow_small_p = false, emit_trace = false;

  auto* root_data = app.add_subcommand("root-data", "emit a root system as JSON");
  root_data->add_option("TYPE", type)->required();
  root_data->add_option("-o,--output", output);

  auto* scsv = app.add_subcommand("struct-consts", "emit structure constants as CSV");
  scsv->add_option("TYPE", type)->required();
  scsv->add_option("-o,--output", output);

  auto* lemma = app.add_subcommand("check-lemma", "run the root-height lemma on random H");
  lemma->add_option("TYPE", type)->required();
  lemma->add_option("P", p)->required();
  lemma->add_option("--trials", trials);
  lemma->add_option("--depth", depth)->description("trace depth (assertions stay at 4)");
  lemma->add_option("--seed", seed);
  lemma->add_flag("--allow-small-p", allow_small_p);
  lemma->add_flag("--emit-trace", emit_trace);
  lemma->add_option("-o,--output", output);

  auto* scan = app.add_subcommand("scan-irregular", "tabulate irregular indices over a prime range");
  scan->add_option("PMIN", pmin)->required();
  scan->add_option("PMAX", pmax)->required();
  scan->add_option("--jobs", jobs);
  scan->add_option("--cache-dir", cache_dir);

  auto* sel = app.add_subcommand("select-cochar", "run the constructive cocharacter selection");
  sel->add_option("TYPE", type)->required();
  sel->add_option("P", p)->required();
  sel->add_option("E", e)->required();
  sel->add_option("--cache-dir", cache_dir);
  sel->add_option("-o,--output", output);

  auto* cert = app.add_subcommand("certify", "emit a witness certificate or a rejection");
  cert->add_option("TYPE", type)->required();
  cert->add_option("P", p)->required();
  cert->add_option("E", e)->required();
  cert->add_option("--cache-dir", cache_dir);
  cert->add_option("-o,--output", output);

  auto* sim = app.add_subcommand("simulate-filtration",
                                 "enumerate the level-k adjoint group and its layers");
  sim->add_option("TYPE", type)->required();
  sim->add_option("P", p)->required();
  sim->add_option("K", k)->required();
  sim->add_option("--cap", cap);
  sim->add_option("-o,--output", output);

  auto* eff = app.add_subcommand("effective-bound", "per-factor constants and the exact c");
  eff->add_option("TYPES", types_csv)->required()->description("comma-separated, e.g. A1,A1");
  eff->add_option("--prime-ceiling", ceiling);
  eff->add_option("-o,--output", output);

  auto* dens = app.add_subcommand("density", "heuristic irregularity density estimate");
  dens->add_option("R", r)->required()->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.push_back("chevcert");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(root_data)) return cmd_root_data(type, output, out);
    if (app.got_subcommand(scsv)) return cmd_struct_consts(type, output, out);
    if (app.got_subcommand(lemma))
      return cmd_check_lemma(type, p, trials, depth, seed, allow_small_p, emit_trace, output, out);
    if (app.got_subcommand(scan)) return cmd_scan_irregular(pmin, pmax, jobs, cache_dir, out, err);
    if (app.got_subcommand(sel)) return cmd_select_cochar(type, p, e, cache_dir, output, out);
    if (app.got_subcommand(cert)) return cmd_certify(type, p, e, cache_dir, output, out);
    if (app.got_subcommand(sim)) return cmd_simulate_filtration(type, p, k, cap, output, out);
    if (app.got_subcommand(eff)) return cmd_effective_bound(types_csv, ceiling, output, out);
    if (app.got_subcommand(dens)) return cmd_density(r, out);
  } catch (const internal_defect_error& ex) {
    err << "internal invariant violation: " << ex.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::logic_error& ex) {
    err << "internal invariant violation: " << ex.what() << '\n';
    return 3;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace chevcert::cli
