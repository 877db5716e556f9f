#include "chevcert/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "chevcert/bernoulli.hpp"
#include "chevcert/version.hpp"

namespace chevcert {

IrregularCache::IrregularCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path IrregularCache::file() const { return dir_ / "irregular.jsonl"; }

std::map<long long, IrregularData> IrregularCache::load(std::vector<std::string>* warnings) const {
  std::map<long long, IrregularData> out;
  std::ifstream in(file());
  if (!in) return out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (j.at("algo").get<int>() != kIrregularAlgoVersion) continue;
      IrregularData d;
      d.p = j.at("p").get<long long>();
      d.irregular_indices = j.at("indices").get<std::vector<long long>>();
      d.e_p = static_cast<long long>(d.irregular_indices.size());
      if (d.p < 5 || !is_prime(d.p)) throw std::runtime_error("bad prime");
      for (auto k : d.irregular_indices)
        if (k < 2 || k > d.p - 3 || k % 2 != 0) throw std::runtime_error("bad index");
      out[d.p] = std::move(d);
    } catch (const std::exception& e) {
      if (warnings) {
        std::ostringstream os;
        os << "quarantined corrupt cache line " << lineno << ": " << e.what();
        warnings->push_back(os.str());
      }
    }
  }
  return out;
}

void IrregularCache::store(const std::map<long long, IrregularData>& records) const {
  std::filesystem::create_directories(dir_);
  const auto tmp = file().string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    for (const auto& [p, d] : records) {
      nlohmann::ordered_json j;
      j["algo"] = kIrregularAlgoVersion;
      j["p"] = p;
      j["indices"] = d.irregular_indices;
      out << j.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, file());
}

std::map<long long, IrregularData> scan_irregular(IrregularCache* cache, long long lo,
                                                  long long hi, int jobs, size_t* computed,
                                                  std::vector<std::string>* warnings) {
  std::map<long long, IrregularData> cached;
  if (cache) cached = cache->load(warnings);

  const auto primes = primes_in(std::max<long long>(5, lo), hi);
  std::vector<long long> missing;
  std::map<long long, IrregularData> result;
  for (long long p : primes) {
    auto it = cached.find(p);
    if (it != cached.end())
      result[p] = it->second;
    else
      missing.push_back(p);
  }
  if (computed) *computed = missing.size();

  if (!missing.empty()) {
    jobs = std::max(1, jobs);
    std::vector<IrregularData> fresh(missing.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= missing.size()) break;
        fresh[i] = index_of_irregularity(missing[i]);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& d : fresh) {
      cached[d.p] = d;
      result[d.p] = std::move(d);
    }
    if (cache) cache->store(cached);
  }
  return result;
}

}  // namespace chevcert
