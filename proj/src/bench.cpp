#include "seqrot/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <locale>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>

#include "seqrot/rotation.hpp"

namespace seqrot::bench {
namespace {

using Word = std::uint64_t;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (salt * 0x9E3779B97F4A7C15ULL);
}

void fill(std::vector<Word>& buf, std::uint64_t seed) {
  std::mt19937_64 gen(mix(seed, buf.size()));
  for (auto& w : buf) w = gen();
}

std::uint64_t median(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return (xs[mid - 1] + xs[mid]) / 2;
}

std::uint64_t ceil_half(std::uint64_t x) { return (x + 1) / 2; }

}  // namespace

void validate(const SweepConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("sweep: no sizes given");
  if (config.algorithms.empty()) throw std::invalid_argument("sweep: no algorithms given");
  if (config.repetitions < 1) throw std::invalid_argument("sweep: repetitions must be at least 1");
  for (std::size_t n : config.sizes) {
    if (n < 2) throw std::invalid_argument("sweep: sizes must be at least 2, got " + std::to_string(n));
    if (config.amounts.kind == AmountPolicy::Kind::list) {
      for (std::size_t r : config.amounts.fixed) {
        if (r == 0 || r >= n) {
          throw std::invalid_argument("sweep: amount " + std::to_string(r) + " outside [1, " +
                                      std::to_string(n) + ")");
        }
      }
    }
  }
  if (config.amounts.kind == AmountPolicy::Kind::sample && config.amounts.sample_count == 0) {
    throw std::invalid_argument("sweep: sample count must be positive");
  }
}

std::vector<std::size_t> amounts_for(const AmountPolicy& policy, std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> all(n > 0 ? n - 1 : 0);
  std::iota(all.begin(), all.end(), std::size_t{1});
  switch (policy.kind) {
    case AmountPolicy::Kind::all: return all;
    case AmountPolicy::Kind::sample: {
      if (policy.sample_count >= all.size()) return all;
      std::vector<std::size_t> picked;
      picked.reserve(policy.sample_count);
      std::mt19937_64 gen(mix(seed, ~static_cast<std::uint64_t>(n)));
      std::sample(all.begin(), all.end(), std::back_inserter(picked), policy.sample_count, gen);
      return picked;
    }
    case AmountPolicy::Kind::list: {
      std::vector<std::size_t> rs = policy.fixed;
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      return rs;
    }
  }
  return all;
}

SweepResult sweep(const SweepConfig& config) {
  validate(config);
  using Clock = std::chrono::steady_clock;
  SweepResult result;
  for (Algorithm algo : config.algorithms) {
    for (std::size_t n : config.sizes) {
      if (algo == Algorithm::swap_recursive && n > kMaxRecursiveLength) {
        result.skipped.push_back({algo, n, "length exceeds recursion depth guard"});
        continue;
      }
      for (std::size_t r : amounts_for(config.amounts, n, config.seed)) {
        result.records.push_back({algo, n, r, 0, {}, config.repetitions});
      }
    }
  }

  // Repetitions run round-robin over all records so that slow drift in the
  // machine's load is spread evenly instead of landing on one configuration.
  std::vector<std::vector<std::uint64_t>> times(result.records.size());
  std::vector<Word> buf;
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    for (std::size_t i = 0; i < result.records.size(); ++i) {
      BenchRecord& rec = result.records[i];
      buf.resize(rec.n);
      fill(buf, config.seed);
      Counters counters;
      const auto t0 = Clock::now();
      rotate(rec.algorithm, std::span<Word>(buf), rec.r, counters);
      const auto t1 = Clock::now();
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      times[i].push_back(static_cast<std::uint64_t>(std::max<std::int64_t>(ns, 1)));
      if (rep == 0) rec.counters = counters;
    }
  }
  for (std::size_t i = 0; i < result.records.size(); ++i) result.records[i].elapsed_ns = median(times[i]);
  return result;
}

std::vector<Discrepancy> verify_counters(const std::vector<BenchRecord>& records) {
  std::vector<Discrepancy> out;
  auto expect = [&](const BenchRecord& rec, const char* field, std::uint64_t expected, std::uint64_t actual) {
    if (expected != actual) out.push_back({rec.algorithm, rec.n, rec.r, field, expected, actual});
  };
  for (const auto& rec : records) {
    const std::uint64_t n = rec.n;
    const std::uint64_t r = rec.r;
    const Counters& c = rec.counters;
    if (r == 0) {
      expect(rec, "writes", 0, c.writes);
      continue;
    }
    switch (rec.algorithm) {
      case Algorithm::copy: expect(rec, "aux_peak", n, c.aux_peak); break;
      case Algorithm::copy_native: expect(rec, "aux_peak", std::min(r, n - r), c.aux_peak); break;
      case Algorithm::reverse:
        expect(rec, "swaps", ceil_half(r) + ceil_half(n - r) + ceil_half(n), c.swaps);
        expect(rec, "aux_peak", 1, c.aux_peak);
        break;
      case Algorithm::swap_recursive:
      case Algorithm::swap_iterative:
        expect(rec, "swaps", n - std::gcd(r, n - r), c.swaps);
        expect(rec, "aux_peak", 1, c.aux_peak);
        break;
      case Algorithm::modulo:
        expect(rec, "writes", n, c.writes);
        expect(rec, "aux_peak", 1, c.aux_peak);
        break;
    }
  }
  return out;
}

std::string describe(const Discrepancy& d) {
  return std::string(algorithm_name(d.algorithm)) + " n=" + std::to_string(d.n) + " r=" + std::to_string(d.r) +
         ": " + d.field + " expected " + std::to_string(d.expected) + ", got " + std::to_string(d.actual);
}

void write_csv(std::vector<BenchRecord> records, std::ostream& os) {
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    const auto an = algorithm_name(a.algorithm);
    const auto bn = algorithm_name(b.algorithm);
    if (an != bn) return an < bn;
    if (a.n != b.n) return a.n < b.n;
    return a.r < b.r;
  });
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    const Counters& c = rec.counters;
    os << algorithm_name(rec.algorithm) << ',' << rec.n << ',' << rec.r << ',' << rec.elapsed_ns << ','
       << c.reads << ',' << c.writes << ',' << c.swaps << ',' << c.aux_peak << ',' << c.depth_max << ','
       << rec.repetitions << '\n';
  }
}

void write_csv(std::vector<BenchRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.imbue(std::locale::classic());
  write_csv(std::move(records), out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

double median_elapsed(const std::vector<BenchRecord>& records, Algorithm algorithm, std::size_t n) {
  std::vector<std::uint64_t> xs;
  for (const auto& rec : records) {
    if (rec.algorithm == algorithm && rec.n == n) xs.push_back(rec.elapsed_ns);
  }
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? static_cast<double>(xs[mid])
                            : (static_cast<double>(xs[mid - 1]) + static_cast<double>(xs[mid])) / 2.0;
}

}  // namespace seqrot::bench
