#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqrot/algorithm.hpp"
#include "seqrot/counters.hpp"

/// Timing and operation-count sweeps over (algorithm, n, r).
namespace seqrot::bench {

struct AmountPolicy {
  enum class Kind { all, sample, list };
  Kind kind = Kind::all;
  std::size_t sample_count = 0;    // Kind::sample
  std::vector<std::size_t> fixed;  // Kind::list

  static AmountPolicy every() { return {}; }
  static AmountPolicy sampled(std::size_t k) { return {Kind::sample, k, {}}; }
  static AmountPolicy listed(std::vector<std::size_t> rs) { return {Kind::list, 0, std::move(rs)}; }
};

struct SweepConfig {
  std::vector<std::size_t> sizes;
  AmountPolicy amounts;
  std::vector<Algorithm> algorithms{kBenchAlgorithms.begin(), kBenchAlgorithms.end()};
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
};

struct BenchRecord {
  Algorithm algorithm;
  std::size_t n = 0;
  std::size_t r = 0;
  std::uint64_t elapsed_ns = 0;  // median over repetitions
  Counters counters;
  std::size_t repetitions = 0;
};

struct SweepSkip {
  Algorithm algorithm;
  std::size_t n;
  std::string reason;
};

struct SweepResult {
  std::vector<BenchRecord> records;
  std::vector<SweepSkip> skipped;
};

/// Throws std::invalid_argument for an invalid config (empty sizes, a size
/// below 2, zero repetitions, no algorithms, listed amounts outside [1, n)).
void validate(const SweepConfig& config);

/// Rotation amounts the policy selects for length n, ascending. r = 0 is
/// never selected.
std::vector<std::size_t> amounts_for(const AmountPolicy& policy, std::size_t n, std::uint64_t seed);

/// One record per (algorithm, n, r). Buffers of 64-bit words are refilled
/// from the seed before every repetition, outside the timed region. The
/// recursive block swap is skipped for n above its depth guard.
SweepResult sweep(const SweepConfig& config);

struct Discrepancy {
  Algorithm algorithm;
  std::size_t n;
  std::size_t r;
  std::string field;
  std::uint64_t expected;
  std::uint64_t actual;
};

/// Checks each record against its algorithm's counter identities.
std::vector<Discrepancy> verify_counters(const std::vector<BenchRecord>& records);

std::string describe(const Discrepancy& d);

inline constexpr const char* kCsvHeader =
    "algorithm,n,r,elapsed_ns,reads,writes,swaps,aux_peak,depth_max,repetitions";

/// Header plus one row per record, sorted by (algorithm name, n, r).
void write_csv(std::vector<BenchRecord> records, std::ostream& os);

/// Throws std::runtime_error if the file cannot be written.
void write_csv(std::vector<BenchRecord> records, const std::filesystem::path& path);

/// Median elapsed_ns over the records matching (algorithm, n); 0 if none.
double median_elapsed(const std::vector<BenchRecord>& records, Algorithm algorithm, std::size_t n);

}  // namespace seqrot::bench
