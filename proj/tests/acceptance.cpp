// End-to-end acceptance checks. Usage: acceptance <path to rotseq>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqrot/modular_index.hpp"
#include "seqrot/rotation.hpp"
#include "seqrot/verification.hpp"

namespace fs = std::filesystem;
using namespace seqrot;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& p, const std::string& data) {
  std::ofstream(p, std::ios::binary).write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::vector<std::uint64_t> iota_words(std::size_t n) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t runs = 0;
  for (std::size_t n = 0; n <= 64; ++n) {
    const auto base = iota_words(n);
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
      const auto expect = verify::oracle_rotate(std::span<const std::uint64_t>(base), static_cast<std::int64_t>(r));
      for (Algorithm algo : kAllAlgorithms) {
        auto buf = base;
        Counters c;
        rotate(algo, std::span<std::uint64_t>(buf), r, c);
        ++runs;
        if (buf != expect) {
          o.fail(std::string(algorithm_name(algo)) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  o.note = o.pass ? std::to_string(runs) + " runs, " + std::to_string(secs) + " s" : o.note;
  return o;
}

Outcome swap_identity() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::uint64_t n = 2; n <= 256; ++n) {
    for (std::uint64_t r = 1; r < n; ++r) {
      for (Algorithm algo : {Algorithm::swap_recursive, Algorithm::swap_iterative}) {
        auto buf = iota_words(n);
        Counters c;
        rotate(algo, std::span<std::uint64_t>(buf), r, c);
        const std::uint64_t expected = n - std::gcd(r, n - r);
        if (c.swaps != expected) {
          o.fail(std::string(algorithm_name(algo)) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                 " swaps=" + std::to_string(c.swaps) + " expected " + std::to_string(expected));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note = std::to_string(secs) + " s";
  return o;
}

Outcome modulo_structure() {
  Outcome o;
  for (std::size_t n = 2; n <= 256; ++n) {
    for (std::size_t r = 1; r < n; ++r) {
      auto buf = iota_words(n);
      Counters c;
      ModuloStats stats;
      rotate_modulo(std::span<std::uint64_t>(buf), r, c, NullProbe{}, &stats);
      const std::size_t g = std::gcd(n, n - r);
      const auto tau = static_cast<std::size_t>(
          modular::tau(static_cast<modular::index_t>(n), static_cast<modular::index_t>(n - r)));
      const bool ok = stats.outer_iterations == g && tau == n / g &&
                      stats.inner_iterations == std::vector<std::size_t>(g, tau) && c.writes == n;
      if (!ok) o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<verify::LemmaReport> reports;
  reports.push_back(verify::check_lemma_rev_cat(8));
  for (auto& rep : verify::check_lemma_rot_swap(9)) reports.push_back(std::move(rep));
  reports.push_back(verify::check_lemma_invert_mp(128));
  reports.push_back(verify::check_rot_pointwise(64));
  for (const auto& rep : reports) {
    if (!rep.holds() || rep.cases == 0) o.fail(verify::summary_line(rep));
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note = std::to_string(reports.size()) + " reports, " + std::to_string(secs) + " s";
  return o;
}

Outcome invariant_suite() {
  Outcome o;
  const auto rep = verify::check_invariants_exhaustive(48);
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    o.fail(v.algorithm + " " + v.invariant_id + ": " + v.detail);
  }
  if (o.pass) o.note = verify::summary_line(rep);
  return o;
}

Outcome space_profile() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 64; ++n) {
    for (std::uint64_t r = 1; r < n; ++r) {
      for (Algorithm algo : kAllAlgorithms) {
        auto buf = iota_words(n);
        Counters c;
        rotate(algo, std::span<std::uint64_t>(buf), r, c);
        std::uint64_t expected = 1;
        if (algo == Algorithm::copy) expected = n;
        if (algo == Algorithm::copy_native) expected = std::min(r, n - r);
        if (c.aux_peak != expected) {
          o.fail(std::string(algorithm_name(algo)) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                 " aux_peak=" + std::to_string(c.aux_peak));
        }
      }
    }
  }
  return o;
}

// Rows of a bench CSV keyed by algorithm then n, holding elapsed_ns values.
std::map<std::string, std::map<std::size_t, std::vector<double>>> parse_times(const std::string& csv) {
  std::map<std::string, std::map<std::size_t, std::vector<double>>> out;
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() < 4) continue;
    out[f[0]][std::stoull(f[1])].push_back(std::stod(f[3]));
  }
  return out;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

Outcome bench_trends(const std::string& rotseq, const fs::path& dir) {
  Outcome o;
  const fs::path small = dir / "bench3000.csv";
  const int code = shell(rotseq + " bench --sizes 3000 --rs all --csv " + small.string());
  if (code != 0) {
    o.fail("bench --sizes 3000 exited " + std::to_string(code));
    return o;
  }
  const auto rows = parse_times(read_file(small));
  std::size_t count = 0;
  for (const auto& [algo, by_n] : rows) count += by_n.at(3000).size();
  if (count != 5 * 2999) o.fail("expected 14995 rows, got " + std::to_string(count));

  const fs::path large = dir / "bench_linear.csv";
  const int code2 = shell(rotseq + " bench --sizes 100000,200000 --algos reverse,swap,modulo --rs sample:40 --reps 7 --csv " +
                          large.string());
  if (code2 != 0) {
    o.fail("linearity sweep exited " + std::to_string(code2));
    return o;
  }
  std::string ratios;
  for (const auto& [algo, by_n] : parse_times(read_file(large))) {
    const double ratio = median(by_n.at(200000)) / median(by_n.at(100000));
    ratios += (ratios.empty() ? "" : ", ") + algo + "=" + std::to_string(ratio).substr(0, 4);
    if (ratio < 1.3 || ratio > 3.5) o.fail(algo + " time ratio " + std::to_string(ratio) + " outside [1.3, 3.5]");
  }
  if (o.pass) o.note = "ratios " + ratios;
  return o;
}

Outcome cli_round_trip(const std::string& rotseq, const fs::path& dir) {
  Outcome o;
  std::mt19937_64 gen(2024);
  const char* algos[] = {"copy", "copy-native", "reverse", "swap", "swap-rec", "modulo"};
  const fs::path in = dir / "in.bin";
  const fs::path mid = dir / "mid.bin";
  const fs::path out = dir / "out.bin";
  for (int file = 0; file < 100; ++file) {
    const std::size_t n = file == 0 ? 0 : static_cast<std::size_t>(gen() % 100001);
    std::string data(n, '\0');
    for (auto& ch : data) ch = static_cast<char>(gen());
    write_file(in, data);
    const auto span = static_cast<std::int64_t>(2 * n);
    const std::int64_t by =
        n == 0 ? static_cast<std::int64_t>(gen() % 5) : static_cast<std::int64_t>(gen() % (2 * span + 1)) - span;
    const std::string algo = algos[gen() % 6];
    const std::string a = n > 65536 && algo == "swap-rec" ? "swap" : algo;
    const std::string by_s = std::to_string(by);
    if (shell(rotseq + " rotate --algo " + a + " --by=" + by_s + " -o " + mid.string() + " " + in.string()) != 0 ||
        shell(rotseq + " rotate --algo " + a + " --by=" + by_s + " --right < " + mid.string() + " > " +
              out.string()) != 0) {
      o.fail("rotate failed for n=" + std::to_string(n) + " by=" + by_s);
      continue;
    }
    if (read_file(out) != data) o.fail("round trip differs for n=" + std::to_string(n) + " by=" + by_s);
  }

  struct Expect {
    std::string args;
    int code;
  };
  write_file(in, "ABCDEF");
  const Expect contract[] = {
      {"rotate --by 2 " + in.string(), 0},
      {"rotate --by 2 --verify --check " + in.string(), 0},
      {"decompose --n 6 --by 2", 0},
      {"selftest --max-n 8 --max-len 4", 0},
      {"", 1},
      {"rotate " + in.string(), 1},
      {"rotate --by 2 --algo nope " + in.string(), 1},
      {"decompose --n 6 --by 0", 1},
      {"bench --sizes 1", 1},
      {"rotate --by 2 " + (dir / "missing.bin").string(), 3},
      {"rotate --by 2 -o " + (dir / "no" / "such" / "dir").string() + " " + in.string(), 3},
      {"bench --sizes 4 --csv " + (dir / "no" / "such.csv").string(), 3},
  };
  for (const auto& e : contract) {
    const int code = shell(rotseq + " " + e.args + " > /dev/null 2>&1");
    if (code != e.code) {
      o.fail("`rotseq " + e.args + "` exited " + std::to_string(code) + ", expected " + std::to_string(e.code));
    }
  }
  if (o.pass) o.note = "100 files, " + std::to_string(std::size(contract)) + " exit-code cases";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to rotseq>\n";
    return 1;
  }
  const std::string rotseq = argv[1];
  const fs::path dir = fs::temp_directory_path() / ("seqrot_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 oracle equivalence", oracle_equivalence},
      {"AC2 swap count identity", swap_identity},
      {"AC3 modular visit structure", modulo_structure},
      {"AC4 lemma suite", lemma_suite},
      {"AC5 invariant suite", invariant_suite},
      {"AC6 space profile", space_profile},
      {"AC7 benchmark trends", [&] { return bench_trends(rotseq, dir); }},
      {"AC8 CLI round trip", [&] { return cli_round_trip(rotseq, dir); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome o = check();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.note.empty() ? "" : ": " + o.note) << '\n';
    failed += o.pass ? 0 : 1;
  }
  fs::remove_all(dir);
  return failed == 0 ? 0 : 1;
}
