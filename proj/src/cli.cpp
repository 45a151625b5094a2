#include "seqrot/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <span>
#include <sstream>
#include <string_view>

#include "seqrot/bench.hpp"
#include "seqrot/kernels.hpp"
#include "seqrot/modular_index.hpp"
#include "seqrot/rotation.hpp"
#include "seqrot/verification.hpp"

namespace seqrot::cli {
namespace {

// Raised for conditions that map onto a specific exit code.
struct Failure {
  ExitCode code;
  std::string message;
};

struct RotateOptions {
  std::string algo = "swap";
  std::int64_t by = 0;
  bool right = false;
  std::string unit = "bytes";
  bool check = false;
  bool verify = false;
  std::string output;
  std::string input;
};

struct DecomposeOptions {
  std::int64_t n = 0;
  std::int64_t by = 0;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::string algos = "all";
  std::string rs = "all";
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::string csv;
};

struct SelftestOptions {
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_len;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw Failure{kIoError, "error reading standard input"};
    return data;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kIoError, "cannot open " + path};
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw Failure{kIoError, "error reading " + path};
  return std::move(buf).str();
}

template <class Write>
void write_out(const std::string& path, std::ostream& out, Write&& write) {
  if (path.empty() || path == "-") {
    write(out);
    out.flush();
    if (!out) throw Failure{kIoError, "error writing standard output"};
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Failure{kIoError, "cannot open " + path + " for writing"};
  write(file);
  file.flush();
  if (!file) throw Failure{kIoError, "error writing " + path};
}

// Every unit ends just after a newline, except possibly the last.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto len = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(0, len));
    text.remove_prefix(len);
  }
  return lines;
}

Algorithm algorithm_or_fail(std::string_view name) {
  if (auto algo = parse_algorithm(name)) return *algo;
  throw Failure{kUsage, "unknown algorithm: " + std::string(name)};
}

template <class T>
void rotate_units(std::vector<T>& units, const RotateOptions& opt, Algorithm algo, std::ostream& err) {
  const std::size_t n = units.size();
  std::size_t r = normalize(opt.by, n).r_left;
  if (opt.right && r != 0) r = n - r;

  std::vector<T> expected;
  if (opt.verify) {
    expected = verify::oracle_rotate(std::span<const T>(units), static_cast<std::int64_t>(r));
  }

  if (opt.check) {
    try {
      if (auto v = verify::run_checked(algo, std::span<T>(units), r)) {
        err << "invariant violated: " << v->algorithm << ' ' << v->invariant_id << " at iteration "
            << v->iteration << ": " << v->detail << '\n';
        throw Failure{kVerificationFailed, ""};
      }
    } catch (const verify::CheckLimitError& e) {
      throw Failure{kUsage, e.what()};
    }
  } else {
    Counters counters;
    try {
      rotate(algo, std::span<T>(units), r, counters);
    } catch (const DepthGuardError& e) {
      throw Failure{kUsage, e.what()};
    }
  }

  if (opt.verify && units != expected) {
    throw Failure{kVerificationFailed, "result differs from the reference rotation"};
  }
}

int cmd_rotate(const RotateOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Algorithm algo = algorithm_or_fail(opt.algo);
  const std::string data = read_all(opt.input, in);

  if (opt.unit == "lines") {
    auto lines = split_lines(data);
    rotate_units(lines, opt, algo, err);
    write_out(opt.output, out, [&](std::ostream& os) {
      for (auto line : lines) os.write(line.data(), static_cast<std::streamsize>(line.size()));
    });
  } else {
    std::vector<char> bytes(data.begin(), data.end());
    rotate_units(bytes, opt, algo, err);
    write_out(opt.output, out,
              [&](std::ostream& os) { os.write(bytes.data(), static_cast<std::streamsize>(bytes.size())); });
  }
  return kSuccess;
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out) {
  if (opt.n <= 0) throw Failure{kUsage, "decompose: n must be positive"};
  const auto r = static_cast<modular::index_t>(normalize(opt.by, static_cast<std::size_t>(opt.n)).r_left);
  if (r == 0) throw Failure{kUsage, "decompose: rotation amount must be nonzero modulo n"};
  modular::CycleDecomposition d;
  try {
    d = modular::decompose(opt.n, r);
  } catch (const std::domain_error& e) {
    throw Failure{kUsage, e.what()};
  }
  out << "n=" << d.n << " r=" << r << " step=" << d.step << " g=" << d.g << " tau=" << d.tau << '\n';
  for (std::size_t c = 0; c < d.starts.size(); ++c) {
    for (modular::index_t k : d.cycle(c)) out << k << " → ";
    out << d.starts[c] << '\n';
  }
  return kSuccess;
}

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Failure{kUsage, std::string("invalid ") + what + ": " + std::string(text)};
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

std::vector<Algorithm> parse_algorithm_list(std::string_view text) {
  if (text == "all") return {kBenchAlgorithms.begin(), kBenchAlgorithms.end()};
  std::vector<Algorithm> algos;
  for (auto name : split_commas(text)) algos.push_back(algorithm_or_fail(name));
  return algos;
}

bench::AmountPolicy parse_amounts(std::string_view text) {
  if (text == "all") return bench::AmountPolicy::every();
  if (text.starts_with("sample:")) {
    return bench::AmountPolicy::sampled(parse_count(text.substr(7), "sample count"));
  }
  if (text.starts_with("list:")) {
    std::vector<std::size_t> rs;
    for (auto part : split_commas(text.substr(5))) rs.push_back(parse_count(part, "amount"));
    return bench::AmountPolicy::listed(std::move(rs));
  }
  throw Failure{kUsage, "--rs expects all, sample:K or list:a,b,..."};
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  bench::SweepConfig config;
  config.sizes = opt.sizes;
  config.algorithms = parse_algorithm_list(opt.algos);
  config.amounts = parse_amounts(opt.rs);
  config.repetitions = opt.reps;
  config.seed = opt.seed;

  bench::SweepResult result;
  try {
    result = bench::sweep(config);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  for (const auto& skip : result.skipped) {
    err << "skipped " << algorithm_name(skip.algorithm) << " n=" << skip.n << ": " << skip.reason << '\n';
  }

  const auto discrepancies = bench::verify_counters(result.records);
  if (opt.csv.empty()) {
    write_out("", out, [&](std::ostream& os) { bench::write_csv(result.records, os); });
  } else {
    try {
      bench::write_csv(result.records, std::filesystem::path(opt.csv));
    } catch (const std::runtime_error& e) {
      throw Failure{kIoError, e.what()};
    }
  }
  for (const auto& d : discrepancies) err << "counter mismatch: " << bench::describe(d) << '\n';
  return discrepancies.empty() ? kSuccess : kVerificationFailed;
}

int cmd_selftest(const SelftestOptions& opt, std::ostream& out) {
  const std::size_t len = opt.max_len.value_or(0);
  const bool has_len = opt.max_len.has_value();
  const bool has_n = opt.max_n.has_value();

  std::vector<verify::LemmaReport> reports;
  reports.push_back(verify::check_lemma_rev_cat(has_len ? len : 8));
  for (auto& rep : verify::check_lemma_rot_swap(has_len ? len : 9)) reports.push_back(std::move(rep));
  reports.push_back(verify::check_lemma_invert_mp(has_n ? *opt.max_n : 128));
  reports.push_back(verify::check_rot_pointwise(has_n ? *opt.max_n : 64));
  reports.push_back(verify::check_wrap_bounds(512));

  bool ok = true;
  for (const auto& rep : reports) {
    verify::write_report(out, rep);
    ok = ok && rep.holds();
  }

  const auto suite = verify::check_invariants_exhaustive(has_n ? *opt.max_n : 48);
  out << verify::summary_line(suite) << '\n';
  for (std::size_t i = 0; i < suite.violations.size() && i < 5; ++i) {
    const auto& v = suite.violations[i];
    out << "  " << v.algorithm << ' ' << v.invariant_id << " iteration " << v.iteration << ": " << v.detail
        << '\n';
  }
  ok = ok && suite.violations.empty();
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-place sequence rotation toolkit"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "Block kernel set: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  RotateOptions rot;
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate the bytes or lines of a file to the left");
  rotate_cmd->add_option("--algo", rot.algo, "copy, copy-native, reverse, swap, swap-rec or modulo");
  rotate_cmd->add_option("--by", rot.by, "Rotation amount; negative values rotate right")->required();
  rotate_cmd->add_flag("--right", rot.right, "Rotate to the right instead");
  rotate_cmd->add_option("--unit", rot.unit, "Unit of rotation")->check(CLI::IsMember({"bytes", "lines"}));
  rotate_cmd->add_flag("--check", rot.check, "Evaluate loop invariants while rotating");
  rotate_cmd->add_flag("--verify", rot.verify, "Compare against a reference rotation");
  rotate_cmd->add_option("-o,--output", rot.output, "Output path (default: standard output)");
  rotate_cmd->add_option("INPUT", rot.input, "Input path (default: standard input)");

  DecomposeOptions dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Print the cycle structure of a rotation");
  decompose_cmd->add_option("--n", dec.n, "Sequence length")->required();
  decompose_cmd->add_option("--by", dec.by, "Rotation amount")->required();

  BenchOptions ben;
  auto* bench_cmd = app.add_subcommand("bench", "Time the rotation algorithms and emit CSV");
  bench_cmd->add_option("--sizes", ben.sizes, "Comma-separated lengths")->required()->delimiter(',');
  bench_cmd->add_option("--algos", ben.algos, "Comma-separated algorithm names or all");
  bench_cmd->add_option("--rs", ben.rs, "all, sample:K or list:a,b,...");
  bench_cmd->add_option("--reps", ben.reps, "Repetitions per configuration");
  bench_cmd->add_option("--seed", ben.seed, "Seed for buffer contents and sampling");
  bench_cmd->add_option("--csv", ben.csv, "Output path (default: standard output)");

  SelftestOptions self;
  auto* selftest_cmd = app.add_subcommand("selftest", "Check the lemmas and loop invariants exhaustively");
  selftest_cmd->add_option("--max-n", self.max_n, "Length bound for index and invariant checks");
  selftest_cmd->add_option("--max-len", self.max_len, "Length bound for sequence identities");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (isa != "auto") {
      const auto want = isa == "avx2" ? kernels::Isa::avx2 : kernels::Isa::scalar;
      try {
        kernels::set_active_isa(want);
      } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
      }
    }
    if (*rotate_cmd) return cmd_rotate(rot, in, out, err);
    if (*decompose_cmd) return cmd_decompose(dec, out);
    if (*bench_cmd) return cmd_bench(ben, out, err);
    if (*selftest_cmd) return cmd_selftest(self, out);
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "rotseq: " << f.message << '\n';
    return f.code;
  }
  return kUsage;
}

}  // namespace seqrot::cli
