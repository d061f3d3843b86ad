// Command-line front end: classify, conjugate, overlap, search, gen, bench.
// Records go to stdout one JSON object per line; diagnostics go to stderr.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lyndon2d/bench.hpp"
#include "lyndon2d/classify.hpp"
#include "lyndon2d/dictmatch.hpp"
#include "lyndon2d/error.hpp"
#include "lyndon2d/generate.hpp"
#include "lyndon2d/matrix_file.hpp"
#include "lyndon2d/report.hpp"

namespace {

using namespace lyndon2d;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct DomainFailure : Error {
  using Error::Error;
};

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto p : PeriodSpec::parse(text).list)
    out.push_back(p);
  return out;
}

void emit(const nlohmann::ordered_json& record) { std::cout << record.dump() << '\n'; }

ClassifiedMatrix classify_file(const std::string& path, NameRegistry& registry,
                               const ClassifyOptions& options) {
  const Matrix rows = read_matrix_file(path);
  try {
    return classify_matrix(rows, registry, options);
  } catch (const NotSufficientlyPeriodic& e) {
    throw DomainFailure(path + ": " + e.what());
  }
}

int run_classify(const std::string& path, const std::string& algo, const std::string& fraction,
                 Word cap, bool faithful) {
  ClassifyOptions options;
  options.algorithm = parse_algorithm(algo);
  options.fraction = Fraction::parse(fraction);
  options.cap = cap;
  options.alg1_bound = faithful ? Alg1Bound::faithful : Alg1Bound::period;

  NameRegistry registry;
  const Matrix rows = read_matrix_file(path);
  const auto t0 = std::chrono::steady_clock::now();
  ClassifiedMatrix result;
  try {
    result = classify_matrix(rows, registry, options);
  } catch (const NotSufficientlyPeriodic& e) {
    throw DomainFailure(path + ": " + e.what());
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto elapsed = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  emit(classify_report(result, registry, options.algorithm, elapsed));
  return kOk;
}

int run_conjugate(const std::string& a, const std::string& b, const std::string& fraction) {
  ClassifyOptions options;
  options.fraction = Fraction::parse(fraction);
  NameRegistry registry;
  const auto ma = classify_file(a, registry, options);
  const auto mb = classify_file(b, registry, options);
  const auto shift = conjugacy_shift(ma, mb);
  nlohmann::ordered_json out{{"same_class", shift.has_value()}};
  if (shift)
    out["shift"] = to_decimal(*shift);
  emit(out);
  return kOk;
}

int run_overlap(const std::string& a, const std::string& b, const std::string& fraction) {
  ClassifyOptions options;
  options.fraction = Fraction::parse(fraction);
  NameRegistry registry;
  const auto ma = classify_file(a, registry, options);
  const auto mb = classify_file(b, registry, options);
  const auto width = longest_suffix_prefix(ma, mb);
  nlohmann::ordered_json out{{"match", width.has_value()}};
  if (width)
    out["width"] = *width;
  emit(out);
  return kOk;
}

int run_search(const std::string& text_path, const std::vector<std::string>& pattern_paths,
               bool oracle, bool parallel) {
  const Matrix text = read_matrix_file(text_path);
  std::vector<Matrix> patterns;
  for (const auto& path : pattern_paths)
    patterns.push_back(read_matrix_file(path));

  // Report every offending pattern before giving up.
  bool periodic = true;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const Matrix& pat = patterns[k];
    for (std::size_t i = 0; i < pat.size(); ++i) {
      const std::size_t p = compute_period(pat[i]);
      if (!kQuarter.admits(p, pat[i].size())) {
        std::cerr << "lyndon2d: " << pattern_paths[k] << ": row " << i << ": period " << p
                  << " exceeds width/4 (width " << pat[i].size() << ")\n";
        periodic = false;
      }
    }
  }
  if (!periodic)
    return kDomainError;

  const DictionaryIndex index = build_index(patterns);
  SearchOptions options;
  options.parallel = parallel;
  const auto found = search_text(text, index, options);
  if (oracle) {
    const auto truth = brute_search(text, patterns);
    if (truth != found) {
      std::cerr << "lyndon2d: oracle mismatch: search found " << found.size()
                << " occurrences, brute force found " << truth.size() << '\n';
      return kDomainError;
    }
  }
  for (const auto& occ : found)
    emit(occurrence_record(occ));
  return kOk;
}

int run_gen(const GenOptions& options, const std::vector<std::string>& plant_paths,
            const std::string& manifest_path) {
  Matrix out = generate_matrix(options);
  if (!plant_paths.empty()) {
    std::vector<Matrix> patterns;
    for (const auto& path : plant_paths)
      patterns.push_back(read_matrix_file(path));
    std::mt19937_64 rng(options.seed ^ 0x5bd1e995ull);
    std::size_t row = 0;
    for (const auto& pat : patterns) {
      if (row + pat.size() > out.size() || pat[0].size() > out[0].size())
        throw InvalidInput("planted patterns do not fit in the generated text");
      const std::size_t col = rng() % (out[0].size() - pat[0].size() + 1);
      plant_periodic(out, pat, row, col);
      row += pat.size();
    }
    if (!manifest_path.empty()) {
      std::ofstream manifest(manifest_path);
      if (!manifest)
        throw ParseError(0, "cannot write manifest", manifest_path);
      for (const auto& occ : brute_search(out, patterns))
        manifest << occurrence_record(occ).dump() << '\n';
    }
  }
  std::cout << format_matrix(out);
  return kOk;
}

int run_bench_cmd(const std::string& mode, const std::string& sizes, std::size_t repeats,
                  std::uint64_t seed, Word cap, bool parallel) {
  BenchOptions options;
  options.mode = parse_bench_mode(mode);
  options.sizes = parse_size_list(sizes);
  options.repeats = repeats;
  options.seed = seed;
  options.cap = cap;
  options.parallel = parallel;
  std::cout << format_bench_tsv(run_bench(options));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D Lyndon word classification, overlap queries and dictionary matching"};
  app.require_subcommand(1);

  std::string path_a, path_b, algo = "alg2", fraction;
  Word cap = kDefaultCap;
  bool faithful = false;

  auto* classify = app.add_subcommand("classify", "Classify a matrix by its 2D Lyndon word");
  classify->add_option("path", path_a, "Matrix file")->required();
  classify->add_option("--algo", algo, "naive | alg1 | alg2")
      ->check(CLI::IsMember({"naive", "alg1", "alg2"}));
  std::string classify_fraction = "1/2";
  classify->add_option("--fraction", classify_fraction, "Maximum period/width ratio");
  classify->add_option("--cap", cap, "Enumeration cap on LCM_m for naive and --faithful");
  classify->add_flag("--faithful", faithful,
                     "alg1 scans every candidate column up to LCM_m (cap-guarded)");

  auto* conjugate = app.add_subcommand("conjugate", "Horizontal conjugacy test of two matrices");
  conjugate->add_option("a", path_a)->required();
  conjugate->add_option("b", path_b)->required();
  std::string conjugate_fraction = "1/2";
  conjugate->add_option("--fraction", conjugate_fraction, "Maximum period/width ratio");

  auto* overlap = app.add_subcommand("overlap", "Horizontal suffix-prefix overlap of a onto b");
  overlap->add_option("a", path_a)->required();
  overlap->add_option("b", path_b)->required();
  std::string overlap_fraction = "1/4";
  overlap->add_option("--fraction", overlap_fraction, "Maximum period/width ratio");

  auto* search = app.add_subcommand("search", "2D dictionary matching");
  std::string text_path;
  std::vector<std::string> pattern_paths;
  bool oracle = false, parallel = false;
  search->add_option("--text", text_path, "Text matrix file")->required();
  search->add_option("--pattern", pattern_paths, "Pattern matrix files")->required();
  search->add_flag("--oracle", oracle, "Cross-check against brute-force search");
  search->add_flag("--parallel", parallel, "Process text windows concurrently");

  auto* gen = app.add_subcommand("gen", "Generate a matrix with periodic rows");
  GenOptions gen_options;
  std::string periods = "random";
  std::vector<std::string> plant_paths;
  std::string manifest_path;
  gen->add_option("--rows", gen_options.rows, "Row count (default: list length or width)");
  gen->add_option("--width", gen_options.width, "Row width")->required();
  gen->add_option("--periods", periods, "Comma list, 'primes' or 'random'");
  gen->add_option("--alphabet", gen_options.alphabet, "Alphabet size");
  gen->add_option("--seed", gen_options.seed, "Random seed");
  gen->add_option("--rotate", gen_options.rotate, "Rotate every row left by this many columns");
  gen->add_flag("--strict", gen_options.strict, "Limit periods to width/4");
  gen->add_option("--plant", plant_paths, "Pattern files planted in successive row bands");
  gen->add_option("--manifest", manifest_path, "Write every occurrence of the planted patterns");

  auto* bench = app.add_subcommand("bench", "Time the three 2D Lyndon word algorithms");
  std::string mode = "small-lcm", sizes = "8,16,32";
  std::size_t repeats = 5;
  std::uint64_t bench_seed = 1;
  bool bench_parallel = false;
  bench->add_option("--mode", mode, "small-lcm | prime-lcm")
      ->check(CLI::IsMember({"small-lcm", "prime-lcm"}));
  bench->add_option("--sizes", sizes, "Comma list of m");
  bench->add_option("--repeats", repeats, "Timing repeats (median reported)");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--cap", cap, "Enumeration cap for the naive algorithm");
  bench->add_flag("--parallel", bench_parallel, "Run sizes concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*classify)
      return run_classify(path_a, algo, classify_fraction, cap, faithful);
    if (*conjugate)
      return run_conjugate(path_a, path_b, conjugate_fraction);
    if (*overlap)
      return run_overlap(path_a, path_b, overlap_fraction);
    if (*search)
      return run_search(text_path, pattern_paths, oracle, parallel);
    if (*gen) {
      gen_options.periods = PeriodSpec::parse(periods);
      return run_gen(gen_options, plant_paths, manifest_path);
    }
    if (*bench)
      return run_bench_cmd(mode, sizes, repeats, bench_seed, cap, bench_parallel);
  } catch (const DomainFailure& e) {
    std::cerr << "lyndon2d: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotSufficientlyPeriodic& e) {
    std::cerr << "lyndon2d: " << e.what() << '\n';
    return kDomainError;
  } catch (const CapExceeded& e) {
    std::cerr << "lyndon2d: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    std::cerr << "lyndon2d: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "lyndon2d: internal error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
