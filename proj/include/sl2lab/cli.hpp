#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sl2lab::cli {

/// Fully-resolved run configuration; every default is materialized here so
/// the config echo in each output record is complete.
struct RunConfig {
  std::string command;
  uint32_t p = 5;
  uint32_t p_min = 3;
  uint32_t p_max = 13;
  std::string pair_spec = "standard";
  std::string gens_spec = "standard";
  std::string words_mode = "find";  // find | max-girth
  double tau = 2.0;
  double gamma = 0.1;
  double delta = 0.01;
  double tol = 1e-10;
  double scan_tol = 1e-6;
  uint32_t walk_n = 20;
  uint32_t big_k = 0;  // K for assignment counts; 0 = skip
  uint64_t samples = 10000;
  uint32_t n_max = 8;
  uint32_t relation_threshold = 60;  // L
  uint32_t k = 2;                    // prg tuple size
  uint32_t exhaustive_cap_p = 13;
  uint32_t walk_length = 0;  // 0 = derive from tau at the wg checker
  uint64_t cut_samples = 0;
  uint64_t seed = 1;
  unsigned workers = 1;
  std::string output_path;         // empty = stdout
  std::string format = "jsonl";    // jsonl | csv
  bool timing = false;
};

struct UsageError {
  int exit_code = 2;
  std::string message;
};

/// Parses argv (without the program name). Reads SL2LAB_SEED and
/// SL2LAB_WORKERS as defaults; flags win.
std::variant<RunConfig, UsageError> parse_args(const std::vector<std::string>& argv);

/// Dispatches a parsed config, streaming JSON-lines (or CSV) records.
/// Exit code 0 on success, 1 on computational failure (non-convergence),
/// 2 on usage errors detected at run time.
int run(const RunConfig& config, std::ostream& out);

/// parse + run + error reporting; the tool's main.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sl2lab::cli
