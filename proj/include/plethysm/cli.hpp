#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plethysm/exactlinalg.hpp"
#include "plethysm/partitions.hpp"

namespace plethysm::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Mode { conjecture1, conjecture2 };

enum class Verdict {
  rows_independent,
  fails_by_counting,
  full_rank,
  not_full_rank_certified,
  undetermined,
};

// Why a verdict is UNDETERMINED.
enum class Undetermined { none, hypothesis_not_met, resources, evidence_only };

std::string to_string(Mode m);
std::string to_string(Verdict v);
Mode parse_mode(const std::string& text);

struct ConjectureVerdict {
  Partition shape;
  Mode mode = Mode::conjecture2;
  bool dominance_holds = false;
  BigInt h_count;
  BigInt v_count;
  std::optional<RankReport> rank_report;
  Verdict verdict = Verdict::undetermined;
  Undetermined cause = Undetermined::none;
  std::string reason;
  // Resource accounting: K rows actually produced for this verdict.
  std::uint64_t matrix_rows_built = 0;
};

struct RunOptions {
  Limits limits;
  CertPolicy policy;
  bool timing = true;
};

// Conjecture 1: dominance hypothesis, then the counting shortcut, then rank.
// Conjecture 2: certified rank against min(h, v).
ConjectureVerdict check_shape(const Partition& shape, Mode mode, const RunOptions& options);

nlohmann::ordered_json to_json(const ConjectureVerdict& v, bool timing);

// 0 consistent, 2 certified failure, 3 undetermined for lack of resources.
int exit_code(const ConjectureVerdict& v);

// Entry point shared by the executable and the tests. Returns the exit code:
// 0 consistent, 1 usage or parse error, 2 certified failure, 3 undetermined.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plethysm::cli
