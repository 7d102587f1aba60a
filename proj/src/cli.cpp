#include "plethysm/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "plethysm/ortho.hpp"
#include "plethysm/proofcheck.hpp"
#include "plethysm/tableaux.hpp"

namespace plethysm::cli {

using Json = nlohmann::ordered_json;

std::string to_string(Mode m) { return m == Mode::conjecture1 ? "conjecture1" : "conjecture2"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::rows_independent: return "ROWS_INDEPENDENT";
    case Verdict::fails_by_counting: return "FAILS_BY_COUNTING";
    case Verdict::full_rank: return "FULL_RANK";
    case Verdict::not_full_rank_certified: return "NOT_FULL_RANK_CERTIFIED";
    case Verdict::undetermined: return "UNDETERMINED";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "conjecture1") return Mode::conjecture1;
  if (text == "conjecture2") return Mode::conjecture2;
  throw InvalidInput("unknown mode '" + text + "' (expected conjecture1 or conjecture2)");
}

ConjectureVerdict check_shape(const Partition& shape, Mode mode, const RunOptions& options) {
  ConjectureVerdict v;
  v.shape = shape;
  v.mode = mode;
  v.dominance_holds = dominates(shape, conjugate(shape));
  v.h_count = count_horizontal(shape);
  v.v_count = count_vertical(shape);

  if (mode == Mode::conjecture1) {
    if (!v.dominance_holds) {
      v.verdict = Verdict::undetermined;
      v.cause = Undetermined::hypothesis_not_met;
      v.reason = "dominance hypothesis fails: shape does not dominate its conjugate";
      return v;
    }
    if (v.h_count > v.v_count) {
      v.verdict = Verdict::fails_by_counting;
      v.reason = "more rows than columns: " + v.h_count.get_str() + " > " + v.v_count.get_str();
      return v;
    }
  }

  try {
    const KRowStream rows(shape, options.limits, options.policy.exec);
    const RankReport report = certified_rank(rows, options.policy);
    v.matrix_rows_built = rows.rows_streamed();
    v.rank_report = report;
    const bool full = report.full_rank();
    if (report.certified() && full) {
      v.verdict = mode == Mode::conjecture1 ? Verdict::rows_independent : Verdict::full_rank;
    } else if (report.certification == Certification::certified_exact) {
      v.verdict = Verdict::not_full_rank_certified;
      v.reason = "exact rank " + std::to_string(report.rank) + " < " +
                 std::to_string(std::min(report.n_rows, report.n_cols));
    } else {
      v.verdict = Verdict::undetermined;
      v.cause = Undetermined::evidence_only;
      v.reason = "mod-p rank deficient and matrix exceeds the exact-elimination cap";
    }
  } catch (const ResourceLimit& e) {
    v.verdict = Verdict::undetermined;
    v.cause = Undetermined::resources;
    v.reason = e.what();
  }
  return v;
}

Json to_json(const ConjectureVerdict& v, bool timing) {
  Json j;
  j["shape"] = v.shape.to_string();
  j["mode"] = to_string(v.mode);
  j["dominance_holds"] = v.dominance_holds;
  j["h_count"] = v.h_count.get_str();
  j["v_count"] = v.v_count.get_str();
  j["rank_report"] = v.rank_report ? to_json(*v.rank_report, timing) : Json(nullptr);
  j["verdict"] = to_string(v.verdict);
  j["reason"] = v.reason;
  j["matrix_rows_built"] = v.matrix_rows_built;
  return j;
}

int exit_code(const ConjectureVerdict& v) {
  switch (v.verdict) {
    case Verdict::fails_by_counting:
    case Verdict::not_full_rank_certified: return 2;
    case Verdict::undetermined: return v.cause == Undetermined::hypothesis_not_met ? 0 : 3;
    default: return 0;
  }
}

namespace {

int combine_exit(int a, int b) {
  if (a == 2 || b == 2) return 2;
  if (a == 3 || b == 3) return 3;
  return std::max(a, b);
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> primes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a prime", pos);
    }
    if (used != item.size()) throw ParseError("expected a prime", pos + used);
    if (value >= (1ULL << 31) || !is_prime(value))
      throw InvalidInput("--primes: " + item + " is not a prime below 2^31");
    primes.push_back(static_cast<std::uint32_t>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (primes.empty()) throw InvalidInput("--primes needs at least one prime");
  return primes;
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

struct Settings {
  std::vector<std::string> primes{join(kDefaultPrimes)};
  std::uint64_t max_enum = Limits{}.max_enum;
  std::size_t max_exact = Limits{}.max_exact;
  int threads = 0;
  std::string format = "json";
  std::string out;
  std::string timing = "auto";
  int proof_full_max = 5;
  int proof_restricted_max = 6;

  std::string shape;
  std::string mode = "conjecture2";
  int n = 0;
  int m = 0;
  bool hooks_only = false;
};

Json envelope(const std::string& command, Json params, Json results, double elapsed_ms, bool timing) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  j["elapsed_ms"] = timing ? Json(static_cast<std::int64_t>(elapsed_ms + 0.5)) : Json(nullptr);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

const char* kVerdictCsvHeader = "shape,mode,dominance_holds,h_count,v_count,rank,certification,verdict,reason\n";

std::string verdict_csv(const ConjectureVerdict& v) {
  std::ostringstream os;
  os << csv_field(v.shape.to_string()) << ',' << to_string(v.mode) << ','
     << (v.dominance_holds ? "true" : "false") << ',' << v.h_count.get_str() << ','
     << v.v_count.get_str() << ',' << (v.rank_report ? std::to_string(v.rank_report->rank) : "") << ','
     << (v.rank_report ? to_string(v.rank_report->certification) : "") << ',' << to_string(v.verdict)
     << ',' << csv_field(v.reason) << '\n';
  return os.str();
}

class Command {
 public:
  Command(const Settings& s, std::ostream& out) : s_(s), out_(out) {
    options_.limits.max_enum = s.max_enum;
    options_.limits.max_exact = s.max_exact;
    std::string primes;
    for (const auto& item : s.primes) primes += (primes.empty() ? "" : ",") + item;
    options_.policy.primes = parse_primes(primes);
    options_.policy.max_exact = s.max_exact;
    if (s.format != "json" && s.format != "csv" && s.format != "mm" && s.format != "dense")
      throw InvalidInput("--format must be one of json, csv, mm, dense");
    if (s.timing != "auto" && s.timing != "on" && s.timing != "off")
      throw InvalidInput("--timing must be auto, on or off");
  }

  int count() {
    const auto start = clock();
    const Partition shape = Partition::parse(s_.shape);
    const BigInt h = count_horizontal(shape);
    const BigInt v = count_vertical(shape);
    const bool dom = dominates(shape, conjugate(shape));
    const std::string cmp = h > v ? "h > v" : (h == v ? "h = v" : "h < v");
    if (s_.format == "csv") {
      emit("shape,h_count,v_count,dominance_holds,comparison\n" + csv_field(shape.to_string()) + ',' +
           h.get_str() + ',' + v.get_str() + ',' + (dom ? "true" : "false") + ',' + cmp + '\n');
      return 0;
    }
    require_json();
    Json r;
    r["shape"] = shape.to_string();
    r["h_count"] = h.get_str();
    r["v_count"] = v.get_str();
    r["dominance_holds"] = dom;
    r["comparison"] = cmp;
    emit(envelope("count", {{"shape", shape.to_string()}}, Json::array({r}), since(start), timing(true))
             .dump(2) +
         '\n');
    return 0;
  }

  int check() {
    const auto start = clock();
    const Partition shape = Partition::parse(s_.shape);
    const Mode mode = parse_mode(s_.mode);
    const bool timed = timing(true);
    const auto v = check_shape(shape, mode, options_);
    if (s_.format == "csv") {
      emit(std::string(kVerdictCsvHeader) + verdict_csv(v));
    } else {
      require_json();
      emit(envelope("check", params_with({{"shape", shape.to_string()}, {"mode", to_string(mode)}}),
                    Json::array({to_json(v, timed)}), since(start), timed)
               .dump(2) +
           '\n');
    }
    return exit_code(v);
  }

  // One line per partition; each line is a complete report for that shape.
  int scan() {
    const Mode mode = parse_mode(s_.mode);
    const bool timed = timing(false);
    std::vector<Partition> shapes;
    for (auto& p : enumerate_partitions(s_.n, options_.limits))
      if (!s_.hooks_only || p.is_hook()) shapes.push_back(std::move(p));

    std::vector<ConjectureVerdict> verdicts(shapes.size());
    std::vector<double> elapsed(shapes.size());
    std::vector<std::string> errors(shapes.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(shapes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const auto start = clock();
      try {
        verdicts[idx] = check_shape(shapes[idx], mode, options_);
      } catch (const std::exception& e) {
        errors[idx] = e.what();
      }
      elapsed[idx] = since(start);
    }

    int code = 0;
    std::string text = s_.format == "csv" ? kVerdictCsvHeader : "";
    if (s_.format != "csv") require_json();
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      if (!errors[i].empty()) {
        verdicts[i].shape = shapes[i];
        verdicts[i].mode = mode;
        verdicts[i].verdict = Verdict::undetermined;
        verdicts[i].cause = Undetermined::resources;
        verdicts[i].reason = errors[i];
      }
      code = combine_exit(code, exit_code(verdicts[i]));
      if (s_.format == "csv") {
        text += verdict_csv(verdicts[i]);
      } else {
        Json params = params_with({{"n", s_.n}, {"mode", to_string(mode)}, {"hooks_only", s_.hooks_only}});
        params["shape"] = shapes[i].to_string();
        text += envelope("scan", std::move(params), Json::array({to_json(verdicts[i], timed)}), elapsed[i],
                         timed)
                    .dump() +
                '\n';
      }
    }
    emit(text);
    return code;
  }

  int blacklist() {
    const auto start = clock();
    if (s_.m < 1 || s_.n < 1) throw InvalidInput("--m and --n must be positive");
    if (s_.m > s_.n) throw InvalidInput("blacklist needs m <= n");
    require_json();
    const bool timed = timing(true);
    const OrthMatrix mm = build_M(s_.m, s_.n, options_.limits);
    const OrthMatrix k = build_K(Partition::rectangle(s_.m, s_.n), options_.limits);
    const RankReport report = certified_rank(mm, options_.policy);
    const BigInt target = count_dissections(s_.n, s_.m);
    const bool reaches = report.certified() && BigInt(static_cast<unsigned long>(report.rank)) == target;
    const bool equals_k = mm.same_entries(k);

    Json r;
    r["m"] = s_.m;
    r["n"] = s_.n;
    r["I_nm"] = target.get_str();
    r["I_mn"] = count_dissections(s_.m, s_.n).get_str();
    r["rank_report"] = to_json(report, timed);
    r["rank_equals_I_nm"] = reaches;
    r["black_list_condition"] = reaches
                                    ? "rank(M) = |I_{n,m}|: sufficient condition for Foulkes' conjecture "
                                      "for (n, r), 1 <= r <= m"
                                    : "not established";
    r["equals_K"] = equals_k;
    emit(envelope("blacklist", params_with({{"m", s_.m}, {"n", s_.n}}), Json::array({r}), since(start), timed)
             .dump(2) +
         '\n');
    if (!equals_k) return 2;
    if (reaches) return 0;
    return report.certification == Certification::certified_exact ? 2 : 3;
  }

  int matrix() {
    const auto start = clock();
    if (s_.out.empty()) throw InvalidInput("matrix needs --out");
    const std::string fmt = s_.format == "json" ? "mm" : s_.format;
    if (fmt != "mm" && fmt != "dense") throw InvalidInput("matrix --format must be mm or dense");
    OrthMatrix mat;
    Json params;
    if (!s_.shape.empty()) {
      const Partition shape = Partition::parse(s_.shape);
      mat = build_K(shape, options_.limits);
      params["shape"] = shape.to_string();
    } else {
      if (s_.m < 1 || s_.n < 1) throw InvalidInput("matrix needs --shape or both --m and --n");
      mat = build_M(s_.m, s_.n, options_.limits);
      params["m"] = s_.m;
      params["n"] = s_.n;
    }
    params["format"] = fmt;
    export_matrix(mat, s_.out, fmt == "mm" ? ExportFormat::matrix_market : ExportFormat::dense);
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < mat.rows(); ++i) nnz += mat.row_sum(i);
    Json r;
    r["shape_tag"] = mat.shape_tag();
    r["rows"] = mat.rows();
    r["cols"] = mat.cols();
    r["nnz"] = nnz;
    r["path"] = s_.out;
    r["labels_path"] = s_.out + ".labels";
    out_ << envelope("matrix", std::move(params), Json::array({r}), since(start), timing(true)).dump(2) << '\n';
    return 0;
  }

  int verify_proof() {
    const auto start = clock();
    const int n = s_.n;
    if (n < 1) throw InvalidInput("--n must be positive");
    if (n > s_.proof_restricted_max)
      throw ResourceLimit("verify-proof n = " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(s_.proof_restricted_max));
    require_json();
    const bool timed = timing(true);
    const proofcheck::TwoRowContext ctx(n, options_.limits);

    Json results = Json::array();
    bool ok = true;
    auto take = [&](const proofcheck::CheckReport& report) {
      for (const auto& r : report.records) results.push_back(proofcheck::to_json(r));
      ok = ok && report.passed();
    };
    const bool full = n <= s_.proof_full_max;
    if (full) take(proofcheck::zero_filter_sweep(ctx));
    for (int k = 0; k <= n / 2; ++k) take(proofcheck::coefficient_count_report(ctx, k));

    const auto chain = proofcheck::verify_induction_chain(ctx);
    proofcheck::CheckRecord induction;
    induction.check = "induction_chain";
    induction.inputs = {{"n", n}, {"mu0", chain.mu0}};
    induction.expected = "types " + std::to_string(n - n / 2) + ".." + std::to_string(n) +
                         " established; type n is {mu0}";
    induction.observed = proofcheck::to_json(chain);
    induction.pass = chain.passed();
    results.push_back(proofcheck::to_json(induction));
    ok = ok && induction.pass;

    const RankReport rank = certified_rank(ctx.k_matrix(), options_.policy);
    proofcheck::CheckRecord kernel;
    kernel.check = "left_kernel_trivial";
    kernel.inputs = {{"n", n}, {"shape", Partition::rectangle(2, n).to_string()}};
    kernel.expected = {{"rank", ctx.k_matrix().rows()}};
    kernel.observed = to_json(rank, timed);
    kernel.pass = rank.certified() && rank.rank == ctx.k_matrix().rows();
    results.push_back(proofcheck::to_json(kernel));
    ok = ok && kernel.pass;

    Json params = params_with({{"n", n}});
    params["zero_filter"] = full ? "all full-alphabet partial tableaux, 1 <= k <= n-1"
                                 : "skipped: n above the full-alphabet limit";
    params["all_passed"] = ok;
    emit(envelope("verify-proof", std::move(params), std::move(results), since(start), timed).dump(2) + '\n');
    if (ok) return 0;
    return rank.certified() ? 2 : 3;
  }

 private:
  using Clock = std::chrono::steady_clock;
  static Clock::time_point clock() { return Clock::now(); }
  static double since(Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
  }

  bool timing(bool command_default) const {
    if (s_.timing == "on") return true;
    if (s_.timing == "off") return false;
    return command_default;
  }

  void require_json() const {
    if (s_.format != "json") throw InvalidInput("--format " + s_.format + " is not available for this command");
  }

  Json params_with(Json params) const {
    params["primes"] = options_.policy.primes;
    params["max_enum"] = options_.limits.max_enum;
    params["max_exact"] = options_.limits.max_exact;
    return params;
  }

  void emit(const std::string& text) {
    if (s_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(s_.out, std::ios::binary);
    if (!file) throw IoError(s_.out, "cannot open for writing");
    file << text;
    if (!file) throw IoError(s_.out, "write failed");
  }

  const Settings& s_;
  std::ostream& out_;
  RunOptions options_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Computational checks of the Stanley and Foulkes plethysm conjectures", "plethysm"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "Read key=value settings from a file (flags override)");
  app.add_option("--primes", s.primes, "Comma-separated primes (< 2^31) for modular rank")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--max-enum", s.max_enum, "Maximum tableaux per enumeration")->capture_default_str();
  app.add_option("--max-exact", s.max_exact, "Dimension cap for exact elimination")->capture_default_str();
  app.add_option("--threads", s.threads, "Worker threads (0 = available parallelism)");
  app.add_option("--format", s.format, "json, csv, mm or dense")->capture_default_str();
  app.add_option("--out", s.out, "Output path");
  app.add_option("--timing", s.timing, "auto, on or off: include elapsed_ms in reports")->capture_default_str();
  app.add_option("--proof-full-max", s.proof_full_max, "Largest n for full-alphabet proof checks")
      ->capture_default_str();
  app.add_option("--proof-restricted-max", s.proof_restricted_max, "Largest n for verify-proof")
      ->capture_default_str();

  auto* count = app.add_subcommand("count", "Count horizontal and vertical tableaux of a shape");
  count->add_option("--shape", s.shape, "Shape, e.g. [6,2,2,1,1] or 2x5")->required();

  auto* check = app.add_subcommand("check", "Check conjecture 1 or 2 for one shape");
  check->add_option("--shape", s.shape, "Shape, e.g. [6,2,2,1,1] or 2x5")->required();
  check->add_option("--mode", s.mode, "conjecture1 or conjecture2")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Check every partition of N (JSON lines)");
  scan->add_option("--n", s.n, "N")->required();
  scan->add_option("--mode", s.mode, "conjecture1 or conjecture2")->capture_default_str();
  scan->add_flag("--hooks-only", s.hooks_only, "Only hook shapes (N-r, 1^r)");

  auto* blacklist = app.add_subcommand("blacklist", "Rank of the Black-List matrix M^{m,n}");
  blacklist->add_option("--m", s.m, "m")->required();
  blacklist->add_option("--n", s.n, "n")->required();

  auto* matrix = app.add_subcommand("matrix", "Build K (from --shape) or M (from --m, --n) and export it");
  matrix->add_option("--shape", s.shape, "Shape for K");
  matrix->add_option("--m", s.m, "m for M^{m,n}");
  matrix->add_option("--n", s.n, "n for M^{m,n}");

  auto* verify = app.add_subcommand("verify-proof", "Verify the 2 x n argument mechanically");
  verify->add_option("--n", s.n, "n")->required();

  for (auto* sub : {count, check, scan, blacklist, matrix, verify}) sub->fallthrough();

  std::vector<const char*> argv{"plethysm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  if (s.threads > 0) omp_set_num_threads(s.threads);

  try {
    Command cmd(s, out);
    if (count->parsed()) return cmd.count();
    if (check->parsed()) return cmd.check();
    if (scan->parsed()) return cmd.scan();
    if (blacklist->parsed()) return cmd.blacklist();
    if (matrix->parsed()) return cmd.matrix();
    return cmd.verify_proof();
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace plethysm::cli
