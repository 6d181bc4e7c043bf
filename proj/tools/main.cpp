// stubborn: search and verification toolkit for composites that stay
// composite under digit alterations.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <future>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "stubborn/scheduler.hpp"
#include "stubborn/search.hpp"
#include "stubborn/sieve.hpp"
#include "stubborn/tables.hpp"
#include "stubborn/verifier.hpp"

namespace {

using namespace stubborn;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

struct UnitRange {
  Value first = 0;
  Value last = 0;
};

UnitRange parse_units(const std::string& text) {
  UnitRange range;
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      range.first = range.last = std::stoull(text);
    } else {
      range.first = std::stoull(text.substr(0, sep));
      range.last = std::stoull(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--units", "expected A..B or a single unit");
  }
  if (range.first > range.last)
    throw CLI::ValidationError("--units", "range out of order");
  return range;
}

MsdPolicy parse_policy(const std::string& text) {
  if (text == "allow-msd-zero") return MsdPolicy::AllowMsdZero;
  if (text == "no-msd-zero") return MsdPolicy::NoMsdZero;
  throw CLI::ValidationError("--policy", "expected allow-msd-zero or no-msd-zero");
}

ChangeCount parse_changes(const std::string& text) {
  if (text == "atmost2") return ChangeCount::at_most(2);
  if (text == "exactly2") return ChangeCount::exactly(2);
  throw CLI::ValidationError("--changes", "expected atmost2 or exactly2");
}

SieveKind parse_sieve(const std::string& text) {
  const auto kind = sieve_kind_from(text);
  if (!kind) throw CLI::ValidationError("--sieve", "unknown sieve kind");
  return *kind;
}

// Line-oriented append sink; every line lands in one write followed by a
// flush so an interrupted run never leaves a partial record.
class LineSink {
 public:
  explicit LineSink(const std::string& path) {
    if (path.empty()) {
      file_ = stdout;
      owned_ = false;
    } else {
      file_ = std::fopen(path.c_str(), "a");
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
      owned_ = true;
    }
  }
  ~LineSink() {
    if (owned_ && file_) std::fclose(file_);
  }
  LineSink(const LineSink&) = delete;
  LineSink& operator=(const LineSink&) = delete;

  void line(const std::string& text) {
    std::string buffer = text;
    buffer.push_back('\n');
    std::fwrite(buffer.data(), 1, buffer.size(), file_);
    std::fflush(file_);
  }

 private:
  std::FILE* file_ = nullptr;
  bool owned_ = false;
};

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STUBBORN_WORKERS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

int cmd_verify(Value n, unsigned base, const std::string& changes,
               const std::string& policy) {
  const auto report = verify(n, base, parse_changes(changes), parse_policy(policy));
  std::printf("%s\n", report_json(report).c_str());
  return report.verdict ? kExitOk : kExitNegative;
}

int cmd_tables(const std::string& which) {
  std::vector<PublishedRow> rows;
  if (which == "all") {
    rows = published_rows();
  } else {
    rows = rows_for_table(std::atoi(which.c_str()));
    if (rows.empty()) throw CLI::ValidationError("--which", "expected 1, 2, 3 or all");
  }

  std::size_t failures = 0;
  for (const auto& row : rows) {
    const DigitString ds(row.value, row.base);
    const bool digits_ok = ds.str() == row.digits;
    const bool verdict = verify(row.value, row.base, row.count, row.policy).verdict;
    const bool ok = digits_ok && verdict;
    failures += !ok;
    std::printf("table %d base %2u %-8s %-14s %20llu %s\n", row.table, row.base,
                to_string(row.count).c_str(), to_string(row.policy),
                static_cast<unsigned long long>(row.value), ok ? "ok" : "FAIL");
  }
  std::printf("%zu rows, %zu failures\n", rows.size(), failures);
  return failures == 0 ? kExitOk : kExitNegative;
}

int cmd_sievebench(Value lo, Value hi, const std::vector<std::string>& kind_names,
                   int reps, const std::string& out_path) {
  std::vector<SieveKind> kinds;
  if (kind_names.empty())
    kinds.assign(kAllSieveKinds, kAllSieveKinds + 4);
  else
    for (const auto& name : kind_names) kinds.push_back(parse_sieve(name));

  const auto report = sieve_benchmark(lo, hi, kinds, reps);
  LineSink sink(out_path);
  const auto csv = benchmark_csv(report);
  sink.line(csv.substr(0, csv.size() - 1));  // rows carry their own breaks
  if (!report.counts_agree) {
    std::fprintf(stderr, "error: sieve kinds disagree on prime counts\n");
    return kExitCrossCheck;
  }
  return kExitOk;
}

int cmd_schedule(unsigned base, unsigned exp, const std::string& units,
                 const std::string& policy, const std::string& out_path) {
  const auto range = parse_units(units);
  const auto ranked =
      order_units(base, exp, range.first, range.last, parse_policy(policy));
  LineSink sink(out_path);
  sink.line("u,q,p");
  char buffer[96];
  for (const auto& est : ranked) {
    std::snprintf(buffer, sizeof(buffer), "%llu,%.9g,%.6g",
                  static_cast<unsigned long long>(est.unit), est.q, est.p);
    sink.line(buffer);
  }
  return kExitOk;
}

struct Checkpoint {
  std::string path;
  std::set<Value> done;

  void load(const std::string& expected_header) {
    if (path.empty()) return;
    std::FILE* file = std::fopen(path.c_str(), "r");
    if (!file) return;  // nothing recorded yet
    char line[256];
    while (std::fgets(line, sizeof(line), file)) {
      if (line[0] == '#') {
        std::string header(line);
        while (!header.empty() && (header.back() == '\n' || header.back() == '\r'))
          header.pop_back();
        if (header != expected_header) {
          std::fclose(file);
          throw std::runtime_error("checkpoint belongs to a different run: " + path);
        }
        continue;
      }
      if (line[0] == '\n') continue;
      unsigned long long unit = 0;
      if (std::sscanf(line, "%llu", &unit) == 1) done.insert(unit);
    }
    std::fclose(file);
  }
};

int cmd_search(unsigned base, unsigned exp, const std::string& units,
               const std::string& order, const std::string& sieve,
               const std::string& policy_name, unsigned workers,
               const std::string& checkpoint_path, const std::string& out_path) {
  const auto range = parse_units(units);
  const MsdPolicy policy = parse_policy(policy_name);
  const SieveKind kind = parse_sieve(sieve);

  // the largest unit decides whether the whole range is representable
  {
    const auto unit_size = checked_pow(base, exp + 1);
    if (!unit_size || range.last + 1 > kValueLimit / *unit_size)
      throw std::out_of_range("unit range beyond supported range");
    const Value top = (range.last + 1) * *unit_size;
    if (!checked_pow(base, digit_length(top - 1, base)))
      throw std::out_of_range("altered values could exceed the supported range");
  }

  std::vector<Value> schedule;
  if (order == "p-desc") {
    for (const auto& est : order_units(base, exp, range.first, range.last, policy))
      schedule.push_back(est.unit);
  } else if (order == "natural") {
    for (Value u = range.first;; ++u) {
      schedule.push_back(u);
      if (u == range.last) break;
    }
  } else {
    throw CLI::ValidationError("--order", "expected natural or p-desc");
  }

  char header[128];
  std::snprintf(header, sizeof(header), "# base=%u exp=%u policy=%s sieve=%s", base,
                exp, to_string(policy), to_string(kind));

  Checkpoint checkpoint{checkpoint_path, {}};
  checkpoint.load(header);

  LineSink out(out_path);
  std::unique_ptr<LineSink> ckpt_sink;
  if (!checkpoint_path.empty()) {
    const bool fresh = checkpoint.done.empty();
    ckpt_sink = std::make_unique<LineSink>(checkpoint_path);
    if (fresh) ckpt_sink->line(header);
  }

  const unsigned pool = worker_count(workers);
  std::deque<std::pair<Value, std::future<UnitResult>>> inflight;

  // results are emitted in dispatch order no matter when workers finish
  auto drain_front = [&]() {
    auto front = std::move(inflight.front());
    inflight.pop_front();
    const UnitResult result = front.second.get();
    for (const Value n : result.solutions)
      out.line(solution_json_line(result.task, policy, n));
    if (ckpt_sink) {
      char line[96];
      std::snprintf(line, sizeof(line), "%llu ok %zu",
                    static_cast<unsigned long long>(front.first),
                    result.solutions.size());
      ckpt_sink->line(line);
    }
  };

  for (const Value unit : schedule) {
    if (checkpoint.done.count(unit)) continue;
    inflight.emplace_back(unit, std::async(std::launch::async, [=]() {
                            return unit_search({base, exp, unit, kind}, policy);
                          }));
    while (inflight.size() >= pool) drain_front();
  }
  while (!inflight.empty()) drain_front();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search and verify composites that stay composite when up to "
               "two digits of their base-b representation change"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "check one candidate");
  Value verify_n = 0;
  unsigned verify_base = 10;
  std::string verify_changes = "atmost2";
  std::string verify_policy = "allow-msd-zero";
  verify_cmd->add_option("n", verify_n, "candidate value")->required();
  verify_cmd->add_option("--base", verify_base, "base, 2..10")
      ->required()
      ->check(CLI::Range(2u, 10u));
  verify_cmd->add_option("--changes", verify_changes, "atmost2|exactly2");
  verify_cmd->add_option("--policy", verify_policy, "allow-msd-zero|no-msd-zero");

  auto* search_cmd = app.add_subcommand("search", "scan work units for solutions");
  unsigned search_base = 2, search_exp = 0, search_workers = 0;
  std::string search_units, search_order = "natural";
  std::string search_sieve = "eratosthenes";
  std::string search_policy = "allow-msd-zero";
  std::string search_checkpoint, search_out;
  search_cmd->add_option("--base", search_base, "base, 2..10")
      ->required()
      ->check(CLI::Range(2u, 10u));
  search_cmd->add_option("--exp", search_exp, "unit exponent e")->required();
  search_cmd->add_option("--units", search_units, "unit range A..B")->required();
  search_cmd->add_option("--order", search_order, "natural|p-desc");
  search_cmd->add_option("--sieve", search_sieve,
                         "eratosthenes|atkin12|atkin60|atkin420");
  search_cmd->add_option("--policy", search_policy, "allow-msd-zero|no-msd-zero");
  search_cmd->add_option("--workers", search_workers,
                         "parallel units (default: STUBBORN_WORKERS or cores)");
  search_cmd->add_option("--checkpoint", search_checkpoint, "checkpoint file");
  search_cmd->add_option("--out", search_out, "JSON-lines output file (append)");

  auto* tables_cmd = app.add_subcommand("tables", "verify the bundled solution tables");
  std::string tables_which = "all";
  tables_cmd->add_option("--which", tables_which, "1|2|3|all");

  auto* bench_cmd = app.add_subcommand("sievebench", "time the sieve kinds");
  Value bench_lo = 0, bench_hi = 0;
  std::vector<std::string> bench_kinds;
  int bench_reps = 1;
  std::string bench_out;
  bench_cmd->add_option("--lo", bench_lo, "interval start")->required();
  bench_cmd->add_option("--hi", bench_hi, "interval end (exclusive)")->required();
  bench_cmd->add_option("--sieve", bench_kinds, "kinds to run (default: all)");
  bench_cmd->add_option("--reps", bench_reps, "repetitions, best time wins");
  bench_cmd->add_option("--out", bench_out, "CSV output file (append)");

  auto* schedule_cmd =
      app.add_subcommand("schedule", "rank units by solution probability");
  unsigned schedule_base = 2, schedule_exp = 0;
  std::string schedule_units, schedule_policy = "allow-msd-zero", schedule_out;
  schedule_cmd->add_option("--base", schedule_base, "base, 2..10")
      ->required()
      ->check(CLI::Range(2u, 10u));
  schedule_cmd->add_option("--exp", schedule_exp, "unit exponent e")->required();
  schedule_cmd->add_option("--units", schedule_units, "unit range A..B")->required();
  schedule_cmd->add_option("--policy", schedule_policy, "allow-msd-zero|no-msd-zero");
  schedule_cmd->add_option("--out", schedule_out, "CSV output file (append)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(verify_n, verify_base, verify_changes, verify_policy);
    if (app.got_subcommand(search_cmd))
      return cmd_search(search_base, search_exp, search_units, search_order,
                        search_sieve, search_policy, search_workers,
                        search_checkpoint, search_out);
    if (app.got_subcommand(tables_cmd)) return cmd_tables(tables_which);
    if (app.got_subcommand(bench_cmd))
      return cmd_sievebench(bench_lo, bench_hi, bench_kinds, bench_reps, bench_out);
    if (app.got_subcommand(schedule_cmd))
      return cmd_schedule(schedule_base, schedule_exp, schedule_units,
                          schedule_policy, schedule_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
