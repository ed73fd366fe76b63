#pragma once

// Range sweeps behind the command-line front end: claim catalog, parameter
// selection, parallel execution with a deterministic merge, and the CSV /
// JSON-lines encodings of reports and per-prime tables.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qrv/modint.hpp"
#include "qrv/verify.hpp"

namespace qrv {

/// Bad flags or ranges; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `all` or `sample:N`.
struct ParamPolicy {
  bool all = false;
  int sample = 4;

  static ParamPolicy parse(std::string_view text);
};

/// Values in 1..p-1 chosen by the policy, ascending. A sample starts from
/// {1, 2, smallest non-residue, p-1} and is topped up with values drawn from
/// a generator seeded by p.
std::vector<i64> select_params(i64 p, const ParamPolicy& policy);

enum class DeltaChoice { one, two, both };
DeltaChoice parse_delta(std::string_view text);

struct SweepConfig {
  std::vector<std::string> claims;  // empty or {"all"} selects every claim
  i64 pmin = 3;
  i64 pmax = 3;
  ParamPolicy a;
  ParamPolicy b;
  DeltaChoice delta = DeltaChoice::both;
  unsigned jobs = 1;
  bool fail_fast = false;
};

struct Task {
  std::string claim;
  i64 p;
  std::vector<i64> args;
};

/// Claim identifiers accepted by `--claims`, in catalog order.
std::vector<std::string_view> claim_ids();

/// Expands a configuration into tasks. Throws UsageError on unknown claims,
/// empty ranges, or an explicitly requested claim whose domain excludes a
/// prime of the range that its congruence condition admits (e.g. thm_1_3
/// with delta 1 at p = 3).
std::vector<Task> plan(const SweepConfig& config);

VerifyReport run_task(const Task& task);

/// Runs tasks on up to `jobs` threads. Reports come back sorted by
/// (claim, p, params) regardless of scheduling. With fail_fast, no new task
/// starts once a failure has been recorded.
std::vector<VerifyReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs,
                                    bool fail_fast = false);

void sort_reports(std::vector<VerifyReport>& reports);

/// "a=1;b=2"
std::string flatten_params(const std::vector<Param>& params);

std::string reports_to_csv(const std::vector<VerifyReport>& reports);
std::string reports_to_json_lines(const std::vector<VerifyReport>& reports);

struct TableRow {
  i64 p = 0;
  i64 p_mod_8 = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::optional<i64> h_imag;
  std::optional<i64> h_real;
  std::optional<std::string> eps_a;
  std::optional<std::string> eps_b;
  std::int64_t below_quarter = 0;  // #{1 <= k < p/4 : (k/p) = -1}
  std::optional<i64> x;
  std::optional<i64> y;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow table_row(i64 p);

/// One row per odd prime in [pmin, pmax], ascending.
std::vector<TableRow> build_table(i64 pmin, i64 pmax, unsigned jobs);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json_lines(const std::vector<TableRow>& rows);

/// Calls body(i) for i in [0, count) on up to `jobs` threads. body returns
/// false to request that no further indices be started. The first exception
/// thrown by any call is rethrown after all threads join.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        if (!body(i)) stop.store(true);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qrv
