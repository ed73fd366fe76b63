// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//
//   acceptance <path to qrv>
//
// The qrv path is used for the byte-identical --jobs 1 / --jobs 8 comparison.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qrv/counting.hpp"
#include "qrv/cyclo.hpp"
#include "qrv/quadfield.hpp"
#include "qrv/sweep.hpp"
#include "qrv/verify.hpp"

using namespace qrv;

namespace {

const unsigned kJobs = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<i64> primes(i64 lo, i64 hi, i64 residue, i64 modulus) {
  return primes_in(lo, hi, ResidueFilter{residue, modulus});
}

// Runs every task and summarizes; the first failing report goes in the detail.
Outcome summarize(const std::vector<VerifyReport>& reports) {
  Outcome out;
  for (const auto& r : reports) {
    if (!r.pass) {
      out.pass = false;
      out.detail = "first failure " + r.claim + " p=" + std::to_string(r.p) + " [" +
                   flatten_params(r.params) + "] lhs=" + r.lhs + " rhs=" + r.rhs;
      return out;
    }
  }
  out.detail = std::to_string(reports.size()) + " checks";
  return out;
}

Outcome sweep(const std::vector<Task>& tasks) { return summarize(run_tasks(tasks, kJobs)); }

std::vector<Task> with_a(const std::string& claim, const std::vector<i64>& ps,
                         const std::function<ParamPolicy(i64)>& policy) {
  std::vector<Task> tasks;
  for (i64 p : ps) {
    for (i64 a : select_params(p, policy(p))) tasks.push_back({claim, p, {a}});
  }
  return tasks;
}

ParamPolicy all_upto(i64 p, i64 bound, int sample) {
  return p <= bound ? ParamPolicy{true, 0} : ParamPolicy{false, sample};
}

Outcome thm_1_1_i() {
  return sweep(with_a("thm_1_1_i", primes(17, 113, 1, 8),
                      [](i64 p) { return all_upto(p, 41, 6); }));
}

Outcome thm_1_1_ii() {
  return sweep(with_a("thm_1_1_ii", primes(5, 109, 5, 8),
                      [](i64 p) { return all_upto(p, 41, 6); }));
}

Outcome plus_3mod4() {
  return sweep(with_a("plus_3mod4", primes(7, 113, 3, 4),
                      [](i64) { return ParamPolicy{false, 6}; }));
}

Outcome thm_1_2() {
  return sweep(with_a("thm_1_2", primes(5, 2000, 1, 4),
                      [](i64 p) { return all_upto(p, 200, 4); }));
}

Outcome thm_1_3() {
  std::vector<Task> tasks;
  for (i64 p : primes(7, 2000, 3, 4)) {
    tasks.push_back({"thm_1_3", p, {1}});
    tasks.push_back({"thm_1_3", p, {2}});
  }
  Outcome out = sweep(tasks);
  for (i64 p : primes(7, 1000, 3, 4)) {
    if (class_number_imag(p) != class_number_imag_forms(p)) {
      return {false, "h(-p) mismatch at p=" + std::to_string(p)};
    }
  }
  out.detail += ", h(-p) cross-checked to 1000";
  return out;
}

Outcome thm_3_1() {
  std::vector<Task> tasks;
  for (i64 p : primes(7, 199, 3, 4)) {
    for (i64 a = 1; a < p; ++a) {
      for (i64 b = 1; b < p; ++b) tasks.push_back({"thm_3_1", p, {a, b}});
    }
  }
  return sweep(tasks);
}

Outcome lem_2_1() {
  std::vector<Task> tasks;
  for (i64 n = 3; n <= 301; n += 2) {
    for (i64 c = 1; c < n; ++c) {
      if (gcd(c, n) == 1) tasks.push_back({"lem_2_1", n, {c}});
    }
  }
  return sweep(tasks);
}

Outcome lem_3_1_eq_2_4() {
  const auto ps = primes(5, 2000, 1, 4);
  auto tasks = with_a("lem_3_1", ps, [](i64) { return ParamPolicy{false, 4}; });
  auto more = with_a("eq_2_4", ps, [](i64) { return ParamPolicy{false, 4}; });
  tasks.insert(tasks.end(), more.begin(), more.end());
  return sweep(tasks);
}

Outcome lem_4_1() {
  return sweep(with_a("lem_4_1", primes(7, 1000, 3, 4), [](i64) { return ParamPolicy{true, 0}; }));
}

Outcome remark_1_1() {
  std::vector<Task> tasks;
  for (i64 p : primes(5, 5000, 1, 4)) tasks.push_back({"remark_1_1", p, {}});
  const auto reports = run_tasks(tasks, kJobs);
  Outcome out = summarize(reports);
  const auto sensitive = std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) {
    return r.params.at(1).value == 1;
  });
  out.detail += ", " + std::to_string(sensitive) + " primes depend on the floor convention";
  return out;
}

Outcome lem_5_1() {
  std::vector<Task> tasks;
  for (i64 p : primes(7, 1000, 3, 4)) tasks.push_back({"lem_5_1", p, {}});
  Outcome out = sweep(tasks);
  if (!out.pass) return out;
  std::size_t sums = 0;
  for (i64 p : primes(3, 5000, 3, 4)) {
    i64 sum = 0;
    if (p % 8 == 3) {
      for (i64 k = 1; 4 * k < p; ++k) sum += legendre(k, p);
    } else {
      for (i64 k = p / 4 + 1; 2 * k < p; ++k) sum += legendre(k, p);
    }
    if (sum != 0) return {false, "character sum " + std::to_string(sum) + " at p=" + std::to_string(p)};
    ++sums;
  }
  out.detail += ", " + std::to_string(sums) + " zero sums";
  return out;
}

Outcome structural() {
  for (i64 p : primes(5, 10000, 1, 4)) {
    if (quad_norm(fundamental_unit(p)) != -1) return {false, "N(eps) != -1 at p=" + std::to_string(p)};
  }
  for (i64 p : primes(5, 1000, 1, 4)) {
    if (class_number_real(p) % 2 != 1) return {false, "even h at p=" + std::to_string(p)};
  }
  for (i64 p : primes(3, 101, 1, 2)) {
    const long expected = p % 4 == 1 ? p : -p;
    if (!(gauss_sum(p) * gauss_sum(p) == CycloElem::constant(p, expected))) {
      return {false, "G^2 wrong at p=" + std::to_string(p)};
    }
  }
  std::mt19937_64 gen(20261016);
  const auto ps = primes(5, 61, 1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const i64 p = ps[gen() % ps.size()];
    const long b2 = static_cast<long>(gen() % 2001) - 1000;
    const long a2 = 2 * (static_cast<long>(gen() % 2001) - 1000) + (b2 & 1);
    // (a2 + b2 sqrt(p))/2 = (a2 - b2)/2 + b2 (1 + G)/2, (1 + G)/2 = 1 + sum over residues.
    CycloElem half = CycloElem::constant(p, 1);
    for (i64 j = 1; 2 * j < p; ++j) half += root_power(p, j * j);
    const CycloElem x = CycloElem::constant(p, (a2 - b2) / 2) + mpz_class(b2) * half;
    const QuadraticCoords q = to_quadratic(x);
    mpq_class a(a2, 2), b(b2, 2);
    a.canonicalize();
    b.canonicalize();
    if (q.rational != a || q.irrational != b) {
      return {false, "round trip failed at p=" + std::to_string(p)};
    }
  }
  return {true, "units to 10^4, h(p) to 1000, G^2 to 101, 1000 round trips"};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& qrv) {
  if (qrv.empty()) return {false, "no qrv binary given"};
  const auto dir = std::filesystem::temp_directory_path();
  const auto one = dir / "qrv_acceptance_jobs1.csv";
  const auto eight = dir / "qrv_acceptance_jobs8.csv";
  const std::string base = "\"" + qrv + "\" verify --claims all --pmin 5 --pmax 199";
  const int rc1 = std::system((base + " --jobs 1 --out \"" + one.string() + "\"").c_str());
  const int rc8 = std::system((base + " --jobs 8 --out \"" + eight.string() + "\"").c_str());
  if (rc1 != 0 || rc8 != 0) {
    return {false, "exit statuses " + std::to_string(rc1) + " and " + std::to_string(rc8)};
  }
  const std::string a = slurp(one);
  const std::string b = slurp(eight);
  std::filesystem::remove(one);
  std::filesystem::remove(eight);
  if (a.empty() || a != b) return {false, "outputs differ"};
  return {true, std::to_string(std::count(a.begin(), a.end(), '\n')) + " identical lines"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string qrv = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"thm_1_1_i", thm_1_1_i},
      {"thm_1_1_ii", thm_1_1_ii},
      {"plus_3mod4", plus_3mod4},
      {"thm_1_2", thm_1_2},
      {"thm_1_3", thm_1_3},
      {"thm_3_1", thm_3_1},
      {"lem_2_1", lem_2_1},
      {"lem_3_1_eq_2_4", lem_3_1_eq_2_4},
      {"lem_4_1", lem_4_1},
      {"remark_1_1", remark_1_1},
      {"lem_5_1", lem_5_1},
      {"structural", structural},
      {"determinism", [&] { return determinism(qrv); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s %s (%s; %.1fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
