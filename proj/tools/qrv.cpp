// qrv: sweep quadratic-residue identities over ranges of primes.
//
//   qrv verify --claims thm_1_2 --pmin 5 --pmax 97 --a all
//   qrv table --pmin 5 --pmax 13 --format csv
//
// Exit status: 0 all checks pass, 2 some check failed, 1 usage or internal
// error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qrv/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFalsified = 2;

bool write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::vector<std::string> split_claims(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quadratic-residue sign and product identities"};
  app.require_subcommand(1);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  std::string claims = "all";
  qrv::i64 pmin = 0;
  qrv::i64 pmax = 0;
  std::string a_policy = "sample:4";
  std::string b_policy = "sample:4";
  std::string delta = "both";
  std::string format = "csv";
  std::string out_path = "-";
  unsigned jobs = hw;
  bool fail_fast = false;

  auto* verify = app.add_subcommand("verify", "Run identity checkers over a prime range");
  verify->add_option("--claims", claims, "Comma-separated claim ids, or 'all'")
      ->capture_default_str();
  verify->add_option("--pmin", pmin, "Smallest prime considered")->required();
  verify->add_option("--pmax", pmax, "Largest prime considered")->required();
  verify->add_option("--a", a_policy, "all | sample:N")->capture_default_str();
  verify->add_option("--b", b_policy, "all | sample:N (thm_3_1)")->capture_default_str();
  verify->add_option("--delta", delta, "1 | 2 | both (thm_1_3)")->capture_default_str();
  verify->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "Output path, '-' for stdout")->capture_default_str();
  verify->add_option("--jobs", jobs, "Concurrent tasks")->check(CLI::PositiveNumber);
  verify->add_flag("--fail-fast", fail_fast, "Stop scheduling after the first failure");

  auto* table = app.add_subcommand("table", "Emit per-prime statistics");
  table->add_option("--pmin", pmin, "Smallest prime considered")->required();
  table->add_option("--pmax", pmax, "Largest prime considered")->required();
  table->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", out_path, "Output path, '-' for stdout")->capture_default_str();
  table->add_option("--jobs", jobs, "Concurrent rows")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (*table) {
      const auto rows = qrv::build_table(pmin, pmax, jobs);
      const std::string text =
          format == "json" ? qrv::table_to_json_lines(rows) : qrv::table_to_csv(rows);
      if (!write_output(out_path, text)) {
        std::cerr << "qrv: cannot write " << out_path << "\n";
        return kExitError;
      }
      return kExitPass;
    }

    qrv::SweepConfig config;
    config.claims = split_claims(claims);
    config.pmin = pmin;
    config.pmax = pmax;
    config.a = qrv::ParamPolicy::parse(a_policy);
    config.b = qrv::ParamPolicy::parse(b_policy);
    config.delta = qrv::parse_delta(delta);
    config.jobs = jobs;
    config.fail_fast = fail_fast;

    const auto tasks = qrv::plan(config);
    const auto reports = qrv::run_tasks(tasks, config.jobs, config.fail_fast);
    const std::string text = format == "json" ? qrv::reports_to_json_lines(reports)
                                              : qrv::reports_to_csv(reports);
    if (!write_output(out_path, text)) {
      std::cerr << "qrv: cannot write " << out_path << "\n";
      return kExitError;
    }
    for (const auto& r : reports) {
      if (!r.pass) return kExitFalsified;
    }
    return kExitPass;
  } catch (const qrv::UsageError& e) {
    std::cerr << "qrv: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "qrv: internal error: " << e.what() << "\n";
    return kExitError;
  }
}
