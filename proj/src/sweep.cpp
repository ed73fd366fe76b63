#include "qrv/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "qrv/counting.hpp"
#include "qrv/quadfield.hpp"

namespace qrv {

namespace {

enum class Shape { none, a, a_b, delta, c };

struct ClaimSpec {
  std::string_view id;
  i64 residue;
  i64 modulus;
  i64 min_p;
  Shape shape;
};

// Alphabetical, which is also the order of the merged output.
constexpr ClaimSpec kCatalog[] = {
    {"eq_2_4", 1, 4, 5, Shape::a},       {"lem_2_1", 1, 2, 3, Shape::c},
    {"lem_3_1", 1, 2, 3, Shape::a},      {"lem_4_1", 3, 4, 7, Shape::a},
    {"lem_5_1", 3, 4, 7, Shape::none},   {"plus_3mod4", 3, 4, 7, Shape::a},
    {"remark_1_1", 1, 4, 5, Shape::none}, {"thm_1_1_i", 1, 8, 17, Shape::a},
    {"thm_1_1_ii", 5, 8, 5, Shape::a},   {"thm_1_2", 1, 4, 5, Shape::a},
    {"thm_1_3", 3, 4, 3, Shape::delta},  {"thm_3_1", 3, 4, 3, Shape::a_b},
};

const ClaimSpec* find_claim(std::string_view id) {
  for (const auto& spec : kCatalog) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

std::vector<int> deltas(DeltaChoice choice) {
  switch (choice) {
    case DeltaChoice::one:
      return {1};
    case DeltaChoice::two:
      return {2};
    case DeltaChoice::both:
      break;
  }
  return {1, 2};
}

i64 min_prime_for(const ClaimSpec& spec, int delta) {
  return spec.shape == Shape::delta && delta == 1 ? 5 : spec.min_p;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

ParamPolicy ParamPolicy::parse(std::string_view text) {
  if (text == "all") return {true, 0};
  constexpr std::string_view prefix = "sample:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      return {false, n};
    }
  }
  throw UsageError("expected 'all' or 'sample:N' with N >= 1, got '" + std::string(text) + "'");
}

std::vector<i64> select_params(i64 p, const ParamPolicy& policy) {
  std::vector<i64> out;
  if (policy.all || policy.sample >= p - 1) {
    for (i64 a = 1; a <= p - 1; ++a) out.push_back(a);
    return out;
  }
  std::vector<i64> chosen;
  for (i64 v : {i64{1}, i64{2}, smallest_nonresidue(p), p - 1}) {
    if (static_cast<int>(chosen.size()) == policy.sample) break;
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
  }
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p));
  while (static_cast<int>(chosen.size()) < policy.sample) {
    const i64 v = 1 + static_cast<i64>(gen() % static_cast<std::uint64_t>(p - 1));
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DeltaChoice parse_delta(std::string_view text) {
  if (text == "1") return DeltaChoice::one;
  if (text == "2") return DeltaChoice::two;
  if (text == "both") return DeltaChoice::both;
  throw UsageError("--delta must be 1, 2 or both");
}

std::vector<std::string_view> claim_ids() {
  std::vector<std::string_view> ids;
  for (const auto& spec : kCatalog) ids.push_back(spec.id);
  return ids;
}

std::vector<Task> plan(const SweepConfig& config) {
  if (config.pmin < 2 || config.pmax < config.pmin || config.pmax >= (i64{1} << 31)) {
    throw UsageError("need 2 <= pmin <= pmax < 2^31");
  }
  const bool everything =
      config.claims.empty() ||
      std::find(config.claims.begin(), config.claims.end(), "all") != config.claims.end();

  std::set<std::string_view> requested;
  if (!everything) {
    for (const auto& id : config.claims) {
      const ClaimSpec* spec = find_claim(id);
      if (spec == nullptr) throw UsageError("unknown claim '" + id + "'");
      requested.insert(spec->id);
    }
  }

  std::vector<i64> primes;
  for (i64 p : primes_in(config.pmin, config.pmax)) {
    if (p != 2) primes.push_back(p);
  }

  std::vector<Task> tasks;
  for (const auto& spec : kCatalog) {
    if (!everything && !requested.contains(spec.id)) continue;
    for (i64 p : primes) {
      if (p % spec.modulus != spec.residue) continue;
      const std::string claim(spec.id);
      auto admits = [&](int delta) {
        if (p >= min_prime_for(spec, delta)) return true;
        if (!everything) {
          throw UsageError(claim + " is not defined at p=" + std::to_string(p) +
                           (spec.shape == Shape::delta ? " with delta=1" : ""));
        }
        return false;
      };
      switch (spec.shape) {
        case Shape::none:
          if (admits(0)) tasks.push_back({claim, p, {}});
          break;
        case Shape::a:
        case Shape::c:
          if (!admits(0)) break;
          for (i64 a : select_params(p, config.a)) tasks.push_back({claim, p, {a}});
          break;
        case Shape::a_b:
          if (!admits(0)) break;
          for (i64 a : select_params(p, config.a)) {
            for (i64 b : select_params(p, config.b)) tasks.push_back({claim, p, {a, b}});
          }
          break;
        case Shape::delta:
          for (int d : deltas(config.delta)) {
            if (admits(d)) tasks.push_back({claim, p, {d}});
          }
          break;
      }
    }
  }
  return tasks;
}

VerifyReport run_task(const Task& task) {
  const std::string& c = task.claim;
  const auto& x = task.args;
  if (c == "thm_1_1_i") return check_thm_1_1_i(task.p, x.at(0));
  if (c == "thm_1_1_ii") return check_thm_1_1_ii(task.p, x.at(0));
  if (c == "plus_3mod4") return check_plus_3mod4(task.p, x.at(0));
  if (c == "thm_1_2") return check_thm_1_2(task.p, x.at(0));
  if (c == "thm_1_3") return check_thm_1_3(task.p, static_cast<int>(x.at(0)));
  if (c == "thm_3_1") return check_thm_3_1(task.p, x.at(0), x.at(1));
  if (c == "lem_4_1") return check_lem_4_1(task.p, x.at(0));
  if (c == "remark_1_1") return check_remark_1_1(task.p);
  if (c == "lem_5_1") return check_lem_5_1(task.p);
  if (c == "lem_2_1") return check_lem_2_1(task.p, x.at(0));
  if (c == "lem_3_1") return check_lem_3_1(task.p, x.at(0));
  if (c == "eq_2_4") return check_eq_2_4(task.p, x.at(0));
  throw std::invalid_argument("run_task: unknown claim '" + c + "'");
}

void sort_reports(std::vector<VerifyReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const VerifyReport& l, const VerifyReport& r) {
    if (l.claim != r.claim) return l.claim < r.claim;
    if (l.p != r.p) return l.p < r.p;
    return l.params < r.params;
  });
}

std::vector<VerifyReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs,
                                    bool fail_fast) {
  std::vector<std::optional<VerifyReport>> slots(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    slots[i] = run_task(tasks[i]);
    return !(fail_fast && !slots[i]->pass);
  });
  std::vector<VerifyReport> reports;
  reports.reserve(tasks.size());
  for (auto& slot : slots) {
    if (slot) reports.push_back(std::move(*slot));
  }
  sort_reports(reports);
  return reports;
}

std::string flatten_params(const std::vector<Param>& params) {
  std::string out;
  for (const auto& param : params) {
    if (!out.empty()) out += ';';
    out += param.name + "=" + std::to_string(param.value);
  }
  return out;
}

std::string reports_to_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream out;
  out << "claim,p,params,lhs,rhs,pass\r\n";
  for (const auto& r : reports) {
    out << csv_field(r.claim) << ',' << r.p << ',' << csv_field(flatten_params(r.params)) << ','
        << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << (r.pass ? "true" : "false")
        << "\r\n";
  }
  return out.str();
}

std::string reports_to_json_lines(const std::vector<VerifyReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& param : r.params) params[param.name] = param.value;
    nlohmann::ordered_json record;
    record["claim"] = r.claim;
    record["p"] = r.p;
    record["params"] = std::move(params);
    record["lhs"] = r.lhs;
    record["rhs"] = r.rhs;
    record["pass"] = r.pass;
    out += record.dump();
    out += '\n';
  }
  return out;
}

TableRow table_row(i64 p) {
  require_odd_prime(p, "table_row");
  TableRow row;
  row.p = p;
  row.p_mod_8 = p % 8;
  row.s = s_count(p, 1);
  row.t = t_count(p, 1);
  row.below_quarter = count_below_quarter(p, 1, -1);
  const ClassData data = class_data(p);
  row.h_imag = data.h_imag;
  row.h_real = data.h_real;
  if (data.eps) {
    row.eps_a = data.eps->a().get_str();
    row.eps_b = data.eps->b().get_str();
  }
  if (p % 4 == 1) {
    const TwoSquares xy = two_squares(p);
    row.x = xy.x;
    row.y = xy.y;
  }
  return row;
}

std::vector<TableRow> build_table(i64 pmin, i64 pmax, unsigned jobs) {
  if (pmin < 2 || pmax < pmin || pmax >= (i64{1} << 31)) {
    throw UsageError("need 2 <= pmin <= pmax < 2^31");
  }
  std::vector<i64> primes;
  for (i64 p : primes_in(pmin, pmax)) {
    if (p != 2) primes.push_back(p);
  }
  std::vector<TableRow> rows(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    rows[i] = table_row(primes[i]);
    return true;
  });
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "p,p_mod_8,s,t,h_imag,h_real,eps_a,eps_b,below_quarter,x,y\r\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.p_mod_8 << ',' << r.s << ',' << r.t << ',' << opt_str(r.h_imag) << ','
        << opt_str(r.h_real) << ',' << opt_str(r.eps_a) << ',' << opt_str(r.eps_b) << ','
        << r.below_quarter << ',' << opt_str(r.x) << ',' << opt_str(r.y) << "\r\n";
  }
  return out.str();
}

std::string table_to_json_lines(const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::ordered_json record;
    record["p"] = r.p;
    record["p_mod_8"] = r.p_mod_8;
    record["s"] = r.s;
    record["t"] = r.t;
    record["h_imag"] = opt_json(r.h_imag);
    record["h_real"] = opt_json(r.h_real);
    record["eps_a"] = opt_json(r.eps_a);
    record["eps_b"] = opt_json(r.eps_b);
    record["below_quarter"] = r.below_quarter;
    record["x"] = opt_json(r.x);
    record["y"] = opt_json(r.y);
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace qrv
