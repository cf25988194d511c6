// sl2proj: exact tables and brute-force verification for the depth-graded
// Bernstein projectors of SL(2) over a p-adic field, plus truncated-lattice
// Fourier transform experiments on sl(2).
//
// Exit codes: 0 all passed, 1 verification failure, 2 usage/config error,
// 3 lattice point budget refused.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2p/fq.hpp"
#include "sl2p/latticeft.hpp"
#include "sl2p/tables.hpp"
#include "sl2p/verify.hpp"

namespace {

using namespace sl2p;

std::vector<long long> parse_prime_list(const std::string& csv) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (!tok.empty()) {
      long long v = std::stoll(tok);
      if (!is_odd_prime(v)) throw CLI::ValidationError("'" + tok + "' is not an odd prime");
      out.push_back(v);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty prime list");
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path);
}

long long budget_from_env(long long fallback) {
  const char* env = std::getenv("BERNSTEIN_BUDGET");
  if (!env || !*env) return fallback;
  return std::stoll(env);
}

// flat key=value file; command-line flags win over file entries
void apply_config(CLI::App* cmd, const std::string& path,
                  const std::vector<std::pair<std::string, std::string*>>& keys) {
  if (path.empty()) return;
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("config line is not key=value: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const auto& [key, target] : keys) {
    auto it = kv.find(key);
    if (it == kv.end()) continue;
    auto* opt = cmd->get_option_no_throw("--" + key);
    if (opt && opt->count() > 0) continue;  // explicit flag wins
    *target = it->second;
    kv.erase(it);
  }
  if (!kv.empty()) throw CLI::ValidationError("unknown config key: " + kv.begin()->first);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein projector tables and exact verification for SL(2) over p-adic fields"};
  app.require_subcommand(1);

  std::string q_csv = "3,5,7,11,13";
  std::string p_csv = "3,5";
  std::string depth_str = "2";
  std::string format = "md";
  std::string out_path;
  std::string ell_str = "2";
  std::string budget_str = std::to_string(budget_from_env(kDefaultPointBudget));
  std::string config_path;

  auto add_common = [&](CLI::App* cmd, bool with_q, bool with_p) {
    if (with_q) cmd->add_option("--q", q_csv, "comma list of odd primes q");
    if (with_p) cmd->add_option("--p", p_csv, "comma list of odd primes p");
    cmd->add_option("--depth-max", depth_str, "maximum depth, e.g. 2 or 3/2");
    cmd->add_option("--format", format, "output format: md, csv, json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--ell-max", ell_str, "largest truncation level for lattice sums");
    cmd->add_option("--budget", budget_str, "lattice point budget per evaluation");
    cmd->add_option("--config", config_path, "flat key=value config file; flags override");
  };

  auto* cmd_tables = app.add_subcommand("tables", "emit the depth tables and sigma grids");
  add_common(cmd_tables, true, false);

  auto* cmd_verify = app.add_subcommand("verify", "run named verification suites");
  add_common(cmd_verify, true, true);
  std::vector<std::string> suites;
  cmd_verify->add_option("--suite", suites, "suites to run (repeatable); default all");
  bool verbose = false;
  cmd_verify->add_flag("--verbose", verbose, "print every case, not only failures");

  auto* cmd_ft = app.add_subcommand("ft", "truncated-lattice Fourier transform of 1_{g_{-k}}");
  std::string y_csv;
  std::string k_str = "0";
  std::string ftp_str;
  cmd_ft->add_option("--p", ftp_str, "odd prime p")->required();
  cmd_ft->add_option("--Y", y_csv, "entries a,b,c,d of Y=[[a,b],[c,d]], d=-a; n/m with m a p-power")
      ->required();
  cmd_ft->add_option("--k", k_str, "evaluate FT(1_{g_{-k}}), half-integers allowed");
  cmd_ft->add_option("--ell-max", ell_str, "largest truncation level");
  cmd_ft->add_option("--budget", budget_str, "lattice point budget per evaluation");
  cmd_ft->add_option("--out", out_path, "output file (default stdout)");
  cmd_ft->add_option("--config", config_path, "flat key=value config file; flags override");

  auto* cmd_census = app.add_subcommand("census", "supercuspidal counts and formal degrees");
  add_common(cmd_census, true, false);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* active = app.get_subcommands().front();
    apply_config(active, config_path,
                 {{"q", &q_csv},
                  {"p", active == cmd_ft ? &ftp_str : &p_csv},
                  {"depth-max", &depth_str},
                  {"format", &format},
                  {"out", &out_path},
                  {"ell-max", &ell_str},
                  {"budget", &budget_str},
                  {"Y", &y_csv},
                  {"k", &k_str}});
    int ell_max = std::stoi(ell_str);
    long long budget = std::stoll(budget_str);
    if (cmd_tables->parsed()) {
      HalfInt dmax = HalfInt::parse(depth_str);
      std::string text;
      for (long long q : parse_prime_list(q_csv)) {
        auto tables = make_tables(q, dmax);
        if (format == "md")
          text += tables_to_markdown(tables);
        else if (format == "csv")
          text += tables_to_csv(tables);
        else
          text += tables_to_json(tables);
      }
      write_output(text, out_path);
      return 0;
    }

    if (cmd_census->parsed()) {
      HalfInt dmax = HalfInt::parse(depth_str);
      std::string text;
      for (long long q : parse_prime_list(q_csv)) {
        auto census = make_census(q, dmax);
        if (format == "md")
          text += census_to_markdown(census);
        else if (format == "csv")
          text += census_to_csv(census);
        else
          text += census_to_json(census);
      }
      write_output(text, out_path);
      return 0;
    }

    if (cmd_verify->parsed()) {
      RunOptions opt;
      opt.q_list = parse_prime_list(q_csv);
      opt.p_list = parse_prime_list(p_csv);
      opt.depth_max = HalfInt::parse(depth_str);
      opt.ell_max = ell_max;
      opt.point_budget = budget;
      if (suites.empty()) suites = suite_names();
      for (const auto& s : suites) {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
          throw CLI::ValidationError("unknown suite '" + s + "'");
      }
      std::vector<SuiteReport> reports;
      bool ok = true;
      for (const auto& s : suites) {
        reports.push_back(run_suite(s, opt));
        std::cout << report_to_text(reports.back(), verbose);
        ok = ok && reports.back().pass;
      }
      if (!out_path.empty()) write_output(reports_to_json(reports), out_path);
      return ok ? 0 : 1;
    }

    if (cmd_ft->parsed()) {
      long long ft_p = std::stoll(ftp_str);
      if (!is_odd_prime(ft_p)) throw CLI::ValidationError("p must be an odd prime");
      LieTarget Y = parse_lie_target(ft_p, y_csv);
      HalfInt k = HalfInt::parse(k_str);
      FtSweep sweep = k == HalfInt::whole(0) ? ft_stabilize(ft_p, Y, ell_max, budget)
                                             : ft_g_minus_d_stabilize(ft_p, k, Y, ell_max, budget);
      nlohmann::json out;
      out["p"] = ft_p;
      out["k"] = k.str();
      out["Y"] = Y.str();
      out["stabilized"] = sweep.stabilized;
      if (sweep.stabilized) out["ell_at_stability"] = sweep.ell_at_stability;
      out["levels"] = nlohmann::json::array();
      for (size_t i = 0; i < sweep.values.size(); ++i) {
        const CycloSum& v = sweep.values[i];
        nlohmann::json jv;
        jv["ell"] = sweep.ells[i];
        jv["histogram_order"] = v.order();
        jv["value_exact"] = {{"counts", v.counts()},
                             {"scale_num", v.scale().num()},
                             {"scale_den", v.scale().den()}};
        auto z = v.to_complex();
        jv["value_float"] = {{"re", z.real()}, {"im", z.imag()}};
        Rational rat;
        if (v.as_rational(&rat)) jv["value_rational"] = rat.str();
        out["levels"].push_back(jv);
      }
      write_output(out.dump(2) + "\n", out_path);
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
