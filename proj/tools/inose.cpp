// Command-line front end: config validation, section and curve construction,
// invariant sweeps, lattice counting, and the zero-cycle certificate engine.
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation,
// 3 at least one zero-cycle target undecided.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "inose/battery.hpp"
#include "inose/jobs.hpp"
#include "inose/lattice.hpp"
#include "inose/pencil.hpp"
#include "inose/serialize.hpp"

namespace {

inose::Quadruple parse_quad(const std::string& text) {
  std::vector<long long> parts;
  std::string token;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      try {
        std::size_t used = 0;
        parts.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        inose::fail(inose::ErrorCode::InvalidSpec, "bad quadruple entry '" + token + "'");
      }
      token.clear();
    } else {
      token += text[i];
    }
  }
  if (parts.size() != 4)
    inose::fail(inose::ErrorCode::InvalidSpec, "quadruple must have four entries p,q,r,s");
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::pair<inose::Rational, inose::Rational> parse_config_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    inose::fail(inose::ErrorCode::InvalidSpec, "config must look like a,b");
  return {inose::Rational::parse(text.substr(0, comma)),
          inose::Rational::parse(text.substr(comma + 1))};
}

void report(const inose::JobOutcome& outcome, const std::string& out_dir) {
  std::cout << outcome.record.dump(2) << "\n";
  std::cerr << "wrote";
  for (const std::string& file : outcome.files) std::cerr << " " << out_dir << "/" << file;
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructor for hyperelliptic curves from pencil sections"};
  app.require_subcommand(1);

  std::string out_dir = "out";
  app.add_option("--out", out_dir, "output directory for job records")->capture_default_str();
  app.fallthrough();

  std::string a_text = "2", b_text = "3", quad_text = "0,0,1,1";
  long long lattice_n = 1;
  long long harvest_bound = -1;
  long long n_max = 2;
  int jobs = 1;
  std::string witness_file;
  std::vector<std::string> config_texts;

  auto* verify = app.add_subcommand("verify-config", "validate Legendre parameters (a, b)");
  verify->add_option("--a", a_text, "parameter a as p/q")->required();
  verify->add_option("--b", b_text, "parameter b as p/q")->required();

  auto* section = app.add_subcommand("section", "Mordell-Weil section of a quadruple");
  section->add_option("--a", a_text)->required();
  section->add_option("--b", b_text)->required();
  section->add_option("--quad", quad_text, "coefficients p,q,r,s")->required();

  auto* curve = app.add_subcommand("curve", "hyperelliptic model with all invariants");
  curve->add_option("--a", a_text)->required();
  curve->add_option("--b", b_text)->required();
  curve->add_option("--quad", quad_text, "coefficients p,q,r,s")->required();
  curve->add_option("--harvest-bound", harvest_bound,
                    "also scan rational points up to this height");

  auto* sweep_cmd = app.add_subcommand("sweep", "build every model with 1 <= n <= n-max");
  sweep_cmd->add_option("--config", config_texts, "config a,b (repeatable)")->required();
  sweep_cmd->add_option("--n-max", n_max, "largest invariant n")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  auto* lattice_cmd = app.add_subcommand("lattice", "representation counting and search");
  auto* lattice_count = lattice_cmd->add_subcommand("count", "count quadruples with n(p,q,r,s) = n");
  lattice_count->add_option("--n", lattice_n)->required();
  auto* lattice_find = lattice_cmd->add_subcommand("find", "lexicographically smallest quadruple");
  lattice_find->add_option("--n", lattice_n)->required();
  lattice_cmd->require_subcommand(1);

  auto* zerocycle_cmd = app.add_subcommand("zerocycle", "certify vanishing targets from a witness file");
  zerocycle_cmd->add_option("--file", witness_file, "witness JSON file")->required();

  app.add_subcommand("battery", "run the full acceptance battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const inose::PencilConfig cfg =
          inose::validate_config(inose::Rational::parse(a_text), inose::Rational::parse(b_text));
      std::cout << "valid config " << cfg.to_string() << "\n";
      return 0;
    }
    if (section->parsed()) {
      inose::JobSpec spec{inose::JobKind::Section,
                          inose::json{{"a", inose::Rational::parse(a_text).to_string()},
                                      {"b", inose::Rational::parse(b_text).to_string()},
                                      {"quad", inose::to_json(parse_quad(quad_text))}}};
      report(inose::run_job(spec, out_dir), out_dir);
      return 0;
    }
    if (curve->parsed()) {
      inose::json params{{"a", inose::Rational::parse(a_text).to_string()},
                         {"b", inose::Rational::parse(b_text).to_string()},
                         {"quad", inose::to_json(parse_quad(quad_text))}};
      if (curve->count("--harvest-bound") > 0) params["harvest_bound"] = harvest_bound;
      inose::JobSpec spec{inose::JobKind::Curve, params};
      report(inose::run_job(spec, out_dir), out_dir);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      inose::json configs = inose::json::array();
      for (const std::string& text : config_texts) {
        const auto [a, b] = parse_config_pair(text);
        configs.push_back(inose::json{{"a", a.to_string()}, {"b", b.to_string()}});
      }
      inose::JobSpec spec{inose::JobKind::Sweep,
                          inose::json{{"configs", configs}, {"n_max", n_max}}};
      report(inose::run_job(spec, out_dir, jobs), out_dir);
      return 0;
    }
    if (lattice_cmd->parsed()) {
      const std::string op = lattice_count->parsed() ? "count" : "find";
      inose::JobSpec spec{inose::JobKind::Lattice, inose::json{{"op", op}, {"n", lattice_n}}};
      report(inose::run_job(spec, out_dir), out_dir);
      return 0;
    }
    if (zerocycle_cmd->parsed()) {
      inose::JobSpec spec{inose::JobKind::Zerocycle, inose::json{{"file", witness_file}}};
      const inose::JobOutcome outcome = inose::run_job(spec, out_dir);
      report(outcome, out_dir);
      return outcome.exit_code;
    }
    // battery
    const std::vector<inose::CriterionResult> results = inose::run_battery();
    const inose::JobOutcome outcome = inose::persist_battery(results, out_dir);
    std::cout << inose::battery_table(results);
    std::cerr << "wrote " << out_dir << "/" << outcome.files.front() << "\n";
    return outcome.exit_code;
  } catch (const inose::Error& e) {
    std::cerr << e.what() << "\n";
    return e.internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
