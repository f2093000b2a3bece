// gibtool: cycles, complete systems, completeness classification and prime
// surveys of order-2 (Gibonacci) and order-3 (Tribonacci) sequences mod m.
//
// Exit codes: 0 success; 1 verification or runtime failure; 2 seed terms not
// coprime; 3 bad flags; 4 resource budget exceeded; 5 completeness
// prediction disagrees with observation (must never happen).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gib/completeness.hpp"
#include "gib/survey.hpp"
#include "gib/system.hpp"
#include "gib/verify.hpp"

namespace {

using gib::i64;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_non_coprime = 2;
constexpr int exit_bad_flags = 3;
constexpr int exit_resource_limit = 4;
constexpr int exit_prediction_mismatch = 5;

std::string cycle_text(const std::vector<i64>& residues) {
  std::string out = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(residues[i]);
  }
  out += ")";
  return out;
}

i64 state_budget_from_env() {
  const char* raw = std::getenv("GIBTOOL_STATE_BUDGET");
  if (raw == nullptr) return gib::default_state_budget;
  char* end = nullptr;
  const long long parsed = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 1) {
    throw std::invalid_argument(
        "GIBTOOL_STATE_BUDGET must be a positive integer");
  }
  return parsed;
}

gib::seed make_seed(const std::vector<i64>& terms, int order) {
  if (static_cast<int>(terms.size()) != order) {
    throw std::invalid_argument("--seed needs exactly " +
                                std::to_string(order) + " terms for --order " +
                                std::to_string(order));
  }
  return gib::validate_seed(terms);
}

int run_cycle(int order, const std::vector<i64>& seed_terms, i64 m, bool raw) {
  const gib::seed s = make_seed(seed_terms, order);
  const gib::modulus mod(m);
  const std::vector<i64> residues =
      raw ? gib::terms_one_period(s, mod)
          : gib::extract_cycle(s, mod).residues();
  std::cout << cycle_text(residues) << '\n';
  return exit_ok;
}

int run_system(int order, i64 m, const std::string& format) {
  const gib::complete_system system = gib::complete_system::enumerate(
      gib::modulus(m), order, state_budget_from_env());
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["modulus"] = system.mod();
    doc["order"] = system.order();
    doc["term_count"] = system.term_count();
    auto rows = nlohmann::ordered_json::array();
    for (const gib::cycle& c : system.cycles()) rows.push_back(c.residues());
    doc["cycles"] = std::move(rows);
    std::cout << doc.dump() << '\n';
  } else {
    for (const gib::cycle& c : system.cycles()) {
      std::cout << cycle_text(c.residues()) << '\n';
    }
    std::cout << "total terms: " << system.term_count() << '\n';
  }
  return exit_ok;
}

int run_complete(int order, const std::vector<i64>& seed_terms, i64 m) {
  const auto report = gib::is_complete(make_seed(seed_terms, order),
                                       gib::modulus(m));
  std::cout << (report.complete ? "complete" : "defective") << '\n';
  std::cout << "cycle length: " << report.cycle_length << '\n';
  if (!report.missing.empty()) {
    std::cout << "missing:";
    for (const i64 r : report.missing) std::cout << ' ' << r;
    std::cout << '\n';
  }
  return exit_ok;
}

int run_classify(const std::vector<i64>& seed_terms) {
  const gib::seed s = make_seed(seed_terms, 2);
  const auto invariant = gib::gibonacci_invariant(s);
  const bool lucas = gib::classify(s) == gib::sequence_class::lucas_class;
  std::cout << (lucas ? "M_L" : "M_F") << " (invariant "
            << invariant.magnitude << ")\n";
  return exit_ok;
}

int run_member(const std::vector<i64>& seed_terms, i64 m) {
  const gib::seed s = make_seed(seed_terms, 2);
  const gib::modulus mod(m);
  const bool predicted = gib::predicted_complete(s, mod);
  const bool observed = gib::is_complete(s, mod).complete;
  std::cout << "predicted: " << (predicted ? "true" : "false") << '\n';
  std::cout << "observed: " << (observed ? "true" : "false") << '\n';
  if (predicted != observed) {
    std::cerr << "prediction disagrees with observation mod " << m << '\n';
    return exit_prediction_mismatch;
  }
  return exit_ok;
}

int run_survey(int order, const std::vector<i64>& seed_terms, int primes,
               int bucket, const std::string& format, const std::string& out,
               int jobs) {
  const gib::seed s = make_seed(seed_terms, order);
  gib::survey_options options;
  options.jobs = jobs;
  const auto records = gib::run_survey(s, primes, options);
  const auto table = gib::bucketize(records, bucket);
  const auto fmt = format == "json" ? gib::export_format::json
                                    : gib::export_format::csv;
  if (!out.empty()) {
    gib::export_survey(s, records, table, fmt, out);
  } else if (fmt == gib::export_format::csv) {
    gib::write_survey_csv(records, std::cout);
  } else {
    gib::write_survey_json(s, records, table, std::cout);
  }
  return exit_ok;
}

int run_verify(bool list_only) {
  const auto& checks = gib::verify::reference_checks();
  if (list_only) {
    for (const auto& check : checks) std::cout << check.name << '\n';
    return exit_ok;
  }
  int failed = 0;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    gib::verify::check_result result;
    try {
      result = check.run();
    } catch (const std::exception& e) {
      result = {false, e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    if (result.pass) {
      std::cout << "PASS " << check.name << " (" << elapsed.count() << " ms)\n";
    } else {
      ++failed;
      std::cout << "FAIL " << check.name << ": " << result.detail << '\n';
    }
  }
  std::cout << checks.size() << " checks: " << (checks.size() - failed)
            << " passed, " << failed << " failed\n";
  return failed == 0 ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cycles, complete systems and completeness surveys of order-2 and "
      "order-3 additive sequences mod m"};
  app.require_subcommand(1);

  int order = 2;
  std::vector<i64> seed_terms;
  i64 mod_value = 1;
  bool raw = false;
  std::string format;
  int primes = 300;
  int bucket = 20;
  std::string out_path;
  int jobs = 0;
  std::string suite = "paper";
  bool list_only = false;

  auto add_order = [&order](CLI::App* cmd) {
    cmd->add_option("--order", order, "recurrence order")
        ->check(CLI::IsMember({2, 3}));
  };
  auto add_seed = [&seed_terms](CLI::App* cmd) {
    cmd->add_option("--seed", seed_terms, "comma-separated initial terms")
        ->required()
        ->delimiter(',');
  };
  auto add_modulus = [&mod_value](CLI::App* cmd) {
    cmd->add_option("--modulus", mod_value, "modulus m >= 1")->required();
  };

  CLI::App* cycle_cmd =
      app.add_subcommand("cycle", "print the cycle of a sequence mod m");
  add_order(cycle_cmd);
  add_seed(cycle_cmd);
  add_modulus(cycle_cmd);
  cycle_cmd->add_flag("--raw", raw,
                      "print the unrotated period starting from the seed");

  CLI::App* system_cmd = app.add_subcommand(
      "system", "enumerate all inequivalent cycles mod m");
  add_order(system_cmd);
  add_modulus(system_cmd);
  system_cmd->add_option("--format", format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* complete_cmd = app.add_subcommand(
      "complete", "report which residues a sequence attains mod m");
  add_order(complete_cmd);
  add_seed(complete_cmd);
  add_modulus(complete_cmd);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify an order-2 seed by its invariant mod 5");
  add_seed(classify_cmd);

  CLI::App* member_cmd = app.add_subcommand(
      "member", "compare predicted and observed completeness mod m");
  add_seed(member_cmd);
  add_modulus(member_cmd);

  CLI::App* survey_cmd = app.add_subcommand(
      "survey", "completeness survey over the first N primes");
  add_order(survey_cmd);
  add_seed(survey_cmd);
  survey_cmd->add_option("--primes", primes, "number of primes to survey")
      ->default_val(300)
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("--bucket", bucket, "primes per summary bucket")
      ->default_val(20)
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("--format", format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  survey_cmd->add_option("--out", out_path, "write to a file instead of stdout");
  survey_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->default_val(0)
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the reference verification suite");
  verify_cmd->add_option("--suite", suite, "check suite to run")
      ->default_val("paper")
      ->check(CLI::IsMember({"paper"}));
  verify_cmd->add_flag("--list", list_only, "list checks without running");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_flags;
  }

  try {
    if (cycle_cmd->parsed()) {
      return run_cycle(order, seed_terms, mod_value, raw);
    }
    if (system_cmd->parsed()) {
      return run_system(order, mod_value, format);
    }
    if (complete_cmd->parsed()) {
      return run_complete(order, seed_terms, mod_value);
    }
    if (classify_cmd->parsed()) {
      return run_classify(seed_terms);
    }
    if (member_cmd->parsed()) {
      return run_member(seed_terms, mod_value);
    }
    if (survey_cmd->parsed()) {
      return run_survey(order, seed_terms, primes, bucket, format, out_path,
                        jobs);
    }
    if (verify_cmd->parsed()) {
      return run_verify(list_only);
    }
  } catch (const gib::non_coprime_seed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_non_coprime;
  } catch (const gib::resource_limit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_resource_limit;
  } catch (const gib::wrong_arity& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_flags;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_flags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_bad_flags;
}
