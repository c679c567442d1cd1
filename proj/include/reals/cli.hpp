#ifndef REALS_CLI_HPP
#define REALS_CLI_HPP

// Command-line front end.
//
//   reals eval "<expr>" [--digits D | --interval 1/N] [--budget B]
//   reals compare "<e1>" "<e2>" [--precision 1/N] [--budget B]
//
// Exit codes: 0 success (including "overlap"), 1 usage error,
// 2 syntax or domain error, 3 zero divisor or exhausted budget.
//
// Defaults for digits and budget may come from a key = value file
// (./reals.toml, or --config PATH); REALS_BUDGET overrides the file's
// budget and --budget overrides both.

#include "reals/approx.hpp"
#include "reals/expr.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace reals::cli {

inline constexpr unsigned kDefaultDigits = 10;
inline constexpr const char *kDefaultConfig = "reals.toml";
inline constexpr const char *kBudgetEnv = "REALS_BUDGET";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSyntax = 2,
  kUndecided = 3,
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  unsigned digits = kDefaultDigits;
  BigInt budget = kDefaultBudget;
};

namespace detail {

inline std::string trim(const std::string &s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline BigInt positive_integer(const std::string &text, const std::string &what) {
  std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  }
  BigInt v(t);
  if (v < 1) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  }
  return v;
}

inline unsigned digits_value(const std::string &text, const std::string &what) {
  BigInt v = positive_integer(text, what);
  if (v > 100000) {
    throw UsageError(what + " is too large");
  }
  return v.convert_to<unsigned>();
}

/// "1/N" or "N" as the precision N.
inline BigInt precision_value(const std::string &text, const std::string &what) {
  std::string t = trim(text);
  if (t.rfind("1/", 0) == 0) {
    t = t.substr(2);
  }
  return positive_integer(t, what);
}

inline std::map<std::string, std::string> read_config(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read config file " + path.string());
  }
  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(lineno) +
                       ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key != "digits" && key != "budget") {
      throw UsageError(path.string() + ":" + std::to_string(lineno) +
                       ": unknown key '" + key + "'");
    }
    values[key] = value;
  }
  return values;
}

inline Settings resolve_settings(const std::optional<std::string> &config_path,
                                 const std::optional<std::string> &digits_flag,
                                 const std::optional<std::string> &budget_flag) {
  Settings s;
  std::optional<std::filesystem::path> path;
  if (config_path) {
    path = *config_path;
  } else if (std::filesystem::exists(kDefaultConfig)) {
    path = kDefaultConfig;
  }
  if (path) {
    auto values = read_config(*path);
    if (auto it = values.find("digits"); it != values.end()) {
      s.digits = digits_value(it->second, "config digits");
    }
    if (auto it = values.find("budget"); it != values.end()) {
      s.budget = positive_integer(it->second, "config budget");
    }
  }
  if (const char *env = std::getenv(kBudgetEnv); env != nullptr) {
    s.budget = positive_integer(env, kBudgetEnv);
  }
  if (digits_flag) {
    s.digits = digits_value(*digits_flag, "--digits");
  }
  if (budget_flag) {
    s.budget = positive_integer(*budget_flag, "--budget");
  }
  return s;
}

inline std::string order_word(CutOrder order) {
  switch (order) {
  case CutOrder::Less:
    return "less";
  case CutOrder::Greater:
    return "greater";
  case CutOrder::Overlap:
    break;
  }
  return "overlap";
}

} // namespace detail

/// Runs the CLI on argv (argv[0] is the program name). The answer goes to
/// `out`, diagnostics to `err`.
inline int cli_main(const std::vector<std::string> &argv, std::ostream &out,
                    std::ostream &err) {
  CLI::App app{"Exact real arithmetic with certified output", "reals"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> budget_flag;
  app.add_option("--config", config_path, "key = value defaults file");

  std::string eval_text;
  std::optional<std::string> digits_flag;
  std::optional<std::string> interval_flag;
  CLI::App *eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", eval_text, "Expression")->required();
  auto *digits_opt =
      eval->add_option("--digits", digits_flag, "Fractional digits (default 10)");
  eval->add_option("--interval", interval_flag,
                   "Print a rational interval of width <= 1/N")
      ->excludes(digits_opt);
  eval->add_option("--budget", budget_flag, "Refinement budget");
  eval->add_option("--config", config_path, "key = value defaults file");

  std::string lhs_text;
  std::string rhs_text;
  std::string precision_text = "1/1000000000000";
  CLI::App *cmp = app.add_subcommand("compare", "Compare two expressions");
  cmp->add_option("lhs", lhs_text, "Left expression")->required();
  cmp->add_option("rhs", rhs_text, "Right expression")->required();
  cmp->add_option("--precision", precision_text, "Precision 1/N");
  cmp->add_option("--budget", budget_flag, "Refinement budget");
  cmp->add_option("--config", config_path, "key = value defaults file");

  std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Settings settings =
        detail::resolve_settings(config_path, digits_flag, budget_flag);
    if (*eval) {
      ExprPtr e = parse(eval_text);
      if (interval_flag) {
        BigInt n = detail::precision_value(*interval_flag, "--interval");
        Real x = evaluate(*e, n, settings.budget);
        SignedInterval iv = rational_interval(x, n);
        out << "[" << iv.lo << ", " << iv.hi << "]\n";
      } else {
        BigInt n = pow(BigInt(10), settings.digits + 2);
        Real x = evaluate(*e, n, settings.budget);
        out << decimal(x, settings.digits) << "\n";
      }
    } else {
      BigInt n = detail::precision_value(precision_text, "--precision");
      ExprPtr a = parse(lhs_text);
      ExprPtr b = parse(rhs_text);
      Real x = evaluate(*a, n, settings.budget);
      Real y = evaluate(*b, n, settings.budget);
      out << detail::order_word(less_than(x, y, n)) << "\n";
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError &e) {
    err << "syntax error: " << e.what() << "\n";
    return kSyntax;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << "\n";
    return kSyntax;
  } catch (const ZeroAtPrecision &e) {
    err << "zero divisor: " << e.what() << "\n";
    return kUndecided;
  } catch (const PrecisionBudgetExhausted &e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kUndecided;
  }
  return kOk;
}

} // namespace reals::cli

#endif // REALS_CLI_HPP
