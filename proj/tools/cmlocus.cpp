// cmlocus: run a session file, or print the locus report for one module.
//
//   cmlocus [run] --input FILE [--json] [--max-steps N] [--field qq|fp:P] [--verify]
//   cmlocus report --input FILE [--module M] [--json] ...
//
// Exit codes: 0 ok, 2 parse error, 3 algebra error, 4 step budget exceeded.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cmlocus/budget.hpp"
#include "cmlocus/errors.hpp"
#include "cmlocus/session.hpp"

using namespace cmlocus;

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UndefinedName:
    case ErrorCode::UnknownVariable:
      return 2;
    case ErrorCode::BudgetExceeded:
      return 4;
    default:
      return 3;
  }
}

std::optional<Field> parse_field_flag(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  if (spec == "qq" || spec == "QQ") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::uint32_t p = 0;
    auto digits = spec.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      try {
        return Field::prime(p);
      } catch (const Error& e) {
        throw Error(ErrorCode::Parse, std::string("--field: ") + e.what());
      }
    }
  }
  throw Error(ErrorCode::Parse, "--field expects qq or fp:P, got '" + spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay loci, pseudo supports and Serre conditions of modules over polynomial rings"};
  std::string input, field_spec, module;
  bool as_json = false, verify = false;
  std::uint64_t max_steps = 0;

  app.add_option("-i,--input", input, "Session file ('-' for stdin)");
  app.add_flag("--json", as_json, "Emit JSON (sorted keys, canonical polynomials)");
  app.add_option("--max-steps", max_steps, "Limit on Groebner reductions (0 = unlimited)");
  app.add_option("--field", field_spec, "Override the coefficient field: qq or fp:P");
  app.add_flag("--verify", verify, "Compute all deficiency modules and check the vanishing range");
  app.require_subcommand(0, 1);
  auto* run = app.add_subcommand("run", "Execute the commands in the session file (default)");
  auto* report = app.add_subcommand("report", "Full locus report for one module");
  report->add_option("-m,--module", module, "Module name (default: the last declared)");
  run->fallthrough();
  report->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  (void)run;

  try {
    if (input.empty()) throw Error(ErrorCode::Parse, "no input file (use --input FILE)");
    std::stringstream buffer;
    if (input == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(input);
      if (!in) throw Error(ErrorCode::Parse, "cannot read '" + input + "'");
      buffer << in.rdbuf();
    }

    std::optional<StepBudget> budget;
    if (max_steps > 0) budget.emplace(max_steps);
    BudgetScope scope(budget ? &*budget : nullptr);

    Session session(parse_session(buffer.str(), parse_field_flag(field_spec)), {.verify = verify});
    if (report->parsed()) {
      auto out = session.report(module);
      std::cout << (as_json ? emit_json(out) : render_text(out));
    } else {
      std::string text;
      auto out = session.run_all(&text);
      std::cout << (as_json ? emit_json(out) : text);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error[" << error_code_name(e.code()) << "] " << input << ":" << e.line() << ":" << e.column()
              << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const Error& e) {
    std::cerr << "error[" << error_code_name(e.code()) << "] " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[internal] " << e.what() << "\n";
    return 3;
  }
}
