#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmlocus/locus.hpp"

namespace cmlocus {

/// Session files are line oriented; `#` starts a comment.
///
///   ring QQ[x,y,z,w] grevlex        (QQ, ZZ/p or GF(p); lex or grevlex)
///   ideal I = xz, xw, yz, yw
///   module M = quotient I
///   module N = coker [[x, y], [0, x]]   (rows listed, columns are relations)
///   module F = free 2
///   prime P = x, y
///   assert-prime P
///   assert-equidimensional M
///
/// followed by commands (the module argument defaults to the last module
/// declared):
///
///   gb [I|M]  dim [I|M]  ext j [M]  deficiency [M]  psupp i [M]  psd i [M]
///   ncm [M]  serre r [M]  at-prime P [M]  shallow s [M]  report [M]
struct Command {
  std::string name;
  std::vector<std::string> args;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct PrimeDecl {
  Ideal ideal;
  bool asserted = false;
  std::optional<PrimeIdeal> prime;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SessionFile {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, PrimeDecl> primes;
  /// Declaration order, used for defaults and for reports.
  std::vector<std::string> module_order;
  std::vector<std::string> prime_order;
  std::set<std::string> asserted_equidimensional;
  std::vector<Command> commands;
};

/// Throws ParseError (with 1-based line and column) on syntax errors,
/// undefined or duplicate names and unverifiable primes. `field` replaces
/// the coefficient field named in the ring line.
SessionFile parse_session(std::string_view text, std::optional<Field> field = std::nullopt);

struct SessionOptions {
  bool verify = false;
};

struct CommandResult {
  nlohmann::json json;
  std::string text;
};

/// Runs commands against a parsed session, caching deficiency data per
/// module. Algebra errors are rethrown with the command's line attached.
class Session {
 public:
  explicit Session(SessionFile file, SessionOptions options = {});

  const SessionFile& file() const { return file_; }
  CommandResult run(const Command& command);
  /// All commands of the file, as {"ring": ..., "results": [...]}.
  nlohmann::json run_all(std::string* text = nullptr);
  /// The full locus report for one module (default: the last declared).
  nlohmann::json report(const std::string& module = {});

 private:
  const DeficiencyData& deficiency(const std::string& module);
  const std::string& resolve_module(const std::string& name) const;
  CommandResult execute(const Command& command);

  SessionFile file_;
  SessionOptions options_;
  std::map<std::string, DeficiencyData> cache_;
};

/// Generators of the reduced basis in canonical print form; ["1"] for the
/// unit ideal and [] for the zero ideal.
nlohmann::json ideal_json(const Ideal& I);

/// Pretty-printed with sorted keys and a trailing newline.
std::string emit_json(const nlohmann::json& value);

/// Human-readable rendering of a result fragment, one `key: value` per line.
std::string render_text(const nlohmann::json& value);

}  // namespace cmlocus
