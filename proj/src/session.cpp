#include "cmlocus/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <sstream>

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands{"gb",  "dim",   "ext",      "deficiency", "psupp",  "psd",
                                      "ncm", "serre", "at-prime", "shallow",    "report"};

std::string strip_offset_suffix(const std::string& msg) {
  static const std::regex suffix(R"( at offset \d+$)");
  return std::regex_replace(msg, suffix, "");
}

class Cursor {
 public:
  Cursor(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t pos, ErrorCode code = ErrorCode::Parse) const {
    throw ParseError(code, msg, pos, lineno_, pos + 1);
  }

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  std::size_t pos() const { return pos_; }
  std::size_t lineno() const { return lineno_; }
  char peek() {
    skip_ws();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  /// [A-Za-z_][A-Za-z0-9_-]*, or fails with `what`.
  std::string word(const char* what) {
    skip_ws();
    auto start = pos_;
    if (pos_ < line_.size() && (std::isalpha(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_' || line_[pos_] == '-')) {
        ++pos_;
      }
    }
    if (start == pos_) fail(std::string("expected ") + what, start);
    return std::string(line_.substr(start, pos_ - start));
  }

  /// A run of non-space characters.
  std::string token(const char* what) {
    skip_ws();
    auto start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what, start);
    return std::string(line_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(line_.substr(pos_)) + "'", pos_);
  }

  /// Text up to the first top-level character in `stops` (or the end).
  std::pair<std::string_view, std::size_t> until(std::string_view stops) {
    auto start = pos_;
    int depth = 0;
    while (pos_ < line_.size()) {
      char c = line_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      ++pos_;
    }
    return {line_.substr(start, pos_ - start), start};
  }

  Polynomial polynomial(std::string_view text, std::size_t start, const RingPtr& ring) const {
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) fail("expected a polynomial", start + text.size());
    try {
      return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
      fail(strip_offset_suffix(e.what()), start + e.offset(), e.code());
    }
  }

  /// Comma separated polynomials running to the end of the line.
  std::vector<Polynomial> polynomial_list(const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (;;) {
      auto [text, start] = until(",");
      out.push_back(polynomial(text, start, ring));
      if (pos_ >= line_.size()) break;
      ++pos_;  // ','
    }
    return out;
  }

  /// [[a, b], [c, d]]
  std::vector<std::vector<Polynomial>> matrix(const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> rows;
    expect('[');
    if (peek() == ']') {
      ++pos_;
      return rows;
    }
    for (;;) {
      expect('[');
      std::vector<Polynomial> row;
      for (;;) {
        auto [text, start] = until(",]");
        row.push_back(polynomial(text, start, ring));
        if (pos_ >= line_.size()) fail("unterminated matrix row", pos_);
        if (line_[pos_++] == ']') break;
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        fail("matrix rows have different lengths", pos_ - 1);
      }
      rows.push_back(std::move(row));
      char c = peek();
      if (c == ']') {
        ++pos_;
        break;
      }
      expect(',');
    }
    return rows;
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

Field parse_field(Cursor& cur, const std::string& spec, std::size_t at) {
  if (spec == "QQ") return Field::rationals();
  static const std::regex zz(R"(ZZ/(\d+))"), gf(R"(GF\((\d+)\))");
  std::smatch m;
  if (std::regex_match(spec, m, zz) || std::regex_match(spec, m, gf)) {
    std::uint64_t p = 0;
    auto s = m[1].str();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc() || p > 0x7fffffffu) cur.fail("characteristic out of range", at);
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      cur.fail(e.what(), at);
    }
  }
  cur.fail("unknown field '" + spec + "' (expected QQ, ZZ/p or GF(p))", at);
}

class SessionParser {
 public:
  explicit SessionParser(std::optional<Field> field) : field_override_(field) {}

  SessionFile parse(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
      auto end = text.find('\n', begin);
      if (end == std::string_view::npos) end = text.size();
      auto line = text.substr(begin, end - begin);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      ++lineno;
      Cursor cur(line, lineno);
      if (!cur.at_end()) statement(cur, line);
      if (end == text.size()) break;
      begin = end + 1;
    }
    if (!file_.ring) throw ParseError(ErrorCode::Parse, "missing ring declaration", 0, 1, 1);
    for (auto& [name, decl] : file_.primes) {
      try {
        decl.prime = PrimeIdeal::make(decl.ideal, decl.asserted);
      } catch (const Error& e) {
        throw ParseError(e.code(), "prime " + name + ": " + e.what(), 0, decl.line, decl.column);
      }
    }
    return std::move(file_);
  }

 private:
  void statement(Cursor& cur, std::string_view line) {
    auto at = (cur.skip_ws(), cur.pos());
    auto keyword = cur.word("a declaration or command");
    if (keyword == "ring") return ring(cur);
    if (!file_.ring) cur.fail("the ring must be declared first", at);
    if (keyword == "ideal") return ideal(cur);
    if (keyword == "module") return module(cur);
    if (keyword == "prime") return prime(cur);
    if (keyword == "assert-prime") {
      auto nat = (cur.skip_ws(), cur.pos());
      auto name = cur.word("a prime name");
      cur.expect_end();
      auto it = file_.primes.find(name);
      if (it == file_.primes.end()) cur.fail("undefined prime '" + name + "'", nat, ErrorCode::UndefinedName);
      it->second.asserted = true;
      return;
    }
    if (keyword == "assert-equidimensional") {
      auto nat = (cur.skip_ws(), cur.pos());
      auto name = cur.word("a module name");
      cur.expect_end();
      if (!file_.modules.count(name)) cur.fail("undefined module '" + name + "'", nat, ErrorCode::UndefinedName);
      file_.asserted_equidimensional.insert(name);
      return;
    }
    if (kCommands.count(keyword)) return command(cur, keyword, line, at);
    cur.fail("unknown keyword '" + keyword + "'", at);
  }

  void ring(Cursor& cur) {
    auto at = (cur.skip_ws(), cur.pos());
    if (file_.ring) cur.fail("only one ring per session", at);
    auto [spec_text, spec_at] = cur.until("[");
    std::string spec(spec_text);
    while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.pop_back();
    auto field = parse_field(cur, spec, spec_at);
    if (field_override_) field = *field_override_;
    cur.expect('[');
    std::vector<std::string> vars;
    for (;;) {
      vars.push_back(cur.word("a variable name"));
      if (cur.peek() == ']') break;
      cur.expect(',');
    }
    cur.expect(']');
    auto order = MonomialOrder::grevlex();
    if (!cur.at_end()) {
      auto oat = cur.pos();
      auto name = cur.word("a monomial order");
      if (name == "lex") {
        order = MonomialOrder::lex();
      } else if (name != "grevlex") {
        cur.fail("unknown monomial order '" + name + "' (expected lex or grevlex)", oat);
      }
    }
    cur.expect_end();
    try {
      file_.ring = Ring::make(field, vars, order);
    } catch (const Error& e) {
      cur.fail(e.what(), at, e.code());
    }
  }

  std::string declare(Cursor& cur) {
    auto at = (cur.skip_ws(), cur.pos());
    auto name = cur.word("a name");
    if (names_.count(name)) cur.fail("'" + name + "' is already defined", at);
    names_.insert(name);
    cur.expect('=');
    return name;
  }

  void ideal(Cursor& cur) {
    auto name = declare(cur);
    file_.ideals.emplace(name, Ideal(file_.ring, cur.polynomial_list(file_.ring)));
  }

  void module(Cursor& cur) {
    auto name = declare(cur);
    auto kat = (cur.skip_ws(), cur.pos());
    auto kind = cur.word("quotient, coker or free");
    std::optional<PresentedModule> M;
    if (kind == "quotient") {
      auto iat = (cur.skip_ws(), cur.pos());
      auto ideal = cur.word("an ideal name");
      auto it = file_.ideals.find(ideal);
      if (it == file_.ideals.end()) cur.fail("undefined ideal '" + ideal + "'", iat, ErrorCode::UndefinedName);
      M = PresentedModule::quotient(it->second);
    } else if (kind == "coker") {
      auto rows = cur.matrix(file_.ring);
      if (rows.empty()) {
        M = PresentedModule::zero(file_.ring);
      } else {
        M = PresentedModule(PolyMatrix(file_.ring, rows));
      }
    } else if (kind == "free") {
      auto rat = (cur.skip_ws(), cur.pos());
      auto rank = cur.token("a rank");
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), n);
      if (ec != std::errc() || ptr != rank.data() + rank.size() || n > 64) cur.fail("invalid rank '" + rank + "'", rat);
      M = PresentedModule::free(file_.ring, n);
    } else {
      cur.fail("expected quotient, coker or free", kat);
    }
    cur.expect_end();
    file_.modules.emplace(name, std::move(*M));
    file_.module_order.push_back(name);
  }

  void prime(Cursor& cur) {
    auto at = (cur.skip_ws(), cur.pos());
    auto name = declare(cur);
    PrimeDecl decl{Ideal(file_.ring, cur.polynomial_list(file_.ring)), false, std::nullopt, cur.lineno(), at + 1};
    file_.primes.emplace(name, std::move(decl));
    file_.prime_order.push_back(name);
  }

  void require_module(Cursor& cur, const std::string& name, std::size_t at) {
    if (!file_.modules.count(name)) cur.fail("undefined module '" + name + "'", at, ErrorCode::UndefinedName);
  }

  void command(Cursor& cur, const std::string& name, std::string_view line, std::size_t at) {
    Command c{name, {}, {}, cur.lineno(), at + 1};
    auto integer = [&](const char* what) {
      auto iat = (cur.skip_ws(), cur.pos());
      auto tok = cur.token(what);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
        cur.fail(std::string("expected ") + what + ", got '" + tok + "'", iat);
      }
      c.args.push_back(tok);
    };
    auto optional_module = [&] {
      if (cur.at_end()) {
        if (file_.module_order.empty()) cur.fail("no module declared", at, ErrorCode::UndefinedName);
        c.args.push_back(file_.module_order.back());
        return;
      }
      auto mat = cur.pos();
      auto m = cur.word("a module name");
      require_module(cur, m, mat);
      c.args.push_back(m);
    };

    if (name == "gb" || name == "dim") {
      if (cur.at_end()) {
        optional_module();
      } else {
        auto oat = cur.pos();
        auto obj = cur.word("an ideal or module name");
        if (!file_.ideals.count(obj) && !file_.modules.count(obj)) {
          cur.fail("undefined ideal or module '" + obj + "'", oat, ErrorCode::UndefinedName);
        }
        c.args.push_back(obj);
      }
    } else if (name == "ext") {
      integer("an Ext index");
      optional_module();
    } else if (name == "psupp" || name == "psd" || name == "serre" || name == "shallow") {
      integer("a nonnegative integer");
      optional_module();
    } else if (name == "at-prime") {
      auto pat = (cur.skip_ws(), cur.pos());
      auto p = cur.word("a prime name");
      if (!file_.primes.count(p)) cur.fail("undefined prime '" + p + "'", pat, ErrorCode::UndefinedName);
      c.args.push_back(p);
      optional_module();
    } else {
      optional_module();
    }
    cur.expect_end();
    std::string text(line);
    auto first = text.find_first_not_of(" \t\r");
    auto last = text.find_last_not_of(" \t\r");
    c.text = text.substr(first, last - first + 1);
    file_.commands.push_back(std::move(c));
  }

  std::optional<Field> field_override_;
  SessionFile file_;
  std::set<std::string> names_;
};

json vector_json(const FreeElement& v) { return v.to_string(); }

int as_int(const std::string& s) { return std::stoi(s); }

std::string inline_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); })) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
    return v.empty() ? "(0)" : s + ")";
  }
  return v.dump();
}

void render(const json& v, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, value] : v.items()) {
    if (value.is_object() && !value.empty()) {
      out << indent << key << ":\n";
      render(value, indent + "  ", out);
    } else if (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array())) {
      out << indent << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i].is_object()) {
          out << indent << "  [" << i << "]\n";
          render(value[i], indent + "    ", out);
        } else {
          out << indent << "  [" << i << "] " << inline_value(value[i]) << "\n";
        }
      }
    } else {
      out << indent << key << ": " << inline_value(value) << "\n";
    }
  }
}

}  // namespace

SessionFile parse_session(std::string_view text, std::optional<Field> field) {
  return SessionParser(field).parse(text);
}

json ideal_json(const Ideal& I) {
  json out = json::array();
  for (const auto& g : *I.basis()) out.push_back(g.to_string());
  return out;
}

std::string emit_json(const json& value) { return value.dump(2) + "\n"; }

std::string render_text(const json& value) {
  std::ostringstream out;
  render(value, "", out);
  return out.str();
}

Session::Session(SessionFile file, SessionOptions options) : file_(std::move(file)), options_(options) {}

const std::string& Session::resolve_module(const std::string& name) const {
  if (name.empty()) {
    if (file_.module_order.empty()) throw Error(ErrorCode::UndefinedName, "no module declared");
    return file_.module_order.back();
  }
  auto it = file_.modules.find(name);
  if (it == file_.modules.end()) throw Error(ErrorCode::UndefinedName, "undefined module '" + name + "'");
  return it->first;
}

const DeficiencyData& Session::deficiency(const std::string& module) {
  auto it = cache_.find(module);
  if (it == cache_.end()) {
    auto D = deficiency_modules(file_.modules.at(module), {.verify = options_.verify, .parallel = false});
    if (options_.verify) {
      for (int i = 0; i <= D.ambient_dim; ++i) {
        if ((i < D.depth || i > D.dim) && !D.a[i].is_unit()) {
          throw Error(ErrorCode::InvalidArgument, "verification failed: K^" + std::to_string(i) +
                                                      " is nonzero outside [depth, dim]");
        }
      }
    }
    it = cache_.emplace(module, std::move(D)).first;
  }
  return it->second;
}

json Session::report(const std::string& module) {
  const auto& name = resolve_module(module);
  const auto& D = deficiency(name);
  std::vector<std::pair<std::string, PrimeIdeal>> primes;
  for (const auto& p : file_.prime_order) primes.emplace_back(p, *file_.primes.at(p).prime);
  bool asserted = file_.asserted_equidimensional.count(name) > 0;
  auto rep = locus_report(D, primes, asserted);

  json out;
  out["ring"] = file_.ring->to_string();
  out["module"] = name;
  out["depth"] = rep.depth;
  out["dim"] = rep.dim;
  out["a"] = json::array();
  for (const auto& a : rep.a) out["a"].push_back(ideal_json(a));
  out["psd"] = rep.psd;
  out["ncm_T"] = ideal_json(rep.ncm_T);
  out["ncm_a"] = ideal_json(rep.ncm_a);
  out["ncm_matches_a"] = rep.ncm_matches_a;
  out["serre"] = json::object();
  for (const auto& [r, holds] : rep.serre) out["serre"][std::to_string(r)] = holds;
  out["primes"] = json::array();
  for (const auto& p : rep.primes) {
    json pj{{"name", p.name}, {"in_support", p.in_support}};
    if (p.in_support) {
      pj["depth"] = p.depth;
      pj["dim"] = p.dim;
      pj["cm"] = p.cm;
    } else {
      pj["depth"] = nullptr;
      pj["dim"] = nullptr;
      pj["cm"] = nullptr;
    }
    out["primes"].push_back(pj);
  }
  if (rep.equidimensional == Equidimensionality::Unknown && rep.equidimensional_asserted) {
    out["equidimensional"] = "asserted";
  } else if (rep.equidimensional == Equidimensionality::Unknown) {
    out["equidimensional"] = "unknown";
  } else {
    out["equidimensional"] = rep.equidimensional == Equidimensionality::True;
  }
  if (options_.verify) out["verified"] = true;
  return out;
}

CommandResult Session::run(const Command& command) {
  try {
    return execute(command);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(command.line) + " (" + command.text + "): " + e.what());
  }
}

CommandResult Session::execute(const Command& c) {
  json out{{"command", c.text}, {"line", c.line}};
  const auto& name = c.name;
  const auto& target = c.args.back();

  if (name == "gb" || name == "dim") {
    if (auto it = file_.ideals.find(target); it != file_.ideals.end()) {
      out["ideal"] = target;
      if (name == "gb") {
        out["basis"] = ideal_json(it->second);
      } else {
        out["dim"] = krull_dim(it->second);
      }
    } else {
      const auto& M = file_.modules.at(target);
      out["module"] = target;
      if (name == "gb") {
        out["basis"] = json::array();
        for (const auto& g : module_buchberger(M.presentation().columns())) out["basis"].push_back(vector_json(g));
      } else {
        auto ann = annihilator(M);
        out["annihilator"] = ideal_json(ann);
        out["dim"] = krull_dim(ann);
      }
    }
  } else if (name == "ext") {
    int j = as_int(c.args[0]);
    const int n = file_.ring->dimension();
    if (j > n) throw Error(ErrorCode::InvalidArgument, "Ext index " + std::to_string(j) + " exceeds " + std::to_string(n));
    auto E = ext_module(file_.modules.at(target), static_cast<std::size_t>(j));
    auto ann = annihilator(E);
    out["module"] = target;
    out["j"] = j;
    out["generators"] = E.num_generators();
    out["presentation"] = E.presentation().to_string();
    out["annihilator"] = ideal_json(ann);
    out["zero"] = is_zero_module(E);
  } else if (name == "deficiency") {
    const auto& D = deficiency(target);
    out["module"] = target;
    out["depth"] = D.depth;
    out["dim"] = D.dim;
    out["a"] = json::array();
    out["nonzero"] = json::array();
    for (int i = 0; i <= D.ambient_dim; ++i) {
      out["a"].push_back(ideal_json(D.a[i]));
      if (D.nonzero(i)) out["nonzero"].push_back(i);
    }
  } else if (name == "psupp") {
    int i = as_int(c.args[0]);
    out["module"] = target;
    out["i"] = i;
    out["ideal"] = ideal_json(psupp_ideal(deficiency(target), i));
  } else if (name == "psd") {
    int i = as_int(c.args[0]);
    out["module"] = target;
    out["i"] = i;
    out["psd"] = psd(deficiency(target), i);
  } else if (name == "ncm") {
    const auto& D = deficiency(target);
    auto T = ncm_T_ideal(D);
    auto a = ncm_a_ideal(D);
    out["module"] = target;
    out["ncm_T"] = ideal_json(T);
    out["ncm_a"] = ideal_json(a);
    out["ncm_matches_a"] = radical_equal(T, a);
  } else if (name == "serre") {
    int r = as_int(c.args[0]);
    out["module"] = target;
    out["r"] = r;
    out["holds"] = serre_condition(deficiency(target), r);
  } else if (name == "at-prime") {
    const auto& D = deficiency(target);
    const auto& p = *file_.primes.at(c.args[0]).prime;
    auto dd = depth_dim_at_prime(D, p);
    out["module"] = target;
    out["prime"] = c.args[0];
    out["depth"] = dd.depth;
    out["dim"] = dd.dim;
    out["cm"] = dd.depth == dd.dim;
  } else if (name == "shallow") {
    int s = as_int(c.args[0]);
    out["module"] = target;
    out["s"] = s;
    out["ideal"] = ideal_json(shallow_locus_ideal(deficiency(target), s));
  } else if (name == "report") {
    out["report"] = report(target);
  }
  auto shown = out;
  shown.erase("command");
  shown.erase("line");
  return {out, render_text(shown)};
}

json Session::run_all(std::string* text) {
  json out{{"ring", file_.ring->to_string()}, {"results", json::array()}};
  for (const auto& c : file_.commands) {
    auto r = run(c);
    if (text) *text += "> " + c.text + "\n" + r.text;
    out["results"].push_back(std::move(r.json));
  }
  return out;
}

}  // namespace cmlocus
