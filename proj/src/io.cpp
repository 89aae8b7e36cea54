#include "smoothred/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace smoothred {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

struct Token {
  enum Kind { Int, Ident, Op, End } kind = End;
  std::string text;
  int col = 0;
};

class Lexer {
 public:
  Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw ParseError(msg, line_, col);
  }
  int line() const { return line_; }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.kind = Token::Int;
      tok_.text = s_.substr(b, pos_ - b);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = s_.substr(b, pos_ - b);
      return;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      tok_.kind = Token::Op;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", tok_.col);
  }

  const std::string& s_;
  int line_;
  size_t pos_ = 0;
  Token tok_;
};

class ExprParser {
 public:
  ExprParser(Lexer& lex, const RingPtr& ring, const VarNames& vars)
      : lex_(lex), ring_(ring), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    if (lex_.peek().kind != Token::End)
      lex_.fail("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().col);
    return p;
  }

 private:
  Poly expr() {
    Poly p = term();
    while (is_op("+") || is_op("-")) {
      Token t = lex_.take();
      Poly rhs = term();
      p = (t.text == "+") ? p + rhs : p - rhs;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (is_op("*") || is_op("/")) {
      Token t = lex_.take();
      Poly rhs = factor();
      if (t.text == "*") {
        p = p * rhs;
      } else {
        p = divide_poly(p, rhs, t.col);
      }
    }
    return p;
  }

  Poly factor() {
    if (is_op("-")) {
      lex_.take();
      return -factor();
    }
    Poly p = primary();
    while (is_op("^")) {
      Token caret = lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Int) lex_.fail("exponent must be a nonnegative integer", caret.col);
      p = p.pow(std::stoull(e.text));
    }
    return p;
  }

  Poly primary() {
    Token t = lex_.take();
    if (t.kind == Token::Int)
      return Poly::constant(ring_, vars_, RingElement::from_int(ring_, Int(t.text)));
    if (t.kind == Token::Ident) {
      for (size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == t.text) return Poly::variable(ring_, vars_, i);
      // A quotient base contributes its own variable classes as constants.
      if (ring_->kind() == RingKind::PolynomialQuotient) {
        const auto& q = ring_->quotient();
        for (size_t i = 0; i < q.vars->size(); ++i)
          if ((*q.vars)[i] == t.text)
            return Poly::constant(
                ring_, vars_,
                RingElement::quotient_class(ring_, Poly::variable(q.base, q.vars, i)));
      }
      lex_.fail("unknown identifier '" + t.text + "'", t.col);
    }
    if (t.kind == Token::Op && t.text == "(") {
      Poly p = expr();
      Token close = lex_.take();
      if (!(close.kind == Token::Op && close.text == ")"))
        lex_.fail("expected ')'", close.col);
      return p;
    }
    lex_.fail("expected a number, identifier or '('", t.col);
  }

  Poly divide_poly(const Poly& p, const Poly& rhs, int col) {
    if (!rhs.is_constant() || rhs.is_zero())
      lex_.fail("division is only defined by a nonzero constant", col);
    RingElement d = rhs.constant_value();
    InverseResult inv = ring_inverse(d);
    if (inv.status == InverseStatus::Unit) return p.scaled(*inv.value);
    // Over ZZ an exact coefficientwise quotient is still meaningful.
    Poly out = Poly::zero(ring_, vars_);
    for (auto& [m, c] : p.terms()) {
      auto q = ring_div_exact(c, d);
      if (!q) lex_.fail("denominator " + d.to_string() + " is not invertible in " +
                            ring_->name(),
                        col);
      out.add_term(m, *q);
    }
    return out;
  }

  bool is_op(const char* s) const {
    return lex_.peek().kind == Token::Op && lex_.peek().text == s;
  }

  Lexer& lex_;
  const RingPtr& ring_;
  const VarNames& vars_;
};

Poly parse_expr_line(const std::string& text, int line, const RingPtr& ring,
                     const VarNames& vars) {
  Lexer lex(text, line);
  return ExprParser(lex, ring, vars).parse();
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Poly parse_poly_expr(const std::string& text, const RingPtr& ring, const VarNames& vars) {
  return parse_expr_line(text, 1, ring, vars);
}

RingPtr parse_base_ring(const std::string& text) {
  std::string s = trim(text);
  if (s == "ZZ") return RingDescriptor::integers();
  if (s == "QQ") return RingDescriptor::rationals();
  if (s.rfind("ZZ/", 0) == 0) {
    std::string mod = trim(s.substr(3));
    if (mod.empty() || mod.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad modulus in base ring '" + s + "'", 0, 0);
    return RingDescriptor::integers_mod(Int(mod));
  }
  // Quotient syntax: BASE[v1,v2]/(r1, r2)
  size_t lb = s.find('[');
  size_t rb = s.find(']');
  if (lb != std::string::npos && rb != std::string::npos && rb > lb) {
    RingPtr base = parse_base_ring(s.substr(0, lb));
    std::vector<std::string> qvars;
    for (auto& v : split_top_level(s.substr(lb + 1, rb - lb - 1), ',')) {
      std::string name = trim(v);
      if (name.empty()) throw ParseError("empty variable name in base ring", 0, 0);
      qvars.push_back(name);
    }
    std::string rest = trim(s.substr(rb + 1));
    if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
      throw ParseError("expected /(relators) after quotient variables", 0, 0);
    VarNames vn = make_vars(qvars);
    std::vector<Poly> rels;
    for (auto& r : split_top_level(rest.substr(2, rest.size() - 3), ',')) {
      std::string rt = trim(r);
      if (rt.empty()) continue;
      rels.push_back(parse_expr_line(rt, 0, base, vn));
    }
    return RingDescriptor::polynomial_quotient(base, qvars, rels);
  }
  throw ParseError("unknown base ring '" + s + "'", 0, 0);
}

PresentationFile parse_presentation(const std::string& text) {
  struct Line {
    std::string text;
    int number;
  };
  std::map<std::string, std::vector<Line>> sections;
  std::vector<std::string> order;
  {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::string current;
    while (std::getline(is, raw)) {
      ++lineno;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::string t = trim(raw);
      if (t.empty()) continue;
      if (t.front() == '[' && t.back() == ']') {
        current = t.substr(1, t.size() - 2);
        if (sections.count(current))
          throw ParseError("duplicate section [" + current + "]", lineno, 1);
        sections[current];
        order.push_back(current);
        continue;
      }
      if (current.empty()) throw ParseError("content before any section header", lineno, 1);
      sections[current].push_back({t, lineno});
    }
  }
  for (auto& name : order)
    if (name != "base" && name != "vars" && name != "relators" && name != "certificate.g" &&
        name != "certificate.u" && name != "certificate.h")
      throw ParseError("unknown section [" + name + "]", 0, 0);
  if (!sections.count("base")) throw ParseError("missing [base] section", 0, 0);
  if (!sections.count("vars")) throw ParseError("missing [vars] section", 0, 0);
  if (!sections.count("relators")) throw ParseError("missing [relators] section", 0, 0);

  auto& base_lines = sections["base"];
  if (base_lines.size() != 1)
    throw ParseError("[base] must contain exactly one line",
                     base_lines.empty() ? 0 : base_lines[0].number, 1);
  RingPtr base;
  try {
    base = parse_base_ring(base_lines[0].text);
  } catch (ParseError& e) {
    throw ParseError(e.what(), base_lines[0].number, 1);
  }

  std::vector<std::string> vars;
  for (auto& l : sections["vars"]) {
    std::istringstream vs(l.text);
    std::string v;
    while (vs >> v) vars.push_back(v);
  }
  VarNames vn = make_vars(vars);

  std::vector<Poly> relators;
  for (auto& l : sections["relators"])
    relators.push_back(parse_expr_line(l.text, l.number, base, vn));

  Presentation pres(base, vars, relators);
  const size_t n = pres.nvars();
  const size_t m = pres.nrelators();

  PresentationFile out{std::move(pres), std::nullopt};
  bool has_cert = sections.count("certificate.g") || sections.count("certificate.u") ||
                  sections.count("certificate.h");
  if (!has_cert) return out;

  Poly zero = out.pres.zero_poly();
  std::vector<Poly> g(n, zero);
  std::vector<std::vector<Poly>> u(n, std::vector<Poly>(m, zero));
  std::map<SmoothnessCertificate::HKey, Poly> h;

  auto parse_keyed = [&](const Line& l, size_t nidx, const char* what) {
    // "<i> [<j> [<k>]] : <expr>"
    size_t colon = l.text.find(':');
    if (colon == std::string::npos)
      throw ParseError(std::string("expected 'indices : expression' in ") + what, l.number, 1);
    std::istringstream is(l.text.substr(0, colon));
    std::vector<size_t> idx;
    long long v;
    while (is >> v) idx.push_back(static_cast<size_t>(v));
    if (idx.size() != nidx || !is.eof())
      throw ParseError(std::string("expected ") + std::to_string(nidx) + " indices in " + what,
                       l.number, 1);
    Poly p = parse_expr_line(l.text.substr(colon + 1), l.number, base, vn);
    return std::make_pair(idx, p);
  };

  if (sections.count("certificate.g"))
    for (auto& l : sections["certificate.g"]) {
      auto [idx, p] = parse_keyed(l, 1, "[certificate.g]");
      if (idx[0] < 1 || idx[0] > n)
        throw ParseError("g index out of bounds: " + std::to_string(idx[0]), l.number, 1);
      g[idx[0] - 1] = p;
    }
  if (sections.count("certificate.u"))
    for (auto& l : sections["certificate.u"]) {
      auto [idx, p] = parse_keyed(l, 2, "[certificate.u]");
      if (idx[0] < 1 || idx[0] > n || idx[1] < 1 || idx[1] > m)
        throw ParseError("u index out of bounds", l.number, 1);
      u[idx[0] - 1][idx[1] - 1] = p;
    }
  if (sections.count("certificate.h"))
    for (auto& l : sections["certificate.h"]) {
      auto [idx, p] = parse_keyed(l, 3, "[certificate.h]");
      if (idx[0] < 1 || idx[0] > m || idx[1] < 1 || idx[1] > m || idx[2] < 1 || idx[2] > m)
        throw ParseError("h index out of bounds", l.number, 1);
      h[{idx[0] - 1, idx[1] - 1, idx[2] - 1}] = p;
    }

  out.cert.emplace(n, m, std::move(g), std::move(u), std::move(h));
  return out;
}

// ---------------------------------------------------------------------------
// Emission

std::string emit_certificate_sections(const SmoothnessCertificate& cert) {
  std::ostringstream os;
  os << "[certificate.g]\n";
  for (size_t i = 0; i < cert.nvars(); ++i)
    if (!cert.g()[i].is_zero()) os << (i + 1) << " : " << cert.g()[i].to_string() << "\n";
  os << "[certificate.u]\n";
  for (size_t i = 0; i < cert.nvars(); ++i)
    for (size_t j = 0; j < cert.nrelators(); ++j)
      if (!cert.u()[i][j].is_zero())
        os << (i + 1) << " " << (j + 1) << " : " << cert.u()[i][j].to_string() << "\n";
  os << "[certificate.h]\n";
  for (auto& [key, p] : cert.h())
    os << (key[0] + 1) << " " << (key[1] + 1) << " " << (key[2] + 1) << " : " << p.to_string()
       << "\n";
  return os.str();
}

std::string emit_presentation(const Presentation& pres, const SmoothnessCertificate* cert) {
  std::ostringstream os;
  os << "[base]\n" << pres.base()->name() << "\n[vars]\n";
  for (size_t i = 0; i < pres.nvars(); ++i) os << (i ? " " : "") << (*pres.vars())[i];
  os << "\n[relators]\n";
  for (auto& f : pres.relators()) os << f.to_string() << "\n";
  if (cert) os << emit_certificate_sections(*cert);
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

unsigned default_degree_cap(const Presentation& pres) {
  uint64_t d = 0;
  for (auto& f : pres.relators()) d = std::max<uint64_t>(d, f.total_degree());
  return static_cast<unsigned>(2 * d + 2);
}

namespace {

CommandResult input_error(const std::exception& e) {
  CommandResult r;
  r.exit_code = 3;
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    r.err = "error: " + std::string(pe->what());
    if (pe->line > 0) r.err += " (line " + std::to_string(pe->line) + ")";
    r.err += "\n";
  } else {
    r.err = "error: " + std::string(e.what()) + "\n";
  }
  return r;
}

ordered_json verification_json(const VerificationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (auto& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.pass) e["discrepancy"] = c.discrepancy.to_string();
    checks.push_back(e);
  }
  ordered_json j;
  j["pass"] = rep.pass();
  j["checks"] = checks;
  return j;
}

std::string verification_text(const VerificationReport& rep) {
  std::ostringstream os;
  for (auto& c : rep.checks) {
    os << c.name << ": " << (c.pass ? "pass" : "fail");
    if (!c.pass) os << "  discrepancy = " << c.discrepancy.to_string();
    os << "\n";
  }
  os << (rep.pass() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return os.str();
}

}  // namespace

CommandResult cmd_verify(const std::string& file_text, bool json) {
  CommandResult r;
  try {
    PresentationFile pf = parse_presentation(file_text);
    if (!pf.cert) {
      r.exit_code = 3;
      r.err = "error: verify requires a certificate section\n";
      return r;
    }
    VerificationReport rep = verify_certificate(pf.pres, *pf.cert);
    r.exit_code = rep.pass() ? 0 : 1;
    if (json) {
      ordered_json j;
      j["command"] = "verify";
      j.update(verification_json(rep));
      r.out = j.dump(2) + "\n";
    } else {
      r.out = verification_text(rep);
    }
  } catch (const std::exception& e) {
    return input_error(e);
  }
  return r;
}

CommandResult cmd_synth(const std::string& file_text, std::optional<unsigned> max_degree,
                        bool json) {
  CommandResult r;
  try {
    PresentationFile pf = parse_presentation(file_text);
    unsigned cap = max_degree.value_or(default_degree_cap(pf.pres));
    SynthesisResult sr = synthesize_certificate(pf.pres, cap);
    if (auto* inc = std::get_if<Inconclusive>(&sr)) {
      r.exit_code = 2;
      if (json) {
        ordered_json j;
        j["command"] = "synth";
        j["status"] = "inconclusive";
        j["degree_cap"] = cap;
        j["reason"] = inc->reason;
        r.out = j.dump(2) + "\n";
      } else {
        r.out = "inconclusive at degree cap " + std::to_string(cap) + ": " + inc->reason + "\n";
      }
      return r;
    }
    const auto& cert = std::get<SmoothnessCertificate>(sr);
    if (json) {
      ordered_json j;
      j["command"] = "synth";
      j["status"] = "ok";
      j["degree_cap"] = cap;
      j["certificate"] = emit_certificate_sections(cert);
      r.out = j.dump(2) + "\n";
    } else {
      r.out = emit_certificate_sections(cert);
    }
  } catch (const std::exception& e) {
    return input_error(e);
  }
  return r;
}

CommandResult cmd_reduce(const std::string& file_text, bool synth_first,
                         std::optional<unsigned> max_degree, bool json) {
  CommandResult r;
  try {
    PresentationFile pf = parse_presentation(file_text);
    std::optional<SmoothnessCertificate> cert = pf.cert;
    if (synth_first || !cert) {
      if (!synth_first && !cert) {
        r.exit_code = 3;
        r.err = "error: reduce requires a certificate section (or --synth)\n";
        return r;
      }
      unsigned cap = max_degree.value_or(default_degree_cap(pf.pres));
      SynthesisResult sr = synthesize_certificate(pf.pres, cap);
      if (auto* inc = std::get_if<Inconclusive>(&sr)) {
        r.exit_code = 2;
        r.out = "inconclusive at degree cap " + std::to_string(cap) + ": " + inc->reason + "\n";
        return r;
      }
      cert = std::get<SmoothnessCertificate>(sr);
    }

    std::optional<NoetherianReduction> maybe_red;
    try {
      maybe_red = build_reduction(pf.pres, *cert);
    } catch (const InvalidCertificate& e) {
      r.exit_code = 1;
      r.err = "error: " + std::string(e.what()) + "\n";
      return r;
    }
    const NoetherianReduction& red = *maybe_red;
    ReductionReport rep = verify_reduction(red);
    r.exit_code = rep.pass() ? 0 : 1;
    if (json) {
      ordered_json j;
      j["command"] = "reduce";
      j["pass"] = rep.pass();
      j["generator_count"] = rep.generator_count;
      ordered_json gens = ordered_json::array();
      for (size_t i = 0; i < red.generator_images().size(); ++i) {
        ordered_json g;
        g["symbol"] = red.coeff_subring->generator_symbol(i);
        g["image"] = red.generator_images()[i].to_string();
        gens.push_back(g);
      }
      j["generators"] = gens;
      ordered_json checks = ordered_json::array();
      for (auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
      }
      j["checks"] = checks;
      j["conclusion"] = rep.corollary_line;
      r.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "A0 generators (" << rep.generator_count << "):\n";
      for (size_t i = 0; i < red.generator_images().size(); ++i)
        os << "  " << red.coeff_subring->generator_symbol(i) << " -> "
           << red.generator_images()[i].to_string() << "\n";
      for (auto& c : rep.checks) {
        os << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
      }
      os << rep.corollary_line << "\n";
      os << (rep.pass() ? "REDUCE PASS" : "REDUCE FAIL") << "\n";
      r.out = os.str();
    }
  } catch (const std::exception& e) {
    return input_error(e);
  }
  return r;
}

CommandResult cmd_jacobian(const std::string& file_text) {
  CommandResult r;
  try {
    PresentationFile pf = parse_presentation(file_text);
    auto J = jacobian(pf.pres);
    std::ostringstream os;
    for (auto& row : J) {
      os << "[ ";
      for (size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].to_string();
      os << " ]\n";
    }
    r.out = os.str();
  } catch (const std::exception& e) {
    return input_error(e);
  }
  return r;
}

}  // namespace smoothred
