#include "defv/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "defv/ringmap.hpp"

namespace defv {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, Sep, End };
  Kind kind = Kind::End;
  std::string text;
  int64_t value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') break;  // statement separator
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (c == '\n') {
      tok_.kind = Token::Kind::Sep;
      tok_.text = "\n";
      ++line_;
      col_ = 1;
      ++pos_;
      return;
    }
    if (c == ';') {
      tok_.kind = Token::Kind::Sep;
      tok_.text = ";";
      ++pos_;
      ++col_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Number;
      tok_.text = text_.substr(start, pos_ - start);
      try {
        tok_.value = std::stoll(tok_.text);
      } catch (...) {
        throw parse_error(line_, col_, "integer literal out of range");
      }
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = Token::Kind::Punct;
      tok_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    static const std::string punct = "^*+-()=,";
    if (punct.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ScenarioSpec parse() {
    ScenarioSpec spec;
    skip_separators();
    while (lex_.peek().kind != Token::Kind::End) {
      spec.statements.push_back(statement());
      skip_separators();
    }
    if (spec.statements.empty()) throw parse_error(1, 1, "empty scenario file");
    return spec;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw parse_error(t.line, t.col, msg);
  }

  void skip_separators() {
    while (lex_.peek().kind == Token::Kind::Sep) lex_.take();
  }

  bool at_punct(const std::string& s) {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == s;
  }

  Token expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident) fail(t, "expected " + what);
    return t;
  }

  void expect_punct(const std::string& s) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Punct || t.text != s) fail(t, "expected '" + s + "'");
  }

  int64_t expect_number() {
    bool negative = false;
    if (at_punct("-")) {
      lex_.take();
      negative = true;
    }
    Token t = lex_.take();
    if (t.kind != Token::Kind::Number) fail(t, "expected a number");
    return negative ? -t.value : t.value;
  }

  // value in key=value: identifiers joined by '-' or a (signed) number
  std::string key_value() {
    if (lex_.peek().kind == Token::Kind::Number || at_punct("-")) {
      return std::to_string(expect_number());
    }
    Token t = expect_ident("a value");
    std::string v = t.text;
    while (at_punct("-")) {
      lex_.take();
      Token nxt = lex_.take();
      if (nxt.kind != Token::Kind::Ident && nxt.kind != Token::Kind::Number)
        fail(nxt, "expected an identifier after '-'");
      v += "-" + nxt.text;
    }
    return v;
  }

  bool statement_done() {
    return lex_.peek().kind == Token::Kind::End || lex_.peek().kind == Token::Kind::Sep;
  }

  // factor := NUMBER | IDENT ('^' INT)?
  // negative exponents are written after '^'
  void parse_factor(AstTerm& term) {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Number) {
      term.coeff *= t.value;
      return;
    }
    if (t.kind != Token::Kind::Ident) fail(t, "expected an identifier or number");
    int64_t e = 1;
    if (at_punct("^")) {
      lex_.take();
      e = expect_number();
    }
    term.powers.emplace_back(t.text, e);
  }

  AstTerm parse_monomial() {
    AstTerm term;
    parse_factor(term);
    while (at_punct("*")) {
      lex_.take();
      parse_factor(term);
    }
    return term;
  }

  // expr := ('-')? product (('+'|'-') product)*, products distributed over
  // parenthesized sums during parsing so the tree is already flattened
  std::vector<AstTerm> parse_product() {
    std::vector<AstTerm> acc{AstTerm{}};
    while (true) {
      std::vector<AstTerm> factor_terms;
      if (at_punct("(")) {
        lex_.take();
        factor_terms = parse_expr().terms;
        expect_punct(")");
        if (at_punct("^")) {
          Token caret = lex_.take();
          int64_t e = expect_number();
          if (e < 0) fail(caret, "negative exponents apply to single variables only");
          std::vector<AstTerm> power{AstTerm{}};
          for (int64_t i = 0; i < e; ++i) power = distribute(power, factor_terms);
          factor_terms = power;
        }
      } else {
        AstTerm t;
        parse_factor(t);
        factor_terms = {t};
      }
      acc = distribute(acc, factor_terms);
      if (at_punct("*")) {
        lex_.take();
        continue;
      }
      break;
    }
    return acc;
  }

  static std::vector<AstTerm> distribute(const std::vector<AstTerm>& a,
                                         const std::vector<AstTerm>& b) {
    std::vector<AstTerm> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        AstTerm t;
        t.coeff = x.coeff * y.coeff;
        t.powers = x.powers;
        for (const auto& pw : y.powers) t.powers.push_back(pw);
        out.push_back(std::move(t));
      }
    return out;
  }

  AstExpr parse_expr() {
    AstExpr e;
    int64_t sign = 1;
    if (at_punct("-")) {
      lex_.take();
      sign = -1;
    } else if (at_punct("+")) {
      lex_.take();
    }
    auto first = parse_product();
    for (auto& t : first) {
      t.coeff *= sign;
      e.terms.push_back(t);
    }
    while (at_punct("+") || at_punct("-")) {
      int64_t s = lex_.take().text == "-" ? -1 : 1;
      auto terms = parse_product();
      for (auto& t : terms) {
        t.coeff *= s;
        e.terms.push_back(t);
      }
    }
    return e;
  }

  AstStatement statement() {
    Token head = expect_ident("a statement keyword");
    AstStatement st;
    if (head.text == "scenario") {
      st.kind = AstStatement::Kind::Scenario;
      st.name = expect_ident("a scenario name").text;
      while (lex_.peek().kind == Token::Kind::Ident && !statement_done()) {
        Token key = lex_.take();
        expect_punct("=");
        st.keys.emplace_back(key.text, key_value());
      }
      return st;
    }
    if (head.text == "coeff") {
      st.kind = AstStatement::Kind::Coeff;
      st.name = expect_ident("a coefficient algebra name").text;
      while (!statement_done()) {
        Token key = expect_ident("var or order");
        expect_punct("=");
        if (key.text == "var")
          st.var = expect_ident("a variable name").text;
        else if (key.text == "order")
          st.order = expect_number();
        else
          fail(key, "unknown coeff key '" + key.text + "'");
      }
      if (st.var.empty() || st.order < 1) fail(head, "coeff needs var=NAME and order>=1");
      return st;
    }
    if (head.text == "symbols") {
      st.kind = AstStatement::Kind::Symbols;
      while (!statement_done()) st.names.push_back(expect_ident("a symbol name").text);
      if (st.names.empty()) fail(head, "symbols needs at least one name");
      return st;
    }
    if (head.text == "ring") {
      st.kind = AstStatement::Kind::Ring;
      st.name = expect_ident("a ring name").text;
      Token next = expect_ident("'quotient' or 'gens'");
      if (next.text == "quotient") {
        AstRule rule;
        Token lhs = expect_ident("the rewritten variable");
        rule.var = lhs.text;
        expect_punct("^");
        rule.exp = expect_number();
        expect_punct("->");
        rule.rhs = parse_monomial();
        st.rule = rule;
        next = expect_ident("'gens'");
      }
      if (next.text != "gens") fail(next, "expected 'gens'");
      while (!statement_done()) st.gens.push_back(parse_monomial());
      if (st.gens.empty()) fail(head, "ring needs at least one generator");
      return st;
    }
    if (head.text == "map") {
      st.kind = AstStatement::Kind::Map;
      st.name = expect_ident("a map name").text;
      st.src = expect_ident("a source ring").text;
      expect_punct("->");
      st.dst = expect_ident("a target ring").text;
      while (true) {
        Token var = expect_ident("a variable");
        expect_punct("->");
        st.clauses.emplace_back(var.text, parse_expr());
        if (at_punct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
      return st;
    }
    if (head.text == "check") {
      st.kind = AstStatement::Kind::Check;
      st.check_kind = expect_ident("a check kind").text;
      if (st.check_kind == "well_defined" || st.check_kind == "iso") {
        st.names.push_back(expect_ident("a map name").text);
      } else if (st.check_kind == "equal") {
        st.names.push_back(expect_ident("a map name").text);
        st.names.push_back(expect_ident("a map name").text);
      } else if (st.check_kind == "member" || st.check_kind == "not_member") {
        st.names.push_back(expect_ident("a ring name").text);
        st.gens.push_back(parse_monomial());
      } else if (st.check_kind == "nf_zero" || st.check_kind == "unit") {
        st.names.push_back(expect_ident("a ring name").text);
        st.expr = parse_expr();
      } else {
        fail(head, "unknown check kind '" + st.check_kind + "'");
      }
      return st;
    }
    fail(head, "unknown statement '" + head.text + "'");
  }

  Lexer lex_;
};

std::string print_term(const AstTerm& t, bool lead) {
  std::ostringstream os;
  int64_t c = t.coeff;
  if (!lead) {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  } else if (c < 0) {
    os << "-";
    c = -c;
  }
  bool wrote = false;
  if (c != 1 || t.powers.empty()) {
    os << c;
    wrote = true;
  }
  for (const auto& [v, e] : t.powers) {
    if (wrote) os << "*";
    wrote = true;
    os << v;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string print_expr(const AstExpr& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < e.terms.size(); ++i) os << print_term(e.terms[i], i == 0);
  return os.str();
}

std::string print_monomial(const AstTerm& t) { return print_term(t, true); }

}  // namespace

const AstStatement* ScenarioSpec::header() const {
  for (const auto& st : statements)
    if (st.kind == AstStatement::Kind::Scenario) return &st;
  return nullptr;
}

std::string ScenarioSpec::value_of(const std::string& key) const {
  const AstStatement* h = header();
  if (!h) return "";
  for (const auto& [k, v] : h->keys)
    if (k == key) return v;
  return "";
}

ScenarioSpec parse_scenario(const std::string& text) { return Parser(text).parse(); }

std::string print_scenario(const ScenarioSpec& spec) {
  std::ostringstream os;
  for (const auto& st : spec.statements) {
    switch (st.kind) {
      case AstStatement::Kind::Scenario:
        os << "scenario " << st.name;
        for (const auto& [k, v] : st.keys) os << " " << k << "=" << v;
        break;
      case AstStatement::Kind::Coeff:
        os << "coeff " << st.name << " var=" << st.var << " order=" << st.order;
        break;
      case AstStatement::Kind::Symbols:
        os << "symbols";
        for (const auto& n : st.names) os << " " << n;
        break;
      case AstStatement::Kind::Ring:
        os << "ring " << st.name;
        if (st.rule)
          os << " quotient " << st.rule->var << "^" << st.rule->exp << " -> "
             << print_monomial(st.rule->rhs);
        os << " gens";
        for (const auto& g : st.gens) os << " " << print_monomial(g);
        break;
      case AstStatement::Kind::Map: {
        os << "map " << st.name << " " << st.src << "->" << st.dst << " ";
        bool first = true;
        for (const auto& [v, e] : st.clauses) {
          if (!first) os << ", ";
          first = false;
          os << v << " -> " << print_expr(e);
        }
        break;
      }
      case AstStatement::Kind::Check:
        os << "check " << st.check_kind;
        for (const auto& n : st.names) os << " " << n;
        for (const auto& g : st.gens) os << " " << print_monomial(g);
        if (st.expr) os << " " << print_expr(*st.expr);
        break;
    }
    os << ";\n";
  }
  return os.str();
}

namespace {

struct BuiltContext {
  TowerPtr tower;
  std::string coeff_var;
  std::map<std::string, RingDesc> rings;
  std::map<std::string, RingMap> maps;
  int64_t p = 0;
  int64_t bound = 0;
};

LaurentPoly build_expr(const BuiltContext& ctx, const RingDesc& ring, const AstExpr& e) {
  LaurentPoly out = LaurentPoly::zero(ring.tower, ring.vars);
  for (const auto& t : e.terms) {
    Scalar sc = Scalar::from_int(ring.tower, t.coeff);
    ExpVec exp(ring.vars.size(), 0);
    for (const auto& [v, pw] : t.powers) {
      auto it = std::find(ring.vars.begin(), ring.vars.end(), v);
      if (it != ring.vars.end()) {
        exp[it - ring.vars.begin()] = checked_add(exp[it - ring.vars.begin()], pw);
        continue;
      }
      if (v == ctx.coeff_var) {
        if (pw < 0) throw error("negative power of the nilpotent variable '" + v + "'");
        sc = sc.mul(Scalar::from_coeff(ring.tower, ring.tower->coeff()->monomial(1, pw)));
        continue;
      }
      if (ring.tower->symbol_index(v) >= 0) {
        if (pw < 0) throw error("negative power of symbol '" + v + "'");
        sc = sc.mul(Scalar::symbol(ring.tower, v).pow(static_cast<uint64_t>(pw)));
        continue;
      }
      throw error("undeclared identifier '" + v + "'");
    }
    out = out.add(LaurentPoly::monomial(ring.tower, ring.vars, exp, sc));
  }
  return out;
}

}  // namespace

Report run_custom_scenario(const ScenarioSpec& spec, int64_t bound_override) {
  Report rep;
  rep.scenario = "custom";
  const AstStatement* h = spec.header();
  if (!h) throw error("scenario header missing");
  rep.scenario = h->name;
  std::string pval = spec.value_of("p");
  if (pval.empty()) throw error("scenario needs p=<prime>");
  int64_t p = std::stoll(pval);
  if (!PrimeField::is_prime(static_cast<uint64_t>(p))) throw error("p must be prime");
  rep.p = p;

  BuiltContext ctx;
  ctx.p = p;
  ctx.bound = bound_override > 0 ? bound_override : 4 * p + 8;
  rep.params.push_back("bound=" + std::to_string(ctx.bound));

  // first pass: coefficient algebra and symbols
  std::vector<std::string> symbols;
  CoeffAlgebraPtr coeff;
  for (const auto& st : spec.statements) {
    if (st.kind == AstStatement::Kind::Coeff) {
      if (coeff) throw error("only one coefficient algebra per scenario");
      coeff = CoeffAlgebra::truncated(PrimeField(static_cast<uint32_t>(p)), st.var,
                                      static_cast<int>(st.order));
      ctx.coeff_var = st.var;
    } else if (st.kind == AstStatement::Kind::Symbols) {
      for (const auto& n : st.names) symbols.push_back(n);
    }
  }
  ctx.tower = ScalarTower::make(PrimeField(static_cast<uint32_t>(p)), symbols, coeff,
                                static_cast<int>(2 * p + 2) + 8);

  int check_index = 0;
  for (const auto& st : spec.statements) {
    switch (st.kind) {
      case AstStatement::Kind::Scenario:
      case AstStatement::Kind::Coeff:
      case AstStatement::Kind::Symbols:
        break;
      case AstStatement::Kind::Ring: {
        // collect variables in first-appearance order
        std::vector<std::string> vars;
        auto note_var = [&](const std::string& v) {
          if (v == ctx.coeff_var || ctx.tower->symbol_index(v) >= 0) return;
          if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        };
        for (const auto& g : st.gens)
          for (const auto& [v, e] : g.powers) note_var(v);
        if (st.rule) {
          note_var(st.rule->var);
          for (const auto& [v, e] : st.rule->rhs.powers) note_var(v);
        }
        if (vars.empty()) throw error("ring '" + st.name + "' has no variables");
        if (st.rule) {
          ExpVec rhs(vars.size(), 0);
          for (const auto& [v, e] : st.rule->rhs.powers) {
            auto it = std::find(vars.begin(), vars.end(), v);
            rhs[it - vars.begin()] += e;
          }
          ctx.rings.emplace(st.name,
                            RingDesc::quotient(st.name, ctx.tower, vars,
                                               RewriteRule::make(vars, st.rule->var,
                                                                 st.rule->exp, rhs)));
        } else {
          std::vector<Vec> gens;
          for (const auto& g : st.gens) {
            Vec e(vars.size(), 0);
            for (const auto& [v, pw] : g.powers) {
              auto it = std::find(vars.begin(), vars.end(), v);
              e[it - vars.begin()] += pw;
            }
            if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
          }
          ctx.rings.emplace(st.name,
                            RingDesc::subalgebra(st.name, ctx.tower, vars,
                                                 MonomialAlgebra::make(
                                                     static_cast<int>(vars.size()), gens)));
        }
        break;
      }
      case AstStatement::Kind::Map: {
        auto src_it = ctx.rings.find(st.src);
        auto dst_it = ctx.rings.find(st.dst);
        if (src_it == ctx.rings.end()) throw error("undeclared ring '" + st.src + "'");
        if (dst_it == ctx.rings.end()) throw error("undeclared ring '" + st.dst + "'");
        const RingDesc& src = src_it->second;
        const RingDesc& dst = dst_it->second;
        std::map<std::string, LaurentPoly> images;
        for (const auto& [v, e] : st.clauses) {
          if (std::find(src.vars.begin(), src.vars.end(), v) == src.vars.end())
            throw error("'" + v + "' is not a variable of ring '" + st.src + "'");
          images.emplace(v, build_expr(ctx, dst, e));
        }
        for (const auto& v : src.vars)
          if (!images.count(v)) images.emplace(v, LaurentPoly::variable(dst.tower, dst.vars, v));
        ctx.maps.emplace(st.name,
                         RingMap::substitution(st.name, src, dst, std::move(images),
                                               CoeffMap::identity(ctx.tower->coeff())));
        break;
      }
      case AstStatement::Kind::Check: {
        ++check_index;
        std::string cname = "check." + std::to_string(check_index) + "." + st.check_kind;
        try {
          if (st.check_kind == "well_defined" || st.check_kind == "iso") {
            auto it = ctx.maps.find(st.names[0]);
            if (it == ctx.maps.end()) throw error("undeclared map '" + st.names[0] + "'");
            CheckOutcome oc = st.check_kind == "iso" ? check_iso_nilpotent(it->second)
                                                     : check_well_defined(it->second, ctx.bound);
            rep.add(cname, oc.pass, oc.detail, "custom");
          } else if (st.check_kind == "equal") {
            auto a = ctx.maps.find(st.names[0]);
            auto b = ctx.maps.find(st.names[1]);
            if (a == ctx.maps.end() || b == ctx.maps.end()) throw error("undeclared map");
            std::string witness;
            bool eq = a->second.equals_on_generators(b->second, &witness);
            rep.add(cname, eq, witness, "custom");
          } else if (st.check_kind == "member" || st.check_kind == "not_member") {
            auto it = ctx.rings.find(st.names[0]);
            if (it == ctx.rings.end()) throw error("undeclared ring '" + st.names[0] + "'");
            const RingDesc& ring = it->second;
            if (!ring.algebra) throw error("membership checks need a monomial ring");
            Vec e(ring.vars.size(), 0);
            for (const auto& [v, pw] : st.gens[0].powers) {
              auto vit = std::find(ring.vars.begin(), ring.vars.end(), v);
              if (vit == ring.vars.end()) throw error("unknown variable '" + v + "'");
              e[vit - ring.vars.begin()] += pw;
            }
            auto res = semigroup_member(e, *ring.algebra, ctx.bound);
            bool want = st.check_kind == "member";
            rep.add(cname, res.found() == want,
                    res.found() ? "member with a witness" : "not a member within the bound",
                    "custom");
          } else if (st.check_kind == "nf_zero") {
            auto it = ctx.rings.find(st.names[0]);
            if (it == ctx.rings.end()) throw error("undeclared ring '" + st.names[0] + "'");
            LaurentPoly f = build_expr(ctx, it->second, *st.expr);
            LaurentPoly nf = it->second.normalize(f);
            rep.add(cname, nf.is_zero(), "normal form: " + nf.to_string(), "custom");
          } else if (st.check_kind == "unit") {
            auto it = ctx.rings.find(st.names[0]);
            if (it == ctx.rings.end()) throw error("undeclared ring '" + st.names[0] + "'");
            LaurentPoly f = build_expr(ctx, it->second, *st.expr);
            bool ok = false;
            std::string detail;
            try {
              LaurentPoly inv = f.invert_unit();
              ok = f.mul(inv) == LaurentPoly::from_int(it->second.tower, it->second.vars, 1);
              detail = "inverse " + inv.to_string();
            } catch (const error& err) {
              detail = err.what();
            }
            rep.add(cname, ok, detail, "custom");
          }
        } catch (const error& err) {
          rep.add(cname, false, err.what(), "custom");
        }
        break;
      }
    }
  }
  return rep;
}

}  // namespace defv
