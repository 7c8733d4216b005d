#include "idealkit/session.hpp"

#include <algorithm>
#include <cctype>

namespace idealkit {

namespace {

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) {
      if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
      ++pos_;
    }
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_ = Token{Token::Kind::end, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
        ++pos_; ++col_;
      }
      cur_ = Token{Token::Kind::ident, text_.substr(start, pos_ - start),
                   cur_.line, cur_.col};
    } else if (std::isdigit((unsigned char)c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        ++pos_; ++col_;
      }
      cur_ = Token{Token::Kind::number, text_.substr(start, pos_ - start),
                   cur_.line, cur_.col};
    } else if (std::string("=[](),/+-*^").find(c) != std::string::npos) {
      cur_ = Token{Token::Kind::symbol, std::string(1, c), cur_.line, cur_.col};
      ++pos_; ++col_;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'",
                       line_, col_);
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SessionFile parse() {
    SessionFile s;
    while (lex_.peek().kind != Token::Kind::end) {
      Token t = lex_.peek();
      if (t.kind != Token::Kind::ident)
        fail("expected 'ring' or 'ideal'", t);
      if (t.text == "ring")
        parse_ring(s);
      else if (t.text == "ideal")
        parse_ideal(s);
      else
        fail("expected 'ring' or 'ideal', got '" + t.text + "'", t);
    }
    return s;
  }

  Polynomial parse_poly_in(const std::vector<std::string>& vars,
                           const Field& field) {
    return parse_poly(vars, field);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  Token expect_symbol(const std::string& s) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::symbol || t.text != s)
      fail("expected '" + s + "'", t);
    return t;
  }

  Token expect_ident() {
    Token t = lex_.next();
    if (t.kind != Token::Kind::ident) fail("expected identifier", t);
    return t;
  }

  Token expect_keyword(const std::string& kw) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::ident || t.text != kw)
      fail("expected '" + kw + "'", t);
    return t;
  }

  long expect_number() {
    Token t = lex_.next();
    if (t.kind != Token::Kind::number) fail("expected integer", t);
    return std::stol(t.text);
  }

  bool at_symbol(const std::string& s) {
    return lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == s;
  }

  Field parse_field() {
    Token t = expect_ident();
    if (t.text == "QQ") return Field::rationals();
    if (t.text == "GF") {
      expect_symbol("(");
      Token n = lex_.next();
      if (n.kind != Token::Kind::number) fail("expected prime", n);
      long p = std::stol(n.text);
      expect_symbol(")");
      if (p < 2 || !is_prime((unsigned long)p))
        fail("GF argument " + n.text + " is not prime", n);
      return Field::prime((unsigned long)p);
    }
    fail("expected field 'QQ' or 'GF(p)'", t);
  }

  void parse_ring(SessionFile& s) {
    expect_keyword("ring");
    Token name = expect_ident();
    expect_symbol("=");
    RingPresentation ring;
    ring.field = parse_field();
    expect_symbol("[");
    ring.variables.push_back(expect_ident().text);
    while (at_symbol(",")) {
      lex_.next();
      ring.variables.push_back(expect_ident().text);
    }
    expect_symbol("]");
    if (at_symbol("/")) {
      lex_.next();
      expect_symbol("(");
      ring.relations.push_back(parse_poly(ring.variables, ring.field));
      while (at_symbol(",")) {
        lex_.next();
        ring.relations.push_back(parse_poly(ring.variables, ring.field));
      }
      expect_symbol(")");
    }
    expect_keyword("dim");
    ring.declared_dim = static_cast<int>(expect_number());
    ring.validate();
    if (s.rings.count(name.text))
      fail("ring '" + name.text + "' redeclared", name);
    s.rings.emplace(name.text, std::move(ring));
    s.ring_order.push_back(name.text);
  }

  void parse_ideal(SessionFile& s) {
    expect_keyword("ideal");
    Token name = expect_ident();
    expect_symbol("=");
    expect_symbol("(");
    // Ring name comes after the generator list; scan it lazily by
    // buffering token positions is more trouble than re-parsing, so the
    // grammar requires variables to resolve against the ring named
    // after "in".  We parse generators into a raw token form first.
    // Simpler: require the ring to be declared before use and peek the
    // full statement: collect generator texts, then resolve.
    std::vector<std::vector<Token>> gen_tokens;
    gen_tokens.emplace_back();
    int depth = 0;
    while (true) {
      Token t = lex_.peek();
      if (t.kind == Token::Kind::end) fail("unterminated generator list", t);
      if (t.kind == Token::Kind::symbol && t.text == "(") ++depth;
      if (t.kind == Token::Kind::symbol && t.text == ")") {
        if (depth == 0) { lex_.next(); break; }
        --depth;
      }
      if (t.kind == Token::Kind::symbol && t.text == "," && depth == 0) {
        lex_.next();
        gen_tokens.emplace_back();
        continue;
      }
      gen_tokens.back().push_back(lex_.next());
    }
    expect_keyword("in");
    Token rname = expect_ident();
    auto rit = s.rings.find(rname.text);
    if (rit == s.rings.end())
      fail("ideal references undeclared ring '" + rname.text + "'", rname);
    const RingPresentation& ring = rit->second;
    IdealDecl decl;
    decl.ring_name = rname.text;
    for (auto& toks : gen_tokens)
      decl.gens.push_back(poly_from_tokens(toks, ring.variables, ring.field));
    if (s.ideals.count(name.text))
      fail("ideal '" + name.text + "' redeclared", name);
    s.ideals.emplace(name.text, std::move(decl));
    s.ideal_order.push_back(name.text);
  }

  Polynomial poly_from_tokens(const std::vector<Token>& toks,
                              const std::vector<std::string>& vars,
                              const Field& field) {
    if (toks.empty())
      throw ParseError("empty polynomial", 0, 0);
    std::string text;
    for (auto& t : toks) text += t.text + " ";
    try {
      return parse_polynomial(text, vars, field);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), toks[0].line, toks[0].col);
    }
  }

  Polynomial parse_poly(const std::vector<std::string>& vars,
                        const Field& field) {
    const int n = static_cast<int>(vars.size());
    Polynomial p;
    bool first = true;
    while (true) {
      int sign = 1;
      if (at_symbol("+")) {
        lex_.next();
      } else if (at_symbol("-")) {
        sign = -1;
        lex_.next();
      } else if (!first) {
        break;
      }
      first = false;
      // term: factors joined by '*'
      Q coeff = sign;
      Monomial mono = Monomial::one(n);
      bool any = false;
      while (true) {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
          lex_.next();
          coeff *= Q(t.text);
          any = true;
        } else if (t.kind == Token::Kind::ident) {
          lex_.next();
          auto it = std::find(vars.begin(), vars.end(), t.text);
          if (it == vars.end())
            fail("unknown variable '" + t.text + "'", t);
          int idx = static_cast<int>(it - vars.begin());
          int e = 1;
          if (at_symbol("^")) {
            lex_.next();
            e = static_cast<int>(expect_number());
            if (e < 0) fail("negative exponent", t);
          }
          mono = mono * Monomial::var(n, idx, e);
          any = true;
        } else {
          fail("expected coefficient or variable", t);
        }
        if (at_symbol("*"))
          lex_.next();
        else
          break;
      }
      if (!any) fail("empty term", lex_.peek());
      poly_add_term(p, mono, coeff, field);
    }
    return p;
  }

  Lexer lex_;
};

}  // namespace

const RingPresentation& SessionFile::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end())
    throw std::invalid_argument("no ring named '" + name + "'");
  return it->second;
}

const IdealDecl& SessionFile::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end())
    throw std::invalid_argument("no ideal named '" + name + "'");
  return it->second;
}

SessionFile parse_session(const std::string& text) {
  return Parser(text).parse();
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const Field& field) {
  Parser p(text);
  return p.parse_poly_in(vars, field);
}

std::string pretty_print(const SessionFile& s) {
  std::string out;
  for (auto& name : s.ring_order) {
    const RingPresentation& r = s.rings.at(name);
    out += "ring " + name + " = " + r.field.describe() + "[";
    for (size_t i = 0; i < r.variables.size(); ++i)
      out += (i ? "," : "") + r.variables[i];
    out += "]";
    if (!r.relations.empty()) {
      out += "/(";
      for (size_t i = 0; i < r.relations.size(); ++i)
        out += (i ? ", " : "") + r.relations[i].str(r.variables);
      out += ")";
    }
    out += " dim " + std::to_string(r.declared_dim) + "\n";
  }
  for (auto& name : s.ideal_order) {
    const IdealDecl& d = s.ideals.at(name);
    const RingPresentation& r = s.rings.at(d.ring_name);
    out += "ideal " + name + " = (";
    for (size_t i = 0; i < d.gens.size(); ++i)
      out += (i ? ", " : "") + d.gens[i].str(r.variables);
    out += ") in " + d.ring_name + "\n";
  }
  return out;
}

}  // namespace idealkit
