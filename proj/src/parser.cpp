#include <fmt/format.h>

#include <cctype>

#include "bsk/fol.hpp"

namespace bsk {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Sym, "<->", i});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Sym, "->", i});
      i += 2;
      continue;
    }
    if (std::string_view("()[],*=~&|.^+-").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(i, fmt::format("unexpected character '{}'", c));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Lang lang) : toks_(lex(src)), lang_(lang) {}

  Formula formula_all() {
    auto f = formula();
    expect_end();
    return f;
  }

  Term term_all() {
    auto t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool is_sym(const std::string& s, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).text == s;
  }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) fail(fmt::format("expected '{}'", s));
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(fmt::format("unexpected '{}'", peek().text));
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().pos, msg); }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "E" || peek().text == "A") && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Sym && peek(2).text == ".";
  }

  Formula formula() {
    if (at_quantifier()) return quantifier();
    auto lhs = disjunction();
    if (is_sym("->")) {
      ++pos_;
      return f_implies(lhs, formula());
    }
    if (is_sym("<->")) {
      ++pos_;
      return f_iff(lhs, formula());
    }
    return lhs;
  }

  Formula quantifier() {
    bool ex = peek().text == "E";
    std::string v = peek(1).text;
    pos_ += 3;
    auto body = formula();
    return ex ? f_exists(v, body) : f_forall(v, body);
  }

  Formula disjunction() {
    auto f = conjunction();
    while (is_sym("|")) {
      ++pos_;
      f = f_or(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    auto f = unary();
    while (is_sym("&")) {
      ++pos_;
      f = f_and(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (is_sym("~")) {
      ++pos_;
      return f_not(unary());
    }
    if (at_quantifier()) return quantifier();
    if (is_sym("(")) {
      size_t save = pos_;
      try {
        ++pos_;
        auto f = formula();
        expect_sym(")");
        return f;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    return atom();
  }

  Formula atom() {
    auto& t = peek();
    if (t.kind == Tok::Ident && peek(1).kind == Tok::Sym && peek(1).text == "(" && t.text != "inv") {
      std::string name = t.text;
      pos_ += 2;
      std::vector<Term> args;
      if (!is_sym(")")) {
        args.push_back(term());
        while (is_sym(",")) {
          ++pos_;
          args.push_back(term());
        }
      }
      expect_sym(")");
      if (name == "exp") {
        if (lang_ != Lang::Ring) throw ParseError(t.pos, "exp atom outside the ring language");
        if (args.size() != 3) throw ParseError(t.pos, "exp takes three arguments");
        return f_exp(args[0], args[1], args[2]);
      }
      return f_pred(name, args);
    }
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false") && !is_sym("=", 1)) {
      ++pos_;
      return t.text == "true" ? f_true() : f_false();
    }
    auto lhs = term();
    expect_sym("=");
    auto rhs = term();
    return f_eq(lhs, rhs);
  }

  Term term() { return lang_ == Lang::Group ? group_term() : ring_sum(); }

  // group: factor ("*" factor)*
  Term group_term() {
    auto t = group_factor();
    while (is_sym("*")) {
      ++pos_;
      t = t_mul(t, group_factor());
    }
    return t;
  }

  long exponent() {
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Tok::Int) fail("expected integer exponent");
    long n = std::stol(peek().text);
    ++pos_;
    return neg ? -n : n;
  }

  Term group_factor() {
    auto t = group_primary();
    while (is_sym("^")) {
      ++pos_;
      t = t_pow(t, exponent());
    }
    return t;
  }

  Term group_primary() {
    auto& t = peek();
    if (is_sym("(")) {
      ++pos_;
      auto r = group_term();
      expect_sym(")");
      return r;
    }
    if (is_sym("[")) {
      ++pos_;
      auto s = group_term();
      expect_sym(",");
      auto u = group_term();
      expect_sym("]");
      return t_comm(s, u);
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "inv" && is_sym("(", 1)) {
        pos_ += 2;
        auto r = group_term();
        expect_sym(")");
        return t_inv(r);
      }
      ++pos_;
      return t.text == "e" ? t_unit() : t_var(t.text);
    }
    fail("expected a group term");
  }

  Term ring_sum() {
    auto t = ring_product();
    while (is_sym("+")) {
      ++pos_;
      t = t_add(t, ring_product());
    }
    return t;
  }

  Term ring_product() {
    auto t = ring_factor();
    while (is_sym("*")) {
      ++pos_;
      t = t_rmul(t, ring_factor());
    }
    return t;
  }

  Term ring_factor() {
    auto t = ring_primary();
    while (is_sym("^")) {
      ++pos_;
      long n = exponent();
      if (n < 0) fail("negative power in the ring language");
      Term r = t_one();
      if (n > 0) {
        r = t;
        for (long i = 1; i < n; ++i) r = t_rmul(r, t);
      }
      t = r;
    }
    return t;
  }

  Term ring_primary() {
    auto& t = peek();
    if (is_sym("(")) {
      ++pos_;
      auto r = ring_sum();
      expect_sym(")");
      return r;
    }
    if (t.kind == Tok::Int) {
      ++pos_;
      if (t.text == "0") return t_zero();
      if (t.text == "1") return t_one();
      return t_numeral(std::stol(t.text));
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      return t_var(t.text);
    }
    fail("expected a ring term");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Lang lang_;
};

}  // namespace

Formula parse_formula(std::string_view src, Lang lang) { return Parser(src, lang).formula_all(); }
Term parse_term(std::string_view src, Lang lang) { return Parser(src, lang).term_all(); }

}  // namespace bsk
