#include "g2amb/parse.hpp"

#include <cctype>

namespace g2a {

SymbolTable SymbolTable::standard() {
  SymbolTable t;
  for (const char* c : {"t", "x", "y", "p", "q", "z", "rho"}) t.add_coordinate(c);
  t.add_function(FunctionSymbol::make("I", "x"));
  t.add_function(FunctionSymbol::make("F", "q"));
  return t;
}

SymbolTable& SymbolTable::add_coordinate(const std::string& name) {
  coordinates_.insert(name);
  return *this;
}

SymbolTable& SymbolTable::add_function(const SymbolPtr& symbol) {
  functions_[symbol->name()] = symbol;
  return *this;
}

SymbolPtr SymbolTable::function(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : it->second;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const SymbolTable& t) : s_(s), table_(t) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        e /= d;
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return factor();
  }

  Expr factor() {
    Expr b = base();
    if (!accept('^')) return b;
    std::size_t at = pos_;
    Rational r = exponent();
    try {
      return b.pow(r);
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), at);
    }
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Rational exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      mpz_class n = integer();
      mpz_class d = 1;
      if (accept('/')) d = integer();
      if (d == 0) fail("zero denominator in exponent");
      expect(')');
      Rational r(n, d);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    bool neg = accept('-');
    mpz_class n = integer();
    return neg ? Rational(-n) : Rational(n);
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr(Rational(integer()));
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "exp") {
        expect('(');
        std::size_t at = pos_;
        Expr arg = expr();
        expect(')');
        try {
          return Expr::exp(arg);
        } catch (const std::domain_error& e) {
          throw ParseError(e.what(), at);
        }
      }
      int primes = 0;
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++pos_;
        ++primes;
      }
      if (SymbolPtr f = table_.function(name)) return f->derivative(primes);
      if (table_.is_coordinate(name)) {
        if (primes > 0) throw ParseError("primes on coordinate " + name, start);
        return Expr::coord(name);
      }
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).run(); }

}  // namespace g2a
