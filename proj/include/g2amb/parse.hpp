#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g2amb/expr.hpp"

namespace g2a {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Names the parser resolves: coordinates and function symbols (with their rules).
class SymbolTable {
 public:
  // Coordinates t, x, y, p, q, z, rho and unconstrained symbols I(x), F(q).
  static SymbolTable standard();

  SymbolTable& add_coordinate(const std::string& name);
  SymbolTable& add_function(const SymbolPtr& symbol);  // replaces a symbol of the same name
  bool is_coordinate(const std::string& name) const { return coordinates_.count(name) != 0; }
  SymbolPtr function(const std::string& name) const;  // nullptr if unknown

 private:
  std::set<std::string> coordinates_;
  std::map<std::string, SymbolPtr> functions_;
};

// Grammar: expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
// unary := ('-'|'+') unary | factor; factor := base ('^' exponent)?;
// exponent := int | '-' int | '(' ['-'] int ['/' int] ')';
// base := number | ident '\''* | 'exp' '(' expr ')' | '(' expr ')'.
Expr parse(std::string_view text, const SymbolTable& symbols);

}  // namespace g2a
