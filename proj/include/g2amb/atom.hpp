#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace g2a {

class FunctionSymbol;
struct ExprData;

enum class AtomKind : std::uint8_t { Coordinate, Function, Exp, Power };

// Atom ids of Power atoms carry this bit so monomials can detect them cheaply.
inline constexpr std::uint32_t kPowerAtomBit = 0x40000000u;

struct AtomInfo {
  AtomKind kind{};
  std::uint32_t id = 0;
  std::string name;  // coordinate name, function name, or the coordinate inside exp()
  std::shared_ptr<const FunctionSymbol> symbol;  // Function atoms
  int order = 0;                                  // Function atoms: derivative order
  std::shared_ptr<const ExprData> base;           // Power atoms: monic primitive polynomial
  std::string key;  // content key; orders atoms independently of interning order
};

using AtomId = std::uint32_t;

// Interned atoms live for the whole process; lookups are thread safe.
const AtomInfo& atom_info(AtomId id);
AtomId coordinate_atom(std::string_view name);
AtomId exp_atom(std::string_view coordinate);
AtomId function_atom(const std::shared_ptr<const FunctionSymbol>& symbol, int order);
AtomId power_atom(const std::shared_ptr<const ExprData>& base);

// Total order on atoms by content; used for printing and for choosing leading terms canonically.
int compare_atoms(AtomId a, AtomId b);

}  // namespace g2a
