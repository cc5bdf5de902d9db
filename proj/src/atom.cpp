#include "g2amb/atom.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "g2amb/expr.hpp"

namespace g2a {
namespace {

constexpr std::size_t kSlots = std::size_t{1} << 20;

// Slots are published with release stores, so readers never take the registry lock.
struct Registry {
  std::mutex mutex;
  std::unordered_map<std::string, AtomId> by_key;
  std::array<std::atomic<AtomInfo*>, kSlots>* slots =
      new std::array<std::atomic<AtomInfo*>, kSlots>();
  std::uint32_t next_plain = 1;
  std::uint32_t next_power = 1;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

std::size_t slot_of(AtomId id) {
  std::size_t base = id & ~kPowerAtomBit;
  // power atoms use the upper half of the table
  return (id & kPowerAtomBit) ? kSlots / 2 + base : base;
}

AtomId intern(AtomInfo info) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  if (auto it = r.by_key.find(info.key); it != r.by_key.end()) return it->second;
  AtomId id = info.kind == AtomKind::Power ? (r.next_power++ | kPowerAtomBit) : r.next_plain++;
  if ((id & ~kPowerAtomBit) >= kSlots / 2) throw std::length_error("atom table full");
  info.id = id;
  auto* stored = new AtomInfo(std::move(info));
  r.by_key.emplace(stored->key, id);
  (*r.slots)[slot_of(id)].store(stored, std::memory_order_release);
  return id;
}

std::string padded(std::uint64_t v, int width) {
  std::string s = std::to_string(v);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

}  // namespace

const AtomInfo& atom_info(AtomId id) {
  AtomInfo* p = (*registry().slots)[slot_of(id)].load(std::memory_order_acquire);
  if (p == nullptr) throw std::out_of_range("unknown atom id");
  return *p;
}

AtomId coordinate_atom(std::string_view name) {
  AtomInfo info;
  info.kind = AtomKind::Coordinate;
  info.name = name;
  info.key = "0" + info.name;
  return intern(std::move(info));
}

AtomId exp_atom(std::string_view coordinate) {
  AtomInfo info;
  info.kind = AtomKind::Exp;
  info.name = coordinate;
  info.key = "2" + info.name;
  return intern(std::move(info));
}

AtomId function_atom(const std::shared_ptr<const FunctionSymbol>& symbol, int order) {
  AtomInfo info;
  info.kind = AtomKind::Function;
  info.name = symbol->name();
  info.symbol = symbol;
  info.order = order;
  info.key = "1" + info.name + '\x01' + padded(symbol->serial(), 12) + padded(static_cast<std::uint64_t>(order), 4);
  return intern(std::move(info));
}

AtomId power_atom(const std::shared_ptr<const ExprData>& base) {
  AtomInfo info;
  info.kind = AtomKind::Power;
  info.base = base;
  info.key = "3" + to_string(base->num);
  return intern(std::move(info));
}

int compare_atoms(AtomId a, AtomId b) {
  if (a == b) return 0;
  int c = atom_info(a).key.compare(atom_info(b).key);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace g2a
