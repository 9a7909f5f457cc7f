#include "mckay/builders.hpp"

#include <map>
#include <numeric>

namespace mckay {
namespace {

using Capacities = std::vector<unsigned>;

// Ways to place cycles[from..] into blocks with the given remaining capacities.
Integer distribute(const std::vector<unsigned>& cycles, std::size_t from, Capacities& room,
                   std::map<std::pair<std::size_t, Capacities>, Integer>& memo) {
  if (from == cycles.size()) return 1;
  auto key = std::make_pair(from, room);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (auto& r : room) {
    if (r < cycles[from]) continue;
    r -= cycles[from];
    total += distribute(cycles, from + 1, room, memo);
    r += cycles[from];
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Character young_perm_character(unsigned n, const std::vector<unsigned>& composition) {
  const unsigned sum = std::accumulate(composition.begin(), composition.end(), 0u);
  if (sum != n)
    throw DomainError("young_perm_character: composition sums to " + std::to_string(sum) + ", expected " +
                      std::to_string(n));
  Character chi;
  chi.name = "1^S_n";
  for (const auto& ct : sym_class_types(n)) {
    Capacities room = composition;
    std::map<std::pair<std::size_t, Capacities>, Integer> memo;
    chi.values.emplace_back(distribute(ct.parts(), 0, room, memo));
  }
  return chi;
}

}  // namespace mckay
