#include "bsym/grid.hpp"

#include <algorithm>

#include "bsym/arith.hpp"

namespace bsym {

std::uint64_t GridConfig::q() const { return ipow(p, s); }
std::uint64_t GridConfig::Q() const { return ipow(p, s * m); }

std::string GridConfig::label() const {
  return "C(" + std::to_string(Q()) + "," + std::to_string(N) + ")_" + std::to_string(q());
}

std::vector<GridConfig> grid_configs(std::uint64_t max_Q) {
  std::vector<GridConfig> out;
  for (std::uint64_t p = 2; p <= max_Q; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t Q = p;
    for (unsigned e = 1; Q <= max_Q; ++e, Q *= p) {
      for (unsigned s = 1; s <= e; ++s) {
        if (e % s != 0) continue;
        for (auto N : divisors(Q - 1)) out.push_back({static_cast<std::uint32_t>(p), s, e / s, N});
      }
      if (Q > max_Q / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const GridConfig& a, const GridConfig& b) {
    return std::tuple(a.Q(), a.s, a.N) < std::tuple(b.Q(), b.s, b.N);
  });
  return out;
}

FieldPtr GridCache::field(std::uint32_t p, unsigned e) {
  auto& slot = fields_[{p, e}];
  if (!slot) slot = make_field(p, e);
  return slot;
}

Code GridCache::code(const GridConfig& c) { return Code(field(c.p, c.s * c.m), c.q(), c.N); }

const PeriodSystem& GridCache::periods(std::uint32_t p, unsigned e, std::uint64_t k) {
  auto key = std::tuple(p, e, k);
  auto it = periods_.find(key);
  if (it == periods_.end()) it = periods_.emplace(key, period_system(*field(p, e), k)).first;
  return it->second;
}

}  // namespace bsym
