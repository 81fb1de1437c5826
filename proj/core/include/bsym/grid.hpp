#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bsym/codes.hpp"
#include "bsym/cyclotomy.hpp"

namespace bsym {

struct GridConfig {
  std::uint32_t p;
  unsigned s;
  unsigned m;
  std::uint64_t N;

  std::uint64_t q() const;
  std::uint64_t Q() const;
  std::string label() const;
  friend auto operator<=>(const GridConfig&, const GridConfig&) = default;
};

/// Every (p, s, m, N) with p^{sm} <= max_Q, sm >= 1 and N | p^{sm} - 1, ordered by (Q, s, N).
std::vector<GridConfig> grid_configs(std::uint64_t max_Q);

/// Fields and period systems shared across grid instances.
class GridCache {
 public:
  FieldPtr field(std::uint32_t p, unsigned e);
  Code code(const GridConfig& c);
  const PeriodSystem& periods(std::uint32_t p, unsigned e, std::uint64_t k);

 private:
  std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> fields_;
  std::map<std::tuple<std::uint32_t, unsigned, std::uint64_t>, PeriodSystem> periods_;
};

}  // namespace bsym
