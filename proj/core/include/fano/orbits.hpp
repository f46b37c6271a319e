#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "fano/algebra.hpp"

namespace fano {

struct Site {
  int s = 0;
  int t = 0;
  friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

// One orbit of (s, t) -> (-s, -t) acting on {1..n-1}^2. The representative
// is the lexicographically smaller member; fixed points have no partner.
struct NegationOrbit {
  Site representative;
  std::optional<Site> partner;

  bool is_fixed() const noexcept { return !partner.has_value(); }
};

/// Orbits ordered by representative. Their count is ceil((n-1)^2 / 2).
std::vector<NegationOrbit> orbit_structure(LatticeDim n);

std::size_t orbit_count(LatticeDim n);

}  // namespace fano
