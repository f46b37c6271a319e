#include "fano/orbits.hpp"

namespace fano {

std::vector<NegationOrbit> orbit_structure(LatticeDim n) {
  const int dim = n.value();
  std::vector<NegationOrbit> orbits;
  for (int s = 1; s < dim; ++s) {
    for (int t = 1; t < dim; ++t) {
      const Site site{s, t};
      const Site image{dim - s, dim - t};
      if (image < site) continue;  // already listed under its partner
      if (image == site) {
        orbits.push_back({site, std::nullopt});
      } else {
        orbits.push_back({site, image});
      }
    }
  }
  return orbits;
}

std::size_t orbit_count(LatticeDim n) {
  const auto free_sites = static_cast<std::size_t>(n.value() - 1) * (n.value() - 1);
  return (free_sites + 1) / 2;
}

}  // namespace fano
