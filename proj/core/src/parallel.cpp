#include "fano/parallel.hpp"

namespace fano {

unsigned default_workers() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1U : n;
}

}  // namespace fano
