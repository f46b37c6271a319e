#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fano/kernel.hpp"
#include "fano/orbits.hpp"
#include "fano/parallel.hpp"

namespace fano {

inline constexpr int kMaxEnumerateDim = 7;
inline constexpr int kMaxCertifyDim = 4;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct EnumerationOptions {
  unsigned workers = default_workers();
  bool keep_signs = true;
  /// Members given full matrix verification when N > kMaxCertifyDim.
  std::size_t sample_size = 32;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTolerance;
};

struct EnumerationResult {
  LatticeDim n;
  std::uint64_t count = 0;
  /// Lexicographic in the flattened value array (-1 before +1).
  std::optional<std::vector<SignFn>> signs;
  /// True when every member passed verify_all.
  bool certified = false;
  std::size_t sample_verified = 0;
  std::size_t sample_failures = 0;
};

/// All sign functions satisfying boundary + pairing, generated one per
/// orbit bit pattern. With certify, each candidate kernel is built and
/// kept only if verify_all passes. Guards: N <= 7, and N <= 4 with certify;
/// violations throw ErrorCode::kTooLarge.
EnumerationResult enumerate_kernels(LatticeDim n, bool certify,
                                    const EnumerationOptions& options = {});

/// 2^{ceil((N-1)^2 / 2)}; N <= 7.
std::uint64_t count_kernels(LatticeDim n);

/// True iff some member of the enumerated family rebuilds to kernel within tol.
bool membership(LatticeDim n, const FanoKernel& kernel, double tol = kDefaultTolerance);

/// Reads R(s,t) back from the S^n P^m expansion of Delta(0,0), rounding each
/// coefficient to the nearest sign. Returns nullopt if some coefficient is
/// not within tol of +-1 times the expected phase.
std::optional<SignFn> extract_sign(const FanoKernel& kernel, double tol = 1e-9);

}  // namespace fano
