#include "fano/enumerate.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "fano/axioms.hpp"
#include "fano/clockshift.hpp"
#include "fano/error.hpp"

namespace fano {

namespace {

void guard(LatticeDim n, bool certify) {
  if (n.value() > kMaxEnumerateDim) {
    throw Error(ErrorCode::kTooLarge, "enumeration is limited to N <= " +
                                          std::to_string(kMaxEnumerateDim) + ", got N = " +
                                          std::to_string(n.value()));
  }
  if (certify && n.value() > kMaxCertifyDim) {
    throw Error(ErrorCode::kTooLarge, "certified enumeration is limited to N <= " +
                                          std::to_string(kMaxCertifyDim) + ", got N = " +
                                          std::to_string(n.value()));
  }
}

}  // namespace

std::uint64_t count_kernels(LatticeDim n) {
  guard(n, false);
  return std::uint64_t{1} << orbit_count(n);
}

EnumerationResult enumerate_kernels(LatticeDim n, bool certify, const EnumerationOptions& options) {
  guard(n, certify);
  const std::uint64_t candidates = count_kernels(n);

  std::vector<std::optional<SignFn>> slots(candidates);
  parallel_for(candidates, options.workers, [&](std::size_t mask) {
    SignFn sign = sign_from_mask(n, mask);
    if (!sign.satisfies_invariants()) return;
    if (certify && !verify_all(build_kernel(sign), options.tol).pass) return;
    slots[mask] = std::move(sign);
  });

  EnumerationResult result{n, 0, std::nullopt, certify};
  std::vector<SignFn> signs;
  if (options.keep_signs) signs.reserve(candidates);
  for (auto& slot : slots) {
    if (!slot) continue;
    ++result.count;
    if (options.keep_signs) signs.push_back(std::move(*slot));
  }
  if (options.keep_signs) {
    std::sort(signs.begin(), signs.end());
    result.signs = std::move(signs);
  }

  if (!certify && n.value() > kMaxCertifyDim && options.sample_size > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, candidates - 1);
    std::vector<std::uint64_t> sample;
    const std::size_t want = std::min<std::uint64_t>(options.sample_size, candidates);
    while (sample.size() < want) {
      const std::uint64_t mask = pick(rng);
      if (std::find(sample.begin(), sample.end(), mask) == sample.end()) sample.push_back(mask);
    }
    std::vector<char> passed(sample.size(), 0);
    parallel_for(sample.size(), options.workers, [&](std::size_t i) {
      passed[i] = verify_all(build_kernel(sign_from_mask(n, sample[i])), options.tol).pass;
    });
    result.sample_verified = sample.size();
    result.sample_failures =
        static_cast<std::size_t>(std::count(passed.begin(), passed.end(), char{0}));
  }
  return result;
}

std::optional<SignFn> extract_sign(const FanoKernel& kernel, double tol) {
  const LatticeDim n = kernel.dim();
  const int dim = n.value();
  const CMatrix& origin = kernel(0, 0);
  std::vector<int> values(static_cast<std::size_t>(dim) * dim);
  for (int m = 0; m < dim; ++m) {
    for (int k = 0; k < dim; ++k) {
      // Coefficient of S^k P^m in Delta(0,0) is Tr[(S^k P^m)^dagger Delta] / N = F(m, k).
      const CMatrix basis = weyl_monomial(n, k, m);
      Cplx coeff = 0.0;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) coeff += std::conj(basis(i, j)) * origin(i, j);
      coeff /= static_cast<double>(dim);
      const Cplx unit = phase_factor(n, m, k, 1);
      const Cplx ratio = coeff / unit;
      const int r = ratio.real() >= 0.0 ? 1 : -1;
      if (std::abs(ratio - static_cast<double>(r)) > tol * dim * dim) return std::nullopt;
      values[static_cast<std::size_t>(m) * dim + k] = r;
    }
  }
  return SignFn::unchecked(n, std::move(values));
}

bool membership(LatticeDim n, const FanoKernel& kernel, double tol) {
  guard(n, false);
  if (kernel.dim() != n) throw Error(ErrorCode::kShape, "kernel dimension does not match N");
  // Distinct sign functions give distinct Delta(0,0) expansions, so the only
  // possible match is the sign read back from the kernel itself.
  const auto candidate = extract_sign(kernel);
  if (!candidate || !candidate->satisfies_invariants()) return false;
  const FanoKernel rebuilt = build_kernel(*candidate);
  for (std::size_t i = 0; i < kernel.matrices().size(); ++i) {
    if (!approx_equal(rebuilt.matrices()[i], kernel.matrices()[i], tol)) return false;
  }
  return true;
}

}  // namespace fano
