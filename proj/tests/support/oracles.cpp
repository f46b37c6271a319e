#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fano/clockshift.hpp"

namespace fano::oracle {

Cplx root(int n, long long k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

namespace {

CMatrix dense_shift(int n) {
  CMatrix s(n);
  for (int a = 0; a < n; ++a) s(a, (a + 1) % n) = 1.0;
  return s;
}

CMatrix dense_clock(int n) {
  CMatrix p(n);
  for (int k = 0; k < n; ++k) p(k, k) = root(n, k);
  return p;
}

// F(s,t) = e^{-i pi s t / N} R(s,t) / N^2.
Cplx f_value(const SignFn& sign, int s, int t) {
  const int n = sign.dim().value();
  return std::polar(1.0, -std::numbers::pi * s * t / n) * static_cast<double>(sign(s, t)) /
         static_cast<double>(n * n);
}

CMatrix ket_bra(const std::vector<Cplx>& v) {
  const int n = static_cast<int>(v.size());
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

}  // namespace

std::vector<CMatrix> dense_kernel(const SignFn& sign) {
  const int n = sign.dim().value();
  const CMatrix s = dense_shift(n);
  const CMatrix p = dense_clock(n);
  std::vector<CMatrix> out;
  for (int q = 0; q < n; ++q)
    for (int pp = 0; pp < n; ++pp) {
      CMatrix delta(n);
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          const Cplx a = root(n, static_cast<long long>(pp) * k - static_cast<long long>(q) * m) *
                         f_value(sign, m, k);
          delta += a * (matrix_pow(s, k) * matrix_pow(p, m));
        }
      out.push_back(std::move(delta));
    }
  return out;
}

std::vector<Cplx> fourier_of_a(const CoefficientTable& table) {
  const int n = table.dim().value();
  std::vector<Cplx> out;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Cplx sum = 0.0;
          for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
              sum += root(n, static_cast<long long>(q) * s - static_cast<long long>(p) * t) *
                     table.a(q, p, k, m);
          out.push_back(sum / static_cast<double>(n * n));
        }
  return out;
}

bool dense_axioms_hold(const FanoKernel& kernel, double tol) {
  const int n = kernel.dim().value();
  auto near = [tol](const CMatrix& a, const CMatrix& b) { return max_abs_diff(a, b) <= tol; };
  auto at = [&](int q, int p) -> const CMatrix& { return kernel(((q % n) + n) % n, ((p % n) + n) % n); };

  for (int q = 0; q < n; ++q) {
    CMatrix sum_p(n), sum_q(n);
    for (int k = 0; k < n; ++k) {
      sum_p += at(q, k);
      sum_q += at(k, q);
    }
    std::vector<Cplx> pos(n), mom(n);
    pos[q] = 1.0;
    for (int j = 0; j < n; ++j) mom[j] = root(n, -static_cast<long long>(q) * j) / std::sqrt(double(n));
    if (!near(sum_p, ket_bra(pos)) || !near(sum_q, ket_bra(mom))) return false;
  }
  for (const auto& m : kernel.matrices())
    if (!near(m, m.adjoint())) return false;
  const auto& mats = kernel.matrices();
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      const Cplx overlap = (mats[i].adjoint() * mats[j]).trace();
      const double expected = i == j ? 1.0 / n : 0.0;
      if (std::abs(overlap - expected) > tol) return false;
    }
  const CMatrix s = dense_shift(n);
  const CMatrix p = dense_clock(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CMatrix u = matrix_pow(p, b) * matrix_pow(s, a);
      const CMatrix u_inv = matrix_pow(u, n - 1);  // U^N is a phase times I
      const Cplx phase = (u * u_inv).trace() / static_cast<double>(n);
      for (int q = 0; q < n; ++q)
        for (int pp = 0; pp < n; ++pp) {
          CMatrix lhs = u * at(q, pp) * u_inv;
          lhs *= 1.0 / phase;
          if (!near(lhs, at(q - a, pp - b))) return false;
        }
    }
  CMatrix t(n);
  for (int alpha = 0; alpha < n; ++alpha) t(alpha, (n - alpha) % n) = 1.0;
  for (int q = 0; q < n; ++q)
    for (int pp = 0; pp < n; ++pp)
      if (!near(t * at(q, pp) * t, at(-q, -pp))) return false;
  return true;
}

std::vector<SignFn> raw_sign_search(LatticeDim n,
                                    const std::function<bool(const FanoKernel&)>& accept) {
  const int dim = n.value();
  if (dim > 4) throw std::invalid_argument("raw search is limited to N <= 4");
  const int cells = dim * dim;
  std::vector<SignFn> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<int> values(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) values[c] = ((mask >> c) & 1U) ? -1 : 1;
    SignFn sign = SignFn::unchecked(n, std::move(values));
    if (accept(build_kernel_unchecked(sign))) found.push_back(std::move(sign));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace fano::oracle
