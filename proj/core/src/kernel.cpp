#include "fano/kernel.hpp"

#include <utility>

#include "fano/error.hpp"
#include "fano/orbits.hpp"

namespace fano {

namespace {

int pairing_sign(int n, int s, int t) { return ((n + s + t) % 2 == 0) ? 1 : -1; }

std::string site_name(int s, int t) {
  return "R(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

}  // namespace

SignFn SignFn::unchecked(LatticeDim n, std::vector<int> values) {
  const auto dim = static_cast<std::size_t>(n.value());
  if (values.size() != dim * dim) {
    throw Error(ErrorCode::kShape, "sign function needs N^2 = " + std::to_string(dim * dim) +
                                       " values, got " + std::to_string(values.size()));
  }
  for (int v : values) {
    if (v != 1 && v != -1) {
      throw Error(ErrorCode::kInvalidSign, "sign function entries must be +1 or -1");
    }
  }
  return SignFn(n, std::move(values));
}

SignFn SignFn::from_values(LatticeDim n, std::vector<int> values) {
  SignFn sign = unchecked(n, std::move(values));
  if (auto why = sign.invariant_violation()) throw Error(ErrorCode::kInvalidSign, *why);
  return sign;
}

int SignFn::operator()(int s, int t) const {
  const int n = n_.value();
  return values_[static_cast<std::size_t>(reduce(s, n)) * n + reduce(t, n)];
}

std::optional<std::string> SignFn::invariant_violation() const {
  const int n = n_.value();
  for (int k = 0; k < n; ++k) {
    if ((*this)(k, 0) != 1) return "boundary violated: " + site_name(k, 0) + " must be +1";
    if ((*this)(0, k) != 1) return "boundary violated: " + site_name(0, k) + " must be +1";
  }
  for (int s = 1; s < n; ++s) {
    for (int t = 1; t < n; ++t) {
      if ((*this)(s, t) != pairing_sign(n, s, t) * (*this)(n - s, n - t)) {
        return "pairing violated: " + site_name(s, t) + " != (-1)^(N+s+t) " +
               site_name(n - s, n - t);
      }
    }
  }
  return std::nullopt;
}

SignFn SignFn::with_value(int s, int t, int r) const {
  std::vector<int> values = values_;
  const int n = n_.value();
  values[static_cast<std::size_t>(reduce(s, n)) * n + reduce(t, n)] = r;
  return unchecked(n_, std::move(values));
}

Cplx phase_factor(LatticeDim n, int s, int t, int r) {
  const int dim = n.value();
  const std::int64_t st = static_cast<std::int64_t>(reduce(s, dim)) * reduce(t, dim);
  return tau_pow(n, -st) * static_cast<double>(r) / static_cast<double>(dim * dim);
}

CoefficientTable::CoefficientTable(LatticeDim n, std::vector<Cplx> a, std::vector<Cplx> atilde)
    : n_(n), a_(std::move(a)), atilde_(std::move(atilde)) {
  const auto dim = static_cast<std::size_t>(n.value());
  const std::size_t want = dim * dim * dim * dim;
  if (a_.size() != want || atilde_.size() != want) {
    throw Error(ErrorCode::kShape, "coefficient table needs N^4 entries per array");
  }
}

std::size_t CoefficientTable::index(int i, int j, int k, int l) const {
  const int n = n_.value();
  const auto d = static_cast<std::size_t>(n);
  return ((static_cast<std::size_t>(reduce(i, n)) * d + reduce(j, n)) * d + reduce(k, n)) * d +
         reduce(l, n);
}

CoefficientTable coefficient_table(const SignFn& sign) {
  if (auto why = sign.invariant_violation()) throw Error(ErrorCode::kInvalidSign, *why);
  const LatticeDim n = sign.dim();
  const int dim = n.value();
  const auto d = static_cast<std::size_t>(dim);
  std::vector<Cplx> a(d * d * d * d);
  std::vector<Cplx> atilde(d * d * d * d);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l, ++idx) {
          // a(q=i, p=j; n=k, m=l) = omega^{pn - qm} F(m, n)
          a[idx] = omega_pow(n, static_cast<std::int64_t>(j) * k - static_cast<std::int64_t>(i) * l) *
                   phase_factor(n, l, k, sign(l, k));
          // atilde(s=i, t=j; n=k, m=l) = F(s, t) delta_{t,n} delta_{s,m}
          if (j == k && i == l) atilde[idx] = phase_factor(n, i, j, sign(i, j));
        }
      }
    }
  }
  return CoefficientTable(n, std::move(a), std::move(atilde));
}

FanoKernel FanoKernel::from_matrices(SignFn sign, std::vector<CMatrix> matrices) {
  const int n = sign.dim().value();
  if (matrices.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::kShape, "kernel needs N^2 matrices");
  }
  for (const auto& m : matrices) {
    if (m.dim() != n) throw Error(ErrorCode::kShape, "kernel matrix has the wrong dimension");
  }
  return FanoKernel(std::move(sign), std::move(matrices));
}

const CMatrix& FanoKernel::operator()(int q, int p) const {
  const int n = dim().value();
  return matrices_[static_cast<std::size_t>(reduce(q, n)) * n + reduce(p, n)];
}

FanoKernel FanoKernel::with_matrix(int q, int p, CMatrix m) const {
  const int n = dim().value();
  if (m.dim() != n) throw Error(ErrorCode::kShape, "replacement matrix has the wrong dimension");
  auto matrices = matrices_;
  matrices[static_cast<std::size_t>(reduce(q, n)) * n + reduce(p, n)] = std::move(m);
  return FanoKernel(sign_, std::move(matrices));
}

FanoKernel build_kernel(const SignFn& sign) {
  if (auto why = sign.invariant_violation()) throw Error(ErrorCode::kInvalidSign, *why);
  return build_kernel_unchecked(sign);
}

FanoKernel build_kernel_unchecked(const SignFn& sign) {
  const LatticeDim n = sign.dim();
  const int dim = n.value();

  std::vector<Cplx> omega_table(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) omega_table[k] = omega_pow(n, k);
  // F(m, n) indexed [m][n].
  std::vector<Cplx> f(static_cast<std::size_t>(dim) * dim);
  for (int m = 0; m < dim; ++m)
    for (int k = 0; k < dim; ++k) f[m * dim + k] = phase_factor(n, m, k, sign(m, k));

  std::vector<CMatrix> matrices;
  matrices.reserve(static_cast<std::size_t>(dim) * dim);
  for (int q = 0; q < dim; ++q) {
    for (int p = 0; p < dim; ++p) {
      CMatrix delta(dim);
      for (int sp = 0; sp < dim; ++sp) {    // power of S
        for (int m = 0; m < dim; ++m) {     // power of P
          const Cplx coeff = omega_table[reduce(p * sp - q * m, dim)] * f[m * dim + sp];
          // (S^sp P^m)[a][a+sp] = omega^{m (a+sp)}
          for (int a = 0; a < dim; ++a) {
            const int b = reduce(a + sp, dim);
            delta(a, b) += coeff * omega_table[reduce(m * b, dim)];
          }
        }
      }
      matrices.push_back(std::move(delta));
    }
  }
  return FanoKernel::from_matrices(sign, std::move(matrices));
}

SignFn cohendet_sign(LatticeDim n) {
  const int dim = n.value();
  if (dim % 2 == 0) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "the Cohendet sign R(s,t) = (-1)^(st) is defined only for odd N, got N = " +
                    std::to_string(dim));
  }
  std::vector<int> values(static_cast<std::size_t>(dim) * dim);
  for (int s = 0; s < dim; ++s)
    for (int t = 0; t < dim; ++t) values[s * dim + t] = ((s * t) % 2 == 0) ? 1 : -1;
  return SignFn::from_values(n, std::move(values));
}

SignFn all_plus_sign(LatticeDim n) {
  return SignFn::unchecked(n, std::vector<int>(static_cast<std::size_t>(n.value()) * n.value(), 1));
}

SignFn sign_from_bits(LatticeDim n, std::string_view bits) {
  const auto orbits = orbit_structure(n);
  if (bits.size() != orbits.size()) {
    throw Error(ErrorCode::kArity, "N = " + std::to_string(n.value()) + " needs " +
                                       std::to_string(orbits.size()) + " sign bits, got " +
                                       std::to_string(bits.size()));
  }
  const int dim = n.value();
  std::vector<int> values(static_cast<std::size_t>(dim) * dim, 1);
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    int r = 0;
    if (bits[j] == '+') {
      r = 1;
    } else if (bits[j] == '-') {
      r = -1;
    } else {
      throw Error(ErrorCode::kFormat, "sign bits must be '+' or '-'");
    }
    const Site rep = orbits[j].representative;
    values[rep.s * dim + rep.t] = r;
    if (orbits[j].partner) {
      const Site img = *orbits[j].partner;
      values[img.s * dim + img.t] = pairing_sign(dim, rep.s, rep.t) * r;
    }
  }
  return SignFn::from_values(n, std::move(values));
}

SignFn sign_from_mask(LatticeDim n, std::uint64_t mask) {
  const std::size_t count = orbit_count(n);
  if (count < 64 && (mask >> count) != 0) {
    throw Error(ErrorCode::kArity, "mask has bits beyond the orbit count");
  }
  std::string bits(count, '+');
  for (std::size_t j = 0; j < count; ++j) {
    if ((mask >> (count - 1 - j)) & 1U) bits[j] = '-';
  }
  return sign_from_bits(n, bits);
}

std::string bits_of(const SignFn& sign) {
  std::string bits;
  for (const auto& orbit : orbit_structure(sign.dim())) {
    bits.push_back(sign(orbit.representative.s, orbit.representative.t) == 1 ? '+' : '-');
  }
  return bits;
}

}  // namespace fano
