#include "fano/transform.hpp"

#include <cmath>
#include <numeric>

#include "fano/error.hpp"

namespace fano {

std::optional<std::string> density_violation(const CMatrix& m) {
  const double herm = hermiticity_defect(m);
  if (!(herm <= kStateHermiticityTol)) {
    return "not Hermitian (defect " + std::to_string(herm) + ")";
  }
  const Cplx tr = m.trace();
  if (!(std::abs(tr - 1.0) <= kStateTraceTol)) {
    return "trace is (" + std::to_string(tr.real()) + ", " + std::to_string(tr.imag()) +
           "), expected 1";
  }
  const double lowest = min_eigenvalue_hermitian(m);
  if (!(lowest >= -kStatePsdTol)) {
    return "not positive semidefinite (smallest eigenvalue " + std::to_string(lowest) + ")";
  }
  return std::nullopt;
}

DensityMatrix DensityMatrix::from_matrix(CMatrix m) {
  static_cast<void>(LatticeDim(m.dim()));  // rejects 1x1
  if (auto why = density_violation(m)) {
    throw Error(ErrorCode::kInvalidState, "not a density matrix: " + *why);
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(LatticeDim n) {
  CMatrix m = CMatrix::identity(n.value());
  m *= 1.0 / n.value();
  return from_matrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Cplx> psi) {
  double norm2 = 0.0;
  for (const auto& c : psi) norm2 += std::norm(c);
  if (!(norm2 > 0.0)) throw Error(ErrorCode::kInvalidState, "pure state vector is zero");
  CMatrix m = outer(psi, psi);
  m *= 1.0 / norm2;
  return from_matrix(std::move(m));
}

DensityMatrix random_density_matrix(LatticeDim n, std::mt19937_64& rng) {
  const int dim = n.value();
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  CMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix::from_matrix(std::move(rho));
}

WignerGrid WignerGrid::from_values(LatticeDim n, std::vector<double> values,
                                   double max_imag_residue) {
  const auto d = static_cast<std::size_t>(n.value());
  if (values.size() != d * d) {
    throw Error(ErrorCode::kShape, "Wigner grid needs N^2 values");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kFormat, "Wigner grid value is not finite");
  }
  return WignerGrid(n, std::move(values), max_imag_residue);
}

double WignerGrid::operator()(int q, int p) const {
  const int n = n_.value();
  return values_[static_cast<std::size_t>(reduce(q, n)) * n + reduce(p, n)];
}

double WignerGrid::total() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

WignerGrid wigner_of_state(const FanoKernel& kernel, const DensityMatrix& rho, double imag_tol) {
  const int n = kernel.dim().value();
  if (rho.dim().value() != n) {
    throw Error(ErrorCode::kShape, "kernel and state dimensions differ");
  }
  const CMatrix& r = rho.matrix();
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  double max_imag = 0.0;
  for (int q = 0; q < n; ++q) {
    for (int p = 0; p < n; ++p) {
      const CMatrix& delta = kernel(q, p);
      Cplx tr = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += delta(i, j) * r(j, i);
      max_imag = std::max(max_imag, std::abs(tr.imag()));
      values[static_cast<std::size_t>(q) * n + p] = tr.real();
    }
  }
  if (!(max_imag <= imag_tol)) {
    throw Error(ErrorCode::kNonReal, "Tr[Delta rho] has imaginary part " +
                                         std::to_string(max_imag) +
                                         "; kernel or state is corrupt");
  }
  return WignerGrid::from_values(kernel.dim(), std::move(values), max_imag);
}

CMatrix reconstruct_operator(const FanoKernel& kernel, const WignerGrid& w) {
  const int n = kernel.dim().value();
  if (w.dim().value() != n) {
    throw Error(ErrorCode::kShape, "kernel and Wigner grid dimensions differ");
  }
  CMatrix rho(n);
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) {
      const CMatrix& delta = kernel(q, p);
      const double weight = n * w(q, p);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho(i, j) += weight * std::conj(delta(j, i));
    }
  return rho;
}

DensityMatrix state_of_wigner(const FanoKernel& kernel, const WignerGrid& w) {
  CMatrix rho = reconstruct_operator(kernel, w);
  if (auto why = density_violation(rho)) {
    throw Error(ErrorCode::kInconsistentGrid,
                "grid does not correspond to a quantum state: " + *why);
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

std::vector<double> marginal(const WignerGrid& w, Axis axis) {
  const int n = w.dim().value();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) out[axis == Axis::kQ ? q : p] += w(q, p);
  return out;
}

}  // namespace fano
