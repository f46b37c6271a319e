#include "fano/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fano/error.hpp"

namespace fano {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kUnsupportedDimension: return "unsupported-dimension";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kInvalidSign: return "invalid-sign";
    case ErrorCode::kArity: return "arity";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kNonReal: return "kernel-or-state-corrupt";
    case ErrorCode::kInvalidState: return "invalid-state";
    case ErrorCode::kInconsistentGrid: return "inconsistent-grid";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

LatticeDim::LatticeDim(int n) : n_(n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidDimension,
                "lattice dimension must be >= 2, got " + std::to_string(n));
  }
}

namespace {

// i^k for k in {0,1,2,3}.
Cplx quarter_turn(int k) {
  static constexpr Cplx kTurns[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return kTurns[k & 3];
}

}  // namespace

Cplx omega(LatticeDim n) { return omega_pow(n, 1); }

Cplx omega_pow(LatticeDim n, std::int64_t k) {
  const int dim = n.value();
  const int r = reduce(k, dim);
  if ((4 * r) % dim == 0) return quarter_turn(4 * r / dim);
  const double angle = 2.0 * std::numbers::pi * r / dim;
  return {std::cos(angle), std::sin(angle)};
}

Cplx tau(LatticeDim n) { return tau_pow(n, 1); }

Cplx tau_pow(LatticeDim n, std::int64_t k) {
  const int dim = n.value();
  const int r = reduce(k, 2 * dim);
  if ((2 * r) % dim == 0) return quarter_turn(2 * r / dim);
  const double angle = std::numbers::pi * r / dim;
  return {std::cos(angle), std::sin(angle)};
}

CMatrix::CMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw Error(ErrorCode::kShape, "matrix dimension must be positive");
}

CMatrix::CMatrix(int n, std::vector<Cplx> entries) : n_(n), data_(std::move(entries)) {
  if (n < 1 || data_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::kShape, "matrix entry count does not match dimension");
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Cplx CMatrix::trace() const {
  Cplx sum = 0.0;
  for (int i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.n_ != n_) throw Error(ErrorCode::kShape, "matrix dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.n_ != n_) throw Error(ErrorCode::kShape, "matrix dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Cplx scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kShape, "matrix dimension mismatch in *");
  const int n = a.n_;
  CMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Cplx aik = a(i, k);
      if (aik == Cplx{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix matrix_pow(const CMatrix& m, int k) {
  if (k < 0) throw Error(ErrorCode::kShape, "matrix_pow needs a non-negative exponent");
  CMatrix result = CMatrix::identity(m.dim());
  CMatrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

CMatrix conjugate(const CMatrix& u, const CMatrix& m) {
  if (u.dim() != m.dim()) throw Error(ErrorCode::kShape, "matrix dimension mismatch in conjugate");
  const int n = u.dim();
  // Monomial u (one nonzero per row): (u m u^dagger)_{ij} = u_{i,c(i)} m_{c(i),c(j)} conj(u_{j,c(j)}).
  std::vector<int> column(static_cast<std::size_t>(n), -1);
  bool monomial = true;
  for (int i = 0; i < n && monomial; ++i) {
    for (int k = 0; k < n; ++k) {
      if (u(i, k) == Cplx{}) continue;
      if (column[i] != -1) {
        monomial = false;
        break;
      }
      column[i] = k;
    }
    monomial = monomial && column[i] != -1;
  }
  if (!monomial) return u * m * u.adjoint();
  CMatrix out(n);
  for (int i = 0; i < n; ++i) {
    const Cplx left = u(i, column[i]);
    for (int j = 0; j < n; ++j) out(i, j) = left * m(column[i], column[j]) * std::conj(u(j, column[j]));
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kShape, "matrix dimension mismatch");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

double hermiticity_defect(const CMatrix& m) { return max_abs_diff(m, m.adjoint()); }

double unitarity_defect(const CMatrix& m) {
  return max_abs_diff(m.adjoint() * m, CMatrix::identity(m.dim()));
}

double min_eigenvalue_hermitian(const CMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXcd dense(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dense(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<Cplx> momentum_vector(LatticeDim n, int p) {
  const int dim = n.value();
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Cplx> v(static_cast<std::size_t>(dim));
  for (int q = 0; q < dim; ++q) {
    v[static_cast<std::size_t>(q)] = norm * omega_pow(n, -static_cast<std::int64_t>(p) * q);
  }
  return v;
}

std::vector<Cplx> position_vector(LatticeDim n, int q) {
  std::vector<Cplx> v(static_cast<std::size_t>(n.value()));
  v[static_cast<std::size_t>(reduce(q, n.value()))] = 1.0;
  return v;
}

CMatrix outer(std::span<const Cplx> ket, std::span<const Cplx> bra) {
  if (ket.size() != bra.size() || ket.empty()) {
    throw Error(ErrorCode::kShape, "outer product needs equal non-empty vectors");
  }
  const int n = static_cast<int>(ket.size());
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

}  // namespace fano
