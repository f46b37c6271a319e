#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace fano {

using Cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

// Side length N of the lattice phase space Z_N x Z_N. N = 1 is rejected.
class LatticeDim {
 public:
  explicit LatticeDim(int n);

  constexpr int value() const noexcept { return n_; }
  friend constexpr bool operator==(LatticeDim, LatticeDim) = default;

 private:
  int n_;
};

// Representative of k in {0, ..., n-1}.
constexpr int reduce(std::int64_t k, int n) noexcept {
  const auto r = static_cast<int>(k % n);
  return r < 0 ? r + n : r;
}

/// e^{2 pi i / n}.
Cplx omega(LatticeDim n);

/// omega(n)^k, evaluated from the reduced exponent. Quarter turns are exact.
Cplx omega_pow(LatticeDim n, std::int64_t k);

/// e^{i pi / n}, the fixed square root of omega(n).
Cplx tau(LatticeDim n);

/// tau(n)^k, evaluated from k reduced mod 2n.
Cplx tau_pow(LatticeDim n, std::int64_t k);

/// Dense square complex matrix, row-major. Row index is the bra label,
/// column index the ket label.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n);
  CMatrix(int n, std::vector<Cplx> entries);

  static CMatrix identity(int n);

  int dim() const noexcept { return n_; }

  Cplx& operator()(int row, int col) { return data_[index(row, col)]; }
  const Cplx& operator()(int row, int col) const { return data_[index(row, col)]; }

  std::span<const Cplx> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  Cplx trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Cplx scale);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Cplx s) { return a *= s; }
  friend CMatrix operator*(Cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col);
  }

  int n_ = 0;
  std::vector<Cplx> data_;
};

/// Non-negative integer power by repeated squaring.
CMatrix matrix_pow(const CMatrix& m, int k);

/// u * m * u^dagger; O(n^2) when u has exactly one nonzero per row.
CMatrix conjugate(const CMatrix& u, const CMatrix& m);

/// Throws ErrorCode::kShape on a dimension mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

double hermiticity_defect(const CMatrix& m);
double unitarity_defect(const CMatrix& m);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue_hermitian(const CMatrix& m);

/// |p> = (1/sqrt n) sum_q omega^{-pq} |q>.
std::vector<Cplx> momentum_vector(LatticeDim n, int p);

/// |q> as a standard basis vector.
std::vector<Cplx> position_vector(LatticeDim n, int q);

/// |a><b|.
CMatrix outer(std::span<const Cplx> ket, std::span<const Cplx> bra);

}  // namespace fano
