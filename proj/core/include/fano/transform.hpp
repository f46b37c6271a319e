#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fano/kernel.hpp"

namespace fano {

inline constexpr double kStateHermiticityTol = 1e-12;
inline constexpr double kStateTraceTol = 1e-12;
inline constexpr double kStatePsdTol = 1e-10;

/// Why m is not a density matrix, if it is not one.
std::optional<std::string> density_violation(const CMatrix& m);

// Hermitian, unit-trace, positive semidefinite (smallest eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  /// Throws ErrorCode::kInvalidState with the reason on failure.
  static DensityMatrix from_matrix(CMatrix m);
  static DensityMatrix maximally_mixed(LatticeDim n);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(std::span<const Cplx> psi);

  LatticeDim dim() const noexcept { return LatticeDim(matrix_.dim()); }
  const CMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityMatrix(CMatrix m) : matrix_(std::move(m)) {}
  CMatrix matrix_;
};

/// Haar-like random mixed state rho = G G^dagger / Tr(G G^dagger), G Ginibre.
DensityMatrix random_density_matrix(LatticeDim n, std::mt19937_64& rng);

// Real N x N grid W(q, p), stored row-major in q.
class WignerGrid {
 public:
  /// Checks shape and finiteness only; reconstruction rejects grids that
  /// did not come from a state.
  static WignerGrid from_values(LatticeDim n, std::vector<double> values,
                                double max_imag_residue = 0.0);

  LatticeDim dim() const noexcept { return n_; }
  double operator()(int q, int p) const;
  std::span<const double> values() const noexcept { return values_; }
  double total() const;
  /// Largest |Im Tr[Delta rho]| dropped when the grid was computed.
  double max_imag_residue() const noexcept { return max_imag_; }

 private:
  WignerGrid(LatticeDim n, std::vector<double> values, double max_imag)
      : n_(n), values_(std::move(values)), max_imag_(max_imag) {}

  LatticeDim n_;
  std::vector<double> values_;
  double max_imag_;
};

/// W(q,p) = Re Tr[Delta(q,p) rho]. Throws kShape on a dimension mismatch and
/// kNonReal if some |Im Tr[Delta rho]| exceeds imag_tol.
WignerGrid wigner_of_state(const FanoKernel& kernel, const DensityMatrix& rho,
                           double imag_tol = kDefaultTolerance);

/// rho = N sum_{q,p} W(q,p) Delta(q,p)^dagger. Throws kShape on a dimension
/// mismatch and kInconsistentGrid when the result is not a density matrix.
DensityMatrix state_of_wigner(const FanoKernel& kernel, const WignerGrid& w);

/// Same sum, returned without the density-matrix check.
CMatrix reconstruct_operator(const FanoKernel& kernel, const WignerGrid& w);

enum class Axis { kQ, kP };

/// kQ: sum over p for each q. kP: sum over q for each p.
std::vector<double> marginal(const WignerGrid& w, Axis axis);

}  // namespace fano
