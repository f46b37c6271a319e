#pragma once

#include <span>
#include <vector>

#include "fano/algebra.hpp"
#include "fano/axioms.hpp"
#include "fano/parallel.hpp"

namespace fano {

inline constexpr double kContinuumTolerance = 1e-6;
inline constexpr double kContinuumImagTolerance = 1e-10;
inline constexpr int kMinQuadratureSteps = 64;

// Minimum-uncertainty wave packet centered at (q0, p0).
struct GaussianState {
  double q0 = 0.0;
  double p0 = 0.0;
  double hbar = 1.0;
};

// Simpson quadrature over r in [-r_max, r_max] with `steps` intervals, and an
// evaluation grid of grid_points x grid_points points on [-grid_extent, grid_extent]^2.
// r_max >= 8 sqrt(hbar) is recommended but not enforced.
struct QuadratureConfig {
  double r_max = 12.0;
  int steps = 512;
  double grid_extent = 8.0;
  int grid_points = 129;
};

/// Throws ErrorCode::kConfig unless steps is even and >= 64, grid_points is
/// odd and >= 3, and r_max, grid_extent are positive.
void validate(const QuadratureConfig& cfg);

/// Throws ErrorCode::kInvalidState unless hbar > 0 and the centers are finite.
void validate(const GaussianState& state);

/// psi(x) = (pi hbar)^{-1/4} exp(-(x - q0)^2 / (2 hbar) + i p0 x / hbar).
Cplx gaussian_wavefunction(const GaussianState& state, double x);

/// |<p|psi>|^2 = (pi hbar)^{-1/2} exp(-(p - p0)^2 / hbar).
double gaussian_momentum_density(const GaussianState& state, double p);

/// The Wigner integral before the imaginary part is dropped.
Cplx wigner_integral(const GaussianState& state, double q, double p, const QuadratureConfig& cfg);

/// W(q,p) = (1 / 2 pi hbar) int dr e^{-ipr/hbar} psi(q + r/2) psi*(q - r/2).
/// Throws ErrorCode::kNonReal if the imaginary residue exceeds 1e-10.
double wigner_continuum(const GaussianState& state, double q, double p,
                        const QuadratureConfig& cfg = {});

struct ContinuumGrid {
  std::vector<double> q;
  std::vector<double> p;
  std::vector<double> w;  // row-major in q
  double max_imag = 0.0;

  double operator()(std::size_t i, std::size_t j) const { return w[i * p.size() + j]; }
};

/// Uniform axis of cfg.grid_points points on [-grid_extent, grid_extent].
std::vector<double> grid_axis(const QuadratureConfig& cfg);

/// W evaluated on the product of the two axes.
ContinuumGrid wigner_grid(const GaussianState& state, std::span<const double> qs,
                          std::span<const double> ps, const QuadratureConfig& cfg,
                          unsigned workers = default_workers());

/// Worst of: |int W dp - |psi(q)|^2| over the q axis, |int W dq - |phi(p)|^2|
/// over the p axis, and |1 - int int W| on the grid. The last term makes a
/// grid that misses the state show up as a failure.
CheckRecord check_marginals_continuum(const GaussianState& state, const QuadratureConfig& cfg = {},
                                      double tol = kContinuumTolerance,
                                      unsigned workers = default_workers());

/// max |W_{U rho U^-1}(q,p) - W_rho(q-a, p-b)|, the displaced state being the
/// Gaussian centered at (q0 + a, p0 + b).
CheckRecord check_translation_continuum(const GaussianState& state, double a, double b,
                                        const QuadratureConfig& cfg = {},
                                        double tol = kContinuumTolerance,
                                        unsigned workers = default_workers());

/// max |W_reflected(q,p) - W(-q,-p)|, the reflected state being centered at (-q0, -p0).
CheckRecord check_parity_continuum(const GaussianState& state, const QuadratureConfig& cfg = {},
                                   double tol = kContinuumTolerance,
                                   unsigned workers = default_workers());

/// Largest imaginary residue of the Wigner integral over the grid.
CheckRecord check_reality_continuum(const GaussianState& state, const QuadratureConfig& cfg = {},
                                    double tol = kContinuumImagTolerance,
                                    unsigned workers = default_workers());

/// The four checks above; translation uses the shift (a, b).
VerificationReport continuum_report(const GaussianState& state, double a, double b,
                                    const QuadratureConfig& cfg = {},
                                    double tol = kContinuumTolerance,
                                    unsigned workers = default_workers());

}  // namespace fano
