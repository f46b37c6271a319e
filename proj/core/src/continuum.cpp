#include "fano/continuum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fano/error.hpp"

namespace fano {

namespace {

// Composite Simpson weights for `intervals` (even) intervals of width h.
std::vector<double> simpson_weights(int intervals, double h) {
  std::vector<double> w(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k) {
    const double c = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    w[static_cast<std::size_t>(k)] = c * h / 3.0;
  }
  return w;
}

std::vector<double> shifted(std::span<const double> axis, double offset, double scale = 1.0) {
  std::vector<double> out(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) out[i] = scale * axis[i] + offset;
  return out;
}

double max_grid_diff(const ContinuumGrid& a, const ContinuumGrid& b) {
  double dev = 0.0;
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    const double d = std::abs(a.w[i] - b.w[i]);
    if (std::isnan(d)) return d;
    dev = std::max(dev, d);
  }
  return dev;
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  std::ostringstream why;
  if (cfg.steps < kMinQuadratureSteps || cfg.steps % 2 != 0) {
    why << "steps must be even and >= " << kMinQuadratureSteps << ", got " << cfg.steps;
  } else if (cfg.grid_points < 3 || cfg.grid_points % 2 == 0) {
    why << "grid_points must be odd and >= 3, got " << cfg.grid_points;
  } else if (!(cfg.r_max > 0.0) || !std::isfinite(cfg.r_max)) {
    why << "r_max must be positive, got " << cfg.r_max;
  } else if (!(cfg.grid_extent > 0.0) || !std::isfinite(cfg.grid_extent)) {
    why << "grid_extent must be positive, got " << cfg.grid_extent;
  } else {
    return;
  }
  throw Error(ErrorCode::kConfig, "quadrature config: " + why.str());
}

void validate(const GaussianState& state) {
  if (!(state.hbar > 0.0) || !std::isfinite(state.hbar) || !std::isfinite(state.q0) ||
      !std::isfinite(state.p0)) {
    throw Error(ErrorCode::kInvalidState, "Gaussian state needs finite centers and hbar > 0");
  }
}

Cplx gaussian_wavefunction(const GaussianState& state, double x) {
  const double amplitude = std::pow(std::numbers::pi * state.hbar, -0.25);
  const double dx = x - state.q0;
  const double envelope = std::exp(-dx * dx / (2.0 * state.hbar));
  return amplitude * envelope * std::polar(1.0, state.p0 * x / state.hbar);
}

double gaussian_momentum_density(const GaussianState& state, double p) {
  const double dp = p - state.p0;
  return std::exp(-dp * dp / state.hbar) / std::sqrt(std::numbers::pi * state.hbar);
}

std::vector<double> grid_axis(const QuadratureConfig& cfg) {
  validate(cfg);
  std::vector<double> axis(static_cast<std::size_t>(cfg.grid_points));
  const double h = 2.0 * cfg.grid_extent / (cfg.grid_points - 1);
  const int mid = cfg.grid_points / 2;
  // Built outward from zero so the axis is exactly symmetric.
  for (int i = 0; i < cfg.grid_points; ++i) axis[static_cast<std::size_t>(i)] = (i - mid) * h;
  return axis;
}

ContinuumGrid wigner_grid(const GaussianState& state, std::span<const double> qs,
                          std::span<const double> ps, const QuadratureConfig& cfg,
                          unsigned workers) {
  validate(cfg);
  validate(state);
  const int steps = cfg.steps;
  const double h = 2.0 * cfg.r_max / steps;
  const std::vector<double> weights = simpson_weights(steps, h);
  const auto nodes = static_cast<std::size_t>(steps) + 1;
  const int mid = steps / 2;
  std::vector<double> r(nodes);
  for (int k = 0; k <= steps; ++k) r[static_cast<std::size_t>(k)] = (k - mid) * h;

  // e^{-i p r / hbar}, shared by every q row.
  std::vector<Cplx> phase(ps.size() * nodes);
  for (std::size_t j = 0; j < ps.size(); ++j)
    for (std::size_t k = 0; k < nodes; ++k)
      phase[j * nodes + k] = std::polar(1.0, -ps[j] * r[k] / state.hbar);

  ContinuumGrid grid{std::vector<double>(qs.begin(), qs.end()),
                     std::vector<double>(ps.begin(), ps.end()),
                     std::vector<double>(qs.size() * ps.size()), 0.0};
  std::vector<double> row_imag(qs.size(), 0.0);
  const double norm = 1.0 / (2.0 * std::numbers::pi * state.hbar);

  parallel_for(qs.size(), workers, [&](std::size_t i) {
    std::vector<Cplx> integrand(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
      integrand[k] = weights[k] * gaussian_wavefunction(state, qs[i] + 0.5 * r[k]) *
                     std::conj(gaussian_wavefunction(state, qs[i] - 0.5 * r[k]));
    }
    double imag = 0.0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      Cplx sum = 0.0;
      const Cplx* row = &phase[j * nodes];
      for (std::size_t k = 0; k < nodes; ++k) sum += integrand[k] * row[k];
      sum *= norm;
      grid.w[i * ps.size() + j] = sum.real();
      imag = std::max(imag, std::abs(sum.imag()));
    }
    row_imag[i] = imag;
  });
  for (double v : row_imag) grid.max_imag = std::max(grid.max_imag, v);
  return grid;
}

Cplx wigner_integral(const GaussianState& state, double q, double p, const QuadratureConfig& cfg) {
  validate(cfg);
  validate(state);
  const double h = 2.0 * cfg.r_max / cfg.steps;
  const auto weights = simpson_weights(cfg.steps, h);
  const int mid = cfg.steps / 2;
  Cplx sum = 0.0;
  for (int k = 0; k <= cfg.steps; ++k) {
    const double r = (k - mid) * h;
    sum += weights[static_cast<std::size_t>(k)] * std::polar(1.0, -p * r / state.hbar) *
           gaussian_wavefunction(state, q + 0.5 * r) *
           std::conj(gaussian_wavefunction(state, q - 0.5 * r));
  }
  return sum / (2.0 * std::numbers::pi * state.hbar);
}

double wigner_continuum(const GaussianState& state, double q, double p,
                        const QuadratureConfig& cfg) {
  const Cplx w = wigner_integral(state, q, p, cfg);
  if (!(std::abs(w.imag()) <= kContinuumImagTolerance)) {
    throw Error(ErrorCode::kNonReal,
                "Wigner integral has imaginary residue " + std::to_string(w.imag()));
  }
  return w.real();
}

CheckRecord check_marginals_continuum(const GaussianState& state, const QuadratureConfig& cfg,
                                      double tol, unsigned workers) {
  const auto axis = grid_axis(cfg);
  const ContinuumGrid grid = wigner_grid(state, axis, axis, cfg, workers);
  const std::size_t n = axis.size();
  const auto weights = simpson_weights(static_cast<int>(n) - 1, axis[1] - axis[0]);

  double dev = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double over_p = 0.0;
    for (std::size_t j = 0; j < n; ++j) over_p += weights[j] * grid(i, j);
    dev = std::max(dev, std::abs(over_p - std::norm(gaussian_wavefunction(state, axis[i]))));
    mass += weights[i] * over_p;
  }
  for (std::size_t j = 0; j < n; ++j) {
    double over_q = 0.0;
    for (std::size_t i = 0; i < n; ++i) over_q += weights[i] * grid(i, j);
    dev = std::max(dev, std::abs(over_q - gaussian_momentum_density(state, axis[j])));
  }
  dev = std::max(dev, std::abs(1.0 - mass));
  if (std::isnan(mass)) dev = mass;
  return make_check("continuum_marginals", dev, tol);
}

CheckRecord check_translation_continuum(const GaussianState& state, double a, double b,
                                        const QuadratureConfig& cfg, double tol,
                                        unsigned workers) {
  const auto axis = grid_axis(cfg);
  const GaussianState displaced{state.q0 + a, state.p0 + b, state.hbar};
  const ContinuumGrid moved = wigner_grid(displaced, axis, axis, cfg, workers);
  const ContinuumGrid original =
      wigner_grid(state, shifted(axis, -a), shifted(axis, -b), cfg, workers);
  return make_check("continuum_translation", max_grid_diff(moved, original), tol);
}

CheckRecord check_parity_continuum(const GaussianState& state, const QuadratureConfig& cfg,
                                   double tol, unsigned workers) {
  const auto axis = grid_axis(cfg);
  const GaussianState reflected{-state.q0, -state.p0, state.hbar};
  const ContinuumGrid image = wigner_grid(reflected, axis, axis, cfg, workers);
  const auto negated = shifted(axis, 0.0, -1.0);
  const ContinuumGrid original = wigner_grid(state, negated, negated, cfg, workers);
  return make_check("continuum_parity", max_grid_diff(image, original), tol);
}

CheckRecord check_reality_continuum(const GaussianState& state, const QuadratureConfig& cfg,
                                    double tol, unsigned workers) {
  const auto axis = grid_axis(cfg);
  return make_check("continuum_reality", wigner_grid(state, axis, axis, cfg, workers).max_imag,
                    tol);
}

VerificationReport continuum_report(const GaussianState& state, double a, double b,
                                    const QuadratureConfig& cfg, double tol, unsigned workers) {
  VerificationReport report;
  std::ostringstream id;
  id.precision(17);
  id << "gaussian(q0=" << state.q0 << ",p0=" << state.p0 << ",hbar=" << state.hbar << ")";
  report.kernel_id = id.str();
  report.checks = {
      check_marginals_continuum(state, cfg, tol, workers),
      check_translation_continuum(state, a, b, cfg, tol, workers),
      check_parity_continuum(state, cfg, tol, workers),
      check_reality_continuum(state, cfg, std::min(tol, kContinuumImagTolerance), workers),
  };
  finalize(report);
  return report;
}

}  // namespace fano
