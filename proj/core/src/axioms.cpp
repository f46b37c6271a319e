#include "fano/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>

#include "fano/clockshift.hpp"
#include "fano/error.hpp"

namespace fano {

namespace {

constexpr int kCompletenessWarnAbove = 8;

// Unitaries indexed a * N + b: translations U(a,b) and reflections U(-a,-b) T.
struct SymmetrySet {
  std::vector<CMatrix> translations;
  std::vector<CMatrix> reflections;
};

const SymmetrySet& symmetries(LatticeDim n) {
  static std::mutex mutex;
  static std::map<int, SymmetrySet> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n.value());
  if (inserted) {
    for (int a = 0; a < n.value(); ++a)
      for (int b = 0; b < n.value(); ++b) {
        it->second.translations.push_back(translation_unitary(n, a, b).matrix());
        it->second.reflections.push_back(shifted_parity_unitary(n, -a, -b).matrix());
      }
  }
  return it->second;
}

double worst(double current, double candidate) {
  if (std::isnan(candidate)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(current, candidate);
}

// Max deviation of T Delta(q,p) T^dagger from Delta(target(q,p)) over all (q,p).
template <class Target>
double covariance_deviation(const FanoKernel& kernel, const CMatrix& unitary, Target target) {
  const int n = kernel.dim().value();
  double dev = 0.0;
  for (int q = 0; q < n; ++q) {
    for (int p = 0; p < n; ++p) {
      const auto [tq, tp] = target(q, p);
      dev = worst(dev, max_abs_diff(conjugate(unitary, kernel(q, p)), kernel(tq, tp)));
    }
  }
  return dev;
}

}  // namespace

CheckRecord make_check(std::string name, double max_dev, double tol) {
  return {std::move(name), max_dev, tol, max_dev <= tol};
}

std::vector<std::string> VerificationReport::failing_checks() const {
  std::vector<std::string> names;
  for (const auto& c : checks)
    if (!c.pass) names.push_back(c.name);
  return names;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void finalize(VerificationReport& report) {
  report.pass = !report.checks.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& c) { return c.pass; });
}

std::string kernel_id(const FanoKernel& kernel) {
  const SignFn& sign = kernel.sign();
  std::string id = "n" + std::to_string(sign.dim().value()) + "-" +
                   std::string(FanoKernel::convention()) + "-";
  if (sign.satisfies_invariants()) return id + bits_of(sign);
  id += "raw-";
  for (int v : sign.values()) id.push_back(v == 1 ? '+' : '-');
  return id;
}

CheckRecord check_marginal_q(const FanoKernel& kernel, double tol) {
  const LatticeDim n = kernel.dim();
  double dev = 0.0;
  for (int q = 0; q < n.value(); ++q) {
    CMatrix sum(n.value());
    for (int p = 0; p < n.value(); ++p) sum += kernel(q, p);
    const auto ket = position_vector(n, q);
    dev = worst(dev, max_abs_diff(sum, outer(ket, ket)));
  }
  return make_check("marginal_q", dev, tol);
}

CheckRecord check_marginal_p(const FanoKernel& kernel, double tol) {
  const LatticeDim n = kernel.dim();
  double dev = 0.0;
  for (int p = 0; p < n.value(); ++p) {
    CMatrix sum(n.value());
    for (int q = 0; q < n.value(); ++q) sum += kernel(q, p);
    const auto ket = momentum_vector(n, p);
    dev = worst(dev, max_abs_diff(sum, outer(ket, ket)));
  }
  return make_check("marginal_p", dev, tol);
}

CheckRecord check_hermiticity(const FanoKernel& kernel, double tol) {
  double dev = 0.0;
  for (const auto& m : kernel.matrices()) dev = worst(dev, hermiticity_defect(m));
  return make_check("hermiticity", dev, tol);
}

CheckRecord check_completeness(const FanoKernel& kernel, double tol) {
  const int n = kernel.dim().value();
  if (n > kCompletenessWarnAbove) {
    std::clog << "warning: completeness check is O(N^6); N = " << n << " may be slow\n";
  }
  const auto d = static_cast<std::size_t>(n);
  // gram[((q1*n + q2)*n + q3)*n + q4] = sum_{q,p} conj(Delta_{q2 q1}) Delta_{q3 q4}
  std::vector<Cplx> gram(d * d * d * d);
  for (const auto& m : kernel.matrices()) {
    std::size_t idx = 0;
    for (int q1 = 0; q1 < n; ++q1)
      for (int q2 = 0; q2 < n; ++q2) {
        const Cplx left = std::conj(m(q2, q1));
        for (int q3 = 0; q3 < n; ++q3)
          for (int q4 = 0; q4 < n; ++q4, ++idx) gram[idx] += left * m(q3, q4);
      }
  }
  double dev = 0.0;
  std::size_t idx = 0;
  for (int q1 = 0; q1 < n; ++q1)
    for (int q2 = 0; q2 < n; ++q2)
      for (int q3 = 0; q3 < n; ++q3)
        for (int q4 = 0; q4 < n; ++q4, ++idx) {
          const double expected = (q1 == q4 && q3 == q2) ? 1.0 / n : 0.0;
          dev = worst(dev, std::abs(gram[idx] - expected));
        }
  return make_check("completeness", dev, tol);
}

CheckRecord check_translation_covariance(const FanoKernel& kernel, double tol) {
  const LatticeDim n = kernel.dim();
  double dev = 0.0;
  for (int a = 0; a < n.value(); ++a) {
    for (int b = 0; b < n.value(); ++b) {
      const CMatrix& u = symmetries(n).translations[static_cast<std::size_t>(a * n.value() + b)];
      dev = worst(dev, covariance_deviation(kernel, u, [&](int q, int p) {
                    return std::pair{q - a, p - b};
                  }));
    }
  }
  return make_check("translation_covariance", dev, tol);
}

CheckRecord check_parity_covariance(const FanoKernel& kernel, double tol) {
  const auto t = parity_unitary(kernel.dim());
  const double dev = covariance_deviation(kernel, t.matrix(), [](int q, int p) {
    return std::pair{-q, -p};
  });
  return make_check("parity_covariance", dev, tol);
}

CheckRecord check_shifted_parity(const FanoKernel& kernel, int c, int d, double tol) {
  // With U(a,b) Delta(q,p) U^-1 = Delta(q-a, p-b), the product U(c,d) T sends
  // Delta(q,p) to Delta(-c-q, -d-p). The reflection about (c/2, d/2) is
  // therefore carried by U(-c,-d) T.
  const int n = kernel.dim().value();
  const CMatrix& t =
      symmetries(kernel.dim()).reflections[static_cast<std::size_t>(reduce(c, n) * n + reduce(d, n))];
  const double dev = covariance_deviation(kernel, t, [&](int q, int p) {
    return std::pair{c - q, d - p};
  });
  return make_check("shifted_parity(" + std::to_string(reduce(c, n)) + "," +
                        std::to_string(reduce(d, n)) + ")",
                    dev, tol);
}

CheckRecord check_shifted_parity_all(const FanoKernel& kernel, double tol) {
  const int n = kernel.dim().value();
  double dev = 0.0;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) dev = worst(dev, check_shifted_parity(kernel, c, d, tol).max_dev);
  return make_check("shifted_parity", dev, tol);
}

VerificationReport verify_all(const FanoKernel& kernel, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kConfig, "tolerance must be positive");
  VerificationReport report;
  report.kernel_id = kernel_id(kernel);
  report.checks = {
      check_marginal_q(kernel, tol),
      check_marginal_p(kernel, tol),
      check_hermiticity(kernel, tol),
      check_completeness(kernel, tol),
      check_translation_covariance(kernel, tol),
      check_parity_covariance(kernel, tol),
      check_shifted_parity_all(kernel, tol),
  };
  finalize(report);
  return report;
}

}  // namespace fano
