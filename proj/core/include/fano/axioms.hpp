#pragma once

#include <string>
#include <vector>

#include "fano/kernel.hpp"

namespace fano {

struct CheckRecord {
  std::string name;
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// pass is max_dev <= tol; NaN deviations fail.
CheckRecord make_check(std::string name, double max_dev, double tol);

struct VerificationReport {
  std::string kernel_id;
  std::vector<CheckRecord> checks;
  bool pass = false;

  std::vector<std::string> failing_checks() const;
  const CheckRecord* find(const std::string& name) const;
};

/// Recomputes report.pass from its checks.
void finalize(VerificationReport& report);

/// Stable identifier such as "n3-tau-+-" (orbit bits) or "n3-tau-raw-<values>"
/// when the sign function is not valid.
std::string kernel_id(const FanoKernel& kernel);

// Each check reports the worst entrywise deviation found.

/// sum_p Delta(q,p) = |q><q|
CheckRecord check_marginal_q(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// sum_q Delta(q,p) = |p><p|
CheckRecord check_marginal_p(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// Delta(q,p)^dagger = Delta(q,p)
CheckRecord check_hermiticity(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// sum_{q,p} (Delta^dagger)_{q1 q2} Delta_{q3 q4} = delta_{q1 q4} delta_{q3 q2} / N.
/// O(N^6); a warning goes to std::clog above N = 8.
CheckRecord check_completeness(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// U(a,b) Delta(q,p) U(a,b)^-1 = Delta(q-a, p-b) for all a, b, q, p.
CheckRecord check_translation_covariance(const FanoKernel& kernel,
                                         double tol = kDefaultTolerance);

/// T Delta(q,p) T^-1 = Delta(-q, -p).
CheckRecord check_parity_covariance(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// Point reflection about (c/2, d/2): V Delta(q,p) V^-1 = Delta(c-q, d-p) with
/// V = shifted_parity_unitary(n, -c, -d) = U(-c,-d) T.
CheckRecord check_shifted_parity(const FanoKernel& kernel, int c, int d,
                                 double tol = kDefaultTolerance);

/// check_shifted_parity maximized over every (c, d) in Z_N^2.
CheckRecord check_shifted_parity_all(const FanoKernel& kernel, double tol = kDefaultTolerance);

/// The seven checks above in fixed order (shifted parity swept over all
/// (c, d)). Throws ErrorCode::kConfig unless tol > 0.
VerificationReport verify_all(const FanoKernel& kernel, double tol = kDefaultTolerance);

}  // namespace fano
