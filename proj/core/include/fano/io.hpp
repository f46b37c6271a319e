#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fano/axioms.hpp"
#include "fano/continuum.hpp"
#include "fano/enumerate.hpp"
#include "fano/kernel.hpp"
#include "fano/transform.hpp"

// File formats. Complex numbers are two-element arrays [re, im] everywhere.
//
//   kernel   {"n": N, "convention": "tau", "sign": [[+-1, ...], ...],
//             "matrices": [[ matrix(q=0,p=0), matrix(q=0,p=1), ... ], ...]}
//            "matrices" is optional and indexed [q][p][row][col].
//   state    {"n": N, "rho": [[[re, im], ...], ...]}
//   report   {"kernel_id": ..., "checks": [{"name", "max_dev", "tol", "pass"}], "pass": ...}
//   wigner   CSV, header "q,p,w", rows in lexicographic (q, p) order
//   enumerate member lines {"n", "bits", "sign"}; summary {"n", "count", "certified", ...}
//
// Parse failures throw ErrorCode::kFormat; file access failures ErrorCode::kIo.
namespace fano {

/// Shortest round-trip decimal form ("%.17g").
std::string format_double(double value);

std::string kernel_to_json(const FanoKernel& kernel, bool include_matrices = true);

struct LoadedKernel {
  FanoKernel kernel;
  bool had_matrices = false;
  /// Max entrywise gap between the stored matrices and the ones rebuilt
  /// from "sign"; zero when the file has no matrices.
  double matrix_sign_deviation = 0.0;
};

/// The sign function is loaded unchecked so invalid kernels can still be
/// verified and reported on.
LoadedKernel kernel_from_json(std::string_view text);

/// Accepts any object with "n" and "sign" (a kernel file qualifies).
SignFn sign_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& report);

std::string state_to_json(const CMatrix& rho);
/// Returns the raw matrix; callers decide whether to require a density matrix.
CMatrix state_from_json(std::string_view text);

std::string wigner_to_csv(const WignerGrid& w);
WignerGrid wigner_from_csv(std::string_view text);

std::string continuum_grid_to_csv(const ContinuumGrid& grid);

std::string enumeration_member_json(const SignFn& sign);
std::string enumeration_summary_json(const EnumerationResult& result);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace fano
