#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fano/algebra.hpp"

namespace fano {

// A +-1 assignment R(s, t) on Z_N x Z_N, stored row-major in s.
//
// Valid sign functions satisfy
//   boundary: R(s, 0) = R(0, t) = +1
//   pairing:  R(s, t) = (-1)^{N+s+t} R(N-s, N-t) for s, t in {1..N-1}
// The pairing rule is what hermiticity and parity covariance reduce to once
// omega^{-st/2} is evaluated as tau^{-st} with tau = e^{i pi / N}.
class SignFn {
 public:
  /// Throws ErrorCode::kInvalidSign if any invariant fails.
  static SignFn from_values(LatticeDim n, std::vector<int> values);

  /// Checks only shape and that every entry is +-1. Used to build
  /// deliberately invalid kernels for negative tests and search oracles.
  static SignFn unchecked(LatticeDim n, std::vector<int> values);

  LatticeDim dim() const noexcept { return n_; }
  int operator()(int s, int t) const;
  std::span<const int> values() const noexcept { return values_; }

  /// Human-readable description of the first broken invariant, if any.
  std::optional<std::string> invariant_violation() const;
  bool satisfies_invariants() const { return !invariant_violation().has_value(); }

  /// Copy with one entry replaced, invariants not rechecked.
  SignFn with_value(int s, int t, int r) const;

  friend bool operator==(const SignFn& a, const SignFn& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const SignFn& a, const SignFn& b) {
    if (auto c = a.n_.value() <=> b.n_.value(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  SignFn(LatticeDim n, std::vector<int> values) : n_(n), values_(std::move(values)) {}

  LatticeDim n_;
  std::vector<int> values_;
};

/// F(s, t) = tau^{-st} R(s, t) / N^2, with s, t reduced to {0..N-1} and
/// multiplied as plain integers.
Cplx phase_factor(LatticeDim n, int s, int t, int r);

// Expansion coefficients a(q,p;n,m) of Delta(q,p) = sum a S^n P^m, and their
// Fourier transform atilde(s,t;n,m) = (1/N^2) sum_{q,p} omega^{qs - pt} a(q,p;n,m).
class CoefficientTable {
 public:
  CoefficientTable(LatticeDim n, std::vector<Cplx> a, std::vector<Cplx> atilde);

  LatticeDim dim() const noexcept { return n_; }
  Cplx a(int q, int p, int n, int m) const { return a_[index(q, p, n, m)]; }
  Cplx atilde(int s, int t, int n, int m) const { return atilde_[index(s, t, n, m)]; }

 private:
  std::size_t index(int i, int j, int k, int l) const;

  LatticeDim n_;
  std::vector<Cplx> a_;
  std::vector<Cplx> atilde_;
};

/// Throws ErrorCode::kInvalidSign if the sign function is invalid.
CoefficientTable coefficient_table(const SignFn& sign);

// The N^2 matrices Delta(q, p), indexed q * N + p.
class FanoKernel {
 public:
  /// Throws ErrorCode::kShape unless there are N^2 matrices of dimension N.
  static FanoKernel from_matrices(SignFn sign, std::vector<CMatrix> matrices);

  LatticeDim dim() const noexcept { return sign_.dim(); }
  const SignFn& sign() const noexcept { return sign_; }
  static constexpr std::string_view convention() noexcept { return "tau"; }

  /// Arguments are reduced mod N.
  const CMatrix& operator()(int q, int p) const;
  std::span<const CMatrix> matrices() const noexcept { return matrices_; }

  FanoKernel with_matrix(int q, int p, CMatrix m) const;

 private:
  FanoKernel(SignFn sign, std::vector<CMatrix> matrices)
      : sign_(std::move(sign)), matrices_(std::move(matrices)) {}

  SignFn sign_;
  std::vector<CMatrix> matrices_;
};

/// Delta(q,p) = sum_{n,m} omega^{pn - qm} F(m, n) S^n P^m.
/// Throws ErrorCode::kInvalidSign if the sign function is invalid.
FanoKernel build_kernel(const SignFn& sign);

/// Same construction without the invariant check.
FanoKernel build_kernel_unchecked(const SignFn& sign);

/// R(s, t) = (-1)^{st}. Odd N only; even N throws kUnsupportedDimension.
SignFn cohendet_sign(LatticeDim n);

/// R = +1 everywhere, returned unchecked. Valid only for N = 2.
SignFn all_plus_sign(LatticeDim n);

/// Fills the boundary with +1, reads one '+'/'-' per negation orbit
/// (orbits in orbit_structure order) and completes partners by pairing.
/// Throws kArity on a length mismatch and kFormat on other characters.
SignFn sign_from_bits(LatticeDim n, std::string_view bits);

/// Bit j of the orbit sequence is '-' iff bit (count - 1 - j) of mask is set,
/// so increasing masks enumerate bit strings in lexicographic '+' < '-' order.
SignFn sign_from_mask(LatticeDim n, std::uint64_t mask);

/// Inverse of sign_from_bits: the values at the orbit representatives.
std::string bits_of(const SignFn& sign);

}  // namespace fano
