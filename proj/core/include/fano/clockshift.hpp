#pragma once

#include "fano/algebra.hpp"

namespace fano {

/// Cyclic shift S with S[a][b] = 1 iff b == a + 1 (mod n); S|p> = omega^{-p}|p>.
CMatrix shift_matrix(LatticeDim n);

/// Clock P = diag(1, omega, ..., omega^{n-1}); P|q> = omega^q|q>.
CMatrix phase_matrix(LatticeDim n);

/// S^s P^m, built entrywise: the only nonzero in row a sits at column a+s.
CMatrix weyl_monomial(LatticeDim n, int s, int m);

enum class SymmetryKind { kTranslation, kParity, kShiftedParity };

// A lattice phase-space symmetry together with its unitary representative.
// For translations (first, second) = (a, b); for shifted parity (c, d);
// both are zero for plain parity. Parameters are stored reduced mod n.
class SymmetryUnitary {
 public:
  SymmetryUnitary(SymmetryKind kind, LatticeDim n, int first, int second, CMatrix matrix)
      : kind_(kind), n_(n), first_(first), second_(second), matrix_(std::move(matrix)) {}

  SymmetryKind kind() const noexcept { return kind_; }
  LatticeDim dim() const noexcept { return n_; }
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  CMatrix inverse() const { return matrix_.adjoint(); }

 private:
  SymmetryKind kind_;
  LatticeDim n_;
  int first_;
  int second_;
  CMatrix matrix_;
};

/// U(a, b) = P^b S^a.
SymmetryUnitary translation_unitary(LatticeDim n, int a, int b);

/// T[alpha][beta] = 1 iff alpha == -beta (mod n).
SymmetryUnitary parity_unitary(LatticeDim n);

/// T(c, d) = U(c, d) T, the point reflection about (c/2, d/2).
SymmetryUnitary shifted_parity_unitary(LatticeDim n, int c, int d);

}  // namespace fano
