#include <gtest/gtest.h>

#include "fano/clockshift.hpp"
#include "fano/error.hpp"

namespace fano {
namespace {

constexpr double kTol = 1e-12;

CMatrix from_rows(int n, std::initializer_list<Cplx> rows) {
  return CMatrix(n, std::vector<Cplx>(rows));
}

TEST(ShiftMatrix, Examples) {
  EXPECT_EQ(max_abs_diff(shift_matrix(LatticeDim(2)), from_rows(2, {0, 1, 1, 0})), 0.0);
  EXPECT_EQ(max_abs_diff(shift_matrix(LatticeDim(3)), from_rows(3, {0, 1, 0, 0, 0, 1, 1, 0, 0})),
            0.0);
  EXPECT_LE(max_abs_diff(matrix_pow(shift_matrix(LatticeDim(4)), 4), CMatrix::identity(4)), kTol);
}

TEST(PhaseMatrix, Examples) {
  EXPECT_LE(max_abs_diff(phase_matrix(LatticeDim(2)), from_rows(2, {1, 0, 0, -1})), kTol);
  EXPECT_LE(max_abs_diff(phase_matrix(LatticeDim(4)),
                         from_rows(4, {1, 0, 0, 0, 0, Cplx(0, 1), 0, 0, 0, 0, -1, 0, 0, 0, 0,
                                       Cplx(0, -1)})),
            kTol);
  EXPECT_LE(max_abs_diff(matrix_pow(phase_matrix(LatticeDim(3)), 3), CMatrix::identity(3)), kTol);
}

TEST(ClockShift, PeriodN) {
  for (int n = 2; n <= 9; ++n) {
    const LatticeDim dim(n);
    EXPECT_LE(max_abs_diff(matrix_pow(shift_matrix(dim), n), CMatrix::identity(n)), kTol);
    EXPECT_LE(max_abs_diff(matrix_pow(phase_matrix(dim), n), CMatrix::identity(n)), kTol);
  }
}

TEST(ClockShift, Commutation) {
  for (int n = 2; n <= 7; ++n) {
    const LatticeDim dim(n);
    const CMatrix s = shift_matrix(dim);
    const CMatrix p = phase_matrix(dim);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const CMatrix sp = matrix_pow(s, a) * matrix_pow(p, b);
        const CMatrix ps = matrix_pow(p, b) * matrix_pow(s, a);
        EXPECT_LE(max_abs_diff(sp, omega_pow(dim, a * b) * ps), kTol) << n << " " << a << " " << b;
      }
    }
  }
}

TEST(ClockShift, ShiftEigenrelation) {
  for (int n = 2; n <= 9; ++n) {
    const LatticeDim dim(n);
    const CMatrix s = shift_matrix(dim);
    for (int p = 0; p < n; ++p) {
      const auto v = momentum_vector(dim, p);
      for (int a = 0; a < n; ++a) {
        Cplx sv = 0.0;
        for (int b = 0; b < n; ++b) sv += s(a, b) * v[b];
        EXPECT_LE(std::abs(sv - omega_pow(dim, -p) * v[a]), kTol);
      }
    }
  }
}

TEST(ClockShift, PhaseActsOnPositions) {
  const LatticeDim dim(5);
  const CMatrix p = phase_matrix(dim);
  for (int q = 0; q < 5; ++q) EXPECT_LE(std::abs(p(q, q) - omega_pow(dim, q)), kTol);
}

TEST(WeylMonomial, MatchesDensePowers) {
  for (int n = 2; n <= 6; ++n) {
    const LatticeDim dim(n);
    for (int s = 0; s < n; ++s)
      for (int m = 0; m < n; ++m) {
        const CMatrix dense = matrix_pow(shift_matrix(dim), s) * matrix_pow(phase_matrix(dim), m);
        EXPECT_LE(max_abs_diff(weyl_monomial(dim, s, m), dense), kTol);
      }
  }
}

TEST(TranslationUnitary, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const LatticeDim dim(n);
    EXPECT_LE(max_abs_diff(translation_unitary(dim, 0, 0).matrix(), CMatrix::identity(n)), kTol);
    EXPECT_LE(max_abs_diff(translation_unitary(dim, 1, 0).matrix(), shift_matrix(dim)), kTol);
  }
  EXPECT_LE(max_abs_diff(translation_unitary(LatticeDim(2), 1, 1).matrix(),
                         from_rows(2, {0, 1, -1, 0})),
            kTol);
}

TEST(TranslationUnitary, ReducesParametersAndIsUnitary) {
  const auto u = translation_unitary(LatticeDim(5), -1, 7);
  EXPECT_EQ(u.first(), 4);
  EXPECT_EQ(u.second(), 2);
  EXPECT_EQ(u.kind(), SymmetryKind::kTranslation);
  EXPECT_LE(unitarity_defect(u.matrix()), kTol);
  EXPECT_LE(max_abs_diff(u.matrix() * u.inverse(), CMatrix::identity(5)), kTol);
}

// U(a,b) U(a',b') = omega^{a b'} U(a+a', b+b').
TEST(TranslationUnitary, GroupLaw) {
  for (int n = 2; n <= 5; ++n) {
    const LatticeDim dim(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2) {
            const CMatrix lhs = translation_unitary(dim, a, b).matrix() *
                                translation_unitary(dim, a2, b2).matrix();
            const CMatrix rhs = translation_unitary(dim, a + a2, b + b2).matrix();
            EXPECT_LE(max_abs_diff(omega_pow(dim, -a * b2) * lhs, rhs), kTol)
                << n << ": " << a << b << a2 << b2;
          }
  }
}

TEST(ParityUnitary, Examples) {
  EXPECT_LE(max_abs_diff(parity_unitary(LatticeDim(2)).matrix(), CMatrix::identity(2)), 0.0);
  EXPECT_LE(max_abs_diff(parity_unitary(LatticeDim(3)).matrix(),
                         from_rows(3, {1, 0, 0, 0, 0, 1, 0, 1, 0})),
            0.0);
  const CMatrix t5 = parity_unitary(LatticeDim(5)).matrix();
  EXPECT_LE(max_abs_diff(t5 * t5, CMatrix::identity(5)), kTol);
}

TEST(ParityUnitary, InvolutionRealSymmetric) {
  for (int n = 2; n <= 9; ++n) {
    const CMatrix t = parity_unitary(LatticeDim(n)).matrix();
    EXPECT_LE(max_abs_diff(t * t, CMatrix::identity(n)), kTol);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(t(i, j).imag(), 0.0);
        EXPECT_EQ(t(i, j), t(j, i));
      }
  }
}

TEST(ParityUnitary, InvertsClockAndShift) {
  for (int n = 2; n <= 7; ++n) {
    const LatticeDim dim(n);
    const CMatrix t = parity_unitary(dim).matrix();
    const CMatrix s = shift_matrix(dim);
    const CMatrix p = phase_matrix(dim);
    EXPECT_LE(max_abs_diff(t * s * t, s.adjoint()), kTol);
    EXPECT_LE(max_abs_diff(t * p * t, p.adjoint()), kTol);
  }
}

TEST(ShiftedParityUnitary, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const LatticeDim dim(n);
    EXPECT_LE(max_abs_diff(shifted_parity_unitary(dim, 0, 0).matrix(), parity_unitary(dim).matrix()),
              0.0);
  }
  const LatticeDim three(3);
  EXPECT_LE(max_abs_diff(shifted_parity_unitary(three, 1, 0).matrix(),
                         shift_matrix(three) * parity_unitary(three).matrix()),
            kTol);
  const LatticeDim two(2);
  EXPECT_LE(max_abs_diff(shifted_parity_unitary(two, 1, 1).matrix(),
                         phase_matrix(two) * shift_matrix(two)),
            kTol);
}

TEST(ShiftedParityUnitary, IsUnitaryWithReducedParameters) {
  const auto u = shifted_parity_unitary(LatticeDim(4), 5, -1);
  EXPECT_EQ(u.kind(), SymmetryKind::kShiftedParity);
  EXPECT_EQ(u.first(), 1);
  EXPECT_EQ(u.second(), 3);
  EXPECT_LE(unitarity_defect(u.matrix()), kTol);
}

}  // namespace
}  // namespace fano
