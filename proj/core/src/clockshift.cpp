#include "fano/clockshift.hpp"

namespace fano {

CMatrix shift_matrix(LatticeDim n) {
  const int dim = n.value();
  CMatrix s(dim);
  for (int a = 0; a < dim; ++a) s(a, reduce(a + 1, dim)) = 1.0;
  return s;
}

CMatrix phase_matrix(LatticeDim n) {
  const int dim = n.value();
  CMatrix p(dim);
  for (int k = 0; k < dim; ++k) p(k, k) = omega_pow(n, k);
  return p;
}

CMatrix weyl_monomial(LatticeDim n, int s, int m) {
  // (S^s)[a][b] = delta_{b, a+s}; right-multiplying by P^m scales column b by omega^{mb}.
  const int dim = n.value();
  CMatrix out(dim);
  for (int a = 0; a < dim; ++a) {
    const int b = reduce(static_cast<std::int64_t>(a) + s, dim);
    out(a, b) = omega_pow(n, static_cast<std::int64_t>(m) * b);
  }
  return out;
}

SymmetryUnitary translation_unitary(LatticeDim n, int a, int b) {
  const int dim = n.value();
  const int ra = reduce(a, dim);
  const int rb = reduce(b, dim);
  CMatrix u = matrix_pow(phase_matrix(n), rb) * matrix_pow(shift_matrix(n), ra);
  return {SymmetryKind::kTranslation, n, ra, rb, std::move(u)};
}

SymmetryUnitary parity_unitary(LatticeDim n) {
  const int dim = n.value();
  CMatrix t(dim);
  for (int beta = 0; beta < dim; ++beta) t(reduce(-beta, dim), beta) = 1.0;
  return {SymmetryKind::kParity, n, 0, 0, std::move(t)};
}

SymmetryUnitary shifted_parity_unitary(LatticeDim n, int c, int d) {
  const auto u = translation_unitary(n, c, d);
  CMatrix m = u.matrix() * parity_unitary(n).matrix();
  return {SymmetryKind::kShiftedParity, n, u.first(), u.second(), std::move(m)};
}

}  // namespace fano
