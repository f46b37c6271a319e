#pragma once

// Reference computations used only by tests. They go through dense matrix
// powers and explicit angles so they share no code path with the library's
// structured kernel construction or its checks.

#include <functional>
#include <vector>

#include "fano/kernel.hpp"

namespace fano::oracle {

/// e^{2 pi i k / n} straight from std::polar.
Cplx root(int n, long long k);

/// Delta(q,p) = sum_{n,m} a(q,p;n,m) S^n P^m with S^n, P^m as dense powers.
std::vector<CMatrix> dense_kernel(const SignFn& sign);

/// atilde(s,t;n,m) = (1/N^2) sum_{q,p} omega^{qs - pt} a(q,p;n,m), from a table.
std::vector<Cplx> fourier_of_a(const CoefficientTable& table);

/// Independent yes/no axiom check: marginals, hermiticity, pairwise trace
/// orthogonality Tr[Delta^dagger Delta'] = delta / N, and translation and
/// parity covariance, with inverses taken as dense matrix powers U^{N-1}.
bool dense_axioms_hold(const FanoKernel& kernel, double tol);

/// Every raw +-1 array on Z_N^2 (2^{N^2} of them) whose unchecked kernel
/// satisfies `accept`. N <= 4.
std::vector<SignFn> raw_sign_search(LatticeDim n,
                                    const std::function<bool(const FanoKernel&)>& accept);

}  // namespace fano::oracle
