#pragma once

#include <complex>
#include <vector>

namespace qhm {

using Complex = std::complex<double>;

// Physicists' Hermite polynomial H_n(z) at a complex argument, by the
// three-term forward recurrence H_0 = 1, H_1 = 2z, H_{n+1} = 2z H_n - 2n H_{n-1}.
// Supported range contract: n <= 32 (double precision stays exact-to-rounding
// for the |z| <= 5 arguments this engine uses).
Complex hermite(int n, Complex z);

// H_n'(z) = 2n H_{n-1}(z); zero for n = 0.
Complex hermite_derivative(int n, Complex z);

// Monomial coefficients of H_n, ascending order (size n+1, integer-valued).
std::vector<double> hermite_coefficients(int n);

}  // namespace qhm
