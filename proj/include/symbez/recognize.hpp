#pragma once

#include <optional>

#include "symbez/exactnum.hpp"

namespace symbez {

/// Best rational approximation of x with denominator at most max_den (last
/// continued-fraction convergent within the bound).
BigRational best_rational(const BigFloat& x, long max_den = 1000000);

/// Tries to identify z as an element of Q(zeta12) of the forms 0, q*u with u a
/// 12th root of unity, p + q*i, or p + q*omega, with denominators at most
/// max_den. A candidate is returned only if it lies within tol * max(1, |z|)
/// of z. The caller is expected to verify it exactly.
std::optional<Cyclo12> recognize_cyclo(const ComplexApprox& z, double tol, long max_den = 1000000);

}  // namespace symbez
