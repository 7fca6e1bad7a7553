#pragma once

#include <vector>

#include "symbez/exactnum.hpp"
#include "symbez/poly.hpp"
#include "symbez/upoly.hpp"

namespace symbez {

struct RootCluster {
  ComplexApprox value;
  int multiplicity = 1;
};

/// Simultaneous (Aberth-Ehrlich) iteration on a polynomial with numeric
/// coefficients (coeffs[k] multiplies t^k, leading coefficient nonzero).
/// Returns deg roots, unclustered. Throws NumericalError when the iteration
/// does not converge or the backward error stays above 2^(-precision/2).
std::vector<ComplexApprox> aberth_roots(const std::vector<ComplexApprox>& coeffs, long precision_bits);

/// Roots with multiplicity; roots closer than cluster_radius (relative to
/// max(1, |r|)) merge into one cluster centered at their mean.
std::vector<RootCluster> univariate_roots(const UPoly& p, long precision_bits = kDefaultPrecisionBits,
                                          double cluster_radius = 1e-6);
/// Same, for a MultiPoly in which at most one variable occurs.
std::vector<RootCluster> univariate_roots(const MultiPoly& p, long precision_bits = kDefaultPrecisionBits,
                                          double cluster_radius = 1e-6);

/// Roots of p with exact multiplicities from a square-free decomposition;
/// every returned value is a simple root of its square-free factor.
std::vector<RootCluster> roots_with_exact_multiplicity(const UPoly& p, long precision_bits = kDefaultPrecisionBits);

}  // namespace symbez
