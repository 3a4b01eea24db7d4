#pragma once

#include <vector>

#include "lg3/bigfloat.hpp"

namespace lg3 {

struct RootsResult {
    std::vector<CNum> roots;     ///< all complex roots, multiplicity listed
    BigFloat worst_residual;     ///< max |p(root)| over the returned roots
};

/// Horner evaluation; coeffs[k] multiplies x^k.
[[nodiscard]] CNum poly_eval(const std::vector<CNum>& coeffs, const CNum& x);

/// All complex roots of a univariate polynomial of degree <= 8 by Aberth
/// simultaneous iteration with Newton polish. Residual contract: every root
/// satisfies |p(root)| < 10^(6 - digits10) * max|coeff|; if the iteration
/// cannot reach that, throws std::runtime_error carrying the best residual.
/// Exact zero leading coefficients lower the degree; a (numerically) zero
/// polynomial is rejected.
[[nodiscard]] RootsResult roots_univariate(const std::vector<CNum>& coeffs,
                                           unsigned digits10 = kDefaultDigits);

}  // namespace lg3
