#pragma once

#include "lg3/ternary.hpp"

namespace lg3 {

/// Resultant of three ternary cubics: Macaulay's construction in the
/// critical degree 7 (36 monomials), Res = det M / det M' with M' the
/// submatrix on the non-reduced monomials. When det M' vanishes in the given
/// coordinates, retries after seeded unimodular changes of variables, which
/// leave the resultant unchanged (det T = 1). Exact; normalized so that
/// Res(s^3, t^3, w^3) = 1.
[[nodiscard]] Rat resultant_cubics(const TernaryForm& f0, const TernaryForm& f1,
                                   const TernaryForm& f2);

}  // namespace lg3
