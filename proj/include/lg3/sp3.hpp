#pragma once

#include <array>
#include <vector>

#include "lg3/rng.hpp"
#include "lg3/subspace.hpp"
#include "lg3/wedge.hpp"

namespace lg3 {

/// Gram matrix J of the symplectic form alpha = x14 + x25 + x36,
/// i.e. J[i][3+i] = 1, J[3+i][i] = -1.
[[nodiscard]] RatMat symplectic_gram();

/// alpha(v, w) = v^T J w.
template <class T>
[[nodiscard]] T alpha_form(const Vec6<T>& v, const Vec6<T>& w) {
    T acc(0);
    for (int i = 0; i < 3; ++i) acc += v[i] * w[3 + i] - v[3 + i] * w[i];
    return acc;
}

/// Symplectic transvection x -> x + lambda alpha(x, v) v, as a 6x6 matrix.
[[nodiscard]] RatMat transvection(const Vec6<Rat>& v, const Rat& lambda);

[[nodiscard]] bool is_symplectic(const RatMat& g);

/// Element of Sp3, validated on construction (g^T J g = J exactly).
class Sp3Element {
  public:
    explicit Sp3Element(RatMat A);
    [[nodiscard]] const RatMat& mat() const { return A_; }
    operator const RatMat&() const { return A_; }  // NOLINT: view conversion
    [[nodiscard]] Sp3Element inverse() const;
    Sp3Element operator*(const Sp3Element& o) const { return Sp3Element(A_ * o.A_); }
    [[nodiscard]] Vec6<Rat> apply(const Vec6<Rat>& v) const;

  private:
    RatMat A_;
};

/// Product of `factors` random transvections with small rational parameters.
/// Exactly symplectic by construction; deterministic in the rng state.
[[nodiscard]] Sp3Element random_sp3(Rng& rng, int factors = 8);

/// 2-dimensional subspace on which alpha vanishes.
class IsotropicLine {
  public:
    explicit IsotropicLine(LinSubspace s);
    [[nodiscard]] const LinSubspace& space() const { return s_; }
    bool operator==(const IsotropicLine& o) const { return s_ == o.s_; }

  private:
    LinSubspace s_;
};

/// 3-dimensional subspace on which alpha vanishes.
class LagrangianPlane {
  public:
    explicit LagrangianPlane(LinSubspace s);
    [[nodiscard]] const LinSubspace& space() const { return s_; }
    [[nodiscard]] std::array<Vec6<Rat>, 3> basis_vectors() const;
    bool operator==(const LagrangianPlane& o) const { return s_ == o.s_; }

  private:
    LinSubspace s_;
};

[[nodiscard]] bool is_isotropic(const LinSubspace& s);

/// alpha-orthogonal complement {w : alpha(v, w) = 0 for all v in s}.
[[nodiscard]] LinSubspace alpha_perp(const LinSubspace& s);

/// A symplectic frame whose first columns are the given vectors (1 to 3,
/// independent, mutually isotropic): g(e_i) = prefix[i-1] exactly.
[[nodiscard]] Sp3Element symplectic_frame(const std::vector<Vec6<Rat>>& prefix);

/// Numeric frame over complex scalars with thresholded rank decisions; the
/// result satisfies g^T J g = J up to the working tolerance (checked).
[[nodiscard]] Mat<CNum> symplectic_frame_num(const std::vector<Vec6<CNum>>& prefix,
                                             unsigned digits10);

/// A symplectic g with g(U_o) = P, where U_o = span(e1, e2, e3): the plane's
/// basis becomes the first three columns and the last three are solved for.
[[nodiscard]] Sp3Element symplectic_completion(const LagrangianPlane& P);
/// Variant for a single nonzero vector: g(e1) = x exactly.
[[nodiscard]] Sp3Element symplectic_completion(const Vec6<Rat>& x);

/// Pluecker point of a lagrangian plane and its inverse on the variety.
[[nodiscard]] Point13 plucker(const LagrangianPlane& P);
[[nodiscard]] LagrangianPlane lagrangian_of(const Point13& p);

}  // namespace lg3
