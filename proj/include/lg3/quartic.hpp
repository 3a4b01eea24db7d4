#pragma once

#include "lg3/sp3.hpp"

namespace lg3 {

// ---------------------------------------------------------------------------
// The degree-4 invariant
//   F(u:X:Y:z) = (uz - tr XY)^2 + 4u det Y + 4z det X - 4 sum_ij adjX_ij adjY_ij
// and the stratification P13 = Sigma < Omega = Sing F < F < P13.
// ---------------------------------------------------------------------------

enum class OrbitClass { Sigma, OmegaMinusSigma, FMinusOmega, Generic };
[[nodiscard]] const char* orbit_name(OrbitClass c);

template <class T>
[[nodiscard]] T F_eval(const Pt13<T>& p) {
    Sym3<T> X = p.Xblock(), Y = p.Yblock();
    Sym3<T> aX = adjugate(X), aY = adjugate(Y);
    T trXY(0), P(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            trXY += X.at(i, j) * Y.at(i, j);
            P += aX.at(i, j) * aY.at(i, j);
        }
    T S = p.u() * p.z() - trXY;
    return S * S + T(4) * (p.u() * det3(Y) + p.z() * det3(X) - P);
}

namespace detail {
template <class T>
[[nodiscard]] T trace3(const Mat<T>& m) {
    return m(0, 0) + m(1, 1) + m(2, 2);
}
/// d/dA tr(adj A . adj B) as a symmetric matrix G, meaning the directional
/// derivative along symmetric E is tr(E G). Closed form from
/// adj A = A^2 - (tr A) A + sigma2(A) I; checked against symbolic
/// differentiation once and guarded by the line-derivative tests.
template <class T>
[[nodiscard]] Mat<T> adj_pair_grad(const Sym3<T>& A, const Sym3<T>& B) {
    Mat<T> Af = A.full(), aBf = adjugate(B).full();
    Mat<T> G = aBf * Af + Af * aBf;
    T trA = trace3(Af), traB = trace3(aBf);
    T c = trA * traB - trace3(Af * aBf);
    for (int i = 0; i < 3; ++i) {
        G(i, i) += c;
        for (int j = 0; j < 3; ++j) G(i, j) -= trA * aBf(i, j) + traB * Af(i, j);
    }
    return G;
}
}  // namespace detail

/// Plain partial derivatives of F with respect to the 14 slice coordinates
/// (an off-diagonal slot drives both matrix entries, so its partial carries
/// the pairing weight). Satisfies the Euler identity p . grad = 4 F(p).
template <class T>
[[nodiscard]] Pt13<T> F_grad(const Pt13<T>& p) {
    Sym3<T> X = p.Xblock(), Y = p.Yblock();
    Sym3<T> aX = adjugate(X), aY = adjugate(Y);
    T trXY(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) trXY += X.at(i, j) * Y.at(i, j);
    T S = p.u() * p.z() - trXY;
    Mat<T> Gx = detail::adj_pair_grad(X, Y), Gy = detail::adj_pair_grad(Y, X);
    Pt13<T> g;
    g[SU] = T(2) * S * p.z() + T(4) * det3(Y);
    g[SZ] = T(2) * S * p.u() + T(4) * det3(X);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            T w(i == j ? 1 : 2);
            g[x_slot(i, j)] =
                w * (T(-2) * S * Y.at(i, j) + T(4) * p.z() * aX.at(i, j) - T(4) * Gx(i, j));
            g[y_slot(i, j)] =
                w * (T(-2) * S * X.at(i, j) + T(4) * p.u() * aY.at(i, j) - T(4) * Gy(i, j));
        }
    return g;
}

/// Gradient with the pairing weights divided back out. This is the version
/// that defines the pivot map: on F - Omega it lands on the variety.
template <class T>
[[nodiscard]] Pt13<T> traced_grad(const Pt13<T>& p) {
    Pt13<T> g = F_grad(p);
    for (int k = 0; k < 14; ++k)
        if (kPairWeight[k] == 2) g[k] = g[k] / T(2);
    return g;
}

[[nodiscard]] OrbitClass classify_orbit(const Point13& p);
/// Thresholded variant: |value| below 10^(6-digits) at largest-modulus-1
/// scaling counts as zero.
[[nodiscard]] OrbitClass classify_orbit_num(const NumPoint13& p, unsigned digits10);

/// The pivot of a covector c in F - Omega: the traced gradient, canonically
/// scaled, guaranteed on the variety. Throws (naming the actual orbit) for
/// any other input.
[[nodiscard]] Point13 hat_pivot(const Point13& c);

/// Embedded tangent space of the variety at u, as a 7-dimensional linear
/// subspace of the 14 slot coordinates (projectivized: P6_u). Kernel of the
/// Jacobian of the 21 quadrics; throws if the rank is not 7.
[[nodiscard]] LinSubspace tangent_space(const Point13& u);

enum class ConeClass { InKu, InDuOnly, Outside };
[[nodiscard]] const char* cone_name(ConeClass c);

struct ConeMembership {
    ConeClass cls;
    bool in_tangent;  // v in P6_u at all
};

/// Position of v relative to the vertex cone K_u (rank <= 1 locus, inside
/// the variety) and the determinantal cubic cone D_u = Omega cap P6_u,
/// decided in coordinates transported so that u becomes (1:0:0:0).
[[nodiscard]] ConeMembership cone_membership(const Point13& u, const Point13& v);

}  // namespace lg3
