#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg3/bigfloat.hpp"
#include "lg3/matrix.hpp"
#include "lg3/rational.hpp"

namespace lg3 {

// ---------------------------------------------------------------------------
// Block coordinates on the 13-dimensional projective slice of P(/\^3 C^6).
//
// Slot order: (u, X11, X12, X13, X22, X23, X33, Y11, Y12, Y13, Y22, Y23, Y33, z)
// with u = x_123, z = x_456 and the symmetric 3x3 blocks
//   X = [x_423 x_143 x_124; x_523 x_153 x_125; x_623 x_163 x_126]
//   Y = [x_156 x_416 x_451; x_256 x_426 x_452; x_356 x_436 x_453]
// where x_ijk is the Pluecker coordinate on the lex-sorted wedge basis with
// the sign of the index permutation. Covectors are stored in the same slots
// and paired by <c,p> = u u' + tr(X X') + tr(Y Y') + z z', i.e. off-diagonal
// slots carry pairing weight 2.
// ---------------------------------------------------------------------------

enum Slot : int {
    SU = 0, SX11, SX12, SX13, SX22, SX23, SX33,
    SY11, SY12, SY13, SY22, SY23, SY33, SZ
};

inline constexpr std::array<int, 14> kPairWeight = {1, 1, 2, 2, 1, 2, 1,
                                                    1, 2, 2, 1, 2, 1, 1};
inline constexpr std::array<const char*, 14> kSlotName = {
    "u", "X11", "X12", "X13", "X22", "X23", "X33",
    "Y11", "Y12", "Y13", "Y22", "Y23", "Y33", "z"};

/// Index of the X (resp. Y) slot holding symmetric entry (i,j), 0-based.
[[nodiscard]] constexpr int x_slot(int i, int j) {
    if (i > j) { int t = i; i = j; j = t; }
    constexpr int tab[3][3] = {{SX11, SX12, SX13}, {0, SX22, SX23}, {0, 0, SX33}};
    return tab[i][j];
}
[[nodiscard]] constexpr int y_slot(int i, int j) {
    return x_slot(i, j) + (SY11 - SX11);
}

template <class T>
using Vec6 = std::array<T, 6>;

template <class T>
using Wedge20 = std::array<T, 20>;

/// Symmetric 3x3 matrix, six stored entries (11,12,13,22,23,33).
template <class T>
struct Sym3 {
    std::array<T, 6> m{};

    static constexpr int pos(int i, int j) {
        if (i > j) { int t = i; i = j; j = t; }
        constexpr int tab[3][3] = {{0, 1, 2}, {0, 3, 4}, {0, 0, 5}};
        return tab[i][j];
    }
    T& at(int i, int j) { return m[pos(i, j)]; }
    const T& at(int i, int j) const { return m[pos(i, j)]; }
    bool operator==(const Sym3&) const = default;

    [[nodiscard]] Mat<T> full() const {
        Mat<T> f(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) f(i, j) = at(i, j);
        return f;
    }
};

using SymMat3 = Sym3<Rat>;

template <class T>
[[nodiscard]] T det3(const Sym3<T>& s) {
    return s.at(0,0) * (s.at(1,1) * s.at(2,2) - s.at(1,2) * s.at(2,1))
         - s.at(0,1) * (s.at(1,0) * s.at(2,2) - s.at(1,2) * s.at(2,0))
         + s.at(0,2) * (s.at(1,0) * s.at(2,1) - s.at(1,1) * s.at(2,0));
}

/// Adjugate (transposed cofactor matrix): M * adjugate(M) = det(M) * I.
/// Symmetric in, symmetric out.
template <class T>
[[nodiscard]] Sym3<T> adjugate(const Sym3<T>& s) {
    Sym3<T> a;
    auto co = [&](int i0, int i1, int j0, int j1) {
        return s.at(i0, j0) * s.at(i1, j1) - s.at(i0, j1) * s.at(i1, j0);
    };
    a.at(0,0) = co(1,2,1,2);
    a.at(0,1) = -co(1,2,0,2);
    a.at(0,2) = co(1,2,0,1);
    a.at(1,1) = co(0,2,0,2);
    a.at(1,2) = -co(0,2,0,1);
    a.at(2,2) = co(0,1,0,1);
    return a;
}

/// Point (or covector) of the 13-dim projective space in slot coordinates.
template <class T>
struct Pt13 {
    std::array<T, 14> v{};

    T& operator[](int k) { return v[k]; }
    const T& operator[](int k) const { return v[k]; }
    bool operator==(const Pt13&) const = default;

    T& u() { return v[SU]; }
    T& z() { return v[SZ]; }
    const T& u() const { return v[SU]; }
    const T& z() const { return v[SZ]; }
    T& X(int i, int j) { return v[x_slot(i, j)]; }
    const T& X(int i, int j) const { return v[x_slot(i, j)]; }
    T& Y(int i, int j) { return v[y_slot(i, j)]; }
    const T& Y(int i, int j) const { return v[y_slot(i, j)]; }

    [[nodiscard]] Sym3<T> Xblock() const {
        Sym3<T> s;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) s.at(i, j) = X(i, j);
        return s;
    }
    [[nodiscard]] Sym3<T> Yblock() const {
        Sym3<T> s;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) s.at(i, j) = Y(i, j);
        return s;
    }
    void setX(const Sym3<T>& s) {
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) X(i, j) = s.at(i, j);
    }
    void setY(const Sym3<T>& s) {
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) Y(i, j) = s.at(i, j);
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : v)
            if (!(x == T(0))) return false;
        return true;
    }
};

using Point13 = Pt13<Rat>;
using NumPoint13 = Pt13<CNum>;
using NumMat = Mat<CNum>;
using NumVec = std::vector<CNum>;

[[nodiscard]] inline NumPoint13 to_numeric(const Point13& p) {
    NumPoint13 q;
    for (int k = 0; k < 14; ++k) q[k] = CNum(p[k]);
    return q;
}

/// Pairing <c, p> with off-diagonal weight 2 (see header comment).
template <class T>
[[nodiscard]] T pair_cov(const Pt13<T>& c, const Pt13<T>& p) {
    T acc(0);
    for (int k = 0; k < 14; ++k) acc += T(kPairWeight[k]) * c[k] * p[k];
    return acc;
}

/// Canonical projective scaling: first nonzero coordinate becomes 1.
[[nodiscard]] Point13 canonical_scale(const Point13& p);

// ---------------------------------------------------------------------------
// Wedge-space tables (lex-sorted index triples/quadruples) and conversions.
// ---------------------------------------------------------------------------

struct WedgeTables {
    std::array<std::array<int, 3>, 20> triples;   // 1-based indices, sorted
    std::array<std::array<int, 4>, 15> quads;
    int tidx[7][7][7];                            // sorted triple -> 0..19
    int qidx(const std::array<int, 4>& q) const;
    /// Per slot, its wedge-basis expansion: (wedge index, sign). Diagonal
    /// and scalar slots have one term, off-diagonal slots have two.
    std::array<std::vector<std::pair<int, int>>, 14> slot_terms;
    /// One representative (wedge index, sign) per slot, for extraction.
    std::array<std::pair<int, int>, 14> slot_primary;
};

[[nodiscard]] const WedgeTables& wedge_tables();

template <class T>
[[nodiscard]] Wedge20<T> to_wedge(const Pt13<T>& p) {
    const auto& wt = wedge_tables();
    Wedge20<T> w;
    w.fill(T(0));
    for (int k = 0; k < 14; ++k)
        for (auto [idx, s] : wt.slot_terms[k]) w[idx] = T(s) * p[k];
    return w;
}

/// Read the 14 slot coordinates off a wedge vector (no slice check).
template <class T>
[[nodiscard]] Pt13<T> from_wedge_unchecked(const Wedge20<T>& w) {
    const auto& wt = wedge_tables();
    Pt13<T> p;
    for (int k = 0; k < 14; ++k) {
        auto [idx, s] = wt.slot_primary[k];
        p[k] = T(s) * w[idx];
    }
    return p;
}

/// Largest violation of the six slice (symmetry) equations.
[[nodiscard]] Rat slice_violation(const Wedge20<Rat>& w);
[[nodiscard]] BigFloat slice_violation(const Wedge20<CNum>& w);

template <class T>
[[nodiscard]] Wedge20<T> wedge3_of(const Vec6<T>& a, const Vec6<T>& b, const Vec6<T>& c) {
    const auto& wt = wedge_tables();
    Wedge20<T> w;
    for (int t = 0; t < 20; ++t) {
        auto [i, j, k] = wt.triples[t];
        const T &a1 = a[i-1], &a2 = a[j-1], &a3 = a[k-1];
        const T &b1 = b[i-1], &b2 = b[j-1], &b3 = b[k-1];
        const T &c1 = c[i-1], &c2 = c[j-1], &c3 = c[k-1];
        w[t] = a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1)
             + a3 * (b1 * c2 - b2 * c1);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Core maps.
// ---------------------------------------------------------------------------

/// exp_map: symmetric X -> (1 : X : adj X : det X), the affine chart of the
/// variety around (1:0:0:0). Verified at startup against the full wedge.
[[nodiscard]] Point13 exp_map(const SymMat3& X);

/// The 21 quadrics cutting the variety: adj X - u Y (6), adj Y - z X (6),
/// X Y - u z I (9), in that order.
template <class T>
[[nodiscard]] std::array<T, 21> cramer_values(const Pt13<T>& p) {
    Sym3<T> X = p.Xblock(), Y = p.Yblock();
    Sym3<T> aX = adjugate(X), aY = adjugate(Y);
    std::array<T, 21> out;
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            out[n++] = aX.at(i, j) - p.u() * Y.at(i, j);
            out[n++] = aY.at(i, j) - p.z() * X.at(i, j);
        }
    Mat<T> Xf = X.full(), Yf = Y.full();
    Mat<T> P = Xf * Yf;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T v = P(i, j);
            if (i == j) v -= p.u() * p.z();
            out[n++] = v;
        }
    return out;
}

/// Max |quadric value| at the canonically scaled point. Exact: zero iff the
/// point is on the variety.
[[nodiscard]] Rat sigma_residual(const Point13& p);
[[nodiscard]] bool is_on_sigma(const Point13& p);
/// Numeric variant at the largest-modulus-1 scaling.
[[nodiscard]] BigFloat sigma_residual_num(const NumPoint13& p);

/// Pluecker point of a 3-plane given by a spanning triple (must be
/// 3-dimensional and land on the symmetric slice; throws otherwise).
[[nodiscard]] Point13 plucker(const std::array<Vec6<Rat>, 3>& plane);

/// Inverse of plucker on decomposable points: the kernel of v |-> v ^ w,
/// which must be 3-dimensional (throws if the point is not on the variety).
[[nodiscard]] std::array<Vec6<Rat>, 3> plane_of(const Point13& p);
/// Numeric variant; kernel rank decisions use the given precision.
[[nodiscard]] std::array<Vec6<CNum>, 3> plane_of_num(const NumPoint13& p,
                                                    unsigned digits10);

/// Correlation induced by J(e_i) = x_{3+i}, J(e_{3+i}) = -x_i on slot
/// coordinates: u -> z, X -> -Y, Y -> X, z -> -u (an involution up to sign).
template <class T>
[[nodiscard]] Pt13<T> correlation_J(const Pt13<T>& p) {
    Pt13<T> q;
    q[SU] = -p[SZ];
    q[SZ] = p[SU];
    for (int k = 0; k < 6; ++k) {
        q[SX11 + k] = p[SY11 + k];
        q[SY11 + k] = -p[SX11 + k];
    }
    return q;
}

/// 14x14 matrix of /\^3 g restricted to the slice. Exact version checks
/// slice stability and throws if g does not preserve it.
[[nodiscard]] RatMat rho_wedge3(const RatMat& g);
/// Numeric version; returns the restriction without a stability check (the
/// caller tracks residuals).
[[nodiscard]] NumMat rho_wedge3_num(const Mat<CNum>& g);

template <class T>
[[nodiscard]] Pt13<T> apply14(const Mat<T>& R, const Pt13<T>& p) {
    Pt13<T> q;
    for (int i = 0; i < 14; ++i) {
        T acc(0);
        for (int j = 0; j < 14; ++j) acc += R(i, j) * p[j];
        q[i] = acc;
    }
    return q;
}

/// Contragredient action on covectors: rho_dual(g) = W^-1 (R^T)^-1 W with
/// W the pairing weights, so that <rho_dual(g) c, rho(g) p> = <c, p>.
[[nodiscard]] RatMat contragredient14(const RatMat& R);
[[nodiscard]] NumMat contragredient14_num(const NumMat& R);

}  // namespace lg3
