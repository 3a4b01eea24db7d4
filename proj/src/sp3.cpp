#include "lg3/sp3.hpp"

#include "lg3/numlin.hpp"

#include <stdexcept>

namespace lg3 {

RatMat symplectic_gram() {
    RatMat J(6, 6);
    for (int i = 0; i < 3; ++i) {
        J(i, 3 + i) = Rat(1);
        J(3 + i, i) = Rat(-1);
    }
    return J;
}

RatMat transvection(const Vec6<Rat>& v, const Rat& lambda) {
    // x -> x + lambda (x^T J v) v, i.e. I + lambda v (Jv)^T
    Vec6<Rat> Jv;
    for (int i = 0; i < 3; ++i) {
        Jv[i] = v[3 + i];
        Jv[3 + i] = -v[i];
    }
    RatMat t = RatMat::identity(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) t(i, j) += lambda * v[i] * Jv[j];
    return t;
}

bool is_symplectic(const RatMat& g) {
    if (g.rows() != 6 || g.cols() != 6) return false;
    RatMat J = symplectic_gram();
    return g.transposed() * J * g == J;
}

Sp3Element::Sp3Element(RatMat A) : A_(std::move(A)) {
    if (!is_symplectic(A_))
        throw std::invalid_argument("Sp3Element: matrix is not symplectic");
}

Sp3Element Sp3Element::inverse() const {
    // g^-1 = J^-1 g^T J = -J g^T J, no elimination needed
    RatMat J = symplectic_gram();
    RatMat inv = (J * A_.transposed() * J) * Rat(-1);
    return Sp3Element(std::move(inv));
}

Vec6<Rat> Sp3Element::apply(const Vec6<Rat>& v) const {
    Vec6<Rat> w;
    for (int i = 0; i < 6; ++i) {
        Rat acc(0);
        for (int j = 0; j < 6; ++j) acc += A_(i, j) * v[j];
        w[i] = acc;
    }
    return w;
}

Sp3Element random_sp3(Rng& rng, int factors) {
    RatMat g = RatMat::identity(6);
    for (int f = 0; f < factors; ++f) {
        Vec6<Rat> v;
        bool nonzero = false;
        for (auto& c : v) {
            c = Rat(rng.range(-2, 2));
            if (c != 0) nonzero = true;
        }
        if (!nonzero) v[rng.below(6)] = Rat(1);
        g = transvection(v, rng.rat_nonzero(2, 2)) * g;
    }
    return Sp3Element(std::move(g));
}

bool is_isotropic(const LinSubspace& s) {
    if (s.ambient() != 6) return false;
    const RatMat& B = s.basis();
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = i + 1; j < B.rows(); ++j) {
            Vec6<Rat> v, w;
            for (int k = 0; k < 6; ++k) {
                v[k] = B(i, k);
                w[k] = B(j, k);
            }
            if (alpha_form(v, w) != 0) return false;
        }
    return true;
}

LinSubspace alpha_perp(const LinSubspace& s) {
    if (s.ambient() != 6) throw std::invalid_argument("alpha_perp: ambient must be 6");
    const RatMat& B = s.basis();
    RatMat C(B.rows(), 6);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (int k = 0; k < 3; ++k) {
            C(i, k) = -B(i, 3 + k);
            C(i, 3 + k) = B(i, k);
        }
    return LinSubspace::from_vectors(kernel_of(C), 6);
}

IsotropicLine::IsotropicLine(LinSubspace s) : s_(std::move(s)) {
    if (s_.dim() != 2 || !is_isotropic(s_))
        throw std::invalid_argument("IsotropicLine: need an isotropic 2-space");
}

LagrangianPlane::LagrangianPlane(LinSubspace s) : s_(std::move(s)) {
    if (s_.dim() != 3 || !is_isotropic(s_))
        throw std::invalid_argument("LagrangianPlane: need an isotropic 3-space");
}

std::array<Vec6<Rat>, 3> LagrangianPlane::basis_vectors() const {
    std::array<Vec6<Rat>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) out[i][j] = s_.basis()(i, j);
    return out;
}

namespace {

/// Extend mutually isotropic independent vectors to a full symplectic basis
/// (p1,p2,p3,q1,q2,q3) with alpha(p_i,q_j) = delta_ij; returns the matrix
/// with these columns. The pivot policy carries the exact/thresholded zero
/// decisions.
template <class T, class Policy>
Mat<T> complete_basis(std::vector<Vec6<T>> p, Policy pol) {
    auto alpha_rows = [](const std::vector<Vec6<T>>& vs) {
        // row i = v_i^T J, so that (row i) . w = alpha(v_i, w)
        Mat<T> C(vs.size(), 6);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (int k = 0; k < 3; ++k) {
                C(i, k) = -vs[i][3 + k];
                C(i, 3 + k) = vs[i][k];
            }
        return C;
    };

    // grow to a lagrangian: each step picks a perp-kernel vector that is
    // independent of what we have
    while (p.size() < 3) {
        auto ker = kernel_of(alpha_rows(p), pol);
        bool grew = false;
        for (const auto& cand : ker) {
            Mat<T> M(p.size() + 1, 6);
            for (std::size_t i = 0; i < p.size(); ++i)
                for (int j = 0; j < 6; ++j) M(i, j) = p[i][j];
            for (int j = 0; j < 6; ++j) M(p.size(), j) = cand[j];
            if (rank_of(M, pol) == p.size() + 1) {
                Vec6<T> v;
                for (int j = 0; j < 6; ++j) v[j] = cand[j];
                p.push_back(v);
                grew = true;
                break;
            }
        }
        if (!grew) throw std::logic_error("complete_basis: no isotropic extension found");
    }

    // dual side: alpha(p_i, q_j) = delta_ij, then kill alpha(q_i, q_j)
    Mat<T> A = alpha_rows(p);
    std::array<Vec6<T>, 3> q;
    for (int j = 0; j < 3; ++j) {
        std::vector<T> rhs(3, T(0));
        rhs[j] = T(1);
        auto sol = solve(A, rhs, pol);
        for (int k = 0; k < 6; ++k) q[j][k] = sol[k];
    }
    T c[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = alpha_form(q[i], q[j]);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 6; ++l) q[j][l] += c[k][j] / T(2) * p[k][l];

    Mat<T> g(6, 6);
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 6; ++row) {
            g(row, col) = p[col][row];
            g(row, 3 + col) = q[col][row];
        }
    return g;
}

}  // namespace

Sp3Element symplectic_frame(const std::vector<Vec6<Rat>>& prefix) {
    if (prefix.empty() || prefix.size() > 3)
        throw std::invalid_argument("symplectic_frame: need 1 to 3 vectors");
    return Sp3Element(complete_basis(prefix, ExactPivot<Rat>{}));
}

NumMat symplectic_frame_num(const std::vector<Vec6<CNum>>& prefix, unsigned digits10) {
    if (prefix.empty() || prefix.size() > 3)
        throw std::invalid_argument("symplectic_frame_num: need 1 to 3 vectors");
    PrecisionScope scope(digits10);
    NumMat P(prefix.size(), 6);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        for (int j = 0; j < 6; ++j) P(i, j) = prefix[i][j];
    NumMat g = complete_basis(std::vector<Vec6<CNum>>(prefix), num_policy_for(P, digits10));
    // contract check: g^T J g = J up to tolerance at the matrix scale
    NumMat J(6, 6);
    for (int i = 0; i < 3; ++i) {
        J(i, 3 + i) = CNum(1);
        J(3 + i, i) = CNum(-1);
    }
    NumMat D = g.transposed() * J * g - J;
    BigFloat worst(0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            BigFloat a = D(i, j).abs();
            if (a > worst) worst = a;
        }
    BigFloat scale = max_abs(g);
    if (worst > zero_threshold(digits10) * scale * scale)
        throw std::runtime_error("symplectic_frame_num: frame residual too large");
    return g;
}

Sp3Element symplectic_completion(const LagrangianPlane& P) {
    auto b = P.basis_vectors();
    return Sp3Element(
        complete_basis(std::vector<Vec6<Rat>>{b[0], b[1], b[2]}, ExactPivot<Rat>{}));
}

Sp3Element symplectic_completion(const Vec6<Rat>& x) {
    bool nonzero = false;
    for (const auto& c : x)
        if (c != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("symplectic_completion: zero vector");
    return Sp3Element(complete_basis(std::vector<Vec6<Rat>>{x}, ExactPivot<Rat>{}));
}

Point13 plucker(const LagrangianPlane& P) { return plucker(P.basis_vectors()); }

LagrangianPlane lagrangian_of(const Point13& p) {
    auto rows = plane_of(p);
    std::vector<std::vector<Rat>> vs;
    for (const auto& r : rows) vs.emplace_back(r.begin(), r.end());
    return LagrangianPlane(LinSubspace::from_vectors(vs, 6));
}

}  // namespace lg3
