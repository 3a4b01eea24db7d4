#include "lg3/incidence.hpp"

#include <stdexcept>
#include <string>

namespace lg3 {

namespace {

std::vector<Rat> as_vec(const Point13& p) { return {p.v.begin(), p.v.end()}; }

}  // namespace

SigmaLine::SigmaLine(Point13 p, Point13 q)
    : p0_(canonical_scale(p)),
      p1_(canonical_scale(q)),
      axis_(axis_of_line(p0_, p1_)),
      space_(alpha_perp(axis_.space())) {
    for (long t : {1L, 2L, -3L}) {
        Point13 s = at(Rat(1), Rat(t));
        if (!is_on_sigma(s))
            throw std::invalid_argument("SigmaLine: spanned line leaves the variety");
    }
}

Point13 SigmaLine::at(const Rat& s, const Rat& t) const {
    Point13 r;
    for (int k = 0; k < 14; ++k) r[k] = s * p0_[k] + t * p1_[k];
    if (r.is_zero()) throw std::invalid_argument("SigmaLine::at: zero combination");
    return canonical_scale(r);
}

bool SigmaLine::contains(const Point13& v) const {
    RatMat M(3, 14);
    for (int k = 0; k < 14; ++k) {
        M(0, k) = p0_[k];
        M(1, k) = p1_[k];
        M(2, k) = v[k];
    }
    return rank_of(M) <= 2;
}

SigmaLine line_from_axis(const IsotropicLine& L) {
    LinSubspace perp = alpha_perp(L.space());
    if (perp.dim() != 4) throw std::logic_error("line_from_axis: alpha-perp is not 4-dim");
    Vec6<Rat> b[2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 6; ++j) b[i][j] = L.space().basis()(i, j);
    // two directions of the perp completing the axis to planes of the pencil
    std::array<Vec6<Rat>, 2> w;
    int found = 0;
    for (std::size_t r = 0; r < perp.basis().rows() && found < 2; ++r) {
        RatMat M(2 + found + 1, 6);
        for (int j = 0; j < 6; ++j) {
            M(0, j) = b[0][j];
            M(1, j) = b[1][j];
            for (int f = 0; f < found; ++f) M(2 + f, j) = w[f][j];
            M(2 + found, j) = perp.basis()(r, j);
        }
        if (rank_of(M) == std::size_t(3 + found)) {
            for (int j = 0; j < 6; ++j) w[found][j] = perp.basis()(r, j);
            ++found;
        }
    }
    if (found != 2) throw std::logic_error("line_from_axis: could not span the pencil");
    Point13 p = plucker({b[0], b[1], w[0]});
    Point13 q = plucker({b[0], b[1], w[1]});
    return SigmaLine(p, q);
}

IsotropicLine axis_of_line(const Point13& p, const Point13& q) {
    LinSubspace A = lagrangian_of(p).space();
    LinSubspace B = lagrangian_of(q).space();
    LinSubspace I = intersect(A, B);
    if (I.dim() != 2)
        throw std::invalid_argument(
            "not a line on the variety: the two planes meet in dimension " +
            std::to_string(I.dim()));
    return IsotropicLine(I);
}

VertexQuadric quadric_span(const Vec6<Rat>& x) {
    static const std::array<int, 5> slots = {SU, SX22, SX23, SX33, SY11};
    // t1 t5 - t2 t4 + t3^2 in the canonical slot order above
    RatMat Q0(5, 5);
    Q0(0, 4) = Q0(4, 0) = Rat(1, 2);
    Q0(1, 3) = Q0(3, 1) = Rat(-1, 2);
    Q0(2, 2) = Rat(1);

    Sp3Element g = symplectic_completion(x);
    RatMat R = rho_wedge3(g.mat());
    RatMat Rinv = rho_wedge3(g.inverse().mat());

    std::vector<std::vector<Rat>> gens;
    for (int s : slots) {
        Point13 e;
        e[s] = Rat(1);
        gens.push_back(as_vec(apply14(R, e)));
    }
    LinSubspace span = LinSubspace::from_vectors(gens, 14);
    if (span.dim() != 5) throw std::logic_error("quadric_span: span is not 5-dim");

    // rewrite the canonical form in the echelon basis coordinates
    RatMat T(5, 5);
    for (int j = 0; j < 5; ++j) {
        Point13 bj;
        for (int k = 0; k < 14; ++k) bj[k] = span.basis()(j, k);
        Point13 c = apply14(Rinv, bj);
        for (int k = 0; k < 14; ++k) {
            bool in_slots = false;
            for (int s : slots) in_slots |= (s == k);
            if (!in_slots && c[k] != 0)
                throw std::logic_error("quadric_span: transported basis leaves canonical span");
        }
        for (int i = 0; i < 5; ++i) T(i, j) = c[slots[i]];
    }
    VertexQuadric out{x, std::move(span), T.transposed() * Q0 * T};
    return out;
}

Rat VertexQuadric::value_at(const Point13& p) const {
    auto coords = span.coords_of(as_vec(p));
    if (!coords) throw std::invalid_argument("VertexQuadric: point outside the span");
    Rat acc(0);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) acc += (*coords)[i] * form(i, j) * (*coords)[j];
    return acc;
}

bool VertexQuadric::contains(const Point13& p) const {
    auto coords = span.coords_of(as_vec(p));
    if (!coords) return false;
    Rat acc(0);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) acc += (*coords)[i] * form(i, j) * (*coords)[j];
    return acc == 0;
}

bool span_in_hyperplane(const Point13& c, const VertexQuadric& Q) {
    for (std::size_t r = 0; r < Q.span.basis().rows(); ++r) {
        Point13 b;
        for (int k = 0; k < 14; ++k) b[k] = Q.span.basis()(r, k);
        if (pair_cov(c, b) != 0) return false;
    }
    return true;
}

Vec6<Rat> conic_vertex(const Point13& a, const Point13& b, const Point13& c) {
    LinSubspace I = intersect(intersect(lagrangian_of(a).space(), lagrangian_of(b).space()),
                              lagrangian_of(c).space());
    if (I.dim() == 0)
        throw std::invalid_argument(
            "conic_vertex: the three planes have no common point (a conic of rank >= 2 "
            "through the points is required)");
    if (I.dim() > 1)
        throw std::invalid_argument(
            "conic_vertex: degenerate configuration, the points lie on one line of the "
            "variety");
    Vec6<Rat> x;
    for (int j = 0; j < 6; ++j) x[j] = I.basis()(0, j);
    return x;
}

VertexConic vertex_conic(const Point13& c) {
    Point13 pivot = hat_pivot(c);
    LagrangianPlane P = lagrangian_of(pivot);
    Sp3Element g = symplectic_completion(P);
    RatMat R = rho_wedge3(g.mat());

    // pull c to the canonical frame: dual action of g^-1 is W^-1 R^T W
    Point13 c0;
    for (int i = 0; i < 14; ++i) {
        Rat acc(0);
        for (int j = 0; j < 14; ++j) acc += R(j, i) * Rat(kPairWeight[j]) * c[j];
        c0[i] = acc / Rat(kPairWeight[i]);
    }
    for (int k = SU; k <= SX33; ++k)
        if (c0[k] != 0)
            throw std::logic_error("vertex_conic: pulled-back covector not in canonical form");
    Sym3<Rat> Y0 = c0.Yblock();
    if (det3(Y0) == 0)
        throw std::logic_error("vertex_conic: canonical Y-block degenerate");

    // conic matrix is Y0 in the frame (g e1, g e2, g e3); convert to the
    // echelon basis of the plane
    auto basis = P.basis_vectors();
    RatMat G(6, 3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) G(i, j) = g.mat()(i, j);
    RatMat M(3, 3);
    for (int j = 0; j < 3; ++j) {
        std::vector<Rat> rhs(basis[j].begin(), basis[j].end());
        auto sol = solve(G, rhs);
        for (int i = 0; i < 3; ++i) M(i, j) = sol[i];
    }
    RatMat Qm = M.transposed() * Y0.full() * M;
    Sym3<Rat> form;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) form.at(i, j) = Qm(i, j);
    if (det3(form) == 0) throw std::logic_error("vertex_conic: form degenerated in transport");
    return {std::move(pivot), basis, form};
}

TernaryForm VertexConic::form() const {
    TernaryForm f(2);
    f.at(2, 0) = form_matrix.at(0, 0);
    f.at(0, 2) = form_matrix.at(1, 1);
    f.at(0, 0) = form_matrix.at(2, 2);
    f.at(1, 1) = form_matrix.at(0, 1) * 2;
    f.at(1, 0) = form_matrix.at(0, 2) * 2;
    f.at(0, 1) = form_matrix.at(1, 2) * 2;
    return f;
}

}  // namespace lg3
