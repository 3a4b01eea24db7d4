#pragma once

#include "lg3/quartic.hpp"
#include "lg3/ternary.hpp"

namespace lg3 {

// ---------------------------------------------------------------------------
// Lines on the variety, the 3-fold quadrics Q_x, and the vertex conic of a
// singular hyperplane section.
// ---------------------------------------------------------------------------

/// A projective line contained in the variety. Every such line is the pencil
/// of lagrangian planes through its axis (an isotropic 2-space L) inside the
/// alpha-perp 4-space of L.
class SigmaLine {
  public:
    /// From two distinct points whose planes meet in a line; validates that
    /// the whole spanned line is on the variety.
    SigmaLine(Point13 p, Point13 q);

    [[nodiscard]] const Point13& p0() const { return p0_; }
    [[nodiscard]] const Point13& p1() const { return p1_; }
    [[nodiscard]] const IsotropicLine& axis() const { return axis_; }
    /// The 4-space of V6 in which the whole pencil of planes lives.
    [[nodiscard]] const LinSubspace& space() const { return space_; }

    /// Point s*p0 + t*p1, canonically scaled.
    [[nodiscard]] Point13 at(const Rat& s, const Rat& t) const;
    /// Projective membership in span(p0, p1).
    [[nodiscard]] bool contains(const Point13& v) const;

  private:
    Point13 p0_, p1_;
    IsotropicLine axis_;
    LinSubspace space_;
};

[[nodiscard]] SigmaLine line_from_axis(const IsotropicLine& L);
/// Axis of the line spanned by two variety points: the 2-dimensional
/// intersection of their lagrangian planes. Throws "not a line on the
/// variety" when the planes meet in any other dimension (p = q included).
[[nodiscard]] IsotropicLine axis_of_line(const Point13& p, const Point13& q);

/// The 3-fold quadric Q_x of all variety points whose plane passes through
/// the vertex x, living in a 5-dimensional linear span of the 14 slot
/// coordinates.
struct VertexQuadric {
    Vec6<Rat> vertex;
    LinSubspace span;  // dim 5, echelon basis
    RatMat form;       // 5x5 symmetric quadratic form in span basis coords

    /// Form value at a point of the span (throws if outside).
    [[nodiscard]] Rat value_at(const Point13& p) const;
    [[nodiscard]] bool contains(const Point13& p) const;
};

[[nodiscard]] VertexQuadric quadric_span(const Vec6<Rat>& x);

/// True iff the span of Q lies in the hyperplane of the covector c (weighted
/// pairing zero on every basis vector). Since the quadric spans its 4-space,
/// this is exactly "Q is contained in the hyperplane section".
[[nodiscard]] bool span_in_hyperplane(const Point13& c, const VertexQuadric& Q);

/// Common vertex of the quadrics through a degree-2 plane section: the
/// unique point lying on the planes of all three sample points. Throws if
/// the triple intersection is empty (no such vertex) or 2-dimensional
/// (collinear samples).
[[nodiscard]] Vec6<Rat> conic_vertex(const Point13& a, const Point13& b, const Point13& c);

/// The conic of vertices x with Q_x contained in the hyperplane of c, drawn
/// in the lagrangian plane of the pivot of c.
struct VertexConic {
    Point13 pivot;                  // on the variety
    std::array<Vec6<Rat>, 3> plane; // echelon basis of its lagrangian plane
    Sym3<Rat> form_matrix;          // conic in these basis coordinates

    [[nodiscard]] TernaryForm form() const;  // same form, degree-2 polynomial
};

/// Requires classify_orbit(c) = FMinusOmega. The form is smooth (rank 3).
[[nodiscard]] VertexConic vertex_conic(const Point13& c);

}  // namespace lg3
