#pragma once

#include "lg3/macaulay.hpp"
#include "lg3/numlin.hpp"
#include "lg3/projection.hpp"
#include "lg3/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lg3 {

// ---------------------------------------------------------------------------
// Codimension-3 linear sections X = Sigma cap P10, their dual plane quartic,
// and the sampled vertex-surface geometry over it.
// ---------------------------------------------------------------------------

struct FanoSection {
    std::array<Point13, 3> c;  // spanning covectors of the dual plane
    LinSubspace p10;           // common kernel of the three pairings, dim 11
    std::uint64_t seed = 0;    // provenance of the random draw (0: explicit)
    std::optional<IsotropicLine> axis;  // set when built through a line

    [[nodiscard]] Point13 covector(const Rat& s, const Rat& t, const Rat& w) const;
    [[nodiscard]] NumPoint13 covector_num(const CNum& s, const CNum& t, const CNum& w) const;
    /// Membership of a point in the section's linear span P10.
    [[nodiscard]] bool annihilates(const Point13& p) const;
};

/// Build a section from three explicit covectors (must be independent).
[[nodiscard]] FanoSection section_from_covectors(const std::array<Point13, 3>& c,
                                                 std::uint64_t seed = 0);
/// Seeded random section: covector entries uniform in [-5,5], redrawn until
/// the covectors are independent and the dual quartic is smooth.
[[nodiscard]] FanoSection random_section(std::uint64_t seed);

struct DualQuartic {
    TernaryForm form;         // degree-4 form in the plane parameters (s,t,w)
    bool degenerate = false;  // restriction of the invariant is identically zero
    bool smooth = false;      // resultant of the partials nonzero
    Rat resultant;            // that Macaulay resultant
};

/// Exact interpolation of s,t,w -> F(s c0 + t c1 + w c2), re-verified on
/// fresh nodes, plus the smoothness certificate.
[[nodiscard]] DualQuartic dual_quartic(const FanoSection& sec);
/// Smoothness via the resultant of the three partial cubics, recomputed from
/// the form. Throws on a degenerate quartic.
[[nodiscard]] bool is_smooth_quartic(const DualQuartic& q);

/// n numeric points on the curve (form = 0), from the pencil of lines
/// through a fixed rational base point off the curve. Deterministic.
[[nodiscard]] std::vector<std::array<CNum, 3>> sample_curve(const DualQuartic& q,
                                                            std::size_t n,
                                                            unsigned digits10);

struct CurvePoint {
    std::array<CNum, 3> param;     // (s,t,w) on the dual-plane quartic
    BigFloat curve_residual;       // |F| at the normalized covector
    NumPoint13 covector;           // normalized numeric covector
    NumPoint13 pivot;              // its pivot on the variety, normalized
    BigFloat pivot_residual;       // max quadric residual of the pivot
    BigFloat grad_norm;            // max |dF| at the covector (away-from-Omega proxy)
    std::array<Vec6<CNum>, 3> plane;  // numeric basis of the pivot's plane
    BigFloat plane_alpha;          // max |alpha(b_i, b_j)| over the basis
    bool has_conic = false;
    Sym3<CNum> conic;              // vertex conic in the plane basis, normalized
    BigFloat conic_frame_leak;     // pulled-back covector mass outside the Y-block
    BigFloat conic_min_singular;   // smallest singular value of the conic matrix
    bool ok = true;
    std::string note;
};

struct CurveSample {
    unsigned digits = kDefaultDigits;
    std::vector<CurvePoint> points;
    BigFloat min_pivot_distance;   // over distinct pairs (2 when < 2 points)
    bool pivots_distinct = true;

    [[nodiscard]] BigFloat tolerance() const { return zero_threshold(digits); }
};

/// Pivot of every sampled parameter point, with residual bookkeeping and the
/// pairwise-distinctness check.
[[nodiscard]] CurveSample pivot_curve(const FanoSection& sec,
                                      const std::vector<std::array<CNum, 3>>& params,
                                      unsigned digits10);

/// Enrich a sample with the vertex conic at each pivot (numeric transport of
/// the exact fast path).
void vertex_surface(const FanoSection& sec, CurveSample& cs);

struct FibrationReport {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;  // coincident parameter points
    std::vector<std::pair<std::size_t, std::size_t>> failed_pairs;

    [[nodiscard]] bool pass() const { return failures == 0; }
};

/// Disjointness of the sampled conics: for every pair of sample points the
/// join of the two conic planes in V6 must have dimension 6.
[[nodiscard]] FibrationReport fibration_check(const CurveSample& cs);

struct ConicOnX {
    Vec6<Rat> vertex;
    Point13 witness;    // covector of the dual plane whose hyperplane holds Q_x
    LinSubspace plane;  // 3-dim intersection of the quadric span with P10
    Sym3<Rat> form;     // restricted quadratic form in the plane's basis
};

/// The conic cut on the section by the quadric of a rational vertex x lying
/// on a vertex conic. Throws when no covector of the dual plane contains
/// Q_x, or the intersection with P10 is not a plane.
[[nodiscard]] ConicOnX conic_on_X(const FanoSection& sec, const Vec6<Rat>& x);

/// Seeded section containing the whole line of the axis L.
[[nodiscard]] FanoSection section_through_line(const IsotropicLine& L, std::uint64_t seed);

struct LineSectionPoint {
    std::size_t index = 0;
    bool meet_ok = false;     // pivot plane meets the axis 4-space in dim 1
    BigFloat conic_value;     // |q(c)| at the meeting point
    bool pass = false;
};

struct LineSectionReport {
    std::vector<LineSectionPoint> points;
    BigFloat max_residual;
    std::size_t failures = 0;

    [[nodiscard]] bool pass() const { return failures == 0; }
};

/// The section property of the vertex surface over a line: each sampled
/// vertex conic meets the 4-space of L in a point that satisfies the conic
/// equation.
[[nodiscard]] LineSectionReport c_l_section_check(const FanoSection& sec,
                                                  const IsotropicLine& L,
                                                  const CurveSample& cs);

/// Fubini-Study-style projective distance between numeric points.
[[nodiscard]] BigFloat projective_distance(const NumVec& p, const NumVec& q);

}  // namespace lg3
