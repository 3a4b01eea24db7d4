#pragma once

#include "lg3/incidence.hpp"

namespace lg3 {

// ---------------------------------------------------------------------------
// Double projection from a line of the variety: the 10-dimensional center
// spanned by the tangent spaces along the line, and the induced map onto the
// 4-space of the line's axis.
// ---------------------------------------------------------------------------

struct ProjectionData {
    SigmaLine line;
    LinSubspace center;               // dim 10 of the 14 slot coordinates
    Sp3Element frame;                 // g taking the canonical axis <e2,e3> to axis
    RatMat to_canonical;              // 14x14 action of g^-1
    std::array<Vec6<Rat>, 4> target;  // g e1..e4, a basis of line.space()

    /// The V6 representative of an image point given in target coordinates.
    [[nodiscard]] Vec6<Rat> rep(const std::array<Rat, 4>& coords) const;
};

/// Center and target frame of the double projection from the line. Throws if
/// the tangent-space join is not 10-dimensional (cannot happen for a valid
/// line).
[[nodiscard]] ProjectionData projection_center(const SigmaLine& line);

/// Image of a variety point under the double projection, in target
/// coordinates, canonically scaled. Computed both ways — linear coordinate
/// projection in the canonical frame, and the plane-meets-4-space
/// intersection — and verified equal. Throws std::domain_error("base_locus")
/// when the point's plane meets the 4-space in dimension >= 2.
[[nodiscard]] std::array<Rat, 4> double_project(const ProjectionData& pd, const Point13& u);

/// Membership in the base locus, decided by the linear criterion (u in
/// center) and the plane-intersection criterion, asserted equal.
[[nodiscard]] bool in_base_locus(const ProjectionData& pd, const Point13& u);

}  // namespace lg3
