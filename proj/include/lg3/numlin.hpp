#pragma once

#include <vector>

#include "lg3/bigfloat.hpp"
#include "lg3/matrix.hpp"

namespace lg3 {

using NumMat = Mat<CNum>;
using NumVec = std::vector<CNum>;

/// Pivot policy for thresholded complex elimination: entries at or below an
/// absolute threshold count as zero, and the largest-modulus candidate is
/// preferred as pivot. The threshold must be set from the matrix scale by
/// the caller (see num_policy_for).
struct NumPivot {
    BigFloat threshold;
    bool is_zero(const CNum& x) const { return x.abs2() <= threshold * threshold; }
    bool prefer(const CNum& cand, const CNum& cur) const {
        return cand.abs2() > cur.abs2();
    }
};

[[nodiscard]] inline BigFloat max_abs(const NumMat& M) {
    BigFloat m(0);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            BigFloat a = M(i, j).abs();
            if (a > m) m = a;
        }
    return m;
}

/// Relative threshold policy: 10^(6-digits) * max|entry| (empty matrix -> 1).
[[nodiscard]] inline NumPivot num_policy_for(const NumMat& M, unsigned digits10) {
    BigFloat scale = max_abs(M);
    if (scale == 0) scale = 1;
    return NumPivot{zero_threshold(digits10) * scale};
}

[[nodiscard]] inline std::size_t num_rank(const NumMat& M, unsigned digits10) {
    NumMat C = M;
    return rref_in_place(C, num_policy_for(M, digits10)).size();
}

[[nodiscard]] inline std::vector<NumVec> num_kernel(const NumMat& M, unsigned digits10) {
    NumMat C = M;
    return kernel_of(C, num_policy_for(M, digits10));
}

[[nodiscard]] inline NumVec num_solve(const NumMat& A, const NumVec& b, unsigned digits10) {
    return solve(A, b, num_policy_for(A, digits10));
}

/// Normalize so the largest-modulus entry becomes exactly 1 (projective
/// representative). Zero vectors are returned unchanged.
inline void num_normalize(NumVec& v) {
    std::size_t best = 0;
    BigFloat bm(-1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        BigFloat a = v[i].abs2();
        if (a > bm) { bm = a; best = i; }
    }
    if (bm <= 0) return;
    CNum d = v[best];
    for (auto& x : v) x = x / d;
    v[best] = CNum(1);
}

}  // namespace lg3
