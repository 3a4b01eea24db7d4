#pragma once

#include <optional>
#include <vector>

#include "lg3/matrix.hpp"

namespace lg3 {

/// Linear subspace of Q^n, held as a reduced row-echelon basis so that two
/// subspaces are equal iff their representations are identical field by
/// field. The zero subspace has an empty basis.
class LinSubspace {
  public:
    LinSubspace() = default;

    /// Build from spanning rows (any list; dependent rows are dropped).
    static LinSubspace from_rows(const RatMat& rows) {
        RatMat M = rows;
        auto pivots = rref_in_place(M);
        LinSubspace s;
        s.ambient_ = rows.cols();
        s.basis_ = RatMat(pivots.size(), rows.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = M(i, j);
        return s;
    }

    static LinSubspace from_vectors(const std::vector<std::vector<Rat>>& vs,
                                    std::size_t ambient) {
        RatMat M(vs.size(), ambient);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) M(i, j) = vs[i][j];
        auto s = from_rows(M);
        s.ambient_ = ambient;
        return s;
    }

    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] const RatMat& basis() const { return basis_; }

    bool operator==(const LinSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    /// Membership: v reduces to zero against the echelon basis.
    [[nodiscard]] bool contains(const std::vector<Rat>& v) const {
        if (v.size() != ambient_) return false;
        std::vector<Rat> r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0;
            while (p < ambient_ && basis_(i, p) == 0) ++p;
            if (p == ambient_) continue;
            Rat f = r[p];  // echelon pivot is 1
            if (f == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
        }
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

    [[nodiscard]] bool contains(const LinSubspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    [[nodiscard]] std::optional<std::vector<Rat>> coords_of(const std::vector<Rat>& v) const {
        RatMat A(ambient_, basis_.rows());
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) A(j, i) = basis_(i, j);
        if (!contains(v)) return std::nullopt;
        return solve(A, v);
    }

  private:
    std::size_t ambient_ = 0;
    RatMat basis_;
};

inline LinSubspace join(const LinSubspace& a, const LinSubspace& b) {
    RatMat M(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) M(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient(); ++j) M(a.dim() + i, j) = b.basis()(i, j);
    return LinSubspace::from_rows(M);
}

/// Intersection via the kernel of [A^T | -B^T].
inline LinSubspace intersect(const LinSubspace& a, const LinSubspace& b) {
    std::size_t n = a.ambient();
    RatMat M(n, a.dim() + b.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i) M(i, j) = a.basis()(j, i);
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i) M(i, a.dim() + j) = -b.basis()(j, i);
    auto ker = kernel_of(M);
    std::vector<std::vector<Rat>> gens;
    for (const auto& k : ker) {
        std::vector<Rat> v(n, Rat(0));
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * a.basis()(j, i);
        gens.push_back(std::move(v));
    }
    return LinSubspace::from_vectors(gens, n);
}

/// Annihilator under the standard dot product: {x : <row, x> = 0 for all rows}.
inline LinSubspace annihilator(const LinSubspace& a) {
    RatMat M = a.basis();
    if (a.dim() == 0) return LinSubspace::from_rows(RatMat::identity(a.ambient()));
    auto ker = kernel_of(M);
    return LinSubspace::from_vectors(ker, a.ambient());
}

}  // namespace lg3
