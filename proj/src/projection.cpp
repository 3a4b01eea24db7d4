#include "lg3/projection.hpp"

#include <stdexcept>

namespace lg3 {

namespace {

/// The symplectic coordinate rotation (e1 e2 e3)(e4 e5 e6) sending e2 -> e1,
/// e3 -> e2, e1 -> e3 (and the same cycle on the dual triple), used to move
/// the generic frame prefix into the <e2,e3> columns.
RatMat cycle_into_23() {
    RatMat C(6, 6);
    C(2, 0) = C(0, 1) = C(1, 2) = Rat(1);
    C(5, 3) = C(3, 4) = C(4, 5) = Rat(1);
    return C;
}

std::vector<Rat> as_vec(const Point13& p) { return {p.v.begin(), p.v.end()}; }

std::array<Rat, 4> scale4(std::array<Rat, 4> a) {
    for (auto& x : a)
        if (x != 0) {
            Rat inv = 1 / x;
            for (auto& y : a) y *= inv;
            return a;
        }
    throw std::logic_error("projection image is the zero tuple");
}

}  // namespace

Vec6<Rat> ProjectionData::rep(const std::array<Rat, 4>& coords) const {
    Vec6<Rat> x;
    x.fill(Rat(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) x[j] += coords[i] * target[i][j];
    return x;
}

ProjectionData projection_center(const SigmaLine& line) {
    LinSubspace center = join(tangent_space(line.p0()), tangent_space(line.p1()));
    if (center.dim() != 10)
        throw std::logic_error("projection_center: tangent join has dimension " +
                               std::to_string(center.dim()) + ", expected 10");

    Vec6<Rat> b[2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 6; ++j) b[i][j] = line.axis().space().basis()(i, j);
    Sp3Element g = Sp3Element(symplectic_frame({b[0], b[1]}).mat() * cycle_into_23());
    RatMat to_canonical = rho_wedge3(g.inverse().mat());

    std::array<Vec6<Rat>, 4> target;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) target[i][j] = g.mat()(j, i);
    for (const auto& t : target)
        if (!line.space().contains({t.begin(), t.end()}))
            throw std::logic_error("projection_center: target frame left the line's 4-space");

    return {line, std::move(center), std::move(g), std::move(to_canonical), target};
}

std::array<Rat, 4> double_project(const ProjectionData& pd, const Point13& u) {
    LinSubspace plane = lagrangian_of(u).space();
    LinSubspace cut = intersect(plane, pd.line.space());
    if (cut.dim() >= 2) throw std::domain_error("base_locus");
    if (cut.dim() != 1)
        throw std::logic_error("double_project: plane misses the 4-space (impossible)");

    // geometric image: the intersection point in target coordinates
    RatMat T(6, 4);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) T(i, j) = pd.target[j][i];
    std::vector<Rat> x(6);
    for (int j = 0; j < 6; ++j) x[j] = cut.basis()(0, j);
    auto coords = solve(T, x);
    std::array<Rat, 4> geo = scale4({coords[0], coords[1], coords[2], coords[3]});

    // linear image: canonical-frame coordinates (Y11 : Y12 : Y13 : z)
    Point13 back = apply14(pd.to_canonical, u);
    std::array<Rat, 4> lin =
        scale4({back[SY11], back[SY12], back[SY13], back[SZ]});

    if (geo != lin)
        throw std::logic_error("double_project: linear and geometric images disagree");
    return geo;
}

bool in_base_locus(const ProjectionData& pd, const Point13& u) {
    LinSubspace plane = lagrangian_of(u).space();
    bool geometric = intersect(plane, pd.line.space()).dim() >= 2;
    bool linear = pd.center.contains(as_vec(canonical_scale(u)));
    if (geometric != linear)
        throw std::logic_error("in_base_locus: the two criteria disagree");
    return geometric;
}

}  // namespace lg3
