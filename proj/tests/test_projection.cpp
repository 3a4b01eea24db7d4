#include <doctest.h>

#include "lg3/projection.hpp"

using namespace lg3;

namespace {

Vec6<Rat> unit6(int k) {
    Vec6<Rat> v{};
    v[(std::size_t)k] = 1;
    return v;
}

IsotropicLine canonical_axis() {
    return IsotropicLine(LinSubspace::from_vectors(
        {{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
         {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}},
        6));
}

SymMat3 random_sym(Rng& rng, long num_max = 5, long den_max = 2) {
    SymMat3 X;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = rng.rat(num_max, den_max);
    return X;
}

std::array<Rat, 4> adjoint_row_image(const SymMat3& X) {
    // first adjoint row and the determinant, written out as in the chart map
    std::array<Rat, 4> w;
    w[0] = X.at(1, 1) * X.at(2, 2) - X.at(1, 2) * X.at(1, 2);
    w[1] = X.at(0, 2) * X.at(1, 2) - X.at(0, 1) * X.at(2, 2);
    w[2] = X.at(0, 1) * X.at(1, 2) - X.at(0, 2) * X.at(1, 1);
    w[3] = det3(X);
    return w;
}

std::array<Rat, 4> scale4(std::array<Rat, 4> v) {
    for (const auto& x : v)
        if (x != 0) {
            Rat inv = 1 / x;
            for (auto& y : v) y *= inv;
            return v;
        }
    return v;
}

}  // namespace

TEST_CASE("canonical projection data") {
    ProjectionData pd = projection_center(line_from_axis(canonical_axis()));
    CHECK(pd.center.dim() == 10);
    RatMat rows(10, 14);
    std::size_t r = 0;
    for (int k = 0; k < 14; ++k) {
        if (k == SY11 || k == SY12 || k == SY13 || k == SZ) continue;
        rows(r++, (std::size_t)k) = 1;
    }
    CHECK(pd.center == LinSubspace::from_rows(rows));
    CHECK(pd.to_canonical == RatMat::identity(14));
    CHECK(pd.target[0] == unit6(0));
    CHECK(pd.target[1] == unit6(1));
    CHECK(pd.target[2] == unit6(2));
    CHECK(pd.target[3] == unit6(3));
}

TEST_CASE("canonical chart image is the first adjoint row with the determinant") {
    ProjectionData pd = projection_center(line_from_axis(canonical_axis()));
    Rng rng(157);
    int done = 0;
    while (done < 20) {
        SymMat3 X = random_sym(rng);
        Point13 p = exp_map(X);
        if (in_base_locus(pd, p)) continue;
        auto img = double_project(pd, p);
        CHECK(img == scale4(adjoint_row_image(X)));
        ++done;
    }
}

TEST_CASE("base locus membership") {
    SigmaLine line = line_from_axis(canonical_axis());
    ProjectionData pd = projection_center(line);

    for (long s = -1; s <= 2; ++s) {
        Point13 pt = line.at(Rat(s), Rat(1));
        CHECK(in_base_locus(pd, pt));
        CHECK_THROWS_AS((void)double_project(pd, pt), std::domain_error);
    }

    // a plane meeting the 4-space in a line without containing the axis
    LagrangianPlane P(LinSubspace::from_vectors(
        {{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)},
         {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
         {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}},
        6));
    Point13 side = canonical_scale(plucker(P));
    CHECK(in_base_locus(pd, side));
    CHECK_FALSE(line.contains(side));
    CHECK_THROWS_AS((void)double_project(pd, side), std::domain_error);

    Rng rng(163);
    for (int t = 0; t < 10; ++t) {
        SymMat3 X = random_sym(rng);
        if (det3(X) == 0) continue;  // keep the plane clear of the 4-space
        CHECK_FALSE(in_base_locus(pd, exp_map(X)));
    }
}

TEST_CASE("projection image, checked against the plane intersection route") {
    Rng rng(167);
    for (int lines = 0; lines < 3; ++lines) {
        Sp3Element g = random_sp3(rng);
        std::vector<std::vector<Rat>> rows;
        for (int i = 1; i <= 2; ++i) {
            Vec6<Rat> v = g.apply(unit6(i));
            rows.emplace_back(v.begin(), v.end());
        }
        SigmaLine line = line_from_axis(IsotropicLine(LinSubspace::from_vectors(rows, 6)));
        ProjectionData pd = projection_center(line);
        CHECK(pd.center.dim() == 10);

        int done = 0;
        while (done < 8) {
            Point13 p = canonical_scale(
                apply14(rho_wedge3(random_sp3(rng)), exp_map(random_sym(rng, 3, 1))));
            std::array<Rat, 4> img;
            try {
                img = double_project(pd, p);
            } catch (const std::domain_error&) {
                continue;
            }
            // the image names the intersection point of the point's plane
            // with the 4-space of the line, written in the target frame
            Vec6<Rat> rep = pd.rep(img);
            CHECK(line.space().contains(std::vector<Rat>(rep.begin(), rep.end())));
            auto plane = plane_of(p);
            std::vector<std::vector<Rat>> prows;
            for (const auto& b : plane) prows.emplace_back(b.begin(), b.end());
            CHECK(LinSubspace::from_vectors(prows, 6).contains(
                std::vector<Rat>(rep.begin(), rep.end())));
            ++done;
        }
    }
}

TEST_CASE("image representative is nonzero and scales canonically") {
    ProjectionData pd = projection_center(line_from_axis(canonical_axis()));
    Rng rng(173);
    for (int t = 0; t < 10; ++t) {
        SymMat3 X = random_sym(rng);
        Point13 p = exp_map(X);
        if (in_base_locus(pd, p)) continue;
        auto img = double_project(pd, p);
        bool nonzero = false;
        Rat first(0);
        for (const auto& c : img)
            if (c != 0 && !nonzero) {
                nonzero = true;
                first = c;
            }
        CHECK(nonzero);
        CHECK(first == 1);
    }
}
