#include <doctest.h>

#include <algorithm>

#include "lg3/incidence.hpp"

using namespace lg3;

namespace {

Vec6<Rat> unit6(int k) {
    Vec6<Rat> v{};
    v[(std::size_t)k] = 1;
    return v;
}

SymMat3 random_sym(Rng& rng, long num_max = 5, long den_max = 2) {
    SymMat3 X;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = rng.rat(num_max, den_max);
    return X;
}

SymMat3 conic_seed() {
    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;  // 2 y1 y2 + y3^2
    return Y0;
}

Point13 vertex_covector(const Rat& z) {
    Point13 c;
    c.setY(conic_seed());
    c[SZ] = z;
    return c;
}

/// Independent description of the span of Q_x: the slot covectors omega with
/// omega ^ x = 0 in the fourth wedge power. Built directly from the wedge
/// tables, no incidence code involved.
LinSubspace annihilating_slice(const Vec6<Rat>& x) {
    const auto& wt = wedge_tables();
    RatMat M(15, 14);
    for (int slot = 0; slot < 14; ++slot) {
        Point13 e;
        e[slot] = 1;
        Wedge20<Rat> w = to_wedge(e);
        for (int t = 0; t < 20; ++t) {
            if (w[(std::size_t)t] == 0) continue;
            auto [i, j, k] = wt.triples[(std::size_t)t];
            for (int l = 1; l <= 6; ++l) {
                if (l == i || l == j || l == k) continue;
                if (x[(std::size_t)(l - 1)] == 0) continue;
                int above = (i > l ? 1 : 0) + (j > l ? 1 : 0) + (k > l ? 1 : 0);
                std::array<int, 4> q{i, j, k, l};
                std::sort(q.begin(), q.end());
                Rat sign = (above % 2 == 0) ? 1 : -1;
                M((std::size_t)wt.qidx(q), (std::size_t)slot) +=
                    sign * w[(std::size_t)t] * x[(std::size_t)(l - 1)];
            }
        }
    }
    return LinSubspace::from_vectors(kernel_of(M), 14);
}

}  // namespace

TEST_CASE("quadric span equals the wedge annihilator") {
    auto check_one = [](const Vec6<Rat>& x) {
        VertexQuadric Q = quadric_span(x);
        LinSubspace want = annihilating_slice(x);
        CHECK(want.dim() == 5);
        CHECK(Q.span == want);
    };
    check_one(unit6(0));
    check_one(unit6(4));
    Rng rng(113);
    for (int t = 0; t < 10; ++t) {
        Vec6<Rat> x{};
        while (true) {
            for (auto& c : x) c = rng.rat(4, 2);
            bool nz = false;
            for (const auto& c : x) nz = nz || c != 0;
            if (nz) break;
        }
        check_one(x);
    }
}

TEST_CASE("canonical quadric span, form and membership") {
    VertexQuadric Q = quadric_span(unit6(0));
    RatMat rows(5, 14);
    int slots[5] = {SU, SX22, SX23, SX33, SY11};
    for (std::size_t i = 0; i < 5; ++i) rows(i, (std::size_t)slots[i]) = 1;
    CHECK(Q.span == LinSubspace::from_rows(rows));
    CHECK(rank_of(Q.form) == 5);

    RatMat half(5, 5);
    half(0, 4) = Rat(1, 2);
    half(4, 0) = Rat(1, 2);
    half(1, 3) = Rat(-1, 2);
    half(3, 1) = Rat(-1, 2);
    half(2, 2) = 1;
    CHECK(Q.form == half);

    // membership: exp(X) passes through e1 exactly when the first column of
    // X vanishes
    Rng rng(127);
    for (int t = 0; t < 10; ++t) {
        SymMat3 X = random_sym(rng);
        X.at(0, 0) = 0;
        X.at(0, 1) = 0;
        X.at(0, 2) = 0;
        Point13 p = exp_map(X);
        CHECK(Q.contains(p));
        CHECK(Q.value_at(p) == 0);

        SymMat3 G = random_sym(rng);
        G.at(0, 0) = 1;
        Point13 q = exp_map(G);
        CHECK_FALSE(Q.contains(q));
    }

    Point13 outside;
    outside[SZ] = 1;
    CHECK_THROWS_AS((void)Q.value_at(outside), std::invalid_argument);
}

TEST_CASE("quadric form in span coordinates is t1 t5 - t2 t4 + t3^2") {
    VertexQuadric Q = quadric_span(unit6(0));
    Rng rng(131);
    for (int t = 0; t < 10; ++t) {
        std::array<Rat, 5> ts;
        for (auto& x : ts) x = rng.rat(5, 2);
        Point13 p;
        for (std::size_t i = 0; i < 5; ++i)
            for (int k = 0; k < 14; ++k)
                p[k] += ts[i] * Q.span.basis()(i, (std::size_t)k);
        CHECK(Q.value_at(p) == ts[0] * ts[4] - ts[1] * ts[3] + ts[2] * ts[2]);
    }
}

TEST_CASE("quadric span transports along the group") {
    Rng rng(137);
    for (int t = 0; t < 5; ++t) {
        Sp3Element g = random_sp3(rng);
        Vec6<Rat> x{};
        for (auto& c : x) c = rng.rat(3, 1);
        if (std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; })) x[0] = 1;
        RatMat R = rho_wedge3(g);
        VertexQuadric Qx = quadric_span(x), Qgx = quadric_span(g.apply(x));
        RatMat moved(5, 14);
        for (std::size_t i = 0; i < 5; ++i) {
            Point13 b;
            for (int k = 0; k < 14; ++k) b[k] = Qx.span.basis()(i, (std::size_t)k);
            Point13 mb = apply14(R, b);
            for (int k = 0; k < 14; ++k) moved(i, (std::size_t)k) = mb[k];
        }
        CHECK(Qgx.span == LinSubspace::from_rows(moved));
    }
}

TEST_CASE("span_in_hyperplane at the canonical vertex covector") {
    Point13 c = vertex_covector(Rat(1));
    CHECK(span_in_hyperplane(c, quadric_span(unit6(0))));
    CHECK_FALSE(span_in_hyperplane(c, quadric_span(unit6(2))));
}

TEST_CASE("the canonical line and its axis") {
    Point13 p0;
    p0[SU] = 1;
    Point13 p1;
    p1[x_slot(0, 0)] = 1;  // the plane through e4, e2, e3
    SigmaLine line(p0, p1);
    CHECK(line.axis().space() ==
          LinSubspace::from_vectors({{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                     {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}},
                                    6));
    CHECK(line.space() ==
          LinSubspace::from_vectors({{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)},
                                     {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                     {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                     {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}},
                                    6));
    for (long s = -2; s <= 2; ++s) {
        Point13 pt = line.at(Rat(s), Rat(1));
        CHECK(is_on_sigma(pt));
        CHECK(line.contains(pt));
    }
    CHECK(line.contains(p0));
    Point13 off = vertex_covector(Rat(1));
    CHECK_FALSE(line.contains(off));
}

TEST_CASE("point pairs that span no line are rejected") {
    Point13 p0;
    p0[SU] = 1;
    Point13 opposite;
    opposite[SZ] = 1;  // plane e4 ^ e5 ^ e6 meets e1 ^ e2 ^ e3 in zero
    CHECK_THROWS_AS(SigmaLine(p0, opposite), std::invalid_argument);
    CHECK_THROWS_AS(SigmaLine(p0, p0), std::invalid_argument);
    CHECK_THROWS_AS((void)axis_of_line(p0, opposite), std::invalid_argument);
}

TEST_CASE("line_from_axis round-trips through axis_of_line") {
    Rng rng(139);
    for (int t = 0; t < 8; ++t) {
        Sp3Element g = random_sp3(rng);
        std::vector<std::vector<Rat>> rows;
        for (int i = 1; i <= 2; ++i) {
            Vec6<Rat> v = g.apply(unit6(i));
            rows.emplace_back(v.begin(), v.end());
        }
        IsotropicLine L(LinSubspace::from_vectors(rows, 6));
        SigmaLine line = line_from_axis(L);
        CHECK(line.axis() == L);
        CHECK(axis_of_line(line.p0(), line.p1()) == L);
        CHECK(is_on_sigma(line.at(Rat(3), Rat(-2))));
    }
}

TEST_CASE("common vertex recovery and its degenerate rejection") {
    Rng rng(149);
    for (int t = 0; t < 8; ++t) {
        // three variety points through e1 with pairwise plane intersections
        // of dimension one
        std::array<Point13, 3> pts;
        int made = 0;
        while (made < 3) {
            SymMat3 X = random_sym(rng, 3, 1);
            X.at(0, 0) = 0;
            X.at(0, 1) = 0;
            X.at(0, 2) = 0;
            Point13 cand = exp_map(X);
            bool fresh = true;
            for (int i = 0; i < made; ++i)
                if (intersect(LinSubspace::from_vectors(
                                  [&] {
                                      auto pl = plane_of(pts[(std::size_t)i]);
                                      std::vector<std::vector<Rat>> rs;
                                      for (const auto& r : pl) rs.emplace_back(r.begin(), r.end());
                                      return rs;
                                  }(),
                                  6),
                              LinSubspace::from_vectors(
                                  [&] {
                                      auto pl = plane_of(cand);
                                      std::vector<std::vector<Rat>> rs;
                                      for (const auto& r : pl) rs.emplace_back(r.begin(), r.end());
                                      return rs;
                                  }(),
                                  6))
                        .dim() != 1)
                    fresh = false;
            if (!fresh) continue;
            pts[(std::size_t)made] = cand;
            ++made;
        }
        Vec6<Rat> v = conic_vertex(pts[0], pts[1], pts[2]);
        // projectively e1
        CHECK(v[0] != 0);
        for (std::size_t k = 1; k < 6; ++k) CHECK(v[k] == 0);
    }

    // samples on one line share the whole axis, not a single vertex
    Point13 p0;
    p0[SU] = 1;
    Point13 p1;
    p1[x_slot(0, 0)] = 1;
    SigmaLine line(p0, p1);
    CHECK_THROWS_AS((void)conic_vertex(line.at(1, 0), line.at(0, 1), line.at(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("canonical vertex conic is 2st + w^2 in the pivot plane") {
    for (long z : {0L, 5L}) {
        Point13 c = vertex_covector(Rat(z));
        VertexConic vc = vertex_conic(c);
        Point13 e123;
        e123[SU] = 1;
        CHECK(vc.pivot == e123);
        CHECK(vc.plane[0] == unit6(0));
        CHECK(vc.plane[1] == unit6(1));
        CHECK(vc.plane[2] == unit6(2));
        CHECK(vc.form_matrix == conic_seed());
        CHECK(vc.form().str() == "2*s*t + w^2");
        CHECK(det3(vc.form_matrix) != 0);  // smooth conic
    }

    Point13 uz;
    uz[SU] = 1;
    uz[SZ] = 1;
    CHECK_THROWS_AS((void)vertex_conic(uz), std::invalid_argument);
    Point13 e123;
    e123[SU] = 1;
    CHECK_THROWS_AS((void)vertex_conic(e123), std::invalid_argument);
}

TEST_CASE("vertex conic transports equivariantly") {
    Rng rng(151);
    Point13 c0 = vertex_covector(Rat(2));
    VertexConic base = vertex_conic(c0);
    for (int t = 0; t < 6; ++t) {
        Sp3Element g = random_sp3(rng);
        RatMat R = rho_wedge3(g);
        Point13 c = apply14(contragredient14(R), c0);
        VertexConic vc = vertex_conic(c);
        CHECK(vc.pivot == canonical_scale(apply14(R, base.pivot)));

        // push a rational point of the canonical conic and evaluate
        for (int trial = 0; trial < 4; ++trial) {
            Rat b = rng.rat(4, 1), cc = rng.rat_nonzero(4, 1);
            // (c^2 : -2 b^2 : -2 b c) satisfies 2 s t + w^2 = 0
            Vec6<Rat> x{};
            Rat coords[3] = {cc * cc, Rat(-2) * b * b, Rat(-2) * b * cc};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t k = 0; k < 6; ++k) x[k] += coords[i] * base.plane[i][k];
            Vec6<Rat> gx = g.apply(x);

            // coordinates of gx in the transported conic plane
            RatMat A(6, 3);
            std::vector<Rat> rhs(6);
            for (std::size_t k = 0; k < 6; ++k) {
                for (std::size_t i = 0; i < 3; ++i) A(k, i) = vc.plane[i][k];
                rhs[k] = gx[k];
            }
            auto sol = solve(A, rhs);
            Rat value(0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    value += sol[(std::size_t)i] * vc.form_matrix.at(i, j) * sol[(std::size_t)j];
            CHECK(value == 0);
        }
    }
}
