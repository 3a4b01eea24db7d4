#include <doctest.h>

#include "lg3/quartic.hpp"

using namespace lg3;

namespace {

Point13 random_pt(Rng& rng) {
    Point13 p;
    for (int k = 0; k < 14; ++k) p[k] = rng.rat(5, 2);
    return p;
}

SymMat3 random_sym(Rng& rng, long num_max = 5, long den_max = 2) {
    SymMat3 X;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = rng.rat(num_max, den_max);
    return X;
}

Point13 y_boundary(const SymMat3& Y, const Rat& z) {
    Point13 p;
    p.setY(Y);
    p[SZ] = z;
    return p;
}

/// Degree-exact directional derivative of a quartic along slot k:
/// (8(F(p+h) - F(p-h)) - (F(p+2h) - F(p-2h))) / 12 with h = e_k.
Rat slot_derivative(const Point13& p, int k) {
    auto shifted = [&](long step) {
        Point13 q = p;
        q[k] += Rat(step);
        return F_eval(q);
    };
    return (Rat(8) * (shifted(1) - shifted(-1)) - (shifted(2) - shifted(-2))) / Rat(12);
}

}  // namespace

TEST_CASE("pinned values of the invariant") {
    Point13 e123;
    e123[SU] = 1;
    CHECK(F_eval(e123) == 0);

    Point13 uz;
    uz[SU] = 1;
    uz[SZ] = 1;
    CHECK(F_eval(uz) == 1);

    Rng rng(61);
    for (int t = 0; t < 10; ++t) {
        CHECK(F_eval(exp_map(random_sym(rng))) == 0);
        CHECK(F_eval(y_boundary(random_sym(rng), rng.rat(4))) == 0);
    }
}

TEST_CASE("invariance under the group and scaling covariance") {
    Rng rng(67);
    for (int t = 0; t < 6; ++t) {
        Point13 p = random_pt(rng);
        RatMat R = rho_wedge3(random_sp3(rng));
        CHECK(F_eval(apply14(R, p)) == F_eval(p));
        Rat lam = rng.rat_nonzero(3, 2);
        Point13 q = p;
        for (int k = 0; k < 14; ++k) q[k] *= lam;
        Rat l4 = lam * lam * lam * lam;
        CHECK(F_eval(q) == l4 * F_eval(p));
        CHECK(F_eval(correlation_J(p)) == F_eval(p));
    }
}

TEST_CASE("gradient agrees with degree-exact finite differences") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        Point13 p = random_pt(rng);
        Point13 g = F_grad(p);
        for (int k = 0; k < 14; ++k) CHECK(g[k] == slot_derivative(p, k));
    }
}

TEST_CASE("euler identity in the plain coordinates") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        Point13 p = random_pt(rng);
        Point13 g = F_grad(p);
        Rat dot(0);
        for (int k = 0; k < 14; ++k) dot += p[k] * g[k];
        CHECK(dot == Rat(4) * F_eval(p));
    }
}

TEST_CASE("gradient vanishes along the variety and the rank-2 cone") {
    Rng rng(79);
    for (int t = 0; t < 10; ++t) {
        Point13 p = exp_map(random_sym(rng));
        if (t % 3 == 0) p = apply14(rho_wedge3(random_sp3(rng)), p);
        CHECK(F_grad(p).is_zero());
    }
    for (int t = 0; t < 10; ++t) {
        // X = v v^T - w w^T has det 0; (a : X : 0 : 0) lies in Sing F
        Vec6<Rat> vw{};
        for (auto& x : vw) x = rng.rat(4, 2);
        SymMat3 X;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                X.at(i, j) = vw[(std::size_t)i] * vw[(std::size_t)j] -
                             vw[(std::size_t)(3 + i)] * vw[(std::size_t)(3 + j)];
        Point13 p;
        p[SU] = rng.rat(4);
        p.setX(X);
        CHECK(F_eval(p) == 0);
        CHECK(F_grad(p).is_zero());
    }
}

TEST_CASE("boundary gradient is carried entirely by the u slot") {
    Rng rng(83);
    for (int t = 0; t < 20; ++t) {
        SymMat3 Y = random_sym(rng);
        Point13 p = y_boundary(Y, rng.rat(4));
        Point13 g = F_grad(p);
        CHECK(g[SU] == Rat(4) * det3(Y));
        for (int k = 1; k < 14; ++k) CHECK(g[k] == 0);
    }
}

TEST_CASE("orbit classification of the four strata") {
    Point13 e123;
    e123[SU] = 1;
    CHECK(classify_orbit(e123) == OrbitClass::Sigma);
    CHECK(std::string(orbit_name(OrbitClass::Sigma)) == "Sigma");

    Point13 omega;
    omega[SU] = 1;
    omega.setX(SymMat3{});
    omega[x_slot(0, 0)] = 1;
    omega[x_slot(1, 1)] = 1;  // X = diag(1,1,0): adj X != 0 but u Y = 0
    CHECK(classify_orbit(omega) == OrbitClass::OmegaMinusSigma);

    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;
    Point13 hatf = y_boundary(Y0, Rat(1));
    CHECK(classify_orbit(hatf) == OrbitClass::FMinusOmega);

    Point13 uz;
    uz[SU] = 1;
    uz[SZ] = 1;
    CHECK(classify_orbit(uz) == OrbitClass::Generic);

    Rng rng(89);
    for (int t = 0; t < 5; ++t) {
        RatMat R = rho_wedge3(random_sp3(rng));
        CHECK(classify_orbit(apply14(R, e123)) == OrbitClass::Sigma);
        CHECK(classify_orbit(apply14(R, omega)) == OrbitClass::OmegaMinusSigma);
        CHECK(classify_orbit(apply14(R, hatf)) == OrbitClass::FMinusOmega);
        CHECK(classify_orbit(apply14(R, uz)) == OrbitClass::Generic);
    }
}

TEST_CASE("numeric classification mirrors the exact one") {
    Rng rng(97);
    PrecisionScope scope(60);
    Point13 reps[4];
    reps[0][SU] = 1;                       // Sigma
    reps[1][SU] = 1;                       // Omega - Sigma
    reps[1][x_slot(0, 0)] = 1;
    reps[1][x_slot(1, 1)] = 1;
    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;
    reps[2] = y_boundary(Y0, Rat(1));      // F - Omega
    reps[3][SU] = 1;
    reps[3][SZ] = 1;                       // generic
    for (auto& rep : reps) {
        RatMat R = rho_wedge3(random_sp3(rng));
        Point13 moved = apply14(R, rep);
        CHECK(classify_orbit_num(to_numeric(moved), 60) == classify_orbit(moved));
    }
}

TEST_CASE("pivot of a boundary covector and its transport") {
    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;
    Point13 c = y_boundary(Y0, Rat(3));
    Point13 e123;
    e123[SU] = 1;
    CHECK(hat_pivot(c) == e123);
    CHECK(is_on_sigma(hat_pivot(c)));

    Rng rng(101);
    for (int t = 0; t < 8; ++t) {
        Sp3Element g = random_sp3(rng);
        RatMat R = rho_wedge3(g);
        Point13 moved = apply14(contragredient14(R), c);
        CHECK(classify_orbit(moved) == OrbitClass::FMinusOmega);
        CHECK(hat_pivot(moved) == canonical_scale(apply14(R, e123)));
    }

    CHECK_THROWS_AS((void)hat_pivot(e123), std::invalid_argument);  // on the variety
    Point13 uz;
    uz[SU] = 1;
    uz[SZ] = 1;
    CHECK_THROWS_AS((void)hat_pivot(uz), std::invalid_argument);  // generic
}

TEST_CASE("tangent spaces have dimension seven and hold their points") {
    Point13 e123;
    e123[SU] = 1;
    LinSubspace T0 = tangent_space(e123);
    CHECK(T0.dim() == 7);
    RatMat want(7, 14);
    int slots[7] = {SU, SX11, SX12, SX13, SX22, SX23, SX33};
    for (std::size_t i = 0; i < 7; ++i) want(i, (std::size_t)slots[i]) = 1;
    CHECK(T0 == LinSubspace::from_rows(want));

    Rng rng(103);
    for (int t = 0; t < 5; ++t) {
        Point13 p = exp_map(random_sym(rng));
        if (t % 2) p = canonical_scale(apply14(rho_wedge3(random_sp3(rng)), p));
        LinSubspace T = tangent_space(p);
        CHECK(T.dim() == 7);
        std::vector<Rat> v(p.v.begin(), p.v.end());
        CHECK(T.contains(v));
    }
}

TEST_CASE("cone membership at the base point") {
    Point13 u;
    u[SU] = 1;

    auto at_X = [](const SymMat3& X, const Rat& a) {
        Point13 v;
        v[SU] = a;
        v.setX(X);
        return v;
    };

    SymMat3 rank1;
    rank1.at(0, 0) = 1;
    rank1.at(0, 1) = 2;
    rank1.at(1, 1) = 4;  // (1,2,0)(1,2,0)^T
    auto m1 = cone_membership(u, at_X(rank1, Rat(5)));
    CHECK(m1.cls == ConeClass::InKu);
    CHECK(m1.in_tangent);

    SymMat3 rank2;
    rank2.at(0, 0) = 1;
    rank2.at(1, 1) = 1;
    auto m2 = cone_membership(u, at_X(rank2, Rat(0)));
    CHECK(m2.cls == ConeClass::InDuOnly);
    CHECK(m2.in_tangent);

    SymMat3 full;
    full.at(0, 0) = 1;
    full.at(1, 1) = 1;
    full.at(2, 2) = 1;
    auto m3 = cone_membership(u, at_X(full, Rat(1)));
    CHECK(m3.cls == ConeClass::Outside);
    CHECK(m3.in_tangent);

    SymMat3 Y0;
    Y0.at(0, 1) = 1;
    Y0.at(2, 2) = 1;
    Point13 outside;
    outside.setY(Y0);
    outside[SZ] = 1;
    auto m4 = cone_membership(u, outside);
    CHECK_FALSE(m4.in_tangent);
    CHECK(m4.cls == ConeClass::Outside);

    // the classes transport with the group
    Rng rng(107);
    for (int t = 0; t < 5; ++t) {
        RatMat R = rho_wedge3(random_sp3(rng));
        auto mm1 = cone_membership(apply14(R, u), apply14(R, at_X(rank1, Rat(5))));
        CHECK(mm1.cls == ConeClass::InKu);
        auto mm2 = cone_membership(apply14(R, u), apply14(R, at_X(rank2, Rat(0))));
        CHECK(mm2.cls == ConeClass::InDuOnly);
        auto mm3 = cone_membership(apply14(R, u), apply14(R, at_X(full, Rat(1))));
        CHECK(mm3.cls == ConeClass::Outside);
        CHECK(mm3.in_tangent);
    }
}

TEST_CASE("traced gradient divides exactly the doubled slots") {
    Rng rng(109);
    for (int t = 0; t < 6; ++t) {
        Point13 p = random_pt(rng);
        Point13 g = F_grad(p), tg = traced_grad(p);
        for (int k = 0; k < 14; ++k)
            CHECK(tg[k] * Rat(kPairWeight[(std::size_t)k]) == g[k]);
    }
}
