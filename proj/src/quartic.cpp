#include "lg3/quartic.hpp"

#include "lg3/numlin.hpp"

#include <stdexcept>
#include <string>

namespace lg3 {

const char* orbit_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::Sigma: return "Sigma";
        case OrbitClass::OmegaMinusSigma: return "OmegaMinusSigma";
        case OrbitClass::FMinusOmega: return "FMinusOmega";
        case OrbitClass::Generic: return "Generic";
    }
    return "?";
}

const char* cone_name(ConeClass c) {
    switch (c) {
        case ConeClass::InKu: return "InKu";
        case ConeClass::InDuOnly: return "InDuOnly";
        case ConeClass::Outside: return "Outside";
    }
    return "?";
}

OrbitClass classify_orbit(const Point13& p) {
    if (is_on_sigma(p)) return OrbitClass::Sigma;
    Point13 g = F_grad(p);
    if (g.is_zero()) return OrbitClass::OmegaMinusSigma;
    if (F_eval(p) == 0) return OrbitClass::FMinusOmega;
    return OrbitClass::Generic;
}

OrbitClass classify_orbit_num(const NumPoint13& p, unsigned digits10) {
    PrecisionScope scope(digits10);
    NumVec v(p.v.begin(), p.v.end());
    num_normalize(v);
    NumPoint13 q;
    std::copy(v.begin(), v.end(), q.v.begin());
    BigFloat thr = zero_threshold(digits10);
    if (sigma_residual_num(q) <= thr) return OrbitClass::Sigma;
    NumPoint13 g = F_grad(q);
    BigFloat gmax(0);
    for (int k = 0; k < 14; ++k) {
        BigFloat a = g[k].abs();
        if (a > gmax) gmax = a;
    }
    if (gmax <= thr) return OrbitClass::OmegaMinusSigma;
    if (F_eval(q).abs() <= thr) return OrbitClass::FMinusOmega;
    return OrbitClass::Generic;
}

Point13 hat_pivot(const Point13& c) {
    OrbitClass cls = classify_orbit(c);
    if (cls != OrbitClass::FMinusOmega)
        throw std::invalid_argument(std::string("hat_pivot: point is in ") + orbit_name(cls) +
                                    ", the pivot needs FMinusOmega");
    Point13 g = canonical_scale(traced_grad(c));
    if (!is_on_sigma(g))
        throw std::logic_error("hat_pivot: gradient left the variety (convention bug)");
    return g;
}

LinSubspace tangent_space(const Point13& u) {
    if (!is_on_sigma(u)) throw std::invalid_argument("tangent_space: point not on the variety");
    // Jacobian of the 21 quadrics. A central difference along a coordinate is
    // exact for a quadratic form, so no derivative formulas are transcribed.
    RatMat Jq(21, 14);
    for (int k = 0; k < 14; ++k) {
        Point13 plus = u, minus = u;
        plus[k] += 1;
        minus[k] -= 1;
        auto qp = cramer_values(plus), qm = cramer_values(minus);
        for (int r = 0; r < 21; ++r) Jq(r, k) = (qp[r] - qm[r]) / 2;
    }
    auto ker = kernel_of(Jq);
    if (ker.size() != 7)
        throw std::logic_error("tangent_space: Jacobian kernel has dimension " +
                               std::to_string(ker.size()) + ", expected 7");
    return LinSubspace::from_vectors(ker, 14);
}

ConeMembership cone_membership(const Point13& u, const Point13& v) {
    Sp3Element g = symplectic_completion(lagrangian_of(u));
    RatMat Rinv = rho_wedge3(g.inverse().mat());
    Point13 w = apply14(Rinv, v);
    for (int k = SY11; k <= SZ; ++k)
        if (w[k] != 0) return {ConeClass::Outside, false};
    Sym3<Rat> X = w.Xblock();
    if (adjugate(X) == Sym3<Rat>{}) return {ConeClass::InKu, true};
    if (det3(X) == 0) return {ConeClass::InDuOnly, true};
    return {ConeClass::Outside, true};
}

}  // namespace lg3
