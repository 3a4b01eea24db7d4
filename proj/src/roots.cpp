#include "lg3/roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace lg3 {

CNum poly_eval(const std::vector<CNum>& coeffs, const CNum& x) {
    CNum acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

static CNum dpoly_eval(const std::vector<CNum>& coeffs, const CNum& x) {
    CNum acc(0);
    for (std::size_t i = coeffs.size(); i-- > 1;)
        acc = acc * x + coeffs[i] * CNum((long)i);
    return acc;
}

RootsResult roots_univariate(const std::vector<CNum>& input, unsigned digits10) {
    PrecisionScope scope(digits10);
    BigFloat maxc(0);
    for (const auto& c : input) {
        BigFloat a = c.abs();
        if (a > maxc) maxc = a;
    }
    if (maxc == 0) throw std::invalid_argument("roots_univariate: zero polynomial");
    BigFloat coeff_floor = zero_threshold(digits10) * maxc;

    // effective degree: drop negligible leading coefficients
    std::vector<CNum> p = input;
    while (p.size() > 1 && p.back().abs() <= coeff_floor) p.pop_back();
    std::size_t deg = p.size() - 1;
    if (deg == 0) throw std::invalid_argument("roots_univariate: constant polynomial");
    if (deg > 8) throw std::invalid_argument("roots_univariate: degree > 8 unsupported");

    RootsResult out;
    out.worst_residual = BigFloat(0);

    // peel off exact-ish roots at the origin
    std::size_t at_zero = 0;
    while (at_zero < deg && p[at_zero].abs() <= coeff_floor) ++at_zero;
    for (std::size_t k = 0; k < at_zero; ++k) out.roots.push_back(CNum(0));
    if (at_zero > 0) p.erase(p.begin(), p.begin() + at_zero);
    deg = p.size() - 1;

    if (deg > 0) {
        // monic normalization
        CNum lead = p.back();
        for (auto& c : p) c = c / lead;

        // Cauchy bound and roots-of-unity start (offset angle so that real
        // axis symmetry cannot lock the iteration)
        BigFloat radius(1);
        for (std::size_t i = 0; i < deg; ++i) {
            BigFloat a = p[i].abs();
            if (1 + a > radius) radius = 1 + a;
        }
        const BigFloat pi = boost::math::constants::pi<BigFloat>();
        std::vector<CNum> z(deg);
        for (std::size_t k = 0; k < deg; ++k) {
            BigFloat th = (2 * pi * (long)k) / (long)deg + BigFloat(2) / 5;
            z[k] = CNum(radius * cos(th) * BigFloat(7) / 10,
                        radius * sin(th) * BigFloat(7) / 10);
        }

        const BigFloat step_goal = pow(BigFloat(10), -(long)digits10);
        const unsigned max_iter = 60 * (unsigned)deg + 200;
        for (unsigned it = 0; it < max_iter; ++it) {
            BigFloat worst_step(0);
            for (std::size_t k = 0; k < deg; ++k) {
                CNum pv = poly_eval(p, z[k]);
                CNum dv = dpoly_eval(p, z[k]);
                if (dv.abs2() == 0) {
                    z[k] += CNum(BigFloat(1) / 1000, BigFloat(1) / 997);
                    worst_step = radius;
                    continue;
                }
                CNum newton = pv / dv;
                CNum sum(0);
                for (std::size_t j = 0; j < deg; ++j) {
                    if (j == k) continue;
                    sum += CNum(1) / (z[k] - z[j]);
                }
                CNum denom = CNum(1) - newton * sum;
                CNum delta = (denom.abs2() == 0) ? newton : newton / denom;
                z[k] -= delta;
                BigFloat st = delta.abs() / (1 + z[k].abs());
                if (st > worst_step) worst_step = st;
            }
            if (worst_step < step_goal) break;
        }
        // Newton polish
        for (auto& r : z)
            for (int it = 0; it < 4; ++it) {
                CNum dv = dpoly_eval(p, r);
                if (dv.abs2() == 0) break;
                r -= poly_eval(p, r) / dv;
            }
        for (auto& r : z) out.roots.push_back(r);
    }

    // residual contract at the scale a Horner evaluation can actually reach:
    // sum |c_i| R^i over the largest root modulus R, not just the top coefficient
    BigFloat rmax(1);
    for (const auto& r : out.roots) {
        BigFloat a = r.abs();
        if (a > rmax) rmax = a;
    }
    BigFloat ptilde(0);
    for (std::size_t i = input.size(); i-- > 0;) ptilde = ptilde * rmax + input[i].abs();
    if (ptilde < maxc) ptilde = maxc;
    const BigFloat bound = zero_threshold(digits10) * ptilde;
    for (const auto& r : out.roots) {
        BigFloat res = poly_eval(input, r).abs();
        if (res > out.worst_residual) out.worst_residual = res;
    }
    if (out.worst_residual >= bound)
        throw std::runtime_error("roots_univariate: residual " +
                                 out.worst_residual.str(8) + " exceeds bound " +
                                 bound.str(8));
    return out;
}

}  // namespace lg3
