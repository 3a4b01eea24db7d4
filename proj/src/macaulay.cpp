#include "lg3/macaulay.hpp"

#include "lg3/matrix.hpp"
#include "lg3/rng.hpp"

#include <optional>
#include <stdexcept>

namespace lg3 {

namespace {

// One Macaulay attempt in the given coordinates; nullopt when the minor is
// singular and the quotient formula cannot be applied.
std::optional<Rat> macaulay_once(const std::array<const TernaryForm*, 3>& f) {
    const unsigned D = 7;
    const std::size_t n = TernaryForm::count(D);  // 36
    TernaryForm deg7(D);                          // for index <-> exponents only

    RatMat M(n, n);
    std::vector<bool> non_reduced(n, false);
    for (std::size_t row = 0; row < n; ++row) {
        auto e = deg7.exponents(row);
        int cls = e[0] >= 3 ? 0 : (e[1] >= 3 ? 1 : 2);
        int big = (e[0] >= 3) + (e[1] >= 3) + (e[2] >= 3);
        non_reduced[row] = big >= 2;
        std::array<unsigned, 3> base = e;
        base[cls] -= 3;
        const TernaryForm& fc = *f[cls];
        for (std::size_t term = 0; term < fc.terms(); ++term) {
            if (fc[term] == 0) continue;
            auto b = fc.exponents(term);
            std::size_t col = deg7.index(base[0] + b[0], base[1] + b[1]);
            M(row, col) += fc[term];
        }
    }

    Rat detM = det_of(M);
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i)
        if (non_reduced[i]) sub.push_back(i);
    RatMat Mp(sub.size(), sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < sub.size(); ++j) Mp(i, j) = M(sub[i], sub[j]);
    Rat detMp = det_of(Mp);
    if (detMp == 0) return std::nullopt;
    return detM / detMp;
}

TernaryForm substitute_linear(const TernaryForm& f, const RatMat& T) {
    return interpolate_ternary_form(f.degree(), [&](const Rat& s, const Rat& t, const Rat& w) {
        Rat xs = T(0, 0) * s + T(0, 1) * t + T(0, 2) * w;
        Rat xt = T(1, 0) * s + T(1, 1) * t + T(1, 2) * w;
        Rat xw = T(2, 0) * s + T(2, 1) * t + T(2, 2) * w;
        return f.eval(xs, xt, xw);
    });
}

}  // namespace

Rat resultant_cubics(const TernaryForm& f0, const TernaryForm& f1, const TernaryForm& f2) {
    if (f0.degree() != 3 || f1.degree() != 3 || f2.degree() != 3)
        throw std::invalid_argument("resultant_cubics: inputs must be cubics");

    if (auto r = macaulay_once({&f0, &f1, &f2})) return *r;

    // determinant-1 shears keep the resultant literally equal
    Rng rng(0x5ca1ab1e00000007ULL);
    for (int attempt = 0; attempt < 24; ++attempt) {
        RatMat T = RatMat::identity(3);
        for (int step = 0; step < 3; ++step) {
            int i = (int)rng.below(3);
            int j = (int)rng.below(3);
            if (i == j) continue;
            Rat k = Rat(rng.range(-2, 2));
            for (int c = 0; c < 3; ++c) T(i, c) += k * T(j, c);
        }
        TernaryForm g0 = substitute_linear(f0, T);
        TernaryForm g1 = substitute_linear(f1, T);
        TernaryForm g2 = substitute_linear(f2, T);
        if (auto r = macaulay_once({&g0, &g1, &g2})) return *r;
    }
    throw std::runtime_error(
        "resultant_cubics: Macaulay minor singular in every attempted coordinate system");
}

}  // namespace lg3
