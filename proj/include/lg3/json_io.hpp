#pragma once

#include <json.hpp>

#include "lg3/fano.hpp"

namespace lg3 {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON wire formats. Rationals travel as exact "p/q" strings (plain "p" for
// integers), floats as decimal strings tagged with their precision, so a
// round trip never loses information.
// ---------------------------------------------------------------------------

[[nodiscard]] Json rat_json(const Rat& r);
[[nodiscard]] Rat rat_from(const Json& j);

[[nodiscard]] Json vec6_json(const Vec6<Rat>& v);
[[nodiscard]] Vec6<Rat> vec6_from(const Json& j);

/// {"u": "p/q", "X": [6 rationals], "Y": [6 rationals], "z": "p/q"},
/// the X/Y blocks in row-major upper-triangle order (11,12,13,22,23,33).
[[nodiscard]] Json point13_json(const Point13& p);
[[nodiscard]] Point13 point13_from(const Json& j);

/// 36 rationals, row-major. Parsing validates symplecticity.
[[nodiscard]] Json sp3_json(const Sp3Element& g);
[[nodiscard]] Sp3Element sp3_from(const Json& j);

/// {"axis": [2 vectors], "space": [4 vectors], "span": [2 points]}.
/// Parsing rebuilds the line from its span and cross-checks the axis.
[[nodiscard]] Json sigma_line_json(const SigmaLine& l);
[[nodiscard]] SigmaLine sigma_line_from(const Json& j);

/// {"deg": d, "coeffs": {"a,b,c": "p/q", ...}} with zero coefficients
/// omitted; exponent keys satisfy a+b+c = deg.
[[nodiscard]] Json ternary_json(const TernaryForm& f);
[[nodiscard]] TernaryForm ternary_from(const Json& j);

/// {"v": "-1.234...", "prec": digits}; the decimal string carries the full
/// working precision.
[[nodiscard]] Json bigfloat_json(const BigFloat& x, unsigned digits10);

/// {"seed": N, "covectors": [3 points], "axis": [2 vectors] when present}.
[[nodiscard]] Json section_json(const FanoSection& sec);
[[nodiscard]] FanoSection section_from(const Json& j);

[[nodiscard]] Json dual_quartic_json(const DualQuartic& q);

/// Read a whole stream / file; file_or_dash == "-" means stdin.
[[nodiscard]] Json load_json(const std::string& file_or_dash);

}  // namespace lg3
