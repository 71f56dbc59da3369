#pragma once

#include <string>

#include <json.hpp>

#include "soergel/rouquier.hpp"
#include "soergel/soergel_char.hpp"

namespace soergel {

using Json = nlohmann::ordered_json;

/// [[exponent, coeff], ...] in ascending exponent; coefficients beyond int64
/// are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// [{word, poly}, ...] in canonical order.
Json to_json(const CoxeterSystem& W, const CoeffMap& coeffs);
CoeffMap coeffs_from_json(const CoxeterSystem& W, const Json& j);

Json to_json(const CoxeterSystem& W, const HeckeElt& h);
Json to_json(const CoxeterSystem& W, const ParabolicElt& p);
/// {subset, coeffs}
Json to_json(const CoxeterSystem& W, const Character& c);
Character character_from_json(const CoxeterSystem& W, const Json& j);
/// [{degree, terms: [{word, shift, mult}]}, ...] in ascending degree.
Json to_json(const CoxeterSystem& W, const ComplexShape& shape);
ComplexShape shape_from_json(const CoxeterSystem& W, GeneratorSet subset, Element apex, const Json& j);

/// "c * H[word] + ..."
std::string render_text(const CoxeterSystem& W, const HeckeElt& h);
/// "c * H^I[word] + ..."
std::string render_text(const CoxeterSystem& W, const ParabolicElt& p);
/// "c * KL^I[word] + ..."
std::string render_text(const CoxeterSystem& W, const Character& c);
/// One line per homological degree: "degree: (word, shift, mult) ...".
std::string render_text(const CoxeterSystem& W, const ComplexShape& shape);

} // namespace soergel
