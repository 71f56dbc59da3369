#pragma once

#include <vector>

#include "soergel/parabolic.hpp"

namespace soergel {

/// Expansion in the parabolic KL basis {KL^I(y)}. Under Soergel's
/// conjecture the coefficient of y is the graded multiplicity of B_y^I.
struct Character {
    GeneratorSet subset;
    CoeffMap coeffs;

    LaurentPoly coeff(Element y) const;
    bool operator==(const Character&) const = default;
};

/// The character of B_x^I.
Character delta(const ParabolicModule& module, Element x);

/// sum c_y KL^I(y) in the basis {H_y^I}.
ParabolicElt to_parabolic(const ParabolicModule& module, const Character& c);

/// The unique expansion of p in the parabolic KL basis, peeling off the
/// canonically largest support element first.
Character kl_decompose(const ParabolicModule& module, const ParabolicElt& p);

/// Character of the singular Bott-Samelson bimodule KL(s_1)...KL(s_k) KL(w_I).
Character bott_samelson_char(const ParabolicModule& module, const Word& word);

/// (bar ch c1, ch c2) / poincare(I). Throws NotDivisible when the pairing is
/// not a multiple of the Poincare polynomial.
LaurentPoly graded_hom_rank(const ParabolicModule& module, const Character& c1, const Character& c2);

/// graded_hom_rank(delta(x), delta(y)) for all x, y in W^I, indexed by position.
std::vector<std::vector<LaurentPoly>> delta_hom_ranks(const ParabolicModule& module);

/// For each x in the support of p: bar(coefficient of H_x^I) v^l(x).
CoeffMap support_graded_ranks(const ParabolicModule& module, const ParabolicElt& p);

/// Every coefficient is a nonnegative integer constant.
bool is_perverse(const Character& c);

} // namespace soergel
