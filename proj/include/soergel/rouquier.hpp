#pragma once

#include <compare>
#include <map>
#include <vector>

#include "soergel/parabolic.hpp"

namespace soergel {

/// One summand B_y^I(shift)^{mult} of a homological degree.
struct ShapeTerm {
    Element y;
    int shift = 0;
    Integer mult;

    bool operator==(const ShapeTerm&) const = default;
};

/// Graded shape of a minimal complex: the summands in each homological
/// degree, without differentials. Terms within a degree are in canonical order.
struct ComplexShape {
    GeneratorSet subset;
    Element apex;
    std::map<int, std::vector<ShapeTerm>> terms;

    bool operator==(const ComplexShape&) const = default;
};

/// H_x^I, the alternating character of F_x^I.
ParabolicElt rouquier_character(const ParabolicModule& module, Element x);

/// Degree 0 is B_x^I; degree i > 0 holds B_y^I(i) with multiplicity the
/// coefficient of v^i in g^I_{y,x}. Throws std::logic_error if some g^I
/// has a negative coefficient or a term outside positive degrees.
ComplexShape f_shape(const ParabolicModule& module, Element x);

/// Mirror of f_shape into nonpositive degrees: (y, i, m) becomes (y, -i, m).
ComplexShape e_shape(const ParabolicModule& module, Element x);

/// sum over terms of (-1)^degree v^shift mult KL^I(y).
ParabolicElt shape_character(const ParabolicModule& module, const ComplexShape& shape);

/// Euler characteristic of the graded Hom complex between a and b,
/// (ch a, bar ch b) / poincare(I). Throws NotDivisible if the pairing is not
/// a multiple of the Poincare polynomial, InvalidInput on mismatched subsets.
LaurentPoly euler_hom(const ParabolicModule& module, const ComplexShape& a, const ComplexShape& b);

/// euler_hom(a[i], b[j]) for all i, j, converting each shape once.
std::vector<std::vector<LaurentPoly>> euler_hom_table(const ParabolicModule& module,
                                                      const std::vector<ComplexShape>& a,
                                                      const std::vector<ComplexShape>& b);

} // namespace soergel
