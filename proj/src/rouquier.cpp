#include "soergel/rouquier.hpp"

#include <stdexcept>

#include "soergel/error.hpp"

namespace soergel {

namespace {

void check_subset(const ParabolicModule& module, const ComplexShape& shape)
{
    if (shape.subset != module.subset())
        throw InvalidInput("shape over {" + shape.subset.to_string() + "} used with module over {" +
                           module.subset().to_string() + "}");
}

} // namespace

ParabolicElt rouquier_character(const ParabolicModule& module, Element x)
{
    return module.standard(x);
}

ComplexShape f_shape(const ParabolicModule& module, Element x)
{
    module.position(x);
    const CoxeterSystem& W = module.system();
    ComplexShape shape{module.subset(), x, {}};
    shape.terms[0].push_back({x, 0, 1});
    for (Element y : module.min_reps()) {
        if (y == x)
            continue;
        const LaurentPoly g = module.inverse_parabolic_kl(y, x);
        for (const auto& [i, m] : g.terms()) {
            if (i <= 0 || m.sign() < 0)
                throw std::logic_error("g^I(" + W.word_string(y) + ", " + W.word_string(x) + ") = " +
                                       g.to_string() + " is not in vN[v]");
            shape.terms[i].push_back({y, i, m});
        }
    }
    return shape;
}

ComplexShape e_shape(const ParabolicModule& module, Element x)
{
    const ComplexShape f = f_shape(module, x);
    ComplexShape shape{f.subset, f.apex, {}};
    for (const auto& [degree, terms] : f.terms)
        for (const ShapeTerm& t : terms)
            shape.terms[-degree].push_back({t.y, -t.shift, t.mult});
    return shape;
}

ParabolicElt shape_character(const ParabolicModule& module, const ComplexShape& shape)
{
    check_subset(module, shape);
    ParabolicElt out{shape.subset, {}};
    for (const auto& [degree, terms] : shape.terms) {
        for (const ShapeTerm& t : terms) {
            const Integer factor = degree % 2 == 0 ? t.mult : -t.mult;
            for (const auto& [y, c] : module.parabolic_kl_basis(t.y).coeffs)
                accumulate(out.coeffs, y, c, factor, t.shift);
        }
    }
    return out;
}

LaurentPoly euler_hom(const ParabolicModule& module, const ComplexShape& a, const ComplexShape& b)
{
    return euler_hom_table(module, {a}, {b})[0][0];
}

std::vector<std::vector<LaurentPoly>> euler_hom_table(const ParabolicModule& module,
                                                      const std::vector<ComplexShape>& a,
                                                      const std::vector<ComplexShape>& b)
{
    const HeckeAlgebra& H = module.algebra();
    const LaurentPoly poincare = module.system().poincare(module.subset());
    std::vector<HeckeElt> lhs, rhs;
    for (const ComplexShape& shape : a)
        lhs.push_back(module.embed(shape_character(module, shape)));
    for (const ComplexShape& shape : b)
        rhs.push_back(H.bar(module.embed(shape_character(module, shape))));
    std::vector<std::vector<LaurentPoly>> out(a.size(), std::vector<LaurentPoly>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i][j] = div_exact(H.pairing(lhs[i], rhs[j]), poincare);
    return out;
}

} // namespace soergel
