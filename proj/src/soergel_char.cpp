#include "soergel/soergel_char.hpp"

#include "soergel/error.hpp"

namespace soergel {

namespace {

void check_subset(const ParabolicModule& module, GeneratorSet subset)
{
    if (subset != module.subset())
        throw InvalidInput("value over {" + subset.to_string() + "} used with module over {" +
                           module.subset().to_string() + "}");
}

} // namespace

LaurentPoly Character::coeff(Element y) const
{
    auto it = coeffs.find(y);
    return it == coeffs.end() ? LaurentPoly{} : it->second;
}

Character delta(const ParabolicModule& module, Element x)
{
    module.position(x);
    Character c{module.subset(), {}};
    accumulate(c.coeffs, x, 1);
    return c;
}

ParabolicElt to_parabolic(const ParabolicModule& module, const Character& c)
{
    check_subset(module, c.subset);
    ParabolicElt out{c.subset, {}};
    for (const auto& [y, m] : c.coeffs)
        for (const auto& [z, h] : module.parabolic_kl_basis(y).coeffs)
            accumulate(out.coeffs, z, h * m);
    return out;
}

Character kl_decompose(const ParabolicModule& module, const ParabolicElt& p)
{
    check_subset(module, p.subset);
    Character out{p.subset, {}};
    CoeffMap rest = p.coeffs;
    while (!rest.empty()) {
        const auto top = std::prev(rest.end());
        const Element y = top->first;
        const LaurentPoly c = top->second;
        for (const auto& [z, h] : module.parabolic_kl_basis(y).coeffs)
            accumulate(rest, z, h * c, -1);
        accumulate(out.coeffs, y, c);
    }
    return out;
}

Character bott_samelson_char(const ParabolicModule& module, const Word& word)
{
    const HeckeAlgebra& H = module.algebra();
    HeckeElt h = module.generator();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= module.system().rank())
            throw InvalidInput("generator index " + std::to_string(*it) + " out of range");
        HeckeElt next = H.mult_gen_left(*it, h);
        next.add_scaled(h, 1, 1);
        h = std::move(next);
    }
    return kl_decompose(module, module.extract(h));
}

LaurentPoly graded_hom_rank(const ParabolicModule& module, const Character& c1, const Character& c2)
{
    const HeckeAlgebra& H = module.algebra();
    const HeckeElt lhs = H.bar(module.embed(to_parabolic(module, c1)));
    const HeckeElt rhs = module.embed(to_parabolic(module, c2));
    return div_exact(H.pairing(lhs, rhs), module.system().poincare(module.subset()));
}

std::vector<std::vector<LaurentPoly>> delta_hom_ranks(const ParabolicModule& module)
{
    const HeckeAlgebra& H = module.algebra();
    const CoxeterSystem& W = module.system();
    const LaurentPoly poincare = W.poincare(module.subset());
    const auto& reps = module.min_reps();
    std::vector<HeckeElt> embedded, barred;
    embedded.reserve(reps.size());
    barred.reserve(reps.size());
    for (Element x : reps) {
        embedded.push_back(H.kl_basis(W.multiply(x, module.longest())));
        barred.push_back(H.bar(embedded.back()));
    }
    std::vector<std::vector<LaurentPoly>> out(reps.size(), std::vector<LaurentPoly>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            out[i][j] = div_exact(H.pairing(barred[i], embedded[j]), poincare);
    return out;
}

CoeffMap support_graded_ranks(const ParabolicModule& module, const ParabolicElt& p)
{
    check_subset(module, p.subset);
    CoeffMap out;
    for (const auto& [x, c] : p.coeffs)
        accumulate(out, x, c.bar(), 1, module.system().length(x));
    return out;
}

bool is_perverse(const Character& c)
{
    for (const auto& [y, m] : c.coeffs)
        if (!m.is_constant_nonneg_int())
            return false;
    return true;
}

} // namespace soergel
