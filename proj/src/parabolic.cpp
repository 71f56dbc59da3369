#include "soergel/parabolic.hpp"

#include <limits>
#include <stdexcept>

#include "soergel/error.hpp"

namespace soergel {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

LaurentPoly ParabolicElt::coeff(Element x) const
{
    auto it = coeffs.find(x);
    return it == coeffs.end() ? LaurentPoly{} : it->second;
}

ParabolicModule::ParabolicModule(std::shared_ptr<const HeckeAlgebra> algebra, GeneratorSet subset)
    : algebra_(std::move(algebra)), subset_(subset)
{
    const CoxeterSystem& W = algebra_->system();
    if (!W.is_finitary(subset_))
        throw InvalidInput("subset {" + subset_.to_string() + "} is not a finitary subset of S");
    longest_ = W.longest_in(subset_);
    longest_length_ = W.length(longest_);
    reps_ = W.min_reps(subset_);
    subgroup_ = W.parabolic_subgroup(subset_);
    position_.assign(W.size(), npos);
    for (std::size_t i = 0; i < reps_.size(); ++i)
        position_[reps_[i].index] = i;
    generator_ = algebra_->kl_ideal_generator(subset_);
}

ParabolicModule::~ParabolicModule() = default;

std::size_t ParabolicModule::position(Element x) const
{
    const std::size_t p = x.index < position_.size() ? position_[x.index] : npos;
    if (p == npos)
        throw InvalidInput(system().word_string(x) + " is not a minimal coset representative for {" +
                           subset_.to_string() + "}");
    return p;
}

ParabolicElt ParabolicModule::standard(Element x) const
{
    position(x);
    ParabolicElt p{subset_, {}};
    accumulate(p.coeffs, x, 1);
    return p;
}

HeckeElt ParabolicModule::embed(const ParabolicElt& p) const
{
    const CoxeterSystem& W = system();
    // H_y KL(w_I) = sum_{u in W_I} v^(l(w_I) - l(u)) H_{yu}, lengths adding for y in W^I.
    HeckeElt out;
    for (const auto& [y, c] : p.coeffs) {
        position(y);
        for (Element u : subgroup_)
            out.add_term(W.multiply(y, u), c, 1, longest_length_ - W.length(u));
    }
    return out;
}

ParabolicElt ParabolicModule::extract(const HeckeElt& h) const
{
    ParabolicElt p{subset_, {}};
    for (const auto& [w, c] : h.terms())
        if (position_[w.index] != npos)
            accumulate(p.coeffs, w, c, 1, -longest_length_);
    if (embed(p) != h)
        throw NotInIdeal("element is not in the left ideal generated by KL(w_I) for I = {" +
                         subset_.to_string() + "}");
    return p;
}

void ParabolicModule::build_kl() const
{
    const CoxeterSystem& W = system();
    kl_.clear();
    kl_.reserve(reps_.size());
    for (Element x : reps_)
        kl_.push_back(extract(algebra_->kl_basis(W.multiply(x, longest_))));
}

const ParabolicElt& ParabolicModule::parabolic_kl_basis(Element x) const
{
    const std::size_t px = position(x);
    std::call_once(kl_once_, [this] { build_kl(); });
    return kl_[px];
}

LaurentPoly ParabolicModule::parabolic_kl_poly(Element y, Element x) const
{
    position(y);
    LaurentPoly h = parabolic_kl_basis(x).coeff(y);
    const CoxeterSystem& W = system();
    const LaurentPoly lifted = algebra_->kl_poly(W.multiply(y, longest_), W.multiply(x, longest_));
    if (h != lifted)
        throw std::logic_error("parabolic KL polynomial h^I(" + W.word_string(y) + ", " + W.word_string(x) +
                               ") = " + h.to_string() + " differs from h(y w_I, x w_I) = " + lifted.to_string());
    return h;
}

void ParabolicModule::build_inverse() const
{
    std::call_once(kl_once_, [this] { build_kl(); });
    const CoxeterSystem& W = system();
    const std::size_t n = reps_.size();
    // Rows of the signed inverse G with G H = 1, H unitriangular in canonical
    // order; each entry only involves y in the interval [x, z].
    g_.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t px = 0; px < n; ++px) {
        const Element x = reps_[px];
        std::vector<LaurentPoly> signed_row(n);
        signed_row[px] = 1;
        for (std::size_t pz = px + 1; pz < n; ++pz) {
            const Element z = reps_[pz];
            if (!W.bruhat_leq(x, z))
                continue;
            LaurentPoly acc;
            for (const auto& [y, h] : kl_[pz].coeffs) {
                const std::size_t py = position_[y.index];
                if (py == pz || signed_row[py].is_zero())
                    continue;
                acc.add_scaled(signed_row[py] * h, -1);
            }
            signed_row[pz] = std::move(acc);
        }
        for (std::size_t pz = px; pz < n; ++pz) {
            const int parity = (W.length(reps_[pz]) - W.length(x)) & 1;
            g_[px][pz] = parity ? -signed_row[pz] : std::move(signed_row[pz]);
        }
    }
}

LaurentPoly ParabolicModule::inverse_parabolic_kl(Element x, Element z) const
{
    const std::size_t px = position(x);
    const std::size_t pz = position(z);
    std::call_once(inverse_once_, [this] { build_inverse(); });
    return g_[px][pz];
}

} // namespace soergel
