#include "soergel/hecke.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace soergel {

// ---------------------------------------------------------------------------
// HeckeElt

HeckeElt::HeckeElt(Element w, LaurentPoly c)
{
    if (!c.is_zero())
        terms_.emplace(w, std::move(c));
}

LaurentPoly HeckeElt::coeff(Element w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void accumulate(CoeffMap& map, Element w, const LaurentPoly& c, const Integer& factor, int shift)
{
    if (c.is_zero() || factor.is_zero())
        return;
    auto [it, inserted] = map.try_emplace(w);
    it->second.add_scaled(c, factor, shift);
    if (it->second.is_zero())
        map.erase(it);
}

void HeckeElt::add_term(Element w, const LaurentPoly& c, const Integer& factor, int shift)
{
    accumulate(terms_, w, c, factor, shift);
}

void HeckeElt::add_scaled(const HeckeElt& other, const Integer& factor, int shift)
{
    for (const auto& [w, c] : other.terms_)
        add_term(w, c, factor, shift);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& rhs)
{
    add_scaled(rhs, 1, 0);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& rhs)
{
    add_scaled(rhs, -1, 0);
    return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c = c * scalar;
    return *this;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

namespace {

// v^-1 - v
const LaurentPoly& quadratic_correction()
{
    static const LaurentPoly p = LaurentPoly::v(-1) - LaurentPoly::v(1);
    return p;
}

} // namespace

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const CoxeterSystem> system) : system_(std::move(system)) {}
HeckeAlgebra::~HeckeAlgebra() = default;

HeckeElt HeckeAlgebra::kl_generator(Generator s) const
{
    HeckeElt h(system_->mult_gen(Element::identity(), s, Side::Right), 1);
    h.add_term(Element::identity(), LaurentPoly::v(1));
    return h;
}

HeckeElt HeckeAlgebra::mult_gen_right(const HeckeElt& h, Generator s) const
{
    const CoxeterSystem& W = *system_;
    HeckeElt out;
    for (const auto& [x, c] : h.terms()) {
        const Element xs = W.mult_gen(x, s, Side::Right);
        out.add_term(xs, c);
        if (W.length(xs) < W.length(x))
            out.add_term(x, c * quadratic_correction());
    }
    return out;
}

HeckeElt HeckeAlgebra::mult_gen_left(Generator s, const HeckeElt& h) const
{
    const CoxeterSystem& W = *system_;
    HeckeElt out;
    for (const auto& [x, c] : h.terms()) {
        const Element sx = W.mult_gen(x, s, Side::Left);
        out.add_term(sx, c);
        if (W.length(sx) < W.length(x))
            out.add_term(x, c * quadratic_correction());
    }
    return out;
}

HeckeElt HeckeAlgebra::mult(const HeckeElt& lhs, const HeckeElt& rhs) const
{
    const CoxeterSystem& W = *system_;
    // lhs * H_y for every prefix y of the canonical words in rhs's support.
    std::unordered_map<std::uint32_t, HeckeElt> prefix;
    prefix.emplace(0U, lhs);
    std::function<const HeckeElt&(Element)> times = [&](Element y) -> const HeckeElt& {
        auto it = prefix.find(y.index);
        if (it != prefix.end())
            return it->second;
        const Generator s = W.reduced_word(y).back();
        const Element parent = W.mult_gen(y, s, Side::Right);
        HeckeElt value = mult_gen_right(times(parent), s);
        return prefix.emplace(y.index, std::move(value)).first->second;
    };
    HeckeElt out;
    for (const auto& [y, c] : rhs.terms()) {
        const HeckeElt& p = times(y);
        for (const auto& [w, d] : p.terms())
            out.add_term(w, d * c);
    }
    return out;
}

const std::vector<std::vector<std::pair<Element, Generator>>>& HeckeAlgebra::word_tree() const
{
    std::call_once(tree_once_, [&] {
        const CoxeterSystem& W = *system_;
        tree_.assign(W.size(), {});
        for (Element w : W.elements()) {
            if (w == Element::identity())
                continue;
            const Generator s = W.reduced_word(w).back();
            tree_[W.mult_gen(w, s, Side::Right).index].emplace_back(w, s);
        }
    });
    return tree_;
}

void HeckeAlgebra::build_bar_table() const
{
    const CoxeterSystem& W = *system_;
    bar_.assign(W.size(), HeckeElt{});
    bar_[0] = standard(Element::identity());
    // bar(H_w) = bar(H_w') (H_s + (v - v^-1)) along the canonical word w = w' s.
    for (Element w : W.elements()) {
        for (const auto& [child, s] : word_tree()[w.index]) {
            HeckeElt next = mult_gen_right(bar_[w.index], s);
            next.add_scaled(bar_[w.index], 1, 1);
            next.add_scaled(bar_[w.index], -1, -1);
            bar_[child.index] = std::move(next);
        }
    }
}

const HeckeElt& HeckeAlgebra::bar_standard(Element w) const
{
    std::call_once(bar_once_, [this] { build_bar_table(); });
    return bar_[w.index];
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const
{
    HeckeElt out;
    for (const auto& [w, c] : h.terms()) {
        const LaurentPoly cb = c.bar();
        for (const auto& [z, d] : bar_standard(w).terms())
            out.add_term(z, d * cb);
    }
    return out;
}

void HeckeAlgebra::build_kl_table() const
{
    const CoxeterSystem& W = *system_;
    kl_.assign(W.size(), HeckeElt{});
    kl_[0] = standard(Element::identity());
    for (Element x : W.elements()) {
        if (x == Element::identity())
            continue;
        // Smallest left descent s; then KL(s) KL(sx) minus the mu corrections.
        const Generator s = W.reduced_word(x).front();
        const Element sx = W.mult_gen(x, s, Side::Left);
        const HeckeElt& below = kl_[sx.index];
        HeckeElt result = mult_gen_left(s, below);
        result.add_scaled(below, 1, 1);
        for (const auto& [z, h] : below.terms()) {
            if (z == sx || !W.is_descent(z, s, Side::Left))
                continue;
            const Integer m = h.coeff(1);
            if (!m.is_zero())
                result.add_scaled(kl_[z.index], -m, 0);
        }
        kl_[x.index] = std::move(result);
    }
}

const HeckeElt& HeckeAlgebra::kl_basis(Element x) const
{
    std::call_once(kl_once_, [this] { build_kl_table(); });
    return kl_[x.index];
}

LaurentPoly HeckeAlgebra::kl_poly(Element y, Element x) const
{
    return kl_basis(x).coeff(y);
}

Integer HeckeAlgebra::mu(Element y, Element x) const
{
    return kl_poly(y, x).coeff(1);
}

void HeckeAlgebra::inject_kl_fault(Element y, Element x, const LaurentPoly& delta)
{
    std::call_once(kl_once_, [this] { build_kl_table(); });
    kl_[x.index].add_term(y, delta);
}

HeckeElt HeckeAlgebra::a_inv(const HeckeElt& h) const
{
    HeckeElt out;
    for (const auto& [w, c] : h.terms())
        out.add_term(system_->inverse(w), c);
    return out;
}

LaurentPoly HeckeAlgebra::eps(const HeckeElt& h)
{
    return h.coeff(Element::identity());
}

void HeckeAlgebra::build_trace_table() const
{
    const CoxeterSystem& W = *system_;
    const auto& tree = word_tree();
    trace_.assign(W.size(), {});
    // eps(H_{x^-1} H_y) for all y, walking the word tree depth first.
    for (Element x : W.elements()) {
        auto& row = trace_[x.index];
        std::function<void(Element, const HeckeElt&)> walk = [&](Element y, const HeckeElt& product) {
            LaurentPoly e = eps(product);
            if (!e.is_zero())
                row.emplace_back(y, std::move(e));
            for (const auto& [child, s] : tree[y.index])
                walk(child, mult_gen_right(product, s));
        };
        walk(Element::identity(), standard(W.inverse(x)));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
}

LaurentPoly HeckeAlgebra::pairing(const HeckeElt& lhs, const HeckeElt& rhs) const
{
    std::call_once(trace_once_, [this] { build_trace_table(); });
    LaurentPoly out;
    for (const auto& [x, c] : lhs.terms()) {
        for (const auto& [y, g] : trace_[x.index]) {
            auto it = rhs.terms().find(y);
            if (it != rhs.terms().end())
                out += c * it->second * g;
        }
    }
    return out;
}

LaurentPoly HeckeAlgebra::pairing_direct(const HeckeElt& lhs, const HeckeElt& rhs) const
{
    return eps(mult(a_inv(lhs), rhs));
}

HeckeElt HeckeAlgebra::kl_ideal_generator(GeneratorSet subset) const
{
    const CoxeterSystem& W = *system_;
    const Element top = W.longest_in(subset);
    HeckeElt out;
    for (Element x : W.parabolic_subgroup(subset))
        out.add_term(x, LaurentPoly::v(W.length(top) - W.length(x)));
    if (out != kl_basis(top))
        throw std::logic_error("closed form of the parabolic KL generator disagrees with the KL basis of w_I = " +
                               W.word_string(top));
    return out;
}

} // namespace soergel
