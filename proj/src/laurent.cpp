#include "soergel/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "soergel/error.hpp"

namespace soergel {

LaurentPoly::LaurentPoly(Integer constant)
{
    if (!constant.is_zero())
        terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent)
{
    LaurentPoly p;
    if (!coeff.is_zero())
        p.terms_.push_back({exponent, std::move(coeff)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<int, Integer>> terms)
{
    std::map<int, Integer> acc;
    for (auto& [e, c] : terms)
        acc[e] += c;
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            p.terms_.push_back({e, std::move(c)});
    return p;
}

Integer LaurentPoly::coeff(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent)
        return it->coeff;
    return 0;
}

std::optional<int> LaurentPoly::min_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.front().exponent;
}

std::optional<int> LaurentPoly::max_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.back().exponent;
}

bool LaurentPoly::is_nonneg() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.sign() > 0; });
}

bool LaurentPoly::is_constant_nonneg_int() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff.sign() > 0);
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.push_back({-it->exponent, it->coeff});
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly out = *this;
    for (auto& t : out.terms_)
        t.exponent += k;
    return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const Integer& factor, int shift)
{
    if (other.is_zero() || factor.is_zero())
        return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    const bool unit = factor == Integer(1);
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + shift)) {
            merged.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
            merged.push_back({b->exponent + shift, unit ? b->coeff : b->coeff * factor});
            ++b;
        } else {
            Integer c = std::move(a->coeff);
            if (unit)
                c += b->coeff;
            else
                c += b->coeff * factor;
            if (!c.is_zero())
                merged.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    add_scaled(rhs, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    add_scaled(rhs, -1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.size() == 1)
        return LaurentPoly(b).shifted(a.terms_[0].exponent) *= a.terms_[0].coeff;
    if (b.size() == 1)
        return LaurentPoly(a).shifted(b.terms_[0].exponent) *= b.terms_[0].coeff;
    // Dense convolution over the exponent span.
    const int lo = a.terms_.front().exponent + b.terms_.front().exponent;
    const int hi = a.terms_.back().exponent + b.terms_.back().exponent;
    std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            dense[static_cast<std::size_t>(ta.exponent + tb.exponent - lo)] += ta.coeff * tb.coeff;
    LaurentPoly out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero())
            out.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            os << t.coeff;
        } else if (t.coeff.sign() < 0) {
            os << " - " << -t.coeff;
        } else {
            os << " + " << t.coeff;
        }
        os << "*v^" << t.exponent;
        first = false;
    }
    return os.str();
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw NotDivisible("division by the zero polynomial");
    if (a.is_zero())
        return {};
    // Long division from the top degree; every step must be exact over Z.
    const int b_lo = *b.min_degree();
    const int b_hi = *b.max_degree();
    const Integer& lead = b.terms().back().coeff;
    LaurentPoly rem = a;
    std::vector<std::pair<int, Integer>> quotient;
    while (!rem.is_zero() && *rem.max_degree() - b_hi >= *rem.min_degree() - b_lo) {
        const auto& top = rem.terms().back();
        if (!Integer::divides(lead, top.coeff))
            throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
        Integer q = Integer::quotient(top.coeff, lead);
        const int e = top.exponent - b_hi;
        rem.add_scaled(b, -q, e);
        quotient.emplace_back(e, std::move(q));
    }
    if (!rem.is_zero())
        throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    return LaurentPoly::from_terms(std::move(quotient));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p)
{
    return os << p.to_string();
}

} // namespace soergel
