#include "soergel/render.hpp"

#include <sstream>

#include "soergel/error.hpp"

namespace soergel {

namespace {

Json integer_json(const Integer& n)
{
    if (auto small = n.to_int64())
        return *small;
    return n.to_string();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer::from_string(j.get<std::string>());
    throw InvalidInput("expected an integer, got " + j.dump());
}

std::string sum_text(const CoxeterSystem& W, const CoeffMap& coeffs, const std::string& tag)
{
    if (coeffs.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : coeffs) {
        if (!out.empty())
            out += " + ";
        out += (c.size() > 1 ? "(" + c.to_string() + ")" : c.to_string()) + " * " + tag + "[" + W.word_string(w) + "]";
    }
    return out;
}

} // namespace

Json to_json(const LaurentPoly& p)
{
    Json out = Json::array();
    for (const auto& t : p.terms())
        out.push_back(Json::array({t.exponent, integer_json(t.coeff)}));
    return out;
}

LaurentPoly poly_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected a polynomial as [[exponent, coeff], ...], got " + j.dump());
    std::vector<std::pair<int, Integer>> terms;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw InvalidInput("malformed polynomial term " + t.dump());
        terms.emplace_back(t[0].get<int>(), integer_from_json(t[1]));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const CoxeterSystem& W, const CoeffMap& coeffs)
{
    Json out = Json::array();
    for (const auto& [w, c] : coeffs)
        out.push_back({{"word", W.word_string(w)}, {"poly", to_json(c)}});
    return out;
}

CoeffMap coeffs_from_json(const CoxeterSystem& W, const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected a list of {word, poly} records");
    CoeffMap out;
    for (const Json& r : j)
        accumulate(out, W.parse_word(r.at("word").get<std::string>()), poly_from_json(r.at("poly")));
    return out;
}

Json to_json(const CoxeterSystem& W, const HeckeElt& h)
{
    return to_json(W, h.terms());
}

Json to_json(const CoxeterSystem& W, const ParabolicElt& p)
{
    return to_json(W, p.coeffs);
}

Json to_json(const CoxeterSystem& W, const Character& c)
{
    Json subset = Json::array();
    for (Generator s : c.subset.members())
        subset.push_back("s" + std::to_string(s + 1));
    return {{"subset", subset}, {"coeffs", to_json(W, c.coeffs)}};
}

Character character_from_json(const CoxeterSystem& W, const Json& j)
{
    GeneratorSet subset;
    for (const Json& s : j.at("subset"))
        for (Generator g : W.parse_subset(s.get<std::string>()).members())
            subset.insert(g);
    return {subset, coeffs_from_json(W, j.at("coeffs"))};
}

Json to_json(const CoxeterSystem& W, const ComplexShape& shape)
{
    Json out = Json::array();
    for (const auto& [degree, terms] : shape.terms) {
        Json list = Json::array();
        for (const ShapeTerm& t : terms)
            list.push_back({{"word", W.word_string(t.y)}, {"shift", t.shift}, {"mult", integer_json(t.mult)}});
        out.push_back({{"degree", degree}, {"terms", list}});
    }
    return out;
}

ComplexShape shape_from_json(const CoxeterSystem& W, GeneratorSet subset, Element apex, const Json& j)
{
    ComplexShape shape{subset, apex, {}};
    for (const Json& d : j) {
        auto& terms = shape.terms[d.at("degree").get<int>()];
        for (const Json& t : d.at("terms"))
            terms.push_back({W.parse_word(t.at("word").get<std::string>()), t.at("shift").get<int>(),
                             integer_from_json(t.at("mult"))});
    }
    return shape;
}

std::string render_text(const CoxeterSystem& W, const HeckeElt& h)
{
    return sum_text(W, h.terms(), "H");
}

std::string render_text(const CoxeterSystem& W, const ParabolicElt& p)
{
    return sum_text(W, p.coeffs, "H^I");
}

std::string render_text(const CoxeterSystem& W, const Character& c)
{
    return sum_text(W, c.coeffs, "KL^I");
}

std::string render_text(const CoxeterSystem& W, const ComplexShape& shape)
{
    std::ostringstream os;
    for (const auto& [degree, terms] : shape.terms) {
        os << degree << ':';
        for (const ShapeTerm& t : terms)
            os << " (" << W.word_string(t.y) << ", " << t.shift << ", " << t.mult << ')';
        os << '\n';
    }
    return os.str();
}

} // namespace soergel
