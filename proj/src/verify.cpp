#include "soergel/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "soergel/error.hpp"
#include "soergel/rouquier.hpp"
#include "soergel/soergel_char.hpp"

namespace soergel {

struct Verifier::Check {
    SuiteResult result;

    explicit Check(std::string name) { result.name = std::move(name); }

    template <class Describe>
    void expect(bool ok, Describe&& describe)
    {
        ++result.checked;
        if (ok)
            return;
        ++result.failed;
        if (!result.counterexample)
            result.counterexample = describe();
    }
};

namespace {

std::string subset_label(GeneratorSet I)
{
    return "I={" + I.to_string() + "}";
}

LaurentPoly sign(int exponent_parity)
{
    return (exponent_parity & 1) ? LaurentPoly(-1) : LaurentPoly(1);
}

} // namespace

Verifier::Verifier(std::shared_ptr<const HeckeAlgebra> algebra, VerifyOptions options)
    : algebra_(std::move(algebra)), options_(options), subsets_(algebra_->system().finitary_subsets())
{
}

Verifier::~Verifier() = default;

const std::vector<std::string>& Verifier::suite_names()
{
    static const std::vector<std::string> names = {"bar",    "parabolic", "inversion",     "positivity",
                                                   "parity", "degree-one", "shape",        "euler",
                                                   "hom-vanishing", "monotone", "pairing", "bs-positivity"};
    return names;
}

const ParabolicModule& Verifier::module(GeneratorSet subset)
{
    auto& slot = modules_[subset];
    if (!slot)
        slot = std::make_unique<ParabolicModule>(algebra_, subset);
    return *slot;
}

SuiteResult Verifier::run(const std::string& suite)
{
    if (suite == "bar")
        return bar_suite();
    if (suite == "parabolic")
        return parabolic_suite();
    if (suite == "inversion")
        return inversion_suite();
    if (suite == "positivity")
        return positivity_suite();
    if (suite == "parity")
        return parity_suite();
    if (suite == "degree-one")
        return degree_one_suite();
    if (suite == "shape")
        return shape_suite();
    if (suite == "euler")
        return euler_suite();
    if (suite == "hom-vanishing")
        return hom_vanishing_suite();
    if (suite == "monotone")
        return monotone_suite();
    if (suite == "pairing")
        return pairing_suite();
    if (suite == "bs-positivity")
        return bs_positivity_suite();
    throw InvalidInput("unknown suite '" + suite + "'");
}

std::vector<SuiteResult> Verifier::run(const std::vector<std::string>& suites)
{
    std::vector<SuiteResult> out;
    for (const std::string& s : suites)
        out.push_back(run(s));
    return out;
}

// KL basis: bar invariant, unitriangular, off-diagonal entries in vZ[v] and
// supported on the Bruhat interval below x.
SuiteResult Verifier::bar_suite()
{
    Check check("bar");
    const HeckeAlgebra& H = *algebra_;
    const CoxeterSystem& W = H.system();
    for (Element x : W.elements()) {
        const HeckeElt& kl = H.kl_basis(x);
        check.expect(H.bar(kl) == kl, [&] { return "KL(" + W.word_string(x) + ") is not bar invariant"; });
        check.expect(kl.coeff(x) == LaurentPoly(1), [&] { return "h(x, x) != 1 for x = " + W.word_string(x); });
        for (const auto& [y, h] : kl.terms()) {
            if (y == x)
                continue;
            const auto lo = h.min_degree();
            check.expect(lo && *lo >= 1 && W.bruhat_leq(y, x), [&] {
                return "h(" + W.word_string(y) + ", " + W.word_string(x) + ") = " + h.to_string() +
                       " is not in vZ[v] below x";
            });
        }
    }
    return check.result;
}

// h^I(y, x) from the parabolic KL basis against h(y w_I, x w_I), plus the
// embed/extract round trip on each basis element.
SuiteResult Verifier::parabolic_suite()
{
    Check check("parabolic");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        for (Element x : M.min_reps()) {
            const ParabolicElt& kl = M.parabolic_kl_basis(x);
            check.expect(M.extract(M.embed(kl)) == kl, [&] {
                return "extract(embed(KL^I(" + W.word_string(x) + "))) differs, " + subset_label(I);
            });
            for (Element y : M.min_reps()) {
                std::string failure;
                try {
                    const LaurentPoly h = M.parabolic_kl_poly(y, x);
                    if (!h.is_zero() && !W.bruhat_leq(y, x))
                        failure = "h^I(" + W.word_string(y) + ", " + W.word_string(x) + ") != 0 with y not <= x";
                } catch (const std::logic_error& e) {
                    failure = e.what();
                }
                check.expect(failure.empty(), [&] { return failure + ", " + subset_label(I); });
            }
        }
    }
    return check.result;
}

// sum_y (-1)^(l(y)-l(x)) g^I(x,y) h^I(y,z) = delta(x,z) and the transposed
// form, with h read from the KL basis of W rather than the parabolic table.
SuiteResult Verifier::inversion_suite()
{
    Check check("inversion");
    const HeckeAlgebra& H = *algebra_;
    const CoxeterSystem& W = H.system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        const Element wI = M.longest();
        const auto& reps = M.min_reps();
        auto h = [&](Element y, Element z) { return H.kl_poly(W.multiply(y, wI), W.multiply(z, wI)); };
        for (Element x : reps) {
            for (Element z : reps) {
                LaurentPoly forward, transposed;
                for (Element y : reps) {
                    const LaurentPoly s = sign(W.length(y) - W.length(x));
                    forward += s * M.inverse_parabolic_kl(x, y) * h(y, z);
                    transposed += s * h(z, y) * M.inverse_parabolic_kl(y, x);
                }
                const LaurentPoly expected = x == z ? LaurentPoly(1) : LaurentPoly();
                check.expect(forward == expected, [&] {
                    return "sum_y g(" + W.word_string(x) + ", y) h(y, " + W.word_string(z) + ") = " +
                           forward.to_string() + ", " + subset_label(I);
                });
                check.expect(transposed == expected, [&] {
                    return "sum_y h(" + W.word_string(z) + ", y) g(y, " + W.word_string(x) + ") = " +
                           transposed.to_string() + ", " + subset_label(I);
                });
            }
        }
    }
    return check.result;
}

// g^I has nonnegative coefficients, g(x,x) = 1, g(x,y) in vZ[v] for x < y
// and vanishes unless x <= y.
SuiteResult Verifier::positivity_suite()
{
    Check check("positivity");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        for (Element x : M.min_reps()) {
            for (Element y : M.min_reps()) {
                const LaurentPoly g = M.inverse_parabolic_kl(x, y);
                bool ok = g.is_nonneg();
                if (x == y)
                    ok = ok && g == LaurentPoly(1);
                else if (!W.bruhat_leq(x, y))
                    ok = ok && g.is_zero();
                else
                    ok = ok && (g.is_zero() || *g.min_degree() >= 1);
                check.expect(ok, [&] {
                    return "g^I(" + W.word_string(x) + ", " + W.word_string(y) + ") = " + g.to_string() + ", " +
                           subset_label(I);
                });
            }
        }
    }
    return check.result;
}

// Exponents of g^I(y, x) and homological degrees of F_x^I have the parity of
// l(x) - l(y).
SuiteResult Verifier::parity_suite()
{
    Check check("parity");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        for (Element x : M.min_reps()) {
            for (Element y : M.min_reps()) {
                const LaurentPoly g = M.inverse_parabolic_kl(y, x);
                for (const auto& t : g.terms())
                    check.expect(((t.exponent - W.length(x) + W.length(y)) & 1) == 0, [&] {
                        return "g^I(" + W.word_string(y) + ", " + W.word_string(x) + ") = " + g.to_string() +
                               " has a term of the wrong parity, " + subset_label(I);
                    });
            }
            for (const auto& [degree, terms] : f_shape(M, x).terms)
                for (const ShapeTerm& t : terms)
                    check.expect(((degree - W.length(x) + W.length(t.y)) & 1) == 0, [&] {
                        return "F^I(" + W.word_string(x) + ") has " + W.word_string(t.y) + " in degree " +
                               std::to_string(degree) + ", " + subset_label(I);
                    });
        }
    }
    return check.result;
}

// coeff(g^I(z,x), 1) = coeff(h^I(z,x), 1), and the degree-one layer of F_x^I
// is exactly {(z, 1, coeff(h^I(z,x), 1))}.
SuiteResult Verifier::degree_one_suite()
{
    Check check("degree-one");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        for (Element x : M.min_reps()) {
            std::vector<ShapeTerm> expected;
            for (Element z : M.min_reps()) {
                if (z == x)
                    continue;
                const Integer mu = M.parabolic_kl_basis(x).coeff(z).coeff(1);
                const Integer g1 = M.inverse_parabolic_kl(z, x).coeff(1);
                check.expect(mu == g1, [&] {
                    return "coefficient of v in g^I(" + W.word_string(z) + ", " + W.word_string(x) + ") is " +
                           g1.to_string() + " but in h^I it is " + mu.to_string() + ", " + subset_label(I);
                });
                if (!mu.is_zero())
                    expected.push_back({z, 1, mu});
            }
            const ComplexShape shape = f_shape(M, x);
            const auto it = shape.terms.find(1);
            const std::vector<ShapeTerm> actual = it == shape.terms.end() ? std::vector<ShapeTerm>{} : it->second;
            check.expect(actual == expected, [&] {
                return "degree-one layer of F^I(" + W.word_string(x) + ") differs from mu, " + subset_label(I);
            });
        }
    }
    return check.result;
}

// F-shape invariants and characters: degree 0 is (x, 0, 1), shift equals
// degree, lower terms sit strictly below x; ch F = H_x KL(w_I) and
// ch E = bar(H_x) KL(w_I).
SuiteResult Verifier::shape_suite()
{
    Check check("shape");
    const HeckeAlgebra& H = *algebra_;
    const CoxeterSystem& W = H.system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        for (Element x : M.min_reps()) {
            const std::string where = W.word_string(x) + ", " + subset_label(I);
            const ComplexShape f = f_shape(M, x);
            for (const auto& [degree, terms] : f.terms) {
                for (const ShapeTerm& t : terms) {
                    const bool ok = degree == 0 ? (t == ShapeTerm{x, 0, 1} && terms.size() == 1)
                                                : (t.shift == degree && t.mult.sign() > 0 && t.y != x &&
                                                   W.bruhat_leq(t.y, x));
                    check.expect(ok, [&] { return "malformed term in degree " + std::to_string(degree) +
                                                  " of F^I(" + where + ")"; });
                }
            }
            const ParabolicElt expected_f = M.extract(H.mult(H.standard(x), M.generator()));
            check.expect(shape_character(M, f) == expected_f && rouquier_character(M, x) == expected_f,
                         [&] { return "ch F^I(" + where + ") != H_x^I"; });
            const ParabolicElt expected_e = M.extract(H.mult(H.bar_standard(x), M.generator()));
            check.expect(shape_character(M, e_shape(M, x)) == expected_e,
                         [&] { return "ch E^I(" + where + ") != bar(H_x) KL(w_I)"; });
        }
    }
    return check.result;
}

SuiteResult Verifier::euler_suite()
{
    Check check("euler");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        std::vector<ComplexShape> fs, es;
        for (Element x : M.min_reps()) {
            fs.push_back(f_shape(M, x));
            es.push_back(e_shape(M, x));
        }
        const auto table = euler_hom_table(M, fs, es);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = 0; j < es.size(); ++j) {
                const LaurentPoly& e = table[i][j];
                check.expect(e == (i == j ? LaurentPoly(1) : LaurentPoly()), [&] {
                    return "euler_hom(F(" + W.word_string(fs[i].apex) + "), E(" + W.word_string(es[j].apex) +
                           ")) = " + e.to_string() + ", " + subset_label(I);
                });
            }
        }
    }
    return check.result;
}

SuiteResult Verifier::hom_vanishing_suite()
{
    Check check("hom-vanishing");
    const CoxeterSystem& W = algebra_->system();
    for (GeneratorSet I : subsets_) {
        const ParabolicModule& M = module(I);
        const auto ranks = delta_hom_ranks(M);
        const auto& reps = M.min_reps();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = 0; j < reps.size(); ++j) {
                const LaurentPoly& r = ranks[i][j];
                const bool ok = (r.is_zero() || *r.min_degree() >= 0) && r.coeff(0) == Integer(i == j ? 1 : 0);
                check.expect(ok, [&] {
                    return "grrk Hom(B(" + W.word_string(reps[i]) + "), B(" + W.word_string(reps[j]) + ")) = " +
                           r.to_string() + ", " + subset_label(I);
                });
            }
        }
    }
    return check.result;
}

// w >= v implies q(w) >= q(v).
SuiteResult Verifier::monotone_suite()
{
    Check check("monotone");
    const CoxeterSystem& W = algebra_->system();
    const auto elements = W.elements();
    for (GeneratorSet I : subsets_) {
        std::vector<Element> q;
        for (Element w : elements)
            q.push_back(W.project_q(w, I));
        for (Element v : elements)
            for (Element w : elements)
                if (W.bruhat_leq(v, w))
                    check.expect(W.bruhat_leq(q[v.index], q[w.index]), [&] {
                        return "q(" + W.word_string(v) + ") = " + W.word_string(q[v.index]) + " is not <= q(" +
                               W.word_string(w) + ") = " + W.word_string(q[w.index]) + ", " + subset_label(I);
                    });
    }
    return check.result;
}

// (H_x, H_y) = delta(x, y) by multiplying out a(H_x) H_y, and the table
// backed pairing agrees with the direct product on pairs of KL elements.
SuiteResult Verifier::pairing_suite()
{
    Check check("pairing");
    const HeckeAlgebra& H = *algebra_;
    const CoxeterSystem& W = H.system();
    const auto elements = W.elements();
    for (Element x : elements) {
        for (Element y : elements) {
            const LaurentPoly p = H.pairing_direct(H.standard(x), H.standard(y));
            check.expect(p == (x == y ? LaurentPoly(1) : LaurentPoly()), [&] {
                return "(H(" + W.word_string(x) + "), H(" + W.word_string(y) + ")) = " + p.to_string();
            });
        }
    }
    const std::size_t stride = elements.size() > 24 ? elements.size() / 24 : 1;
    for (std::size_t i = 0; i < elements.size(); i += stride) {
        for (std::size_t j = 0; j < elements.size(); j += stride) {
            const HeckeElt& a = H.kl_basis(elements[i]);
            const HeckeElt& b = H.kl_basis(elements[j]);
            check.expect(H.pairing(a, b) == H.pairing_direct(a, b), [&] {
                return "table and direct pairing differ on KL(" + W.word_string(elements[i]) + "), KL(" +
                       W.word_string(elements[j]) + ")";
            });
        }
    }
    return check.result;
}

// Bott-Samelson characters of random words decompose with coefficients in
// Z>=0[v, v^-1].
SuiteResult Verifier::bs_positivity_suite()
{
    Check check("bs-positivity");
    const CoxeterSystem& W = algebra_->system();
    std::mt19937_64 rng(options_.seed);
    std::uniform_int_distribution<int> letter(0, W.rank() - 1);
    std::uniform_int_distribution<std::size_t> length(0, options_.max_word_length);
    std::uniform_int_distribution<std::size_t> pick(0, subsets_.size() - 1);
    for (std::size_t n = 0; n < options_.random_words; ++n) {
        Word word(length(rng));
        for (Generator& s : word)
            s = letter(rng);
        const GeneratorSet I = subsets_[pick(rng)];
        const Character c = bott_samelson_char(module(I), word);
        bool ok = true;
        for (const auto& [y, m] : c.coeffs)
            ok = ok && m.is_nonneg();
        check.expect(ok, [&] {
            std::ostringstream os;
            os << "word";
            for (Generator s : word)
                os << " s" << s + 1;
            os << " with " << subset_label(I) << " has a negative coefficient";
            return os.str();
        });
    }
    return check.result;
}

} // namespace soergel
