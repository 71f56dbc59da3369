#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "soergel/hecke.hpp"

using namespace soergel;

namespace {

std::shared_ptr<const HeckeAlgebra> algebra(const char* name)
{
    return std::make_shared<const HeckeAlgebra>(
        std::make_shared<const CoxeterSystem>(CoxeterSystem::build(CoxeterMatrix::named(name))));
}

HeckeElt from_dense(const oracle::Dense& d)
{
    HeckeElt h;
    for (std::size_t i = 0; i < d.size(); ++i)
        h.add_term(Element{static_cast<std::uint32_t>(i)}, d[i]);
    return h;
}

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vinv = LaurentPoly::v(-1);

} // namespace

TEST_CASE("quadratic and braid relations")
{
    const auto H = algebra("B2");
    const CoxeterSystem& W = H->system();
    const Element s = W.parse_word("s1"), t = W.parse_word("s2");
    HeckeElt square = H->mult(H->standard(s), H->standard(s));
    HeckeElt expected = H->standard(Element::identity());
    expected.add_term(s, vinv - v);
    CHECK(square == expected);
    const HeckeElt Hs = H->standard(s), Ht = H->standard(t);
    CHECK(H->mult(H->mult(H->mult(Hs, Ht), Hs), Ht) == H->mult(H->mult(H->mult(Ht, Hs), Ht), Hs));
    CHECK(H->mult(H->mult(Hs, Ht), Hs) == H->standard(W.parse_word("s1.s2.s1")));
}

TEST_CASE("multiplication is associative")
{
    const auto H = algebra("A3");
    const CoxeterSystem& W = H->system();
    const HeckeElt a = H->kl_basis(W.parse_word("s1.s3")) + H->standard(W.parse_word("s2"));
    const HeckeElt b = v * H->kl_basis(W.parse_word("s2.s1"));
    const HeckeElt c = H->bar_standard(W.parse_word("s3.s2.s1"));
    CHECK(H->mult(H->mult(a, b), c) == H->mult(a, H->mult(b, c)));
    CHECK(H->mult_gen_left(1, b) == H->mult(H->standard(W.parse_word("s2")), b));
    CHECK(H->mult_gen_right(b, 2) == H->mult(b, H->standard(W.parse_word("s3"))));
}

TEST_CASE("bar is a ring involution inverting H_s")
{
    const auto H = algebra("A3");
    const CoxeterSystem& W = H->system();
    for (Element w : W.elements()) {
        CHECK(H->bar(H->bar_standard(w)) == H->standard(w));
        CHECK(H->bar_standard(w) == from_dense(oracle::bar_standard(W, w)));
        // bar(H_w) H_{w^-1}^... : bar(H_w) = H_{w^-1}^{-1}
        CHECK(H->mult(H->bar_standard(w), H->standard(W.inverse(w))) == H->standard(Element::identity()));
    }
    const HeckeElt a = H->kl_basis(W.parse_word("s2.s1")) + v * H->standard(W.parse_word("s3"));
    const HeckeElt b = H->standard(W.parse_word("s1.s2.s3"));
    CHECK(H->bar(H->mult(a, b)) == H->mult(H->bar(a), H->bar(b)));
}

TEST_CASE("KL basis agrees with the bar-solve oracle")
{
    for (const char* name : {"A2", "A3", "I2(5)", "B3"}) {
        CAPTURE(name);
        const auto H = algebra(name);
        const CoxeterSystem& W = H->system();
        const auto table = oracle::kl_table_by_bar_solve(W);
        for (Element x : W.elements())
            CHECK(H->kl_basis(x) == from_dense(table[x.index]));
    }
}

TEST_CASE("dihedral KL polynomials are monomials")
{
    for (const char* name : {"I2(5)", "I2(8)", "G2"}) {
        const auto H = algebra(name);
        const CoxeterSystem& W = H->system();
        for (Element x : W.elements())
            for (Element y : W.elements())
                CHECK(H->kl_poly(y, x) ==
                      (W.bruhat_leq(y, x) ? LaurentPoly::v(W.length(x) - W.length(y)) : LaurentPoly{}));
    }
}

TEST_CASE("KL basis of a simple reflection and the longest element")
{
    const auto H = algebra("A2");
    const CoxeterSystem& W = H->system();
    const Element s = W.parse_word("s1");
    CHECK(H->kl_basis(s) == H->kl_generator(0));
    CHECK(H->kl_poly(Element::identity(), s) == v);
    HeckeElt top;
    for (Element x : W.elements())
        top.add_term(x, LaurentPoly::v(3 - W.length(x)));
    CHECK(H->kl_basis(W.longest()) == top);
    CHECK(H->mu(Element::identity(), s) == Integer(1));
}

TEST_CASE("A3 has the singular KL polynomial 1 + v^2")
{
    const auto H = algebra("A3");
    const CoxeterSystem& W = H->system();
    CHECK(H->kl_poly(W.parse_word("s2"), W.parse_word("s2.s1.s3.s2")) == v + LaurentPoly::v(3));
}

TEST_CASE("pairing")
{
    const auto H = algebra("A3");
    const CoxeterSystem& W = H->system();
    for (Element x : W.elements())
        for (Element y : W.elements())
            CHECK(H->pairing_direct(H->standard(x), H->standard(y)) ==
                  (x == y ? LaurentPoly(1) : LaurentPoly{}));
    const Element s = W.parse_word("s1");
    CHECK(H->pairing(H->kl_basis(s), H->kl_basis(s)) == 1 + LaurentPoly::v(2));
    for (Element x : W.elements())
        for (Element y : {Element::identity(), s, W.parse_word("s2.s1.s3"), W.longest()})
            CHECK(H->pairing(H->kl_basis(x), H->kl_basis(y)) == H->pairing_direct(H->kl_basis(x), H->kl_basis(y)));
    const HeckeElt h = v * H->standard(s) + H->standard(W.longest());
    CHECK(H->pairing(h, h) == LaurentPoly::v(2) + 1);
}

TEST_CASE("parabolic KL generator")
{
    const auto H = algebra("B3");
    const CoxeterSystem& W = H->system();
    for (GeneratorSet I : W.finitary_subsets()) {
        const HeckeElt g = H->kl_ideal_generator(I);
        CHECK(g == H->kl_basis(W.longest_in(I)));
        // KL(w_I)^2 = v^-l(w_I) pi(I) KL(w_I)
        CHECK(H->mult(g, g) == W.poincare(I).shifted(-W.length(W.longest_in(I))) * g);
    }
}
