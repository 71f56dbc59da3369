#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "soergel/error.hpp"

using namespace soergel;

namespace {
CoxeterSystem named(const char* name)
{
    return CoxeterSystem::build(CoxeterMatrix::named(name));
}
} // namespace

TEST_CASE("group orders")
{
    const std::vector<std::pair<const char*, std::size_t>> orders = {
        {"A1", 2},  {"A2", 6},  {"A3", 24},   {"A4", 120},  {"B2", 8},      {"B3", 48},  {"B4", 384},
        {"D4", 192}, {"F4", 1152}, {"G2", 12}, {"I2(5)", 10}, {"I2(8)", 16}, {"A1xA1", 4}, {"A2xB2", 48},
        {"E6", 51840}};
    for (const auto& [name, order] : orders) {
        CAPTURE(name);
        if (order > CoxeterSystem::default_cap)
            CHECK(CoxeterSystem::build(CoxeterMatrix::named(name), 60000).size() == order);
        else
            CHECK(named(name).size() == order);
    }
}

TEST_CASE("Poincare polynomial factors through the degrees")
{
    const CoxeterSystem W = named("B3");
    LaurentPoly expected = 1;
    for (int d : {2, 4, 6}) {
        LaurentPoly q;
        for (int i = 0; i < d; ++i)
            q += LaurentPoly::v(2 * i);
        expected *= q;
    }
    CHECK(W.poincare(W.all_generators()) == expected);
    CHECK(W.poincare(GeneratorSet{}) == LaurentPoly(1));
}

TEST_CASE("canonical words and lengths")
{
    const CoxeterSystem W = named("A3");
    const auto elements = W.elements();
    for (std::size_t i = 1; i < elements.size(); ++i) {
        const Word& a = W.reduced_word(elements[i - 1]);
        const Word& b = W.reduced_word(elements[i]);
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
    CHECK(W.length(W.longest()) == 6);
    CHECK(W.word_string(Element::identity()) == "e");
    for (Element w : elements) {
        CHECK(W.evaluate(W.reduced_word(w)) == w);
        CHECK(W.parse_word(W.word_string(w)) == w);
        CHECK(W.multiply(w, W.inverse(w)) == Element::identity());
        CHECK(W.length(W.inverse(w)) == W.length(w));
    }
}

TEST_CASE("Bruhat order matches the subword oracle")
{
    for (const char* name : {"A3", "B3", "I2(7)", "A1xA1", "A2xB2"}) {
        CAPTURE(name);
        const CoxeterSystem W = named(name);
        for (Element y : W.elements()) {
            const auto ideal = oracle::bruhat_ideal_by_subwords(W, y);
            for (Element x : W.elements())
                CHECK(W.bruhat_leq(x, y) == (ideal.count(x) == 1));
        }
    }
}

TEST_CASE("dihedral Bruhat order is by length")
{
    const CoxeterSystem W = named("I2(6)");
    for (Element x : W.elements())
        for (Element y : W.elements())
            CHECK(W.bruhat_leq(x, y) == (x == y || W.length(x) < W.length(y)));
}

TEST_CASE("cosets")
{
    const CoxeterSystem W = named("A3");
    const GeneratorSet I{0, 1};
    CHECK(W.parabolic_subgroup(I).size() == 6);
    CHECK(W.word_string(W.longest_in(I)) == "s1.s2.s1");
    const auto reps = W.min_reps(I);
    std::vector<std::string> words;
    for (Element y : reps)
        words.push_back(W.word_string(y));
    CHECK(words == std::vector<std::string>{"e", "s3", "s2.s3", "s1.s2.s3"});
    for (Element w : W.elements()) {
        const auto [y, u] = W.coset_decompose(w, I);
        CHECK(W.is_min_coset_rep(y, I));
        CHECK(W.multiply(y, u) == w);
        CHECK(W.length(w) == W.length(y) + W.length(u));
        CHECK(W.project_q(w, I) == y);
    }
    CHECK(W.project_q(Element::identity(), I) == Element::identity());
    CHECK(W.finitary_subsets().size() == 8);
    CHECK(W.poincare(I) == LaurentPoly::from_terms({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK(W.poincare(GeneratorSet{2}) == 1 + LaurentPoly::v(2));
    const auto [top, wI] = W.coset_decompose(W.longest(), I);
    CHECK(top == reps.back());
    CHECK(wI == W.longest_in(I));
    CHECK(W.length(top) + W.length(wI) == W.length(W.longest()));
}

TEST_CASE("q is monotone")
{
    const CoxeterSystem W = named("B3");
    for (GeneratorSet I : W.finitary_subsets())
        for (Element v : W.elements())
            for (Element w : W.elements())
                if (W.bruhat_leq(v, w))
                    CHECK(W.bruhat_leq(W.project_q(v, I), W.project_q(w, I)));
}

TEST_CASE("input errors")
{
    CHECK_THROWS_AS(CoxeterMatrix::named("Q3"), InvalidInput);
    CHECK_THROWS_AS(CoxeterMatrix::named("A0"), InvalidInput);
    CHECK_THROWS_AS(CoxeterMatrix(2, {1, 3, 2, 1}), InvalidInput);
    CHECK_THROWS_AS(CoxeterMatrix(2, {1, 1, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(named("H3"), UnsupportedBond);
    CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix::named("A9"), 1000), GroupTooLarge);
    CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix(3, {1, 3, 3, 3, 1, 3, 3, 3, 1})), GroupTooLarge);
    CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix(3, {1, 4, 2, 4, 1, 4, 2, 4, 1})), GroupTooLarge);
    const CoxeterSystem W = named("A2");
    CHECK_THROWS_AS(W.parse_word("s3"), InvalidInput);
    CHECK_THROWS_AS(W.parse_subset("t1"), InvalidInput);
}

TEST_CASE("matrix file format")
{
    std::istringstream in("3\n3 2\n4\n");
    const CoxeterMatrix m = CoxeterMatrix::parse(in);
    CHECK(m == CoxeterMatrix::named("B3"));
    std::istringstream bad("3\n3 2\n");
    CHECK_THROWS_AS(CoxeterMatrix::parse(bad), InvalidInput);
}
