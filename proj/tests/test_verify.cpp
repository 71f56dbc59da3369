#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soergel/error.hpp"
#include "soergel/verify.hpp"

using namespace soergel;

namespace {

std::shared_ptr<HeckeAlgebra> algebra(const char* name)
{
    return std::make_shared<HeckeAlgebra>(
        std::make_shared<const CoxeterSystem>(CoxeterSystem::build(CoxeterMatrix::named(name))));
}

} // namespace

TEST_CASE("every suite passes on small types")
{
    for (const char* name : {"A1", "A2", "B2", "A1xA1", "I2(5)", "A3"}) {
        CAPTURE(name);
        Verifier verifier(algebra(name), VerifyOptions{.random_words = 40});
        for (const SuiteResult& r : verifier.run(Verifier::suite_names())) {
            CAPTURE(r.name);
            CAPTURE(r.counterexample.value_or(""));
            CHECK(r.passed());
            CHECK(r.checked > 0);
        }
    }
}

TEST_CASE("corrupting one cached KL polynomial breaks the inversion identity")
{
    const auto H = algebra("A3");
    Verifier verifier(H);
    REQUIRE(verifier.run("inversion").passed());
    const CoxeterSystem& W = H->system();
    H->inject_kl_fault(W.parse_word("s3"), W.parse_word("s2.s3"), LaurentPoly::v(3));
    const SuiteResult r = verifier.run("inversion");
    CHECK_FALSE(r.passed());
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->find("sum_y") != std::string::npos);
    CHECK_FALSE(verifier.run("bar").passed());
}

TEST_CASE("unknown suite")
{
    Verifier verifier(algebra("A1"));
    CHECK_THROWS_AS(verifier.run("nonsense"), InvalidInput);
}
