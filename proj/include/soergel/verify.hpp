#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soergel/parabolic.hpp"

namespace soergel {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::optional<std::string> counterexample; // the first failure

    bool passed() const noexcept { return failed == 0; }
};

struct VerifyOptions {
    std::size_t random_words = 200;
    std::size_t max_word_length = 8;
    std::uint64_t seed = 20240229;
};

/// Runs the invariant suites over one Hecke algebra and every finitary
/// subset of its generators. Parabolic modules are built once and reused
/// across suites.
class Verifier {
public:
    explicit Verifier(std::shared_ptr<const HeckeAlgebra> algebra, VerifyOptions options = {});
    ~Verifier();

    static const std::vector<std::string>& suite_names();

    /// Throws InvalidInput for an unknown suite name.
    SuiteResult run(const std::string& suite);
    std::vector<SuiteResult> run(const std::vector<std::string>& suites);

    const ParabolicModule& module(GeneratorSet subset);
    const std::vector<GeneratorSet>& subsets() const noexcept { return subsets_; }

private:
    struct Check;

    SuiteResult bar_suite();
    SuiteResult parabolic_suite();
    SuiteResult inversion_suite();
    SuiteResult positivity_suite();
    SuiteResult parity_suite();
    SuiteResult degree_one_suite();
    SuiteResult shape_suite();
    SuiteResult euler_suite();
    SuiteResult hom_vanishing_suite();
    SuiteResult monotone_suite();
    SuiteResult pairing_suite();
    SuiteResult bs_positivity_suite();

    std::shared_ptr<const HeckeAlgebra> algebra_;
    VerifyOptions options_;
    std::vector<GeneratorSet> subsets_;
    std::map<GeneratorSet, std::unique_ptr<ParabolicModule>> modules_;
};

} // namespace soergel
