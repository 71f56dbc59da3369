#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "soergel/hecke.hpp"

namespace soergel {

/// An element of the left ideal H^I = H * KL(w_I) written in the basis
/// H_x^I = H_x * KL(w_I), x minimal in its coset x W_I.
struct ParabolicElt {
    GeneratorSet subset;
    CoeffMap coeffs;

    LaurentPoly coeff(Element x) const;
    bool operator==(const ParabolicElt&) const = default;
};

/// H^I for one finitary subset I of a fixed Hecke algebra.
///
/// The parabolic KL basis and the inverse parabolic KL table are memoized;
/// each is filled completely on first use.
class ParabolicModule {
public:
    ParabolicModule(std::shared_ptr<const HeckeAlgebra> algebra, GeneratorSet subset);
    ~ParabolicModule();
    ParabolicModule(const ParabolicModule&) = delete;
    ParabolicModule& operator=(const ParabolicModule&) = delete;

    const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
    const CoxeterSystem& system() const noexcept { return algebra_->system(); }
    GeneratorSet subset() const noexcept { return subset_; }
    /// W^I in canonical order.
    const std::vector<Element>& min_reps() const noexcept { return reps_; }
    /// w_I
    Element longest() const noexcept { return longest_; }
    /// Throws InvalidInput unless x is a minimal coset representative.
    std::size_t position(Element x) const;

    /// KL(w_I) in the standard basis of H.
    const HeckeElt& generator() const noexcept { return generator_; }

    /// H_x^I
    ParabolicElt standard(Element x) const;
    /// Expands into the standard basis of H.
    HeckeElt embed(const ParabolicElt& p) const;
    /// The unique p with embed(p) == h; throws NotInIdeal otherwise.
    ParabolicElt extract(const HeckeElt& h) const;

    /// KL(x w_I) read back in the basis {H_y^I}.
    const ParabolicElt& parabolic_kl_basis(Element x) const;
    /// h^I_{y,x}. Also evaluates h_{y w_I, x w_I} and throws std::logic_error
    /// if the two disagree.
    LaurentPoly parabolic_kl_poly(Element y, Element x) const;
    /// g^I_{x,z}, the solution of sum_y (-1)^(l(y)-l(x)) g^I_{x,y} h^I_{y,z} = delta_{x,z}.
    LaurentPoly inverse_parabolic_kl(Element x, Element z) const;

private:
    void build_kl() const;
    void build_inverse() const;

    std::shared_ptr<const HeckeAlgebra> algebra_;
    GeneratorSet subset_;
    Element longest_;
    int longest_length_;
    std::vector<Element> reps_;
    std::vector<std::size_t> position_; // indexed by element, npos outside W^I
    std::vector<Element> subgroup_;     // W_I
    HeckeElt generator_;

    mutable std::once_flag kl_once_, inverse_once_;
    mutable std::vector<ParabolicElt> kl_;            // by position
    mutable std::vector<std::vector<LaurentPoly>> g_; // g_[x][z] by position
};

} // namespace soergel
