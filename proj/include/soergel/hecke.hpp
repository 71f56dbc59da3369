#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

/// Sparse coefficient map keyed by group element, iterated in canonical order.
using CoeffMap = std::map<Element, LaurentPoly>;

/// map[w] += factor * v^shift * c, erasing the entry if it cancels.
void accumulate(CoeffMap& map, Element w, const LaurentPoly& c, const Integer& factor = 1, int shift = 0);

/// An element of the Hecke algebra in the standard basis: sum of c_w H_w.
class HeckeElt {
public:
    using Map = CoeffMap;

    HeckeElt() = default;
    /// c * H_w
    HeckeElt(Element w, LaurentPoly c);

    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    LaurentPoly coeff(Element w) const;

    /// terms[w] += c, pruning zeros.
    void add_term(Element w, const LaurentPoly& c, const Integer& factor = 1, int shift = 0);
    /// this += factor * v^shift * other
    void add_scaled(const HeckeElt& other, const Integer& factor = 1, int shift = 0);

    HeckeElt& operator+=(const HeckeElt& rhs);
    HeckeElt& operator-=(const HeckeElt& rhs);
    HeckeElt& operator*=(const LaurentPoly& scalar);
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const LaurentPoly& c, HeckeElt h) { return h *= c; }

    bool operator==(const HeckeElt&) const = default;

private:
    Map terms_;
};

/// The Hecke algebra of a finite Coxeter system over Z[v, v^-1], with
/// quadratic relation H_s^2 = 1 - (v - v^-1) H_s.
///
/// The Kazhdan-Lusztig basis, the bar images of the standard basis and the
/// trace form table are memoized per algebra. Each table is filled in one
/// go on first use, so concurrent queries are safe.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(std::shared_ptr<const CoxeterSystem> system);
    ~HeckeAlgebra();
    HeckeAlgebra(const HeckeAlgebra&) = delete;
    HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

    const CoxeterSystem& system() const noexcept { return *system_; }
    const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return system_; }

    HeckeElt standard(Element w) const { return HeckeElt(w, 1); }
    /// H_s + v
    HeckeElt kl_generator(Generator s) const;

    HeckeElt mult_gen_right(const HeckeElt& h, Generator s) const;
    HeckeElt mult_gen_left(Generator s, const HeckeElt& h) const;
    HeckeElt mult(const HeckeElt& lhs, const HeckeElt& rhs) const;

    HeckeElt bar(const HeckeElt& h) const;
    /// bar(H_w), memoized.
    const HeckeElt& bar_standard(Element w) const;

    const HeckeElt& kl_basis(Element x) const;
    /// h_{y,x}: coefficient of H_y in the KL basis element of x.
    LaurentPoly kl_poly(Element y, Element x) const;
    /// Coefficient of v in h_{y,x}.
    Integer mu(Element y, Element x) const;

    /// Anti-involution H_w -> H_{w^-1}, fixing v.
    HeckeElt a_inv(const HeckeElt& h) const;
    /// Coefficient of H_id.
    static LaurentPoly eps(const HeckeElt& h);
    /// (h, h') = eps(a(h) h'), expanded bilinearly over the memoized table
    /// eps(a(H_x) H_y).
    LaurentPoly pairing(const HeckeElt& lhs, const HeckeElt& rhs) const;
    /// Same value, computed by forming the product explicitly.
    LaurentPoly pairing_direct(const HeckeElt& lhs, const HeckeElt& rhs) const;

    /// Sum over W_I of v^(l(w_I) - l(x)) H_x; throws std::logic_error when it
    /// disagrees with the KL basis element of w_I.
    HeckeElt kl_ideal_generator(GeneratorSet subset) const;

    /// Test hook: adds delta to the cached h_{y,x}. Forces the KL table first.
    void inject_kl_fault(Element y, Element x, const LaurentPoly& delta);

private:
    void build_kl_table() const;
    void build_bar_table() const;
    void build_trace_table() const;
    /// Prefix tree of canonical reduced words: children[w] = {ws : word(ws) = word(w) s}.
    const std::vector<std::vector<std::pair<Element, Generator>>>& word_tree() const;

    std::shared_ptr<const CoxeterSystem> system_;
    mutable std::once_flag kl_once_, bar_once_, trace_once_, tree_once_;
    mutable std::vector<HeckeElt> kl_;
    mutable std::vector<HeckeElt> bar_;
    mutable std::vector<std::vector<std::pair<Element, LaurentPoly>>> trace_;
    mutable std::vector<std::vector<std::pair<Element, Generator>>> tree_;
};

} // namespace soergel
