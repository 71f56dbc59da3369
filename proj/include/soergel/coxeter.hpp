#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soergel/laurent.hpp"

namespace soergel {

/// A simple reflection, 0-based; rendered as s1..sn.
using Generator = int;

enum class Side { Left, Right };

/// A subset of the simple reflections (rank <= 64).
class GeneratorSet {
public:
    constexpr GeneratorSet() noexcept = default;
    constexpr explicit GeneratorSet(std::uint64_t bits) noexcept : bits_(bits) {}
    GeneratorSet(std::initializer_list<Generator> gens) noexcept;

    bool contains(Generator s) const noexcept { return (bits_ >> s) & 1U; }
    void insert(Generator s) noexcept { bits_ |= std::uint64_t{1} << s; }
    bool empty() const noexcept { return bits_ == 0; }
    int size() const noexcept { return __builtin_popcountll(bits_); }
    std::uint64_t bits() const noexcept { return bits_; }
    /// Members in increasing order.
    std::vector<Generator> members() const;

    /// Comma-separated labels ("s1,s3"); empty set renders as "".
    std::string to_string() const;

    auto operator<=>(const GeneratorSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// An element of an enumerated Coxeter group: its position in the canonical
/// enumeration (length, then lexicographically smallest reduced word).
struct Element {
    std::uint32_t index = 0;

    static constexpr Element identity() noexcept { return Element{0}; }
    auto operator<=>(const Element&) const = default;
};

using Word = std::vector<Generator>;

/// Symmetric matrix of bond labels with ones on the diagonal.
class CoxeterMatrix {
public:
    /// Validates symmetry, unit diagonal and off-diagonal labels >= 2.
    CoxeterMatrix(int rank, std::vector<int> entries);

    /// "A3", "B3", "D4", "E6", "F4", "G2", "H3", "I2(7)" and products such
    /// as "A1xA1" or "B2xI2(5)". Generators follow Bourbaki numbering within
    /// each factor and are numbered consecutively across factors.
    static CoxeterMatrix named(std::string_view name);

    /// Rank followed by the strictly upper triangular labels m_12 m_13 ...
    /// m_1n m_23 ... m_(n-1)n as whitespace-separated integers.
    static CoxeterMatrix parse(std::istream& in);

    int rank() const noexcept { return rank_; }
    int operator()(Generator s, Generator t) const { return entries_[static_cast<std::size_t>(s * rank_ + t)]; }

    bool operator==(const CoxeterMatrix&) const = default;

private:
    int rank_;
    std::vector<int> entries_;
};

/// A finite Coxeter group, fully enumerated.
///
/// Construction is the only mutating phase; afterwards every query is a pure
/// function of its arguments and may be issued concurrently. The Bruhat
/// order is memoized row by row under an internal lock.
class CoxeterSystem {
public:
    static constexpr std::size_t default_cap = 50'000;

    static CoxeterSystem build(const CoxeterMatrix& matrix, std::size_t cap = default_cap);

    CoxeterSystem(CoxeterSystem&&) noexcept;
    CoxeterSystem& operator=(CoxeterSystem&&) noexcept;
    ~CoxeterSystem();

    const CoxeterMatrix& matrix() const noexcept { return matrix_; }
    int rank() const noexcept { return matrix_.rank(); }
    std::size_t size() const noexcept { return length_.size(); }
    GeneratorSet all_generators() const noexcept;

    /// All elements in canonical order.
    std::vector<Element> elements() const;
    Element longest() const noexcept { return longest_; }

    int length(Element w) const { return length_[w.index]; }
    /// Lexicographically smallest reduced word.
    const Word& reduced_word(Element w) const { return words_[w.index]; }
    Element mult_gen(Element w, Generator s, Side side) const;
    Element inverse(Element w) const { return inverse_[w.index]; }
    Element multiply(Element x, Element y) const;
    /// Product of an arbitrary (not necessarily reduced) word.
    Element evaluate(const Word& word) const;
    bool is_descent(Element w, Generator s, Side side) const;
    GeneratorSet descents(Element w, Side side) const;

    /// Bruhat order by the descent recursion, memoized.
    bool bruhat_leq(Element x, Element y) const;

    bool is_finitary(GeneratorSet subset) const;
    /// Elements of the parabolic subgroup W_I in canonical order.
    std::vector<Element> parabolic_subgroup(GeneratorSet subset) const;
    Element longest_in(GeneratorSet subset) const;
    /// Sum over W_I of v^(2 l(w)).
    LaurentPoly poincare(GeneratorSet subset) const;
    /// Every finitary subset of S (all of them, W being finite), ordered by bit pattern.
    std::vector<GeneratorSet> finitary_subsets() const;

    bool is_min_coset_rep(Element w, GeneratorSet subset) const;
    /// (y, u) with w = y u, y minimal in w W_I, u in W_I, l(w) = l(y) + l(u).
    std::pair<Element, Element> coset_decompose(Element w, GeneratorSet subset) const;
    Element project_q(Element w, GeneratorSet subset) const { return coset_decompose(w, subset).first; }
    std::vector<Element> min_reps(GeneratorSet subset) const;

    /// "s1.s2.s3"; the identity is "e".
    std::string word_string(Element w) const;
    /// Inverse of word_string; also accepts non-reduced words.
    Element parse_word(std::string_view text) const;
    /// "s1,s2" -> {0, 1}.
    GeneratorSet parse_subset(std::string_view text) const;

private:
    CoxeterSystem(CoxeterMatrix matrix);
    struct BruhatMemo;
    const std::vector<std::uint64_t>& bruhat_row(Element y) const;

    CoxeterMatrix matrix_;
    std::vector<int> length_;
    std::vector<Word> words_;
    std::vector<Element> right_; // size * rank
    std::vector<Element> left_;
    std::vector<Element> inverse_;
    Element longest_;
    std::unique_ptr<BruhatMemo> bruhat_;
};

} // namespace soergel
