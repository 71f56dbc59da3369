#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soergel/integer.hpp"

namespace soergel {

/// Exact Laurent polynomial in one variable v with integer coefficients.
///
/// Stored as exponent/coefficient pairs sorted by exponent with every zero
/// coefficient pruned, so two polynomials are equal iff their term lists are.
class LaurentPoly {
public:
    struct Term {
        int exponent;
        Integer coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;
    LaurentPoly(Integer constant); // NOLINT(implicit)
    LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {} // NOLINT(implicit)

    /// c * v^e
    static LaurentPoly monomial(Integer coeff, int exponent);
    /// v^e
    static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
    /// Builds from arbitrary (exponent, coefficient) pairs; repeated
    /// exponents are summed and zeros dropped.
    static LaurentPoly from_terms(std::vector<std::pair<int, Integer>> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coeff(int exponent) const;
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    bool is_nonneg() const;
    bool is_constant_nonneg_int() const;

    LaurentPoly bar() const;
    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    LaurentPoly& operator*=(const Integer& rhs);

    /// this += factor * v^shift * other, without temporaries.
    void add_scaled(const LaurentPoly& other, const Integer& factor = 1, int shift = 0);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly&) const = default;

    /// "c*v^e" terms in ascending exponent order joined by " + " / " - ";
    /// the zero polynomial renders as "0".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar(const LaurentPoly& a);

/// The q with q * b == a. Throws NotDivisible when b is zero or does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace soergel
