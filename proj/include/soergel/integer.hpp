#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace soergel {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in an int64_t never touch the heap; arithmetic that
/// overflows promotes to GMP and results that fit again are demoted, so the
/// representation is canonical and equality is a cheap comparison.
class Integer {
public:
    Integer() noexcept = default;
    Integer(std::int64_t value) noexcept : small_(value) {} // NOLINT(implicit)
    Integer(int value) noexcept : small_(value) {}          // NOLINT(implicit)
    explicit Integer(const mpz_class& value);

    /// Parses an optionally signed base-10 literal.
    static Integer from_string(const std::string& text);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_small() const noexcept { return !big_; }
    int sign() const noexcept;

    /// The value as int64_t when it fits.
    std::optional<std::int64_t> to_int64() const noexcept;
    mpz_class to_mpz() const;
    std::string to_string() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    Integer operator-() const;

    /// Truncating division; the caller checks divisibility with `divides`.
    static Integer quotient(const Integer& num, const Integer& den);
    static bool divides(const Integer& den, const Integer& num);

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

private:
    void normalize();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& value);

} // namespace soergel
