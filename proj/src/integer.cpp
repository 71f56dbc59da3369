#include "soergel/integer.hpp"

#include <limits>
#include <ostream>

#include "soergel/error.hpp"

namespace soergel {

namespace {

mpz_class mpz_from_int64(std::int64_t value)
{
    // mpz_class has no portable int64_t constructor; go through the two halves.
    const bool negative = value < 0;
    std::uint64_t magnitude = negative ? (~static_cast<std::uint64_t>(value) + 1)
                                       : static_cast<std::uint64_t>(value);
    mpz_class result(static_cast<unsigned long>(magnitude >> 32));
    result <<= 32;
    result += static_cast<unsigned long>(magnitude & 0xffffffffULL);
    if (negative)
        result = -result;
    return result;
}

} // namespace

Integer::Integer(const mpz_class& value) : big_(std::make_unique<mpz_class>(value))
{
    normalize();
}

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr)
{
}

Integer& Integer::operator=(const Integer& other)
{
    if (this != &other) {
        small_ = other.small_;
        big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
}

Integer Integer::from_string(const std::string& text)
{
    mpz_class value;
    if (text.empty() || value.set_str(text, 10) != 0)
        throw InvalidInput("not an integer literal: '" + text + "'");
    return Integer(value);
}

void Integer::normalize()
{
    if (!big_)
        return;
    const mpz_class& v = *big_;
    static const mpz_class lo = mpz_from_int64(std::numeric_limits<std::int64_t>::min());
    static const mpz_class hi = mpz_from_int64(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) {
        // Reassemble from the magnitude to stay independent of sizeof(long).
        mpz_class mag = abs(v);
        mpz_class high = mag >> 32;
        mpz_class low = mag - (high << 32);
        std::uint64_t m = (static_cast<std::uint64_t>(high.get_ui()) << 32) | low.get_ui();
        small_ = v < 0 ? static_cast<std::int64_t>(~m + 1) : static_cast<std::int64_t>(m);
        big_.reset();
    }
}

int Integer::sign() const noexcept
{
    if (big_)
        return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

std::optional<std::int64_t> Integer::to_int64() const noexcept
{
    if (big_)
        return std::nullopt;
    return small_;
}

mpz_class Integer::to_mpz() const
{
    return big_ ? *big_ : mpz_from_int64(small_);
}

std::string Integer::to_string() const
{
    return big_ ? big_->get_str() : std::to_string(small_);
}

Integer& Integer::operator+=(const Integer& rhs)
{
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() + rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs)
{
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() - rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs)
{
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() * rhs.to_mpz());
    normalize();
    return *this;
}

Integer Integer::operator-() const
{
    Integer zero;
    zero -= *this;
    return zero;
}

Integer Integer::quotient(const Integer& num, const Integer& den)
{
    if (den.is_zero())
        throw NotDivisible("division by zero");
    if (num.is_small() && den.is_small() &&
        !(num.small_ == std::numeric_limits<std::int64_t>::min() && den.small_ == -1))
        return Integer(num.small_ / den.small_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), num.to_mpz().get_mpz_t(), den.to_mpz().get_mpz_t());
    return Integer(q);
}

bool Integer::divides(const Integer& den, const Integer& num)
{
    if (den.is_zero())
        return num.is_zero();
    if (num.is_small() && den.is_small() && den.small_ != -1)
        return num.small_ % den.small_ == 0;
    return mpz_divisible_p(num.to_mpz().get_mpz_t(), den.to_mpz().get_mpz_t()) != 0;
}

bool operator==(const Integer& a, const Integer& b) noexcept
{
    if (!a.big_ && !b.big_)
        return a.small_ == b.small_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false; // canonical form: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b)
{
    if (!a.big_ && !b.big_)
        return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& value)
{
    return os << value.to_string();
}

} // namespace soergel
