/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_BIGNAT_HH
#define POLYCHI_GUARD_BIGNAT_HH 1

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace polychi
{
    /// Arbitrary-precision nonnegative integer. Subtraction below zero throws
    /// std::domain_error; results larger than max_bits throw std::overflow_error
    /// instead of exhausting memory.
    class BigNat
    {
        public:
            static constexpr std::uint64_t max_bits = std::uint64_t{1} << 31;

            BigNat() = default;
            BigNat(std::uint64_t value);  // NOLINT: implicit by design of the formulas

            static auto from_decimal(std::string_view text) -> BigNat;
            static auto factorial(std::uint64_t n) -> BigNat;

            auto operator+= (const BigNat & other) -> BigNat &;
            auto operator-= (const BigNat & other) -> BigNat &;
            auto operator*= (const BigNat & other) -> BigNat &;

            friend auto operator+ (BigNat a, const BigNat & b) -> BigNat { return a += b; }
            friend auto operator- (BigNat a, const BigNat & b) -> BigNat { return a -= b; }
            friend auto operator* (BigNat a, const BigNat & b) -> BigNat { return a *= b; }

            friend auto operator== (const BigNat & a, const BigNat & b) -> bool { return cmp(a._value, b._value) == 0; }
            friend auto operator<=> (const BigNat & a, const BigNat & b) -> std::strong_ordering
            {
                int c = cmp(a._value, b._value);
                return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
            }

            auto pow(const BigNat & exponent) const -> BigNat;
            auto pow(std::uint64_t exponent) const -> BigNat;

            auto is_zero() const -> bool { return sgn(_value) == 0; }
            auto bit_length() const -> std::uint64_t;
            auto fits_u64() const -> bool;
            /// Throws std::overflow_error when the value does not fit.
            auto to_u64() const -> std::uint64_t;

            auto to_decimal() const -> std::string;
            /// Number of decimal digits (1 for zero).
            auto digit_count() const -> std::uint64_t;

            /// Exact decimal when it has at most max_digits digits, otherwise
            /// "d1.d2d3...e+N" with the leading digits kept.
            auto to_scientific(std::size_t max_digits) const -> std::string;

        private:
            mpz_class _value;
    };
}

#endif
