/* vim: set sw=4 sts=4 et : */

#include <polychi/bignat.hh>

#include <stdexcept>

namespace polychi
{
    namespace
    {
        auto from_u64(std::uint64_t v) -> mpz_class
        {
            mpz_class result;
            mpz_import(result.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
            return result;
        }
    }

    BigNat::BigNat(std::uint64_t value) :
        _value(from_u64(value))
    {
    }

    auto BigNat::from_decimal(std::string_view text) -> BigNat
    {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("not a nonnegative decimal integer: '" + std::string(text) + "'");
        BigNat result;
        result._value.set_str(std::string(text), 10);
        return result;
    }

    auto BigNat::factorial(std::uint64_t n) -> BigNat
    {
        if (n > 100'000'000)
            throw std::overflow_error("factorial argument too large");
        BigNat result;
        mpz_fac_ui(result._value.get_mpz_t(), static_cast<unsigned long>(n));
        return result;
    }

    auto BigNat::operator+= (const BigNat & other) -> BigNat &
    {
        _value += other._value;
        return *this;
    }

    auto BigNat::operator-= (const BigNat & other) -> BigNat &
    {
        if (cmp(_value, other._value) < 0)
            throw std::domain_error("BigNat subtraction would go negative");
        _value -= other._value;
        return *this;
    }

    auto BigNat::operator*= (const BigNat & other) -> BigNat &
    {
        if (bit_length() + other.bit_length() > max_bits)
            throw std::overflow_error("BigNat product exceeds size limit");
        _value *= other._value;
        return *this;
    }

    auto BigNat::pow(std::uint64_t exponent) const -> BigNat
    {
        BigNat result;
        if (exponent == 0) {
            result._value = 1;
            return result;
        }
        if (sgn(_value) == 0 || cmp(_value, 1) == 0) {
            result._value = _value;
            return result;
        }
        // bit_length() - 1 <= log2(base), so this underestimates only slightly
        auto bits = bit_length();
        if (exponent > max_bits || (bits - 1) * exponent > max_bits)
            throw std::overflow_error("BigNat power exceeds size limit");
        mpz_pow_ui(result._value.get_mpz_t(), _value.get_mpz_t(), static_cast<unsigned long>(exponent));
        return result;
    }

    auto BigNat::pow(const BigNat & exponent) const -> BigNat
    {
        if (sgn(_value) == 0 || cmp(_value, 1) == 0)
            return exponent.is_zero() ? BigNat(1) : *this;
        if (! exponent.fits_u64())
            throw std::overflow_error("BigNat power exceeds size limit");
        return pow(exponent.to_u64());
    }

    auto BigNat::bit_length() const -> std::uint64_t
    {
        if (sgn(_value) == 0)
            return 0;
        return mpz_sizeinbase(_value.get_mpz_t(), 2);
    }

    auto BigNat::fits_u64() const -> bool
    {
        return bit_length() <= 64;
    }

    auto BigNat::to_u64() const -> std::uint64_t
    {
        if (! fits_u64())
            throw std::overflow_error("BigNat does not fit in 64 bits");
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, _value.get_mpz_t());
        return out;
    }

    auto BigNat::to_decimal() const -> std::string
    {
        return _value.get_str(10);
    }

    auto BigNat::digit_count() const -> std::uint64_t
    {
        return to_decimal().size();
    }

    auto BigNat::to_scientific(std::size_t max_digits) const -> std::string
    {
        auto text = to_decimal();
        if (text.size() <= max_digits)
            return text;
        std::size_t keep = max_digits < 2 ? 2 : max_digits;
        std::string out = text.substr(0, 1) + "." + text.substr(1, keep - 1);
        return out + "e+" + std::to_string(text.size() - 1);
    }
}
