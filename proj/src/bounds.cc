/* vim: set sw=4 sts=4 et : */

#include <polychi/bounds.hh>
#include <polychi/patterns.hh>

#include <stdexcept>

namespace polychi
{
    namespace
    {
        auto require_positive(const BigNat & v, const char * what) -> void
        {
            if (v.is_zero())
                throw std::invalid_argument(std::string(what) + " must be >= 1");
        }

        auto require_positive(std::uint64_t v, const char * what) -> void
        {
            if (v == 0)
                throw std::invalid_argument(std::string(what) + " must be >= 1");
        }

        // t(2t + 9)
        auto biclique_slack(const BigNat & t) -> BigNat
        {
            return t * (BigNat(2) * t + BigNat(9));
        }

        auto base_case(const BigNat & t) -> BigNat
        {
            return t - BigNat(1);
        }
    }

    auto identity_f0() -> F0
    {
        return [] (const BigNat & x) { return x; };
    }

    auto geometric_sum(const BigNat & t, std::uint64_t terms) -> BigNat
    {
        BigNat sum, power(1);
        for (std::uint64_t i = 0 ; i < terms ; ++i) {
            sum += power;
            if (i + 1 < terms)
                power *= t;
        }
        return sum;
    }

    auto lemma1_rhs(std::uint64_t p, const BigNat & q, const BigNat & s, const BigNat & t) -> BigNat
    {
        require_positive(p, "p");
        require_positive(q, "q");
        require_positive(s, "s");
        require_positive(t, "t");
        return geometric_sum(t, p) * (s + biclique_slack(t)) + t.pow(p) * q;
    }

    auto thm8_f(std::uint64_t d, std::uint64_t p, const BigNat & t) -> BigNat
    {
        require_positive(d, "d");
        require_positive(t, "t");
        if (p < 4)
            throw std::invalid_argument("p must be >= 4");

        BigNat g = base_case(t);
        for (std::uint64_t level = 2 ; level <= d ; ++level)
            g = geometric_sum(t, p + 1) * (g + BigNat(1) + biclique_slack(t))
                + t.pow(p + 1) * (BigNat(level) * t + BigNat(2));
        return g;
    }

    auto thm10_f(std::uint64_t d, std::uint64_t p, const BigNat & t) -> BigNat
    {
        require_positive(d, "d");
        require_positive(p, "p");
        require_positive(t, "t");

        BigNat g = base_case(t);
        for (std::uint64_t level = 2 ; level <= d ; ++level)
            g = geometric_sum(t, p) * (g + BigNat(1) + biclique_slack(t)) + t.pow(p) * (g + BigNat(1));
        return g;
    }

    auto thm10_in_range(std::uint64_t d, const BigNat & t) -> bool
    {
        return ! t.is_zero() && d >= 1 && t <= BigNat(d - 1);
    }

    auto cascade(std::uint64_t s, std::uint64_t d, const BigNat & t, const F0 & f0) -> Cascade
    {
        require_positive(s, "s");
        require_positive(d, "d");
        require_positive(t, "t");

        const BigNat S(s), D(d);
        Cascade c;
        c.w = S.pow(4) * t.pow(s) + S;
        c.f8 = BigNat(3) * S * D.pow(3 * s + 2) * c.w.pow(2 * s - 1) * t.pow(3 * s)
            * (f0(t) + BigNat(2) * S.pow(2 * d + 2) * t.pow(d * s + s * s + s));
        c.f5 = BigNat(120) * S * D.pow(5 * s + 1) * c.w * t.pow(5 * s) * c.f8;
        c.f3 = BigNat(2) * D.pow(s + 1) * c.w * t.pow(s) * c.f5;
        c.f2 = BigNat(2) * S * D * c.w * c.f3;
        const std::uint64_t k = s * s + s + 1;
        c.f1 = f0((S * BigNat(k) * t).pow(120 * k) * c.w) + BigNat(2) * t * c.f2;
        return c;
    }

    auto thm9_f(std::uint64_t d, std::uint64_t p, const BigNat & t, std::uint64_t s, const F0 & f0) -> BigNat
    {
        require_positive(d, "d");
        require_positive(t, "t");
        if (p < 4)
            throw std::invalid_argument("p must be >= 4");

        BigNat g = base_case(t);
        for (std::uint64_t level = 2 ; level <= d ; ++level)
            g = geometric_sum(t, p + 1) * (g + BigNat(1) + biclique_slack(t))
                + t.pow(p + 1) * (cascade(s, level, t, f0).f1 + BigNat(1));
        return g;
    }

    auto beta_h(std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat
    {
        require_positive(s, "s");
        require_positive(t, "t");
        const BigNat size = geometric_sum(BigNat(s), p + 1);
        const BigNat exponent = BigNat::factorial(p + 3) * size;
        return (size * BigNat(s) * t).pow(exponent) + BigNat(1);
    }

    auto beta_t(std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat
    {
        require_positive(t, "t");
        BigNat shifted, power(s);
        for (std::uint64_t i = 0 ; i <= p ; ++i) {
            shifted += power;
            power *= BigNat(s);
        }
        const BigNat exponent = BigNat::factorial(p + 3) * geometric_sum(BigNat(s), p + 1);
        return (shifted * t).pow(exponent) + BigNat(1);
    }

    auto beta_t(const Graph & tree, const BigNat & t) -> BigNat
    {
        auto params = embed_params(tree);
        return beta_t(std::uint64_t(params.spread), std::uint64_t(params.height), t);
    }

    auto thm11_f(std::uint64_t d, std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat
    {
        require_positive(d, "d");
        require_positive(t, "t");
        if (d == 1)
            return base_case(t);
        const BigNat g_t = thm11_f(d - 1, s, p, t);
        const BigNat g_beta = thm11_f(d - 1, s, p, beta_t(s, p, t));
        return geometric_sum(t, p) * (g_t + BigNat(1) + biclique_slack(t)) + t.pow(p) * (g_beta + BigNat(1));
    }

    auto thm11_f(std::uint64_t d, const Graph & tree, const BigNat & t) -> BigNat
    {
        auto params = embed_params(tree);
        return thm11_f(d, std::uint64_t(params.spread), std::uint64_t(params.height), t);
    }

    auto scott_degeneracy_bound(std::uint64_t h_size, std::uint64_t spread, std::uint64_t height,
            const BigNat & t) -> BigNat
    {
        require_positive(h_size, "|H|");
        require_positive(height, "height");
        require_positive(t, "t");
        if (spread < 2)
            throw std::invalid_argument("spread must be >= 2");
        const BigNat exponent = BigNat::factorial(height + 3) * BigNat(h_size);
        return (BigNat(h_size) * BigNat(spread) * t).pow(exponent);
    }

    auto randerath_bound(int omega) -> int
    {
        if (omega < 0)
            throw std::invalid_argument("omega must be >= 0");
        return omega + 1;
    }
}
