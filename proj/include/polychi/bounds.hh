/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_BOUNDS_HH
#define POLYCHI_GUARD_BOUNDS_HH 1

#include <polychi/bignat.hh>
#include <polychi/graph.hh>

#include <cstdint>
#include <functional>

namespace polychi
{
    /// The externally supplied function f0 used by the radius-two cascade.
    /// Results that depend on it are only meaningful relative to the choice.
    using F0 = std::function<BigNat (const BigNat &)>;

    auto identity_f0() -> F0;

    /// sum_{i=0}^{terms-1} t^i
    auto geometric_sum(const BigNat & t, std::uint64_t terms) -> BigNat;

    /// (sum_{i<p} t^i)(s + t(2t+9)) + t^p q; all arguments >= 1.
    auto lemma1_rhs(std::uint64_t p, const BigNat & q, const BigNat & s, const BigNat & t) -> BigNat;

    /// Bound for paw-free T1(p)-free graphs without K_d(t). d >= 1, p >= 4, t >= 1.
    auto thm8_f(std::uint64_t d, std::uint64_t p, const BigNat & t) -> BigNat;

    /// Bound for T-free graphs with neither K_d(t) nor K_t(t). The formula is
    /// only meaningful for 1 <= t <= d-1 (see thm10_in_range) but evaluates
    /// for any t >= 1.
    auto thm10_f(std::uint64_t d, std::uint64_t p, const BigNat & t) -> BigNat;
    auto thm10_in_range(std::uint64_t d, const BigNat & t) -> bool;

    /// Intermediate values of the radius-two polynomial chain.
    struct Cascade
    {
        BigNat w, f8, f5, f3, f2, f1;
    };

    auto cascade(std::uint64_t s, std::uint64_t d, const BigNat & t, const F0 & f0 = identity_f0()) -> Cascade;

    /// Bound for T2(p)-free graphs in L without K_d(t). The balloon term at
    /// recursion level k uses cascade(s, k, t, f0).f1 + 1.
    auto thm9_f(std::uint64_t d, std::uint64_t p, const BigNat & t, std::uint64_t s = 3,
            const F0 & f0 = identity_f0()) -> BigNat;

    /// (|H| s t)^c + 1 with |H| = 1 + s + ... + s^p and c = (p+3)! |H|.
    auto beta_h(std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat;

    /// ((sum_{i=0}^p s^{i+1}) t)^{(p+3)! sum_{i=0}^p s^i} + 1 with (s, p)
    /// taken from embed_params(tree). Throws std::invalid_argument for non-trees.
    auto beta_t(const Graph & tree, const BigNat & t) -> BigNat;
    auto beta_t(std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat;

    /// Bound for T-free graphs in F_T without K_d(t); p comes from the tree.
    auto thm11_f(std::uint64_t d, const Graph & tree, const BigNat & t) -> BigNat;
    auto thm11_f(std::uint64_t d, std::uint64_t s, std::uint64_t p, const BigNat & t) -> BigNat;

    /// (|H| zeta t)^c with c = (eta+3)! |H|. Throws std::invalid_argument
    /// when spread < 2 or any argument is zero.
    auto scott_degeneracy_bound(std::uint64_t h_size, std::uint64_t spread, std::uint64_t height,
            const BigNat & t) -> BigNat;

    /// omega + 1.
    auto randerath_bound(int omega) -> int;
}

#endif
