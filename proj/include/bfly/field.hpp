#pragma once

#include <concepts>
#include <cstdint>
#include <random>

#include "bfly/rational.hpp"

namespace bfly {

/// Capability shared by the exact-rational and the rational-function backends.
/// Division by a zero element throws DivisionByZero; is_zero is exact.
template <class T>
concept Field = std::regular<T> && requires(const T& x, const T& y) {
    { x + y } -> std::same_as<T>;
    { x - y } -> std::same_as<T>;
    { x * y } -> std::same_as<T>;
    { x / y } -> std::same_as<T>;
    { -x } -> std::same_as<T>;
    { is_zero(x) } -> std::convertible_to<bool>;
    T(0);
    T(1);
};

static_assert(Field<Rational>);

using Rng = std::mt19937_64;

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 finalizer).
/// Trials derive independent generators this way so they can run in any order.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(trial_seed(seed, index));
}

/// Uniform integer in [lo, hi] without relying on the library's distribution
/// (whose algorithm is implementation-defined).
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform over reduced fractions p/q with |p| <= bound, 1 <= q <= bound.
/// Rejection sampling on non-reduced pairs; deterministic given the generator.
Rational sample_rational(Rng& rng, std::int64_t bound);

} // namespace bfly
