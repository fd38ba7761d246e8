#include "bfly/field.hpp"

#include <numeric>
#include <stdexcept>

namespace bfly {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (hi < lo)
        throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = Rng::max() - (Rng::max() % span + 1) % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw > limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

Rational sample_rational(Rng& rng, std::int64_t bound) {
    if (bound < 1)
        throw std::invalid_argument("sample_rational: bound must be >= 1");
    for (;;) {
        std::int64_t p = uniform_int(rng, -bound, bound);
        std::int64_t q = uniform_int(rng, 1, bound);
        if (std::gcd(p < 0 ? -p : p, q) == 1)
            return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
    }
}

} // namespace bfly
