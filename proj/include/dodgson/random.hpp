#pragma once

#include <cstdint>
#include <random>

#include "dodgson/matrix.hpp"

namespace dodgson {

/// mt19937_64 with hand-rolled rejection sampling, so the draw sequence is
/// identical on every platform (std::uniform_int_distribution is not).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi], inclusive.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 gen_;
};

/// Deterministic function of all four arguments. Integer entries are uniform
/// in [-entry_bound, entry_bound]; rational entries have numerator in that
/// range and denominator in [1, entry_bound]; field entries are uniform
/// residues. Entries are drawn row-major.
Matrix random_matrix(const RingDomain& domain, int n, std::uint64_t entry_bound,
                     std::uint64_t seed);

/// Same entry scheme, driven by an existing generator (used by campaigns).
Matrix random_matrix_from(Prng& rng, const RingDomain& domain, int rows, int cols,
                          std::uint64_t entry_bound);

}  // namespace dodgson
