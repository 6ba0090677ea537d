#include "dodgson/random.hpp"

namespace dodgson {

std::uint64_t Prng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("Prng::below(0)");
    if (bound == 1) return 0;
    std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t v = gen_();
        if (v >= limit) return v % bound;
    }
}

std::int64_t Prng::in_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("Prng::in_range: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

namespace {

Scalar random_entry(Prng& rng, const RingDomain& domain, std::uint64_t bound) {
    switch (domain.kind()) {
        case DomainKind::integers: {
            std::int64_t v = rng.in_range(-static_cast<std::int64_t>(bound),
                                          static_cast<std::int64_t>(bound));
            return Scalar::integer(mpz_class(static_cast<long>(v)));
        }
        case DomainKind::rationals: {
            std::int64_t num = rng.in_range(-static_cast<std::int64_t>(bound),
                                            static_cast<std::int64_t>(bound));
            std::uint64_t den = 1 + rng.below(bound);
            return Scalar::rational(mpz_class(static_cast<long>(num)),
                                    mpz_class(static_cast<unsigned long>(den)));
        }
        case DomainKind::prime_field: {
            const mpz_class& p = domain.modulus();
            if (!p.fits_ulong_p())
                throw Error("random prime-field entries need a modulus below 2^64");
            std::uint64_t r = rng.below(p.get_ui());
            return Scalar::fp(mpz_class(static_cast<unsigned long>(r)), domain);
        }
    }
    throw Error("bad domain kind");
}

}  // namespace

Matrix random_matrix_from(Prng& rng, const RingDomain& domain, int rows, int cols,
                          std::uint64_t entry_bound) {
    if (entry_bound < 1) throw Error("entry bound must be >= 1");
    if (entry_bound > (1ULL << 62)) throw Error("entry bound too large");
    Matrix m(domain, rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) m.set(i, j, random_entry(rng, domain, entry_bound));
    return m;
}

Matrix random_matrix(const RingDomain& domain, int n, std::uint64_t entry_bound,
                     std::uint64_t seed) {
    if (n < 1) throw Error("matrix size must be >= 1");
    Prng rng(seed);
    return random_matrix_from(rng, domain, n, n, entry_bound);
}

}  // namespace dodgson
