#pragma once

#include <cstdint>
#include <random>

#include "pic27/cyclotomic.hpp"
#include "pic27/rational.hpp"

namespace pic27 {

/// Deterministic RNG for the randomized property checks. Sampling uses
/// plain modular reduction so a given seed yields the same stream on every
/// platform (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long max_num = 30, long max_den = 12) {
        return Rat(range(-max_num, max_num), range(1, max_den));
    }

    Rat nonzero_rat(long max_num = 30, long max_den = 12) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    CycNum cyc(long max_num = 30, long max_den = 12) {
        return CycNum(rat(max_num, max_den), rat(max_num, max_den));
    }

    CycNum nonzero_cyc(long max_num = 30, long max_den = 12) {
        for (;;) {
            CycNum c = cyc(max_num, max_den);
            if (!c.is_zero()) return c;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace pic27
