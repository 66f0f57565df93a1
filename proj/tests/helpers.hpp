// Shared helpers for the test suites: ring shortcuts and seeded
// generators for random matrices and block types.

#pragma once

#include "cent/jordan.hpp"

#include <random>

namespace cent::testing {

inline RingSpec Q() { return RingSpec::rationals(); }
inline RingSpec Z() { return RingSpec::integers(); }
inline RingSpec GF(unsigned long p) { return RingSpec::gf(p); }

inline Matrix random_matrix(std::mt19937_64& rng, RingSpec ring, int rows, int cols, int lo = -4,
                            int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(ring, d(rng));
    return m;
}

inline Scalar random_rational(std::mt19937_64& rng, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 5);
    return Scalar(RingSpec::rationals(), mpq_class(num(rng), den(rng)));
}

/// Random block type with total size <= max_n.  Eigenvalues are small
/// integers (distinct residues over GF(p), so groups are capped at p).
inline JordanType random_jordan_type(std::mt19937_64& rng, RingSpec ring, int max_n) {
    std::uniform_int_distribution<int> tgroups(1, 3);
    int budget = std::uniform_int_distribution<int>(1, max_n)(rng);
    int t = tgroups(rng);
    if (ring.kind == RingKind::PrimeField) t = std::min<int>(t, static_cast<int>(ring.p));
    t = std::min(t, budget);

    std::vector<long> ev_pool;
    for (long v = -3; v <= 6; ++v) ev_pool.push_back(v);
    std::shuffle(ev_pool.begin(), ev_pool.end(), rng);

    std::vector<EigenGroup> groups;
    std::vector<Scalar> used;
    for (int g = 0; g < t && budget > 0; ++g) {
        Scalar ev = Scalar::of_int(ring, ev_pool[g]);
        bool dup = false;
        for (const auto& u : used) dup = dup || u == ev;
        if (dup) continue;  // residues can collide over small GF(p)
        used.push_back(ev);
        int share = (g == t - 1) ? budget : std::uniform_int_distribution<int>(1, budget)(rng);
        budget -= share;
        std::vector<BlockClass> blocks;
        while (share > 0) {
            int size = std::uniform_int_distribution<int>(1, share)(rng);
            int mult = std::uniform_int_distribution<int>(1, share / size)(rng);
            blocks.push_back({size, mult});
            share -= size * mult;
        }
        groups.push_back({ev, std::move(blocks)});
    }
    return JordanType(ring, std::move(groups));
}

}  // namespace cent::testing
