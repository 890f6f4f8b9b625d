#pragma once

#include "fmz/freudenthal.hpp"

#include <cstdint>
#include <random>

namespace fmz {

// Seeded source for random elements and words; every draw is reproducible from the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi].
    long uniform(long lo, long hi);
    Int coefficient(long height) { return Int(uniform(-height, height)); }
    bool coin() { return uniform(0, 1) == 1; }

    Comp<Int> comp(Algebra a, long height);
    Jordan<Int> jordan(JordanKind k, long height);
    Freud<Int> freud(JordanKind k, long height);
    Freud<Rat> freud_rat(JordanKind k, long height);

    // A unit of norm +-1 drawn from a small fixed set.
    Comp<Int> unit(Algebra a);
    // A product of random norm-preserving or unimodular moves.
    StructureMap<Int> structure_map(JordanKind k, int moves, long height);
    Generator<Int> generator(JordanKind k, long height);
    Word<Int> word(JordanKind k, int length, long height);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace fmz
