#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polarmin/body.hpp"

namespace polarmin::corpus {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic stream for (seed, index); streams for different indices are independent.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t index = 0);

    long integer(long lo, long hi);  // inclusive
    Rat rational(long max_num, long max_den);  // in [-max_num, max_num] / q, q in 1..max_den
    Rat in_range(const Rat& lo, const Rat& hi, long den);  // lo + k (hi - lo) / den

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// k in 3..8 points with coordinates in {-6..6}/q, q in 1..4, hulled; resampled until solid.
VPolygon random_polygon(Rng& rng);
VPolygon random_triangle(Rng& rng);

/// Polygon number `index` of the corpus for `seed`.
VPolygon corpus_polygon(std::uint64_t seed, std::uint64_t index);
std::vector<VPolygon> make_corpus(std::uint64_t seed, std::size_t count);

/// Integral matrix with determinant +-1 and small entries, plus a small rational translation.
Transform2 random_unimodular(Rng& rng);

Vec2 random_vector(Rng& rng);  // nonzero

}  // namespace polarmin::corpus
