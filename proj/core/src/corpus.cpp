#include "polarmin/corpus.hpp"

#include "polarmin/error.hpp"

namespace polarmin::corpus {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t index) : gen_(splitmix64(seed ^ splitmix64(index))) {}

long Rng::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

Rat Rng::rational(long max_num, long max_den) {
    const long q = integer(1, max_den);
    return Rat(integer(-max_num, max_num), q);
}

Rat Rng::in_range(const Rat& lo, const Rat& hi, long den) {
    return lo + (hi - lo) * Rat(integer(0, den), den);
}

namespace {

std::vector<Vec2> sample_points(Rng& rng, long count) {
    std::vector<Vec2> pts;
    for (long i = 0; i < count; ++i) {
        const long q = rng.integer(1, 4);
        pts.push_back({Rat(rng.integer(-6, 6), q), Rat(rng.integer(-6, 6), q)});
    }
    return pts;
}

}  // namespace

VPolygon random_polygon(Rng& rng) {
    for (;;) {
        const auto pts = sample_points(rng, rng.integer(3, 8));
        if (hull_area(pts).sign() > 0) return convex_hull(pts);
    }
}

VPolygon random_triangle(Rng& rng) {
    for (;;) {
        const auto pts = sample_points(rng, 3);
        if (hull_area(pts).sign() > 0) return convex_hull(pts);
    }
}

VPolygon corpus_polygon(std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed, index);
    return random_polygon(rng);
}

std::vector<VPolygon> make_corpus(std::uint64_t seed, std::size_t count) {
    std::vector<VPolygon> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(corpus_polygon(seed, i));
    return out;
}

Transform2 random_unimodular(Rng& rng) {
    // product of a few elementary shears and a sign flip
    Transform2 t;
    const long steps = rng.integer(1, 4);
    for (long i = 0; i < steps; ++i) {
        const long k = rng.integer(-2, 2);
        const Transform2 shear = rng.integer(0, 1) == 0 ? Transform2({{{1, k}, {0, 1}}}) : Transform2({{{1, 0}, {k, 1}}});
        t = shear.compose(t);
    }
    if (rng.integer(0, 1) == 1) t = Transform2({{{0, 1}, {1, 0}}}).compose(t);
    if (rng.integer(0, 1) == 1) t = Transform2({{{-1, 0}, {0, 1}}}).compose(t);
    const Vec2 shift{rng.rational(3, 4), rng.rational(3, 4)};
    return Transform2(t.matrix(), shift);
}

Vec2 random_vector(Rng& rng) {
    for (;;) {
        Vec2 v{rng.rational(5, 3), rng.rational(5, 3)};
        if (!v.is_zero()) return v;
    }
}

}  // namespace polarmin::corpus
