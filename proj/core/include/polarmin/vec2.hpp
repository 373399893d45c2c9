#pragma once

#include <compare>
#include <iosfwd>

#include "polarmin/rational.hpp"

namespace polarmin {

struct Vec2 {
    Rat x;
    Rat y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(const Vec2& v, const Rat& s) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    bool is_integral() const { return x.is_integer() && y.is_integer(); }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the turn a -> b -> c: positive for a counterclockwise turn.
inline int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

/// Counterclockwise rotation by a quarter turn.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

std::ostream& operator<<(std::ostream& os, const Vec2& v);

}  // namespace polarmin
