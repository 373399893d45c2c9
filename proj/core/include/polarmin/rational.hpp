#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polarmin {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpz_class& value) : v_(value) {}
    explicit Rat(mpq_class value);

    /// Accepts "p", "-p", "p/q"; whitespace is not allowed.
    static Rat parse(std::string_view text);

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    /// Decimal rendering rounded half away from zero to `digits` fractional digits.
    std::string decimal(int digits) const;

    double to_double() const { return v_.get_d(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const;
    Rat inverse() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r(a); r += b; return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r(a); r -= b; return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r(a); r *= b; return r; }
    friend Rat operator/(const Rat& a, const Rat& b) { Rat r(a); r /= b; return r; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace polarmin

template <>
struct std::hash<polarmin::Rat> {
    std::size_t operator()(const polarmin::Rat& r) const noexcept { return r.hash(); }
};
