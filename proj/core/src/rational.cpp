#include "polarmin/rational.hpp"

#include <functional>
#include <ostream>

#include "polarmin/error.hpp"

namespace polarmin {

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error(ErrorKind::BadParams, "zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error(ErrorKind::BadParams, "zero denominator");
    v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
    if (v_.get_den() == 0) throw Error(ErrorKind::BadParams, "zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
        }
    } else {
        const auto dtext = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || dtext.empty() || dtext[0] == '-' ||
            dtext[0] == '+' || !parse_integer(dtext, den)) {
            throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
        }
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
    }
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpz_class n = ::abs(v_.get_num()) * scale;
    const mpz_class d = v_.get_den();
    mpz_class q = n / d;
    const mpz_class r = n % d;
    if (2 * r >= d) q += 1;
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && q != 0) s.insert(0, "-");
    return s;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inverse() const {
    if (is_zero()) throw Error(ErrorKind::BadParams, "inverse of zero");
    return Rat(mpq_class(1) / v_);
}

mpz_class Rat::floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return out;
}

mpz_class Rat::ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return out;
}

Rat& Rat::operator+=(const Rat& o) { v_ += o.v_; return *this; }
Rat& Rat::operator-=(const Rat& o) { v_ -= o.v_; return *this; }
Rat& Rat::operator*=(const Rat& o) { v_ *= o.v_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::BadParams, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

std::size_t Rat::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace polarmin
