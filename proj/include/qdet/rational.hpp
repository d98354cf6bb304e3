#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "qdet/errors.hpp"

namespace qdet {

/// Arbitrary-precision rational number, always in canonical form: positive
/// denominator, gcd(|numerator|, denominator) = 1. Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(n) {}       // NOLINT(google-explicit-constructor)

    Rational(long n, long d) {
        if (d == 0) throw ZeroDivision("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p" and "p/q" with an optional leading sign on p and q > 0.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        const std::string num = text.substr(0, slash);
        if (!is_integer_literal(num, /*allow_sign=*/true))
            throw ParseError("invalid rational literal \"" + text + "\"");
        mpq_class v;
        if (slash == std::string::npos) {
            v = mpq_class(mpz_class(num));
        } else {
            const std::string den = text.substr(slash + 1);
            if (!is_integer_literal(den, /*allow_sign=*/false) || mpz_class(den) == 0)
                throw ParseError("invalid rational literal \"" + text + "\"");
            v = mpq_class(mpz_class(num), mpz_class(den));
            v.canonicalize();
        }
        return Rational(raw_tag{}, std::move(v));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator+(const Rational& o) const { return Rational(raw_tag{}, v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(raw_tag{}, v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(raw_tag{}, v_ * o.v_); }
    Rational operator-() const { return Rational(raw_tag{}, -v_); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ZeroDivision("rational division by zero");
        return Rational(raw_tag{}, v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    std::optional<Rational> try_invert() const {
        if (is_zero()) return std::nullopt;
        mpq_class inv;
        mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
        return Rational(raw_tag{}, std::move(inv));
    }

    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    struct raw_tag {};
    // Used when the value is known canonical (any GMP arithmetic result).
    Rational(raw_tag, mpq_class v) : v_(std::move(v)) {}

    static bool is_integer_literal(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qdet
