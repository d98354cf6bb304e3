#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <type_traits>

#include "qdet/config.hpp"
#include "qdet/errors.hpp"
#include "qdet/rational.hpp"
#include "qdet/ring.hpp"

namespace qdet {

namespace detail {
inline double scalar_to_double(const Rational& x) { return x.to_double(); }
inline double scalar_to_double(double x) { return x; }
inline Rational scalar_div(const Rational& x, const Rational& y) { return x / y; }
inline double scalar_div(double x, double y) { return x / y; }
}  // namespace detail

/// Quaternion a + b·i + c·j + d·k over an exact (Rational) or float (double)
/// scalar. Multiplication follows i^2 = j^2 = k^2 = -1, ij = -ji = k,
/// jk = -kj = i, ki = -ik = j; it is associative but not commutative, and
/// every nonzero quaternion has a two-sided inverse conj(q) / |q|^2.
template <typename S>
class Quaternion {
    static_assert(std::is_same_v<S, Rational> || std::is_same_v<S, double>,
                  "quaternion scalar must be Rational or double");

public:
    Quaternion() : a_{}, b_{}, c_{}, d_{} {}
    Quaternion(S a, S b, S c, S d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    const S& a() const { return a_; }
    const S& b() const { return b_; }
    const S& c() const { return c_; }
    const S& d() const { return d_; }

    Quaternion operator+(const Quaternion& o) const {
        return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
    }
    Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }

    Quaternion operator*(const Quaternion& o) const {
        return {a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_,
                a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_,
                a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_,
                a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_};
    }

    bool operator==(const Quaternion& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    Quaternion conjugate() const { return {a_, -b_, -c_, -d_}; }

    S norm_sq() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    /// Euclidean norm as a double; in exact mode the exact squared norm is
    /// converted to double before the square root.
    double abs() const { return std::sqrt(detail::scalar_to_double(norm_sq())); }

    bool is_zero() const {
        if constexpr (std::is_same_v<S, double>) {
            const double tol = float_tolerance();
            return norm_sq() <= tol * tol;
        } else {
            return norm_sq().is_zero();
        }
    }

    Quaternion zero_like() const { return Quaternion(); }
    Quaternion one_like() const { return Quaternion(S(1), S(0), S(0), S(0)); }

    std::optional<Quaternion> try_invert() const {
        if (is_zero()) return std::nullopt;
        const S n2 = norm_sq();
        return Quaternion(detail::scalar_div(a_, n2), detail::scalar_div(-b_, n2),
                          detail::scalar_div(-c_, n2), detail::scalar_div(-d_, n2));
    }

    Quaternion invert() const {
        auto inv = try_invert();
        if (!inv) throw ZeroDivision("quaternion is (numerically) zero");
        return *inv;
    }

private:
    S a_, b_, c_, d_;
};

using ExactQuaternion = Quaternion<Rational>;
using FloatQuaternion = Quaternion<double>;

inline FloatQuaternion to_float(const ExactQuaternion& q) {
    return {q.a().to_double(), q.b().to_double(), q.c().to_double(), q.d().to_double()};
}

template <>
struct NumericPolicy<FloatQuaternion> {
    static constexpr bool approximate = true;
    static double magnitude(const FloatQuaternion& q) { return q.abs(); }
};

template <typename S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
    return os << "(" << q.a() << ", " << q.b() << ", " << q.c() << ", " << q.d() << ")";
}

}  // namespace qdet
