#pragma once

#include <concepts>
#include <optional>

namespace qdet {

/// Contract satisfied by every scalar the matrix algorithms are generic over:
/// an associative unital ring element with an explicit invertibility probe.
/// Commutativity is never assumed. zero_like/one_like produce the additive
/// and multiplicative identities of the element's own ring (for matrices,
/// of the matching shape). try_invert returns a two-sided inverse or nothing.
template <typename T>
concept RingElement =
    std::copy_constructible<T> &&
    requires(const T& x, const T& y) {
        { x + y } -> std::convertible_to<T>;
        { x - y } -> std::convertible_to<T>;
        { -x } -> std::convertible_to<T>;
        { x * y } -> std::convertible_to<T>;
        { x == y } -> std::convertible_to<bool>;
        { x.is_zero() } -> std::same_as<bool>;
        { x.zero_like() } -> std::convertible_to<T>;
        { x.one_like() } -> std::convertible_to<T>;
        { x.try_invert() } -> std::same_as<std::optional<T>>;
    };

/// Numeric policy for a ring element type. Approximate rings (float-backed)
/// compare against a tolerance and prefer large pivots; exact rings pick the
/// first invertible pivot and may skip exact zeros freely.
template <typename T>
struct NumericPolicy {
    static constexpr bool approximate = false;
    static double magnitude(const T&) { return 0.0; }
};

}  // namespace qdet
