#pragma once

#include <atomic>

namespace qdet {

namespace detail {
inline std::atomic<double>& float_tolerance_storage() {
    static std::atomic<double> tol{1e-9};
    return tol;
}
}  // namespace detail

/// Zero threshold for float-mode scalars: a quaternion with Euclidean norm at
/// most this value counts as zero for is_zero / try_invert / pivot selection.
/// Exact-mode arithmetic never consults it.
inline double float_tolerance() {
    return detail::float_tolerance_storage().load(std::memory_order_relaxed);
}

inline void set_float_tolerance(double tol) {
    detail::float_tolerance_storage().store(tol, std::memory_order_relaxed);
}

}  // namespace qdet
