#pragma once

#include <cstdint>
#include <stdexcept>

namespace normalcx {

/// Exact 64-bit chain coefficients; every operation detects overflow.
using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in chain addition");
    return out;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in chain subtraction");
    return out;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in chain product");
    return out;
}

}  // namespace normalcx
