#pragma once

#include <stdexcept>

#include "flashcodes/core.hpp"

namespace flashcodes::intmath {

inline long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > (1LL << 62) / base) throw ContractError("integer power overflow");
        out *= base;
    }
    return out;
}

// Smallest e >= 0 with base^e >= v (v >= 1).
inline int ceil_log(long long base, long long v) {
    if (base < 2 || v < 1) throw ContractError("ceil_log: base >= 2 and v >= 1 required");
    int e = 0;
    long long p = 1;
    while (p < v) {
        p *= base;
        ++e;
    }
    return e;
}

// Largest e >= 0 with base^e <= v (v >= 1).
inline int floor_log(long long base, long long v) {
    if (base < 2 || v < 1) throw ContractError("floor_log: base >= 2 and v >= 1 required");
    int e = 0;
    long long p = base;
    while (p <= v) {
        p *= base;
        ++e;
    }
    return e;
}

inline long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

}  // namespace flashcodes::intmath
