#pragma once

#include <stdexcept>
#include <string>

namespace alcomb::detail {

// Precondition failure: the caller handed us something outside the contract.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Internal invariant failure: a bug in this library, not in the caller.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

// Floored division/modulo for possibly-negative operands.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int mod(long long a, int m) {
    int r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

}  // namespace alcomb::detail
