#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace redei {

/// Arbitrary-precision signed integer. Values below 2^128 stay inline.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline bool fits_u64(const BigInt& v) {
    return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

/// Narrowing conversion; throws std::overflow_error when the value does not fit.
std::uint64_t to_u64(const BigInt& v);

}  // namespace redei
