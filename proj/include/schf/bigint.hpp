#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schf {

using BigInt = boost::multiprecision::cpp_int;

/// log2 of a positive BigInt, exact to double precision at any magnitude.
inline double log2_bigint(const BigInt& m) {
    if (m <= 0) throw std::domain_error("log2 of non-positive value");
    const unsigned b = boost::multiprecision::msb(m);
    if (b <= 52) return std::log2(m.convert_to<double>());
    const BigInt top = m >> (b - 52);
    return static_cast<double>(b - 52) + std::log2(top.convert_to<double>());
}

inline double to_double(const BigInt& m) { return m.convert_to<double>(); }

inline std::string to_string(const BigInt& m) { return m.str(); }

} // namespace schf
