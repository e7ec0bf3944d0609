#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace intcone {

using BigInt = boost::multiprecision::cpp_int;

/// A lattice point (or any integer vector) in Z^d.
using Point = std::vector<BigInt>;

inline constexpr std::uint64_t kDefaultExplosionCap = 100'000'000;

/// Number of bits in |z|; bit_length(0) == 0.
std::size_t bit_length(const BigInt& z);

BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Parses an optionally '-'-prefixed run of decimal digits. Throws ParseError.
BigInt parse_decimal(std::string_view text);
std::string to_decimal(const BigInt& z);

BigInt dot(std::span<const BigInt> lhs, std::span<const BigInt> rhs);
bool is_zero(std::span<const BigInt> v);

/// Converts to a machine word, throwing ExplosionGuard when |z| > cap.
std::uint64_t to_bounded(const BigInt& z, std::uint64_t cap, std::string_view what);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

}  // namespace intcone
