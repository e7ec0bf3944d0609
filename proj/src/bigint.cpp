#include "intcone/bigint.hpp"

#include <algorithm>

#include "intcone/errors.hpp"

namespace intcone {

std::size_t bit_length(const BigInt& z) {
  if (z == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(z)) + 1;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("not a decimal integer: \"" + std::string(text) + "\"");
  }
  BigInt value{std::string(digits)};
  return text.front() == '-' ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& z) { return z.str(); }

BigInt dot(std::span<const BigInt> lhs, std::span<const BigInt> rhs) {
  if (lhs.size() != rhs.size()) throw DimensionMismatch("dot: length mismatch");
  BigInt sum = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != 0 && rhs[i] != 0) sum += lhs[i] * rhs[i];
  }
  return sum;
}

bool is_zero(std::span<const BigInt> v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& z) { return z == 0; });
}

std::uint64_t to_bounded(const BigInt& z, std::uint64_t cap, std::string_view what) {
  if (z < 0 || z > cap) {
    throw ExplosionGuard(std::string(what) + " = " + z.str() + " exceeds the explosion cap " +
                         std::to_string(cap));
  }
  return static_cast<std::uint64_t>(z);
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
  for (const BigInt& z : p) {
    const auto& be = z.backend();
    std::size_t zh = be.sign() ? 0x5bd1e995 : 0;
    for (std::size_t i = 0; i < be.size(); ++i) {
      zh = zh * 0x100000001b3ULL ^ static_cast<std::size_t>(be.limbs()[i]);
    }
    h ^= zh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace intcone
