#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nbhd {

// Exact rationals in lowest terms with positive denominator; all comparisons
// and arithmetic in this project are exact, no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

/// Largest integer <= r. Integer division truncates toward zero, so negative
/// non-integral values need a correction step.
inline BigInt rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Parses `p` or `p/q` with optional leading minus. Anything else, including
/// a zero denominator, is rejected.
inline Rat parse_rat(const std::string& text) {
  const auto fail = [&text]() -> Rat {
    throw std::domain_error("invalid rational literal: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();
  const BigInt num(text.substr(0, i));
  if (i == text.size()) return Rat(num);
  if (text[i] != '/') return fail();
  const std::size_t den_begin = ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != text.size()) return fail();
  const BigInt den(text.substr(den_begin));
  if (den == 0) throw std::domain_error("zero denominator in rational literal: '" + text + "'");
  return Rat(num, den);
}

/// Inverse of parse_rat: "p/q", with "/q" omitted for integers.
inline std::string rat_to_string(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

}  // namespace nbhd
