#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vclab {

// A subset of a domain of at most 64 points; bit i is membership of domain[i].
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxDomain = 64;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact enumeration would exceed one of the fixed caps.
class CapExceeded : public Error {
public:
  using Error::Error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Order of the '0'/'1' strings where position 0 is the leading character.
inline bool bit_string_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) == 0;
}

// Order of the ascending index vectors of two sets (shorter prefix first).
inline bool index_lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (diff == 0) return false;
  int i = std::countr_zero(diff);
  if ((a >> i) & 1) {
    return (b >> i) != 0;
  }
  return (a >> i) == 0;
}

// Size first, then index-vector order.
inline bool size_lex_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return index_lex_less(a, b);
}

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Packs the bits of `value` selected by `selector` into the low bits.
inline Mask compress_bits(Mask value, Mask selector) {
  Mask out = 0;
  int k = 0;
  while (selector) {
    int i = std::countr_zero(selector);
    if ((value >> i) & 1) out |= Mask{1} << k;
    ++k;
    selector &= selector - 1;
  }
  return out;
}

// Inverse of compress_bits: spreads the low bits of `packed` onto `selector`.
inline Mask expand_bits(Mask packed, Mask selector) {
  Mask out = 0;
  int k = 0;
  while (selector) {
    int i = std::countr_zero(selector);
    if ((packed >> k) & 1) out |= Mask{1} << i;
    ++k;
    selector &= selector - 1;
  }
  return out;
}

// All submasks of `of` with popcount == k, in increasing numeric order.
inline std::vector<Mask> submasks_of_size(Mask of, int k) {
  std::vector<Mask> out;
  int n = popcount(of);
  if (k < 0 || k > n) return out;
  if (k == 0) return {Mask{0}};
  if (n >= 64) throw CapExceeded("subset enumeration over 64 points");
  Mask packed = full_mask(static_cast<std::size_t>(k));
  Mask limit = Mask{1} << n;
  while (packed < limit) {
    out.push_back(expand_bits(packed, of));
    // Gosper's hack
    Mask c = packed & -packed;
    Mask r = packed + c;
    if (r == 0) break;
    packed = (((r ^ packed) >> 2) / c) | r;
  }
  return out;
}

std::string to_bit_string(Mask m, std::size_t n);
Mask parse_bit_string(const std::string& s);

}  // namespace vclab
