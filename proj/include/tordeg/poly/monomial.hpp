#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "tordeg/exactmath/scalar.hpp"

namespace tordeg {

// Enough for Flag_5 (30 Plücker variables) plus one auxiliary variable.
inline constexpr size_t kMaxVars = 32;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  uint16_t operator[](size_t i) const { return e[i]; }
  uint16_t& operator[](size_t i) { return e[i]; }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& other) const {
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && other.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& other) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = e[i] + other.e[i];
    return m;
  }
  // Assumes other divides *this.
  Monomial operator/(const Monomial& other) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = e[i] - other.e[i];
    return m;
  }
  Monomial lcm(const Monomial& other) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = e[i] > other.e[i] ? e[i] : other.e[i];
    return m;
  }
  Monomial gcd(const Monomial& other) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = e[i] < other.e[i] ? e[i] : other.e[i];
    return m;
  }
  BigInt weight(const IntVec& w) const {
    BigInt s = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (e[i]) s += w[i] * long(e[i]);
    return s;
  }
  IntVec exponents(size_t nvars) const {
    IntVec v(nvars);
    for (size_t i = 0; i < nvars; ++i) v[i] = e[i];
    return v;
  }
  static Monomial variable(size_t i, uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

}  // namespace tordeg
