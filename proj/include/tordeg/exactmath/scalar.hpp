#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tordeg {

using BigInt = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rational>;

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& text);

BigInt vec_gcd(const IntVec& v);
// Divide by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
// Clear denominators and divide out the content.
IntVec primitive(const RatVec& v);

BigInt dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const IntVec& a, const RatVec& b);

RatVec to_rational(const IntVec& v);
IntVec to_bigint(const std::vector<int64_t>& v);
std::vector<int64_t> to_int64(const IntVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const BigInt& s, const IntVec& a);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace tordeg
