#include "tordeg/exactmath/scalar.hpp"

#include "tordeg/errors.hpp"

namespace tordeg {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyCone: return "EmptyCone";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::CellBudgetExceeded: return "CellBudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ItemNotClosed: return "ItemNotClosed";
    case ErrorKind::NotBinomialAfterSaturation: return "NotBinomialAfterSaturation";
    case ErrorKind::RescalingObstruction: return "RescalingObstruction";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::GradingMismatch: return "GradingMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::NoneMissing: return "NoneMissing";
    case ErrorKind::NoPrimeLift: return "NoPrimeLift";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

BigInt vec_gcd(const IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(const IntVec& v) {
  BigInt g = vec_gcd(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVec primitive(const RatVec& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(out);
}

BigInt dot(const IntVec& a, const IntVec& b) {
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

IntVec to_bigint(const std::vector<int64_t>& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

std::vector<int64_t> to_int64(const IntVec& v) {
  std::vector<int64_t> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw Error(ErrorKind::InvalidInput, "integer does not fit in 64 bits");
    out[i] = v[i].get_si();
  }
  return out;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec operator*(const BigInt& s, const IntVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tordeg
