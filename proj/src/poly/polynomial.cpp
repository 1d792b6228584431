#include "tordeg/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "tordeg/errors.hpp"

namespace tordeg {

int PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return canonical_less(x.m, y.m); });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(const Rational& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& sb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_less(a[i].m, b[j].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_less(b[j].m, a[i].m)) {
      out.push_back({b[j].m, b[j].c * sb});
      ++j;
    } else {
      Rational c = a[i].c + b[j].c * sb;
      if (c != 0) out.push_back({a[i].m, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p;
  p.terms_ = merge_terms(terms_, o.terms_, 1);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial p;
  p.terms_ = merge_terms(terms_, o.terms_, -1);
  return p;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(all));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c *= s;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the canonical order.
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

bool Polynomial::is_homogeneous(const IntVec& weights) const {
  if (terms_.empty()) return true;
  BigInt d = terms_[0].m.weight(weights);
  for (const auto& t : terms_)
    if (t.m.weight(weights) != d) return false;
  return true;
}

IntVec Polynomial::multidegree(const std::vector<IntVec>& grading) const {
  IntVec deg(grading.size());
  for (size_t r = 0; r < grading.size(); ++r) {
    if (!is_homogeneous(grading[r]))
      throw Error(ErrorKind::GradingMismatch, "polynomial is not homogeneous for the grading");
    if (!terms_.empty()) deg[r] = terms_[0].m.weight(grading[r]);
  }
  return deg;
}

int Polynomial::max_variable() const {
  int mx = -1;
  for (const auto& t : terms_)
    for (size_t i = 0; i < kMaxVars; ++i)
      if (t.m[i]) mx = std::max(mx, static_cast<int>(i));
  return mx;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / terms_[0].c);
}

std::string Polynomial::to_string(const PolyRing& ring) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Rational c = t.c;
    if (k > 0) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    s += tordeg::to_string(c);
    for (size_t i = 0; i < ring.nvars(); ++i) {
      if (!t.m[i]) continue;
      s += "*" + ring.names[i];
      if (t.m[i] > 1) s += "^" + std::to_string(t.m[i]);
    }
  }
  return s;
}

std::string serialize_polys(const std::vector<Polynomial>& polys, const PolyRing& ring) {
  std::vector<std::string> parts;
  for (const auto& p : polys) parts.push_back(p.to_string(ring));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "; ";
    s += parts[i];
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const PolyRing& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::InvalidInput, "cannot parse polynomial '" + s_ + "': " + msg);
  }

  Polynomial expr() {
    Polynomial p;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial t = term();
    p = neg ? -t : t;
    while (true) {
      if (accept('+')) p = p + term();
      else if (accept('-')) p = p - term();
      else break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  unsigned exponent() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    Polynomial base;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      base = Polynomial::constant(parse_rational(s_.substr(start, pos_ - start)));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_.index_of(name);
      if (idx < 0) fail("unknown variable " + name);
      base = Polynomial::variable(static_cast<size_t>(idx));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  const std::string& s_;
  const PolyRing& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) { return Parser(text, ring).parse(); }

}  // namespace tordeg
