#pragma once

#include <string>
#include <vector>

#include "tordeg/poly/monomial.hpp"

namespace tordeg {

struct PolyRing {
  std::vector<std::string> names;

  size_t nvars() const { return names.size(); }
  // Index of a variable name, or -1.
  int index_of(const std::string& name) const;
  bool operator==(const PolyRing&) const = default;
};

struct Term {
  Monomial m;
  Rational c;
};

// Terms are kept in a fixed canonical order (descending degree, then descending
// lexicographic exponent vector) with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(size_t i) { return monomial(Monomial::variable(i)); }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const;

  // Weighted degree of each term; true when all agree.
  bool is_homogeneous(const IntVec& weights) const;
  // Degree vector under a grading matrix given by rows; throws GradingMismatch if inhomogeneous.
  IntVec multidegree(const std::vector<IntVec>& grading) const;
  int max_variable() const;
  // Divide by the coefficient of the first canonical term.
  Polynomial monic() const;

  std::string to_string(const PolyRing& ring) const;

 private:
  std::vector<Term> terms_;
};

bool canonical_less(const Monomial& a, const Monomial& b);

Polynomial parse_polynomial(const std::string& text, const PolyRing& ring);

struct Ideal {
  PolyRing ring;
  std::vector<Polynomial> gens;
  // Rows of the grading matrix; empty when no multigrading is attached.
  std::vector<IntVec> grading;

  size_t nvars() const { return ring.nvars(); }
};

std::string serialize_polys(const std::vector<Polynomial>& polys, const PolyRing& ring);

}  // namespace tordeg
