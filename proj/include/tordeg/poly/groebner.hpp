#pragma once

#include <memory>
#include <vector>

#include "tordeg/poly/order.hpp"
#include "tordeg/poly/polynomial.hpp"

namespace tordeg {

// Reduced Gröbner basis: each element monic w.r.t. its marked leading monomial,
// sorted by increasing leading monomial.
struct GroebnerBasis {
  PolyRing ring;
  MonomialOrder order;
  std::vector<Polynomial> polys;
  std::vector<Monomial> leading;

  std::string to_string() const { return serialize_polys(polys, ring); }
};

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order);

// Also returns cofactors: polys[k] = Σ_j cofactors[k][j] * ideal.gens[j].
struct CertifiedGroebnerBasis {
  GroebnerBasis gb;
  std::vector<std::vector<Polynomial>> cofactors;
};
CertifiedGroebnerBasis groebner_basis_with_cofactors(const Ideal& ideal, const MonomialOrder& order);

// Reusable normal-form computation against a fixed basis.
class GroebnerReducer {
 public:
  explicit GroebnerReducer(const GroebnerBasis& gb);
  ~GroebnerReducer();
  GroebnerReducer(const GroebnerReducer&) = delete;
  GroebnerReducer& operator=(const GroebnerReducer&) = delete;

  Polynomial reduce(const Polynomial& f) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool gb_contains(const GroebnerBasis& gb, const Polynomial& f);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
// f = Σ quotients[i] * divisors[i] + remainder, reducing leading terms only while possible
// and moving irreducible terms to the remainder.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

}  // namespace tordeg
