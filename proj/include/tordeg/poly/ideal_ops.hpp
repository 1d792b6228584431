#pragma once

#include <vector>

#include "tordeg/poly/groebner.hpp"

namespace tordeg {

// Positive weight vector for which every generator is homogeneous: the sum of the
// grading rows if the ideal carries a grading, otherwise the all-ones vector.
// Throws NotHomogeneous when neither applies.
IntVec positive_grading(const Ideal& ideal);
bool has_positive_grading(const Ideal& ideal);

Polynomial initial_form(const Polynomial& f, const IntVec& w);

// Reduced Gröbner basis for the MIN-convention order refining w, together with the
// initial forms of its elements. The initial forms are the reduced Gröbner basis of
// in_w(I) for the tiebreak order, so their serialization identifies in_w(I).
struct WeightedBasis {
  IntVec w;
  GroebnerBasis gb;
  std::vector<Polynomial> initial_forms;
};
WeightedBasis weighted_groebner(const Ideal& ideal, const IntVec& w);

Ideal initial_ideal(const Ideal& ideal, const IntVec& w);
std::string canonical_text(const Ideal& ideal);

bool is_binomial(const std::vector<Polynomial>& gens);
bool has_monomial_generator(const std::vector<Polynomial>& gens);
// Exact: true iff the ideal contains no monomial, decided by saturating with the
// product of all variables.
bool is_monomial_free(const Ideal& ideal);

Ideal saturate(const Ideal& ideal, const Polynomial& f);
Ideal saturate_by_variable(const Ideal& ideal, size_t var);
Ideal saturate_by_all_variables(const Ideal& ideal);

// Homogenize with a new last variable h for the given positive weighting (default all ones).
Ideal homogenize(const Ideal& ideal, const IntVec& weighting = {});
Ideal dehomogenize(const Ideal& ideal, size_t hvar);
Polynomial homogenize_polynomial(const Polynomial& f, const IntVec& weighting, size_t hvar);

// Reduced Gröbner basis for a fixed order: grevlex, or the positive grading order
// when the ideal carries a grading.
GroebnerBasis standard_basis(const Ideal& ideal);
bool ideals_equal(const Ideal& a, const Ideal& b);
bool ideal_contains(const Ideal& ideal, const Polynomial& f);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool is_unit_ideal(const Ideal& ideal);

// Minimal homogeneous generating set chosen greedily from the reduced basis by degree.
std::vector<Polynomial> minimal_generators(const Ideal& ideal);

// Ring with extra variables appended.
PolyRing extend_ring(const PolyRing& ring, const std::vector<std::string>& names);
Ideal eliminate_last_variables(const Ideal& ideal, size_t count);

}  // namespace tordeg
