#pragma once

#include <vector>

#include "tordeg/poly/groebner.hpp"

namespace tordeg {

// Hilbert series K(t) / Π (1 - t^{g_i}) of S/I for a positive weighting g.
struct HilbertSeries {
  std::vector<BigInt> numerator;  // K(t), index = exponent
  size_t krull_dimension = 0;
  // K(t) = (1-t)^{n-d} Q(t); for the standard grading Q(1) is the degree.
  BigInt q_at_one;
  // Q(1) / Π g_i: the normalized leading coefficient, comparable across ideals in one ring.
  Rational degree;
};

// Numerator of the Hilbert series of S/M for a monomial ideal M.
std::vector<BigInt> monomial_hilbert_numerator(const std::vector<Monomial>& gens, const IntVec& weights);

HilbertSeries hilbert_series_from_leading(const std::vector<Monomial>& leading, const IntVec& weights);
// Uses a Gröbner basis for the order given by the weighting followed by revlex.
HilbertSeries hilbert_series(const Ideal& ideal, const IntVec& weights);
HilbertSeries hilbert_series(const Ideal& ideal, const IntVec& weights, const MonomialOrder& order);

// Degree of Proj(S/I) for the standard grading; throws NotHomogeneous.
BigInt degree_via_hilbert(const Ideal& ideal);

}  // namespace tordeg
