#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tordeg/exactmath/cone.hpp"
#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/poly/groebner.hpp"

namespace tordeg {

// Maximal cones of trop(f): one per pair of terms attaining the minimum, kept when the
// pair cone has codimension one.
struct TropicalHypersurfaceFan {
  Polynomial f;
  std::vector<std::pair<size_t, size_t>> pairs;  // term indices
  std::vector<RationalCone> cones;
};
TropicalHypersurfaceFan tropical_hypersurface(const Polynomial& f, size_t nvars);

// Closed Gröbner cone of in_w(I) in the MIN convention, read off a marked reduced basis:
// equalities among the terms of each initial form, and tail >= head for the other terms.
struct GroebnerConeRows {
  std::vector<IntVec> inequalities;
  std::vector<IntVec> equalities;
};
GroebnerConeRows groebner_cone_rows(const GroebnerBasis& gb, const std::vector<Polynomial>& initial_forms);

struct LatticeIdealData {
  IntMatrix kernel;                     // columns: integer_kernel(W_C)
  std::vector<IntVec> binomial_lattice;  // basis of the lattice spanned by the binomials' exponents
  std::vector<Rational> coefficients;   // c for x^{l+} - c x^{l-}, one per generator of ideal
  Ideal ideal;                          // saturation of the initial ideal by all variables
};

struct PrimeReport {
  bool binomial = false;
  bool rescalable = false;
  bool saturated = false;
  bool equals_toric = false;
  bool degree_certificate = false;
  bool prime() const { return binomial && rescalable && saturated && equals_toric; }
};

struct MaximalCone {
  RationalCone cone;
  IntVec interior;
  Ideal initial;    // reduced basis of in_C(I)
  std::string key;  // serialization of the initial ideal
  IntMatrix W;      // rows: lineality basis followed by independent rays
  bool binomial = false;
  bool prime = false;
  BigInt multiplicity = 0;  // 0 when the initial ideal is not binomial
  bool multiplicity_one = false;
  bool degree_certificate = false;
  bool rescaling_obstruction = false;
  int orbit = -1;
};

struct TropicalFan {
  size_t ambient_dim = 0;
  size_t target_dim = 0;  // Krull dimension; maximal cones have this dimension
  std::vector<IntVec> lineality;
  std::vector<MaximalCone> cones;
  size_t cells = 0;

  // Index of the maximal cone containing w in its relative interior.
  std::optional<size_t> locate(const IntVec& w) const;
};

struct FanOptions {
  size_t cell_budget = 500000;
  int max_split_depth = 64;
  bool classify = true;  // attach W_C, primality and multiplicity flags
  unsigned threads = 1;  // workers for cone classification
};

TropicalFan enumerate_tropical_fan(const Ideal& ideal, const FanOptions& options = {});

// Independent integer rows of the closed cone spanning its linear span.
IntMatrix cone_generator_matrix(const RationalCone& cone);

// Saturation of a binomial, monomial-free initial ideal by all variables, with its lattice data.
// Throws NotBinomialAfterSaturation when the saturation has a generator with more than two terms.
LatticeIdealData toric_component(const Ideal& initial, const IntMatrix& W);

// Primality of the initial ideal via its toric component. Throws RescalingObstruction when
// the coefficients cannot be normalized by a rational rescaling of the variables.
PrimeReport is_prime_binomial(const Ideal& initial, const LatticeIdealData& data);

// Number of torus orbits of V(in_C(I)) counted with multiplicity: the index of the
// binomial lattice in its saturation (a lattice ideal is radical in characteristic zero).
BigInt tropical_multiplicity(const LatticeIdealData& data);
bool multiplicity_one_certificate(const Ideal& initial, const LatticeIdealData& data);
// Degree of the initial ideal equals the degree of its toric component, both under the
// positive grading of the ideal.
bool degree_certificate(const Ideal& initial, const LatticeIdealData& data);

// Classify one cone in place from its initial ideal.
void classify_cone(MaximalCone& cone);

// Min selects the terms of minimal w-weight. Max selects maximal terms, i.e. in_{-w} under Min.
enum class WeightConvention { Min, Max };

struct MembershipReport {
  IntVec w;
  WeightConvention convention = WeightConvention::Min;
  IntVec effective;  // w under the Min convention
  Ideal initial;
  bool monomial_free = false;
  bool binomial = false;
  bool prime = false;
  bool multiplicity_one = false;
  bool rescaling_obstruction = false;
  std::optional<size_t> cone;
};
MembershipReport weight_vector_membership(const Ideal& ideal, const IntVec& w, const TropicalFan* fan = nullptr,
                                          WeightConvention convention = WeightConvention::Min);

}  // namespace tordeg
