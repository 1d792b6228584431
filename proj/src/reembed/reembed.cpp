#include "tordeg/reembed/reembed.hpp"

#include "tordeg/errors.hpp"
#include "tordeg/poly/ideal_ops.hpp"
#include "tordeg/polytopes/normalization.hpp"

namespace tordeg {

std::vector<Polynomial> missing_binomials(const MaximalCone& cone) {
  LatticeIdealData data = toric_component(cone.initial, cone.W);
  std::vector<Polynomial> out;
  for (const auto& g : minimal_generators(data.ideal))
    if (!ideal_contains(cone.initial, g)) out.push_back(g);
  if (out.empty()) throw Error(ErrorKind::NoneMissing, "initial ideal equals its toric component");
  return out;
}

ReembeddingStep extend_ideal(const Ideal& base, const MaximalCone& cone, const std::vector<Polynomial>& missing,
                             const std::vector<std::string>& names) {
  ReembeddingStep s;
  s.base = base;
  s.cone = cone;
  s.missing = missing;
  s.base_vars = base.nvars();
  std::vector<std::string> ys = names;
  for (size_t i = ys.size(); i < missing.size(); ++i) ys.push_back("y" + std::to_string(i + 1));
  if (ys.size() != missing.size()) throw Error(ErrorKind::InvalidInput, "one name per missing binomial");
  s.extended.ring = extend_ring(base.ring, ys);
  s.extended.gens = base.gens;
  for (size_t i = 0; i < missing.size(); ++i)
    s.extended.gens.push_back(Polynomial::variable(s.base_vars + i) - missing[i]);

  const size_t k = base.grading.size();
  s.grading = IntMatrix(k, s.base_vars + missing.size());
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < s.base_vars; ++c) s.grading.at(r, c) = base.grading[r][c];
  for (size_t i = 0; i < missing.size(); ++i) {
    for (size_t r = 0; r < k; ++r)
      if (!missing[i].is_homogeneous(base.grading[r]))
        throw Error(ErrorKind::NotHomogeneous, "missing binomial is not homogeneous for the grading");
    IntVec d = missing[i].multidegree(base.grading);
    for (size_t r = 0; r < k; ++r) s.grading.at(r, s.base_vars + i) = d[r];
  }
  s.extended.grading = s.grading.row_vectors();
  return s;
}

ReembeddingStep extend_ideal(const Ideal& base, const MaximalCone& cone) {
  return extend_ideal(base, cone, missing_binomials(cone));
}

bool lies_over(const ReembeddingStep& step, const MaximalCone& lifted) {
  Ideal projected = eliminate_last_variables(lifted.initial, step.missing.size());
  return ideal_contains(projected, step.cone.initial);
}

HarvestResult harvest_new_degenerations(const ReembeddingStep& step, const FanOptions& options, int depth) {
  if (depth < 1 || depth > 3) throw Error(ErrorKind::InvalidInput, "re-embedding depth must be between 1 and 3");
  HarvestResult r;
  r.fan = enumerate_tropical_fan(step.extended, options);
  for (size_t i = 0; i < r.fan.cones.size(); ++i) {
    const MaximalCone& c = r.fan.cones[i];
    if (!lies_over(step, c)) continue;
    if (c.prime) r.lifts.push_back({i, c.initial, normalization_polytope(c, step.grading)});
    else r.nonprime_over.push_back(i);
  }
  if (!r.lifts.empty()) return r;
  if (depth > 1) {
    bool found = false;
    for (size_t i : r.nonprime_over) {
      ReembeddingStep next = extend_ideal(step.extended, r.fan.cones[i]);
      try {
        HarvestResult sub = harvest_new_degenerations(next, options, depth - 1);
        found = true;
        r.deeper.emplace_back(std::move(next), std::move(sub));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoPrimeLift) throw;
      }
    }
    if (found) return r;
  }
  throw Error(ErrorKind::NoPrimeLift, "no prime cone lies over the cone");
}

}  // namespace tordeg
