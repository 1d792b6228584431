#pragma once

#include <optional>
#include <vector>

#include "tordeg/polytopes/polytope.hpp"
#include "tordeg/tropfan/tropical.hpp"

namespace tordeg {

// Generators of the toric component I(W_C) that are not in in_C(I). Throws NoneMissing when
// the initial ideal already equals its toric component.
std::vector<Polynomial> missing_binomials(const MaximalCone& cone);

struct ReembeddingStep {
  Ideal base;
  MaximalCone cone;                  // the non-prime cone of trop(V(base))
  std::vector<Polynomial> missing;   // f_1..f_s in the base ring
  Ideal extended;                    // base + <y_i - f_i>, y_i appended after the base variables
  IntMatrix grading;                 // base grading with one column deg(f_i) per y_i
  size_t base_vars = 0;
};

// Variable names default to y1, y2, ...
ReembeddingStep extend_ideal(const Ideal& base, const MaximalCone& cone, const std::vector<Polynomial>& missing,
                             const std::vector<std::string>& names = {});
ReembeddingStep extend_ideal(const Ideal& base, const MaximalCone& cone);

// A prime cone C' of trop(V(I')) lying over C.
struct HarvestedCone {
  size_t index = 0;  // into HarvestResult::fan.cones
  Ideal initial;
  Polytope polytope;
};

struct HarvestResult {
  TropicalFan fan;
  std::vector<HarvestedCone> lifts;
  std::vector<size_t> nonprime_over;  // recursion candidates
  std::vector<std::pair<ReembeddingStep, HarvestResult>> deeper;
};

// in_C(I) ⊆ in_C'(I') ∩ C[x]. Holds whenever the projection of C' meets the relative interior
// of C, and also for cones projecting onto a face of C that still refine in_C(I).
bool lies_over(const ReembeddingStep& step, const MaximalCone& lifted);

// Enumerates trop(V(I')) and keeps the prime cones lying over C. With depth > 1 and no
// prime lift, re-embeds again at the non-prime projecting cones. Depth is capped at 3.
// Throws NoPrimeLift when no prime lift is found within the depth, CellBudgetExceeded from the enumeration.
HarvestResult harvest_new_degenerations(const ReembeddingStep& step, const FanOptions& options = {}, int depth = 1);

}  // namespace tordeg
