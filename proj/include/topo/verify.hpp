#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topo/prism.hpp"
#include "topo/refine.hpp"
#include "topo/surface.hpp"
#include "topo/triangulation.hpp"

namespace topo {

struct VerificationReport {
  std::string scenario;
  std::string params;
  bool pass = false;
  std::vector<std::string> payload;  // counterexamples / summary lines
  int64_t millis = 0;

  // Stable field order; timing omitted when with_timing is false so two runs
  // can be compared byte for byte.
  std::string to_string(bool with_timing = true) const;
};

// Exhaustively checks, within the weight cap, that admissible vectors of t
// push forward admissibly to the refined triangulation, that admissible
// vectors of the refinement classify back to a vector of t plus cone-vertex
// spheres, and that both compositions reproduce their input.
VerificationReport verify_theorem1(const Triangulation& t,
                                   const ScalingFunction& f, int64_t max_w1);

// Runs weight_growth for all 7 disk kinds to depth n (n >= 1) and checks
// w_0 >= 3 plus the growth recurrences.
VerificationReport verify_lemma_weights(int n);

// Builds the prism over s and checks that the only connected closed
// admissible vector within the cap is the canonical middle surface.
VerificationReport verify_prism(const SurfaceTriangulation& s, int64_t max_w1);

// Builds the heavy exterior at scale n and checks that every admissible
// vector of weight <= min(max_w1, n) is supported in the prism tets.
VerificationReport verify_outside(const PrismComplex& p, int n,
                                  int64_t max_w1);

}  // namespace topo
