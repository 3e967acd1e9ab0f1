#pragma once

#include <vector>

#include "topo/normal.hpp"
#include "topo/refine.hpp"
#include "topo/surface.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Prism triangulation of (surface) x I: three tetrahedra per triangle,
// blocks glued along the side squares split by the diagonal the edge
// orientations pick out.
struct PrismComplex {
  Triangulation tri;
  std::vector<int> prism_tets;       // all tets, in block order
  NormalVector canonical;            // the middle copy of the surface
  struct Block {
    int d0, d1, d2;
  };
  std::vector<Block> blocks;  // per surface triangle
};

// Requires count_cyclic(s) == 0 and no edge with both endpoints in one
// vertex class.
PrismComplex build_prism(const SurfaceTriangulation& s);

// Cones all boundary components of the prism (they must be spheres for the
// coning to apply) and refines every cone tet n times, leaving the prism
// tets untouched. Returns the refined closed triangulation, the composed
// refinement map from the coned triangulation, and the final indices of the
// prism tets.
struct HeavyExterior {
  Triangulation tri;
  RefinementMap map;  // from the coned triangulation
  std::vector<int> prism_tets;
};

HeavyExterior build_heavy_exterior(const PrismComplex& p, int n);

}  // namespace topo
