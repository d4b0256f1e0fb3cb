// The cube polytope with tracked edge sets under mutation, edge-vector and
// normal-vector mutation formulas, the iterative normal-set algorithm, and
// the fan N_g with its containment checks.
#pragma once

#include "clusterkit/compat.hpp"
#include "clusterkit/cones.hpp"
#include "clusterkit/polytope.hpp"

#include <vector>

namespace ck {

struct TrackedEdge {
    ZVec p, q; // ordered endpoints (lattice points of the polytope)
};

struct TrackedCube {
    std::vector<int> path;  // mutations applied so far (0-based)
    ExchangeMatrix B;       // exchange matrix at the current vertex
    // 2n cluster-variable factors in the current frame whose product has the
    // cube as Newton polytope, with their degree vectors.
    std::vector<LaurentPoly> factors;
    std::vector<DegreeVector> factor_h;
    WeightedPolytope polytope;
    DegreeVector h; // degree of the product
    std::vector<TrackedEdge> edges_minus, edges_plus; // n tracked edges each
};

// The unit n-cube with weight 1 everywhere, realized as the Newton polytope
// of prod_i x_i * mu_i(x_i), with the 2n bottom/top tracked edges.
TrackedCube cube(const ExchangeMatrix& B);

// One mutation step: factors transported algebraically (ground truth), the
// geometric polytope route cross-checked up to the product-normalization
// translation, and every tracked edge re-identified by endpoint correlation.
TrackedCube mutate_tracked(const TrackedCube& tc, int k);

// Columns j = primitive(q_j - p_j) of the requested edge family (eps = +-1).
// Checks that each column is nonzero and sign-coherent.
ZMat tracked_edges(const TrackedCube& tc, int eps);

// Column i = primitive outer normal of the unique facet containing the n-1
// edges of the eps family other than edge i. Throws FacetNotFound when the
// facet is not unique.
ZMat tracked_normals(const TrackedCube& tc, int eps);

// Normal-vector mutation in direction k with matrix M; v with v_k = 0 is
// returned unchanged. Result is primitive.
ZVec normal_mutation(const ZVec& v, int k, const ZMat& M);

struct NormalSet {
    int vertex = 0; // j for t_j along the path (0 = base)
    std::vector<std::vector<ZVec>> matrices; // each matrix as a list of columns
};

// The iterative normal-set algorithm: walk from the end of `path` back to the
// base, starting from the diagonal sign matrix I^lambda and mutating column
// sets with -B^T of the source vertex. Returns the sets for t_r, ..., t_0.
std::vector<NormalSet> g_sets(const ExchangeMatrix& B0, const std::vector<int>& path,
                              const std::vector<int>& lambda);

struct NgResult {
    Fan fan;
    bool truncated = false; // depth-bounded approximation of infinite type
    int depth = 0;
};

// Normal fan of the Minkowski sum of the cluster-variable Newton polytopes of
// the companion pattern with base -B^T (route 1).
NgResult ng_fan_minkowski(const ExchangeMatrix& B0, int depth_bound, bool require_finite);

// Common refinement over catalog vertices of the fans spanned by the
// normal-set matrices for all sign vectors lambda (route 2).
NgResult ng_fan_refinement(const ExchangeMatrix& B0, int depth_bound, bool require_finite);

// Computes both routes, throws RouteMismatch if they disagree, returns the fan.
NgResult ng_fan(const ExchangeMatrix& B0, int depth_bound, bool require_finite);

// Every g-vector cone of the catalog of B occurs as a cone of N_g, and both
// closed orthants occur. Throws ContainmentViolation.
void gfan_containment_check(const ExchangeMatrix& B0, int depth_bound, bool require_finite);

} // namespace ck
