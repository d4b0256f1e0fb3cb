// Weighted lattice polytopes: Newton polytopes of Laurent polynomials,
// weighted Minkowski sums, exact face enumeration, and the geometric
// mutation procedure (section surgery, translation, shear).
#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/seed.hpp"

#include <map>
#include <vector>

namespace ck {

struct WeightedPolytope {
    int n = 0;
    std::map<ZVec, ZZ> weights; // lattice point -> nonzero weight

    WeightedPolytope() = default;
    WeightedPolytope(int rank, std::map<ZVec, ZZ> w);

    bool operator==(const WeightedPolytope& o) const { return n == o.n && weights == o.weights; }
    std::vector<ZVec> support() const;
};

struct Face {
    ZVec normal;  // valid supporting normal (primitive; zero only for the improper face of a full-dimensional polytope)
    ZZ offset;    // max of normal . p over the support
    std::vector<ZVec> points; // support points on the face, sorted
    int dim = 0;  // affine dimension
};

// y-exponent support of the x -> 1 specialization of a homogeneous f.
WeightedPolytope newton(const LaurentPoly& f, const ExchangeMatrix& B);
WeightedPolytope newton_of_support(const LaurentPoly& f_in_y);

WeightedPolytope minkowski(const WeightedPolytope& a, const WeightedPolytope& b);
WeightedPolytope translate(const WeightedPolytope& a, const ZVec& by);

// Vertices of the convex hull of the support (exact).
std::vector<ZVec> hull_vertices(const WeightedPolytope& p);

// All faces (proper faces plus the polytope itself), sorted by (dim, points).
std::vector<Face> faces(const WeightedPolytope& p);

// Affine dimension of the support.
int affine_dim(const std::vector<ZVec>& pts);

bool in_convex_hull(const ZVec& point, const std::vector<ZVec>& pts);

// Sub-polytope of points agreeing with v outside the index set I.
WeightedPolytope section(const WeightedPolytope& p, const ZVec& v, const std::vector<int>& I);

struct MutatedPolytope {
    WeightedPolytope polytope;
    DegreeVector h;
    // Correspondence data for tracking: images of the bottom and top ends of
    // every k-section, keyed by the original end point.
    std::map<ZVec, ZVec> bottom_image;
    std::map<ZVec, ZVec> top_image;
};

// Geometric mutation of (N, h) in direction k: per-section weight surgery,
// translation by -[h_k]_+ e_k, then the unimodular shear phi.
MutatedPolytope mutate_polytope_geometric(const WeightedPolytope& N, const DegreeVector& h, int k,
                                          const ExchangeMatrix& B);

} // namespace ck
