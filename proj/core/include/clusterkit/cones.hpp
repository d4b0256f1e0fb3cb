// Exact polyhedral cones and fans: canonical forms, membership, faces,
// intersections, normal fans and common refinements.
#pragma once

#include "clusterkit/polytope.hpp"

#include <string>
#include <vector>

namespace ck {

struct Cone {
    int n = 0;
    std::vector<ZVec> rays; // primitive generators; canonicalized by make_cone
};

// Dedups/primitivizes generators and drops redundant ones; sorts the rest.
Cone make_cone(int n, std::vector<ZVec> gens);

int cone_dim(const Cone& c);
bool cone_contains(const Cone& c, const ZVec& v);
bool cone_subset(const Cone& inner, const Cone& outer);
bool cone_equal(const Cone& a, const Cone& b);
std::string cone_key(const Cone& c);

struct ConeHRep {
    std::vector<ZVec> equalities;   // w . x = 0
    std::vector<ZVec> inequalities; // w . x <= 0  (facets when the cone is solid in its span)
};

ConeHRep cone_hrep(const Cone& c);

Cone cone_intersect(const Cone& a, const Cone& b);

// All faces of c (including c itself and, when pointed, the origin with no rays).
std::vector<Cone> cone_faces(const Cone& c);

bool is_face_of(const Cone& face, const Cone& c);

struct Fan {
    int n = 0;
    std::vector<Cone> maximal;
};

// Dedups maximal cones and drops cones contained in others.
Fan make_fan(int n, std::vector<Cone> cones);

// Normal fan of a weighted polytope: one maximal cone per hull vertex,
// generated by the outer facet normals (plus lineality when the polytope is
// not full-dimensional).
Fan normal_fan(const WeightedPolytope& p);

Fan common_refinement(const Fan& a, const Fan& b);

bool fan_equal(const Fan& a, const Fan& b);

// Whether `c` occurs in the fan as a maximal cone or as a face of one.
bool fan_contains_cone(const Fan& f, const Cone& c);

// Desk-scale structural validation: pairwise intersections are common faces.
void check_fan_structure(const Fan& f);

// Pure full-dimensional fans: complete iff every facet of a maximal cone is
// shared by exactly two maximal cones.
bool fan_is_complete(const Fan& f);

} // namespace ck
