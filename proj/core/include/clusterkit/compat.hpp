// Seed enumeration (finite type or depth-bounded), compatibility degrees via
// d-vectors with cross-cluster well-definedness checks, compatibility
// predicates for cluster-monomial degree vectors, and the restricted cluster
// complex.
#pragma once

#include "clusterkit/cones.hpp"
#include "clusterkit/seed.hpp"

#include <map>
#include <string>
#include <vector>

namespace ck {

struct CatalogSeed {
    std::vector<int> path; // BFS witness path from the base seed (0-based)
    SeedState state;
};

struct CatalogVariable {
    LaurentPoly expansion; // in the initial cluster
    DegreeVector g;
    ZVec d;
    std::vector<int> path; // witness seed containing the variable
    int index = 0;         // position inside that seed
};

struct SeedCatalog {
    ExchangeMatrix base;
    std::vector<CatalogSeed> seeds;
    std::vector<CatalogVariable> variables;
    std::vector<std::pair<int, int>> adjacency; // exchange-graph edges by seed id
    bool complete = false; // BFS closed (mutation-finite within the bound)
    int depth = 0;         // bound used (ignored when closure was reached)
};

// BFS over the pattern with seed dedup by sorted variable fingerprints.
// With require_finite the walk runs to closure and throws DepthExceeded if the
// safety bound is hit; otherwise it stops at depth_bound and labels the
// catalog partial when the frontier was still growing.
SeedCatalog enumerate_seeds(const ExchangeMatrix& B, int depth_bound, bool require_finite);

// Index into catalog.variables, or -1.
int find_variable(const SeedCatalog& cat, const LaurentPoly& expansion);

// (f | x): the d-entry of f at x's position, computed in EVERY catalog
// cluster containing x by rebasing and replaying paths; all values must
// agree (WellDefinednessViolation otherwise). Throws VariableNotInCatalog.
ZZ compatibility_degree(const SeedCatalog& cat, const LaurentPoly& f, const LaurentPoly& x);

// Compatibility of two catalog cluster-monomial degree vectors: pairwise
// compatibility degrees of the constituent variables are all <= 0;
// cross-checked against common-cluster existence and, when g+h is again a
// catalog monomial degree, the Minkowski identity N_g + N_h = N_{g+h}.
// Throws OutOfScope when a vector is not a catalog cluster-monomial degree.
bool are_compatible(const SeedCatalog& cat, const DegreeVector& g, const DegreeVector& h);

// Simplicial fan of the g-vector cones of all catalog seeds; validates that
// cones meet along common faces.
Fan cluster_complex(const SeedCatalog& cat);

// For every catalog seed, freezing the variables at positions I must leave
// all seeds containing that variable set reachable by mutations that avoid
// them. Throws ConnectivityViolation with a witness pair.
void freeze_connectivity_check(const SeedCatalog& cat, const std::vector<int>& I);

} // namespace ck
