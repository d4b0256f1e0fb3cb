// G- and C-matrices along mutation paths with arbitrary base matrix, the
// elementary E/F factorizations, and executable checks of the duality
// identities relating them.
#pragma once

#include "clusterkit/seed.hpp"

#include <vector>

namespace ck {

struct GCVertex {
    ZMat B; // exchange matrix at the vertex
    ZMat G;
    ZMat C;
};

struct GCRecord {
    std::vector<int> path;       // 0-based directions
    std::vector<GCVertex> per_vertex; // length path.size() + 1, base first
};

// G/C-matrices along `path` starting from base matrix B0, computed by the
// elementary E/F products driven by c-vector signs and cross-checked at every
// step against the definitional stacked-mutation route. Validates det = +-1,
// column sign-coherence of C and row sign-coherence of G at every vertex.
// Matrix arithmetic only; no Laurent expansions.
GCRecord gc_along(const ExchangeMatrix& B0, const std::vector<int>& path);

// Expands the cluster variables at the end of rec.path and checks that the
// E-product G-matrix equals the grading of the actual variables. Exponential
// in path length for wild inputs; call only at desk scale.
void check_g_grading_route(const GCRecord& rec, const ExchangeMatrix& B0);

// (G^{base;base}_{end})^T must equal the C-matrix of the pattern rebased at
// the end vertex with matrix B_end^T, replayed along the reversed path.
void verify_transpose_duality(const ExchangeMatrix& B0, const std::vector<int>& path);

// G(B0, path) . G(-B_end, reversed) = I and the same for C.
void verify_inverse_dualities(const ExchangeMatrix& B0, const std::vector<int>& path);

// G(B0, path) . B_end = B0 . C(B0, path).
void verify_gbc(const ExchangeMatrix& B0, const std::vector<int>& path);

// Entrywise: G(B0,path) vs G(-B0^T,path) and C(B0,path) vs C(-B0^T,path)
// agree in sign (both zero or strictly same sign) at the path endpoint.
void verify_sign_synchronicity(const ExchangeMatrix& B0, const std::vector<int>& path);

} // namespace ck
