// Exchange matrices: mutation, sign-skew-symmetry checking, structural
// predicates used to whitelist inputs.
#pragma once

#include "clusterkit/linalg.hpp"

#include <optional>
#include <vector>

namespace ck {

struct ExchangeMatrix {
    int n = 0;
    ZMat b; // n x n

    ExchangeMatrix() = default;
    // Throws NotSignSkewSymmetric unless for all i,j either b_ij = b_ji = 0 or
    // b_ij * b_ji < 0.
    explicit ExchangeMatrix(ZMat entries);

    bool operator==(const ExchangeMatrix& o) const { return b == o.b; }
    ZVec column(int k) const;
};

bool is_sign_skew_symmetric(const ZMat& b);

// Matrix mutation in direction k (0-based). Also used on stacked matrices via
// mutate_rect. The result is re-checked for sign-skew-symmetry.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k);

// Mutation of an arbitrary tall matrix (rows >= n) in direction k, where the
// k-th *row* of the top n x n block supplies the correction signs.
ZMat mutate_rect(const ZMat& m, int k, int n);

// Walks the path, checking sign-skew-symmetry after each step. Returns
// nullopt on success, or the 0-based index of the first failing step.
std::optional<int> check_tsss_along(const ExchangeMatrix& B, const std::vector<int>& path);

ExchangeMatrix negate_transpose(const ExchangeMatrix& B);

// True iff the digraph with an arc i -> j whenever b_ij > 0 is acyclic.
bool is_acyclic(const ExchangeMatrix& B);

// Mutates along a whole path (0-based directions).
ExchangeMatrix mutate_along(ExchangeMatrix B, const std::vector<int>& path);

} // namespace ck
