// Principal-coefficient cluster patterns: seeds along mutation paths,
// F-polynomials, g/c/d-vectors and the frame-transport operator.
#pragma once

#include "clusterkit/exchange.hpp"
#include "clusterkit/laurent.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace ck {

struct SeedState {
    ExchangeMatrix B; // B_t
    ZMat C;           // C_t (bottom block of the stacked matrix)
    std::vector<LaurentPoly> vars; // expansions of x_{i;t} in the initial cluster

    bool operator==(const SeedState& o) const { return B == o.B && C == o.C && vars == o.vars; }
};

SeedState initial_seed(const ExchangeMatrix& B0);

// One seed mutation in direction k (0-based). Checks the column
// sign-coherence of C and the constant-term-1 invariant of the new variable.
SeedState mutate_seed(const SeedState& s, int k);

// Exchange binomial M_{k;t} expressed in the initial cluster.
LaurentPoly exchange_binomial(const SeedState& s, int k);

class Pattern {
public:
    explicit Pattern(ExchangeMatrix B0) : B0_(std::move(B0)) {}

    const ExchangeMatrix& base() const { return B0_; }
    // Seed at the end of `path` (0-based directions), memoized per prefix.
    SeedState state_at(const std::vector<int>& path);

private:
    ExchangeMatrix B0_;
    std::map<std::vector<int>, SeedState> cache_;
    std::mutex mu_;
};

DegreeVector g_vector(const SeedState& s, int i, const ExchangeMatrix& B0);

// Degree of vars[i] computed purely by the elementary recurrence; both
// epsilon signs must agree and the result must match the grading route.
DegreeVector g_vector_recurrence(Pattern& pattern, const std::vector<int>& path, int i);

ZVec d_vector(const SeedState& s, int i);

// x -> 1 specialization with the constant-term / unique-maximal-term checks.
LaurentPoly f_polynomial(const SeedState& s, int i);

// Asserts that f has constant term 1 and a unique componentwise-maximal
// y-exponent with coefficient 1 (throws InvariantViolation otherwise).
void check_f_polynomial_shape(const LaurentPoly& f);

struct Transported {
    LaurentPoly f;  // expressed in the frame across edge k, coefficients in Z[Y']
    DegreeVector h; // degree in the new frame
};

// Frame transport across the edge t' -(k)- t of a degree-h homogeneous f
// given in the frame at t' with exchange matrix B_old. Throws
// NotALaurentPolynomial when the image leaves Z[Y'][X^±].
Transported transport(const LaurentPoly& f, const DegreeVector& h, int k, const ExchangeMatrix& B_old);

// Degree map accompanying transport: h - 2 h_k e_k + h_k [b_k]_+ + [-h_k]_+ b_k.
DegreeVector transport_degree(const DegreeVector& h, int k, const ExchangeMatrix& B_old);

} // namespace ck
