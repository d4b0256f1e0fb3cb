// Exact integer/rational linear algebra on top of GMP: the shared vector and
// matrix types plus the small solvers the geometry layers need (rank, linear
// solve, nullspace, Hermite normal form, nonnegative-combination feasibility).
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace ck {

using ZZ = mpz_class;
using QQ = mpq_class;
using ZVec = std::vector<ZZ>;
using ZMat = std::vector<ZVec>; // row-major
using QVec = std::vector<QQ>;
using QMat = std::vector<QVec>;

inline int sgn(const ZZ& a) { return mpz_sgn(a.get_mpz_t()); }
inline ZZ pos_part(const ZZ& a) { return a > 0 ? a : ZZ(0); }

ZMat identity_mat(int n);
ZMat zero_mat(int rows, int cols);
ZMat transpose(const ZMat& m);
ZMat matmul(const ZMat& a, const ZMat& b);
ZVec matvec(const ZMat& a, const ZVec& v);
ZVec vec_add(const ZVec& a, const ZVec& b);
ZVec vec_sub(const ZVec& a, const ZVec& b);
ZVec vec_neg(const ZVec& a);
ZVec vec_scale(const ZZ& c, const ZVec& a);
ZZ dot(const ZVec& a, const ZVec& b);
bool is_zero_vec(const ZVec& a);

// Divides by the gcd of the entries; zero vectors are returned unchanged.
ZVec primitive(const ZVec& v);

QMat to_qmat(const ZMat& m);
int rank_q(QMat m);
int rank_z(const ZMat& m);

// Solves A x = b over the rationals (A given row-major, any shape).
std::optional<QVec> solve_q(const QMat& a, const QVec& b);

// Basis of the right nullspace of A, as primitive integer vectors.
std::vector<ZVec> nullspace_z(const ZMat& a);

// Row-style Hermite normal form; returns the nonzero rows (a lattice basis
// for the row span of A).
ZMat hnf_rows(ZMat a);

// Feasibility of  sum_i lambda_i g_i = target  with lambda_i >= 0, exact
// rational phase-1 simplex. Generators are the rows of `gens`.
bool in_cone_span(const std::vector<ZVec>& gens, const ZVec& target);

// Determinant (exact, fraction-free not required at desk scale).
ZZ det_z(const ZMat& m);

} // namespace ck
