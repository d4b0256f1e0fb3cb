// Sparse exact Laurent polynomials in Z[Y][X^±]: the carrier of cluster
// variables, exchange binomials and F-polynomials.
#pragma once

#include "clusterkit/exchange.hpp"
#include "clusterkit/linalg.hpp"

#include <map>
#include <string>

namespace ck {

using DegreeVector = ZVec;

struct TermKey {
    ZVec y; // y-exponents (>= 0 for in-scope elements)
    ZVec x; // x-exponents (any sign)
    auto operator<=>(const TermKey&) const = default;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly monomial(int n, const ZVec& xexp, const ZVec& yexp, const ZZ& coeff = 1);
    static LaurentPoly constant(int n, const ZZ& c) { return monomial(n, ZVec(n, 0), ZVec(n, 0), c); }
    static LaurentPoly x_var(int n, int i);

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<TermKey, ZZ>& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    void add_term(const TermKey& k, const ZZ& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(unsigned e) const;

    // Throws InvariantViolation if any y-exponent is negative.
    void check_y_nonnegative() const;

    std::string pretty() const;
    // Canonical serialization used as a dedup fingerprint.
    std::string fingerprint() const;

private:
    int n_ = 0;
    std::map<TermKey, ZZ> terms_;
};

// Exact quotient in the Laurent ring; throws NotDivisible if none exists.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Common Z^n-degree of all terms (deg x_i = e_i, deg y_j = -b_j); throws
// NotHomogeneous listing two conflicting terms.
DegreeVector grade(const LaurentPoly& f, const ExchangeMatrix& B);

// x -> 1 specialization (all x-exponents zeroed, coefficients merged).
LaurentPoly specialize_x(const LaurentPoly& f);

// f = sum_s x_k^s * part(s) with each part free of x_k.
std::map<ZZ, LaurentPoly> x_degree_decompose(const LaurentPoly& f, int k);

// Componentwise negated minimum x-exponent.
ZVec d_vector_of(const LaurentPoly& f);

// Term budget shared by all expansions (env CLUSTER_MAX_TERMS, default 10^7).
size_t term_limit();

// Overrides the budget for the current process (0 restores the default);
// returns the previous value. Lets callers bound exploratory expansions.
size_t set_term_limit(size_t limit);

} // namespace ck
