#include "clusterkit/seed.hpp"

#include "clusterkit/errors.hpp"

namespace ck {

SeedState initial_seed(const ExchangeMatrix& B0) {
    SeedState s;
    s.B = B0;
    s.C = identity_mat(B0.n);
    for (int i = 0; i < B0.n; ++i) s.vars.push_back(LaurentPoly::x_var(B0.n, i));
    return s;
}

static void check_c_column_sign_coherent(const ZMat& C) {
    int n = static_cast<int>(C.size());
    for (int j = 0; j < n; ++j) {
        bool has_pos = false, has_neg = false, has_nonzero = false;
        for (int i = 0; i < n; ++i) {
            if (C[i][j] > 0) has_pos = true;
            if (C[i][j] < 0) has_neg = true;
            if (C[i][j] != 0) has_nonzero = true;
        }
        if ((has_pos && has_neg) || !has_nonzero)
            throw InvariantViolation("C-matrix column " + std::to_string(j + 1) + " is not sign-coherent");
    }
}

LaurentPoly exchange_binomial(const SeedState& s, int k) {
    int n = s.B.n;
    ZVec cp(n), cm(n);
    for (int i = 0; i < n; ++i) {
        cp[i] = pos_part(s.C[i][k]);
        cm[i] = pos_part(-s.C[i][k]);
    }
    LaurentPoly t1 = LaurentPoly::monomial(n, ZVec(n, 0), cp);
    LaurentPoly t2 = LaurentPoly::monomial(n, ZVec(n, 0), cm);
    for (int i = 0; i < n; ++i) {
        ZZ bik = s.B.b[i][k];
        if (bik > 0) t1 = t1 * s.vars[i].pow(static_cast<unsigned>(bik.get_ui()));
        if (bik < 0) t2 = t2 * s.vars[i].pow(static_cast<unsigned>(ZZ(-bik).get_ui()));
    }
    return t1 + t2;
}

SeedState mutate_seed(const SeedState& s, int k) {
    int n = s.B.n;
    LaurentPoly num = exchange_binomial(s, k);
    LaurentPoly fresh = exact_div(num, s.vars[k]);
    fresh.check_y_nonnegative();
    check_f_polynomial_shape(specialize_x(fresh));

    ZMat stacked = s.B.b;
    stacked.insert(stacked.end(), s.C.begin(), s.C.end());
    stacked = mutate_rect(stacked, k, n);
    SeedState out;
    ZMat top(stacked.begin(), stacked.begin() + n);
    if (!is_sign_skew_symmetric(top))
        throw NotSignSkewSymmetric("seed mutation left the sign-skew-symmetric class");
    out.B.n = n;
    out.B.b = std::move(top);
    out.C = ZMat(stacked.begin() + n, stacked.end());
    check_c_column_sign_coherent(out.C);
    out.vars = s.vars;
    out.vars[k] = std::move(fresh);
    return out;
}

SeedState Pattern::state_at(const std::vector<int>& path) {
    std::scoped_lock lock(mu_);
    // longest cached prefix, then extend
    std::vector<int> prefix = path;
    while (!prefix.empty() && !cache_.count(prefix)) prefix.pop_back();
    SeedState cur;
    if (prefix.empty()) {
        auto it = cache_.find(prefix);
        if (it == cache_.end()) it = cache_.emplace(prefix, initial_seed(B0_)).first;
        cur = it->second;
    } else {
        cur = cache_[prefix];
    }
    for (size_t i = prefix.size(); i < path.size(); ++i) {
        cur = mutate_seed(cur, path[i]);
        prefix.push_back(path[i]);
        cache_.emplace(prefix, cur);
    }
    return cur;
}

DegreeVector g_vector(const SeedState& s, int i, const ExchangeMatrix& B0) {
    return grade(s.vars[i], B0);
}

DegreeVector g_vector_recurrence(Pattern& pattern, const std::vector<int>& path, int i) {
    const ExchangeMatrix& B0 = pattern.base();
    int n = B0.n;
    ZMat G = identity_mat(n);
    ZMat Bt = B0.b;
    ZMat Ct = identity_mat(n);
    for (int k : path) {
        ZVec fresh[2];
        for (int e = 0; e < 2; ++e) {
            int eps = e == 0 ? 1 : -1;
            ZVec g(n, 0);
            for (int r = 0; r < n; ++r) g[r] = -G[r][k];
            for (int j = 0; j < n; ++j) {
                ZZ cb = pos_part(ZZ(eps) * Bt[j][k]);
                if (cb != 0)
                    for (int r = 0; r < n; ++r) g[r] += cb * G[r][j];
                ZZ cc = pos_part(ZZ(eps) * Ct[j][k]);
                if (cc != 0)
                    for (int r = 0; r < n; ++r) g[r] -= cc * B0.b[r][j];
            }
            fresh[e] = g;
        }
        if (fresh[0] != fresh[1])
            throw RecurrenceMismatch("epsilon = +1 and -1 recurrences disagree");
        for (int r = 0; r < n; ++r) G[r][k] = fresh[0][r];
        ZMat stacked = Bt;
        stacked.insert(stacked.end(), Ct.begin(), Ct.end());
        stacked = mutate_rect(stacked, k, n);
        Bt = ZMat(stacked.begin(), stacked.begin() + n);
        Ct = ZMat(stacked.begin() + n, stacked.end());
    }
    ZVec out(n);
    for (int r = 0; r < n; ++r) out[r] = G[r][i];
    // internal consistency: must agree with the grading route
    SeedState s = pattern.state_at(path);
    if (out != g_vector(s, i, B0))
        throw RecurrenceMismatch("recurrence disagrees with grading route");
    return out;
}

ZVec d_vector(const SeedState& s, int i) { return d_vector_of(s.vars[i]); }

void check_f_polynomial_shape(const LaurentPoly& f) {
    // constant term 1
    int n = f.rank();
    TermKey zero{ZVec(n, 0), ZVec(n, 0)};
    auto it = f.terms().find(zero);
    if (it == f.terms().end() || it->second != 1)
        throw InvariantViolation("F-polynomial constant term is not 1");
    // unique componentwise-maximal exponent with coefficient 1
    const TermKey* best = nullptr;
    for (const auto& [k, c] : f.terms()) {
        if (!best) {
            best = &k;
            continue;
        }
        bool ge = true;
        for (int j = 0; j < n; ++j)
            if (k.y[j] < best->y[j]) {
                ge = false;
                break;
            }
        if (ge) best = &k;
    }
    for (const auto& [k, c] : f.terms()) {
        for (int j = 0; j < n; ++j)
            if (k.y[j] > best->y[j])
                throw InvariantViolation("F-polynomial has no componentwise-maximal term");
    }
    if (f.terms().at(*best) != 1)
        throw InvariantViolation("maximal F-polynomial term has coefficient != 1");
}

LaurentPoly f_polynomial(const SeedState& s, int i) {
    LaurentPoly f = specialize_x(s.vars[i]);
    check_f_polynomial_shape(f);
    return f;
}

static LaurentPoly principal_binomial(const ExchangeMatrix& B, int k) {
    // Exchange binomial at a pattern base (C = I): y_k X^{[b_k]_+} + X^{[-b_k]_+}.
    int n = B.n;
    ZVec bp(n), bm(n), yk(n, 0);
    for (int i = 0; i < n; ++i) {
        bp[i] = pos_part(B.b[i][k]);
        bm[i] = pos_part(-B.b[i][k]);
    }
    yk[k] = 1;
    return LaurentPoly::monomial(n, bp, yk) + LaurentPoly::monomial(n, bm, ZVec(n, 0));
}

DegreeVector transport_degree(const DegreeVector& h, int k, const ExchangeMatrix& B_old) {
    int n = B_old.n;
    DegreeVector out = h;
    ZZ hk = h[k];
    out[k] -= 2 * hk;
    for (int i = 0; i < n; ++i) {
        out[i] += hk * pos_part(B_old.b[i][k]);
        out[i] += pos_part(-hk) * B_old.b[i][k];
    }
    return out;
}

Transported transport(const LaurentPoly& f, const DegreeVector& h, int k, const ExchangeMatrix& B_old) {
    int n = B_old.n;
    LaurentPoly mk = principal_binomial(B_old, k);

    // Decompose over x_k and re-express across the edge: negative x_k-parts
    // must be divisible by the matching power of the exchange binomial;
    // nonnegative parts pick that power up in the new frame.
    std::map<ZZ, LaurentPoly> parts = x_degree_decompose(f, k);
    LaurentPoly mid(n);
    for (const auto& [s, part] : parts) {
        LaurentPoly piece = part;
        if (s < 0)
            piece = exact_div(piece, mk.pow(static_cast<unsigned>(ZZ(-s).get_ui())));
        else if (s > 0)
            piece = piece * mk.pow(static_cast<unsigned>(s.get_ui()));
        ZVec xk(n, 0);
        xk[k] = -s;
        mid = mid + piece * LaurentPoly::monomial(n, xk, ZVec(n, 0));
    }

    // Divide by y_k^{[h_k]_+} and push Y through the coefficient rewrite
    // y_k -> y_k^{-1}, y_j -> y_j y_k^{[b_kj]_+} (j != k).
    ZZ shift = pos_part(h[k]);
    LaurentPoly out(n);
    for (const auto& [key, c] : mid.terms()) {
        ZVec y = key.y;
        y[k] -= shift;
        ZZ yk = -y[k];
        for (int j = 0; j < n; ++j)
            if (j != k) yk += pos_part(B_old.b[k][j]) * y[j];
        y[k] = yk;
        for (int j = 0; j < n; ++j)
            if (y[j] < 0)
                throw NotALaurentPolynomial("transport image has negative y-exponents (input out of scope)");
        out.add_term({y, key.x}, c);
    }
    return {out, transport_degree(h, k, B_old)};
}

} // namespace ck
