#include "clusterkit/linalg.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <cassert>

namespace ck {

ZMat identity_mat(int n) {
    ZMat m(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zero_mat(int rows, int cols) { return ZMat(rows, ZVec(cols, 0)); }

ZMat transpose(const ZMat& m) {
    if (m.empty()) return {};
    ZMat r(m[0].size(), ZVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

ZMat matmul(const ZMat& a, const ZMat& b) {
    assert(!a.empty() && !b.empty() && a[0].size() == b.size());
    ZMat r(a.size(), ZVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

ZVec matvec(const ZMat& a, const ZVec& v) {
    ZVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

ZVec vec_add(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ZVec vec_sub(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ZVec vec_neg(const ZVec& a) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

ZVec vec_scale(const ZZ& c, const ZVec& a) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

ZZ dot(const ZVec& a, const ZVec& b) {
    assert(a.size() == b.size());
    ZZ s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const ZVec& a) {
    return std::all_of(a.begin(), a.end(), [](const ZZ& x) { return x == 0; });
}

ZVec primitive(const ZVec& v) {
    ZZ g = 0;
    for (const ZZ& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

QMat to_qmat(const ZMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const ZZ& x : m[i]) r[i].emplace_back(x);
    }
    return r;
}

// Gaussian elimination in place; returns the pivot columns.
static std::vector<int> eliminate(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        QQ inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            QQ f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank_q(QMat m) { return static_cast<int>(eliminate(m).size()); }

int rank_z(const ZMat& m) { return rank_q(to_qmat(m)); }

std::optional<QVec> solve_q(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (const QQ& x : b)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    size_t rows = a.size(), cols = a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = eliminate(aug);
    QVec x(cols, 0);
    size_t r = 0;
    for (int c : pivots) {
        if (c == static_cast<int>(cols)) return std::nullopt; // inconsistent
        x[c] = aug[r][cols];
        ++r;
    }
    // eliminate() may stop before inspecting trailing rows; re-check them.
    for (size_t i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    return x;
}

std::vector<ZVec> nullspace_z(const ZMat& a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    QMat m = to_qmat(a);
    std::vector<int> pivots = eliminate(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<ZVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        // clear denominators
        ZZ lcm = 1;
        for (const QQ& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        ZVec z(cols);
        for (size_t j = 0; j < cols; ++j) {
            QQ s = v[j] * QQ(lcm);
            s.canonicalize();
            z[j] = s.get_num();
        }
        basis.push_back(primitive(z));
    }
    return basis;
}

ZMat hnf_rows(ZMat a) {
    if (a.empty()) return a;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean column sweep: reduce all rows below r against each other.
        while (true) {
            size_t p = rows;
            for (size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (p == rows || abs(a[i][c]) < abs(a[p][c]))) p = i;
            if (p == rows) break;
            std::swap(a[p], a[r]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                ZZ q = a[i][c] / a[r][c]; // truncated division is fine here
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][c] != 0) {
            if (a[r][c] < 0)
                for (size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
            ++r;
        }
    }
    a.resize(r);
    return a;
}

ZZ det_z(const ZMat& m) {
    size_t n = m.size();
    QMat q = to_qmat(m);
    QQ det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && q[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(q[p], q[c]);
            det = -det;
        }
        det *= q[c][c];
        QQ inv = 1 / q[c][c];
        for (size_t j = c; j < n; ++j) q[c][j] *= inv;
        for (size_t i = c + 1; i < n; ++i) {
            if (q[i][c] == 0) continue;
            QQ f = q[i][c];
            for (size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
        }
    }
    det.canonicalize();
    if (det.get_den() != 1) throw FaceTestFailure("non-integer determinant of integer matrix");
    return det.get_num();
}

// ---------------------------------------------------------------------------
// Phase-1 simplex for  G^T lambda = target, lambda >= 0 (exact rationals).
// Minimizes the sum of artificial variables; feasible iff the optimum is 0.
bool in_cone_span(const std::vector<ZVec>& gens, const ZVec& target) {
    size_t n = target.size();
    size_t m = gens.size();
    if (is_zero_vec(target)) return true;
    if (m == 0) return false;

    // rows: n equality constraints; columns: m lambdas + n artificials.
    // Flip rows so the right-hand side is nonnegative.
    size_t cols = m + n;
    QMat t(n, QVec(cols + 1, 0));
    for (size_t i = 0; i < n; ++i) {
        int flip = target[i] < 0 ? -1 : 1;
        for (size_t j = 0; j < m; ++j) t[i][j] = QQ(flip * gens[j][i]);
        t[i][m + i] = 1;
        t[i][cols] = QQ(flip * target[i]);
    }
    std::vector<size_t> basis(n);
    for (size_t i = 0; i < n; ++i) basis[i] = m + i;
    // objective row: minimize sum of artificials == sum of rows (after pricing out)
    QVec obj(cols + 1, 0);
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < n; ++i) obj[j] += t[i][j];
    for (size_t j = m; j < cols; ++j) obj[j] -= 1; // artificial cost already 1
    for (size_t i = 0; i < n; ++i) obj[cols] += t[i][cols];

    while (true) {
        // Bland's rule: smallest index with positive reduced "row sum".
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        size_t leave = n;
        QQ best = 0;
        for (size_t i = 0; i < n; ++i) {
            if (t[i][enter] <= 0) continue;
            QQ ratio = t[i][cols] / t[i][enter];
            if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == n) break; // unbounded; cannot happen for phase 1
        QQ piv = t[leave][enter];
        for (size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            QQ f = t[i][enter];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        QQ fo = obj[enter];
        for (size_t j = 0; j <= cols; ++j) obj[j] -= fo * t[leave][j];
        basis[leave] = enter;
    }
    return obj[cols] == 0;
}

} // namespace ck
