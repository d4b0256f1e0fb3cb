#include "clusterkit/exchange.hpp"

#include "clusterkit/errors.hpp"

#include <functional>

namespace ck {

bool is_sign_skew_symmetric(const ZMat& b) {
    int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool both_zero = b[i][j] == 0 && b[j][i] == 0;
            bool opposite = b[i][j] * b[j][i] < 0;
            if (!both_zero && !opposite) return false;
        }
    return true;
}

ExchangeMatrix::ExchangeMatrix(ZMat entries) : n(static_cast<int>(entries.size())), b(std::move(entries)) {
    for (const ZVec& row : b)
        if (static_cast<int>(row.size()) != n)
            throw NotSignSkewSymmetric("exchange matrix must be square");
    if (!is_sign_skew_symmetric(b))
        throw NotSignSkewSymmetric("matrix violates sign-skew-symmetry");
}

ZVec ExchangeMatrix::column(int k) const {
    ZVec c(n);
    for (int i = 0; i < n; ++i) c[i] = b[i][k];
    return c;
}

ZMat mutate_rect(const ZMat& m, int k, int n) {
    int rows = static_cast<int>(m.size());
    ZMat r(rows, ZVec(n));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                r[i][j] = -m[i][j];
            else
                r[i][j] = m[i][j] + sgn(m[i][k]) * pos_part(m[i][k] * m[k][j]);
        }
    return r;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
    ZMat r = mutate_rect(B.b, k, B.n);
    if (!is_sign_skew_symmetric(r))
        throw NotSignSkewSymmetric("mutation left the sign-skew-symmetric class (input not TSSS along this path)");
    ExchangeMatrix out;
    out.n = B.n;
    out.b = std::move(r);
    return out;
}

std::optional<int> check_tsss_along(const ExchangeMatrix& B, const std::vector<int>& path) {
    ZMat m = B.b;
    for (size_t s = 0; s < path.size(); ++s) {
        m = mutate_rect(m, path[s], B.n);
        if (!is_sign_skew_symmetric(m)) return static_cast<int>(s);
    }
    return std::nullopt;
}

ExchangeMatrix negate_transpose(const ExchangeMatrix& B) {
    ExchangeMatrix out;
    out.n = B.n;
    out.b = ZMat(B.n, ZVec(B.n));
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) out.b[i][j] = -B.b[j][i];
    return out;
}

bool is_acyclic(const ExchangeMatrix& B) {
    // DFS cycle detection on the arc set {i -> j : b_ij > 0}.
    enum { White, Gray, Black };
    std::vector<int> color(B.n, White);
    std::function<bool(int)> dfs = [&](int u) {
        color[u] = Gray;
        for (int v = 0; v < B.n; ++v) {
            if (B.b[u][v] <= 0) continue;
            if (color[v] == Gray) return false;
            if (color[v] == White && !dfs(v)) return false;
        }
        color[u] = Black;
        return true;
    };
    for (int u = 0; u < B.n; ++u)
        if (color[u] == White && !dfs(u)) return false;
    return true;
}

ExchangeMatrix mutate_along(ExchangeMatrix B, const std::vector<int>& path) {
    for (int k : path) B = mutate_matrix(B, k);
    return B;
}

} // namespace ck
