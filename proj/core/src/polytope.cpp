#include "clusterkit/polytope.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ck {

WeightedPolytope::WeightedPolytope(int rank, std::map<ZVec, ZZ> w) : n(rank), weights(std::move(w)) {
    if (weights.empty()) throw NonLattice("empty weighted polytope");
    for (const auto& [p, c] : weights)
        if (c == 0) throw NonLattice("zero weight stored in polytope");
}

std::vector<ZVec> WeightedPolytope::support() const {
    std::vector<ZVec> pts;
    pts.reserve(weights.size());
    for (const auto& [p, c] : weights) pts.push_back(p);
    return pts;
}

WeightedPolytope newton_of_support(const LaurentPoly& f_in_y) {
    std::map<ZVec, ZZ> w;
    for (const auto& [k, c] : f_in_y.terms()) w[k.y] = c;
    return WeightedPolytope(f_in_y.rank(), std::move(w));
}

WeightedPolytope newton(const LaurentPoly& f, const ExchangeMatrix& B) {
    grade(f, B); // throws NotHomogeneous when f is not homogeneous
    return newton_of_support(specialize_x(f));
}

WeightedPolytope minkowski(const WeightedPolytope& a, const WeightedPolytope& b) {
    if (a.n != b.n) throw NonLattice("rank mismatch in Minkowski sum");
    std::map<ZVec, ZZ> w;
    for (const auto& [p, cp] : a.weights)
        for (const auto& [q, cq] : b.weights) {
            ZVec s = vec_add(p, q);
            auto [it, inserted] = w.emplace(s, cp * cq);
            if (!inserted) {
                it->second += cp * cq;
                if (it->second == 0) w.erase(it);
            }
        }
    return WeightedPolytope(a.n, std::move(w));
}

WeightedPolytope translate(const WeightedPolytope& a, const ZVec& by) {
    std::map<ZVec, ZZ> w;
    for (const auto& [p, c] : a.weights) w.emplace(vec_add(p, by), c);
    return WeightedPolytope(a.n, std::move(w));
}

int affine_dim(const std::vector<ZVec>& pts) {
    if (pts.empty()) return -1;
    ZMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
    if (diffs.empty()) return 0;
    return rank_z(diffs);
}

bool in_convex_hull(const ZVec& point, const std::vector<ZVec>& pts) {
    // lift to cone feasibility: sum lambda_i (q_i, 1) = (p, 1), lambda >= 0
    std::vector<ZVec> lifted;
    lifted.reserve(pts.size());
    for (const ZVec& q : pts) {
        ZVec l = q;
        l.push_back(1);
        lifted.push_back(std::move(l));
    }
    ZVec target = point;
    target.push_back(1);
    return in_cone_span(lifted, target);
}

std::vector<ZVec> hull_vertices(const WeightedPolytope& p) {
    std::vector<ZVec> pts = p.support();
    std::vector<ZVec> verts;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<ZVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
    }
    return verts;
}

namespace {

// Proper facets of conv(pts) inside its affine span: pairs (normal, offset)
// with points attached.
struct RawFacet {
    ZVec normal;
    ZZ offset;
    std::vector<ZVec> points;
};

std::vector<RawFacet> hull_facets(const std::vector<ZVec>& verts, const std::vector<ZVec>& support) {
    int d = affine_dim(verts);
    std::vector<RawFacet> out;
    if (d <= 0) return out;
    size_t nv = verts.size();
    // span basis rows
    ZMat span;
    for (size_t i = 1; i < nv; ++i) span.push_back(vec_sub(verts[i], verts[0]));
    ZMat sbasis = hnf_rows(span); // d rows
    std::set<std::pair<ZVec, ZZ>> seen;

    std::vector<size_t> idx(d);
    std::vector<int> comb(d);
    // iterate over d-subsets of vertices
    std::vector<size_t> sel;
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t need) {
        if (need == 0) {
            // affine rank of selection must be d-1
            ZMat diffs;
            for (size_t i = 1; i < sel.size(); ++i) diffs.push_back(vec_sub(verts[sel[i]], verts[sel[0]]));
            if (d > 1 && (diffs.empty() || rank_z(diffs) != d - 1)) return;
            // normal in span direction orthogonal to the selection
            ZMat sys; // rows: diffs . sbasis^T  (coefficients of alpha)
            for (const ZVec& df : diffs) {
                ZVec row(sbasis.size());
                for (size_t r = 0; r < sbasis.size(); ++r) row[r] = dot(df, sbasis[r]);
                sys.push_back(row);
            }
            if (sys.empty()) sys.push_back(ZVec(sbasis.size(), 0));
            std::vector<ZVec> alphas = nullspace_z(sys);
            if (alphas.empty()) return;
            ZVec w(verts[0].size(), 0);
            for (size_t r = 0; r < sbasis.size(); ++r)
                w = vec_add(w, vec_scale(alphas[0][r], sbasis[r]));
            if (is_zero_vec(w)) return;
            w = primitive(w);
            ZZ c = dot(w, verts[sel[0]]);
            bool has_below = false, has_above = false;
            for (const ZVec& p : support) {
                int s = sgn(dot(w, p) - c);
                if (s > 0) has_above = true;
                if (s < 0) has_below = true;
            }
            if (has_above && has_below) return;
            if (has_above) {
                w = vec_neg(w);
                c = -c;
            }
            if (seen.insert({w, c}).second) {
                RawFacet f{w, c, {}};
                for (const ZVec& p : support)
                    if (dot(w, p) == c) f.points.push_back(p);
                out.push_back(std::move(f));
            }
            return;
        }
        for (size_t i = start; i + need <= nv; ++i) {
            sel.push_back(i);
            rec(i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(0, d);
    (void)idx;
    (void)comb;
    return out;
}

} // namespace

std::vector<Face> faces(const WeightedPolytope& p) {
    std::vector<ZVec> support = p.support();
    std::sort(support.begin(), support.end());
    std::vector<ZVec> verts = hull_vertices(p);
    int d = affine_dim(verts);

    std::vector<RawFacet> facets = hull_facets(verts, support);
    // close the facet point-sets under intersection
    std::set<std::vector<ZVec>> sets;
    for (const RawFacet& f : facets) {
        std::vector<ZVec> pts = f.points;
        std::sort(pts.begin(), pts.end());
        sets.insert(pts);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<ZVec>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<ZVec> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }

    std::vector<Face> out;
    for (const std::vector<ZVec>& pts : sets) {
        Face f;
        f.points = pts;
        f.dim = affine_dim(pts);
        ZVec w(p.n, 0);
        for (const RawFacet& fc : facets) {
            bool contains = std::includes(fc.points.empty() ? pts.begin() : fc.points.begin(),
                                          fc.points.end(), pts.begin(), pts.end());
            // fc.points is unsorted; sort a copy
            std::vector<ZVec> fp = fc.points;
            std::sort(fp.begin(), fp.end());
            contains = std::includes(fp.begin(), fp.end(), pts.begin(), pts.end());
            if (contains) w = vec_add(w, fc.normal);
        }
        if (!is_zero_vec(w)) {
            f.normal = primitive(w);
            f.offset = dot(f.normal, pts[0]);
        } else {
            f.normal = ZVec(p.n, 0);
            f.offset = 0;
        }
        out.push_back(std::move(f));
    }
    // the polytope itself
    Face top;
    top.points = support;
    top.dim = d;
    if (d < p.n) {
        ZMat diffs;
        for (size_t i = 1; i < verts.size(); ++i) diffs.push_back(vec_sub(verts[i], verts[0]));
        if (diffs.empty()) diffs.push_back(ZVec(p.n, 0));
        std::vector<ZVec> ortho = nullspace_z(diffs);
        top.normal = ortho.empty() ? ZVec(p.n, 0) : ortho[0];
    } else {
        top.normal = ZVec(p.n, 0);
    }
    top.offset = dot(top.normal, support[0]);
    out.push_back(std::move(top));

    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.points < b.points;
    });
    return out;
}

WeightedPolytope section(const WeightedPolytope& p, const ZVec& v, const std::vector<int>& I) {
    if (!in_convex_hull(v, p.support())) throw PointOutside("section base point outside the polytope");
    std::vector<bool> in_I(p.n, false);
    for (int i : I) in_I[i] = true;
    std::map<ZVec, ZZ> w;
    for (const auto& [q, c] : p.weights) {
        bool match = true;
        for (int j = 0; j < p.n; ++j)
            if (!in_I[j] && q[j] != v[j]) {
                match = false;
                break;
            }
        if (match) w.emplace(q, c);
    }
    return WeightedPolytope(p.n, std::move(w));
}

static ZZ binom(const ZZ& top, const ZZ& k) {
    if (k < 0 || top < 0) return 0;
    ZZ r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k.get_ui());
    return r;
}

MutatedPolytope mutate_polytope_geometric(const WeightedPolytope& N, const DegreeVector& h, int k,
                                          const ExchangeMatrix& B) {
    int n = N.n;
    // group the support into k-sections (classes agreeing outside coordinate k)
    std::map<ZVec, std::map<ZZ, ZZ>> sections; // base (coord k zeroed) -> {k-coord -> weight}
    for (const auto& [p, c] : N.weights) {
        ZVec base = p;
        base[k] = 0;
        sections[base][p[k]] = c;
    }

    MutatedPolytope out;
    std::map<ZVec, ZZ> fresh;
    std::map<ZVec, ZVec> bottom_raw, top_raw; // pre-translation/shear endpoint images

    for (const auto& [base, column] : sections) {
        ZZ m0 = column.begin()->first;
        ZZ m1 = column.rbegin()->first;
        ZZ L = m1 - m0;
        // deg_{x_k} of the section: h_k + sum_i p_i b_{ki} (constant along e_k
        // because b_kk = 0)
        ZZ D = h[k];
        for (int i = 0; i < n; ++i)
            if (i != k) D += base[i] * B.b[k][i];
        D += m0 * B.b[k][k]; // zero, kept for clarity

        ZZ dneg = pos_part(-D), dpos = pos_part(D);
        // back-solve a_m = co_m - sum_{j<m} a_j C(dneg, m-j)
        std::vector<ZZ> a;
        for (ZZ m = 0; m <= L; ++m) {
            auto it = column.find(m0 + m);
            ZZ co = it == column.end() ? ZZ(0) : it->second;
            for (ZZ j = 0; j < m; ++j) co -= a[j.get_ui()] * binom(dneg, m - j);
            a.push_back(co);
        }
        for (const ZZ& ai : a)
            if (ai < 0) throw NegativeA("section coefficient a_i < 0 (input outside scope)");
        ZZ L2 = L + D;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && ZZ(i) > L2)
                throw NonLattice("section shrinks below its own coefficient support");
        if (L2 < 0) {
            // whole section must vanish; only consistent when all a_i are 0,
            // which the previous check already rules out for nonzero weights.
            throw NonLattice("section length would become negative");
        }
        for (ZZ m = 0; m <= L2; ++m) {
            ZZ co = 0;
            for (ZZ j = 0; j <= m && j < ZZ(a.size()); ++j) co += a[j.get_ui()] * binom(dpos, m - j);
            if (co == 0) continue;
            ZVec pt = base;
            pt[k] = m0 + m;
            fresh[pt] = co;
        }
        ZVec bottom = base, top = base, nbottom = base, ntop = base;
        bottom[k] = m0;
        top[k] = m1;
        nbottom[k] = m0;
        ntop[k] = m1 + D;
        bottom_raw[bottom] = nbottom;
        top_raw[top] = ntop;
    }

    // translate by -[h_k]_+ e_k, then shear: p_k -> -p_k + sum_{j!=k} [b_kj]_+ p_j
    ZZ shift = pos_part(h[k]);
    auto transform = [&](ZVec p) {
        p[k] -= shift;
        ZZ pk = -p[k];
        for (int j = 0; j < n; ++j)
            if (j != k) pk += pos_part(B.b[k][j]) * p[j];
        p[k] = pk;
        return p;
    };
    std::map<ZVec, ZZ> final_w;
    for (const auto& [p, c] : fresh) final_w.emplace(transform(p), c);
    out.polytope = WeightedPolytope(n, std::move(final_w));
    out.h = transport_degree(h, k, B);
    for (const auto& [p, q] : bottom_raw) out.bottom_image[p] = transform(q);
    for (const auto& [p, q] : top_raw) out.top_image[p] = transform(q);
    return out;
}

} // namespace ck
