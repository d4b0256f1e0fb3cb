#include "clusterkit/fan.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <set>

namespace ck {

TrackedCube cube(const ExchangeMatrix& B) {
    int n = B.n;
    TrackedCube tc;
    tc.B = B;
    SeedState base = initial_seed(B);
    for (int i = 0; i < n; ++i) {
        LaurentPoly xi = LaurentPoly::x_var(n, i);
        tc.factors.push_back(xi);
        tc.factor_h.push_back(grade(xi, B));
        LaurentPoly mut = mutate_seed(base, i).vars[i];
        tc.factor_h.push_back(grade(mut, B));
        tc.factors.push_back(std::move(mut));
    }
    LaurentPoly prod = LaurentPoly::constant(n, 1);
    for (const LaurentPoly& f : tc.factors) prod = prod * f;
    tc.h = grade(prod, B);
    tc.polytope = newton(prod, B);

    ZVec zero(n, 0), one(n, 1);
    for (int j = 0; j < n; ++j) {
        ZVec ej(n, 0), onemj(n, 1);
        ej[j] = 1;
        onemj[j] = 0;
        tc.edges_minus.push_back({zero, ej});
        tc.edges_plus.push_back({onemj, one});
    }
    return tc;
}

namespace {

// dim-1 faces of a polytope as sorted endpoint pairs with a lookup set
struct EdgeIndex {
    std::set<std::pair<ZVec, ZVec>> edges;
    explicit EdgeIndex(const WeightedPolytope& p) {
        for (const Face& f : faces(p)) {
            if (f.dim != 1) continue;
            ZVec a = f.points.front(), b = f.points.back();
            if (b < a) std::swap(a, b);
            edges.insert({a, b});
        }
    }
    bool has(ZVec a, ZVec b) const {
        if (b < a) std::swap(a, b);
        return edges.count({a, b}) != 0;
    }
};

} // namespace

TrackedCube mutate_tracked(const TrackedCube& tc, int k) {
    int n = tc.B.n;
    TrackedCube out;
    out.path = tc.path;
    out.path.push_back(k);
    out.B = mutate_matrix(tc.B, k);

    for (size_t i = 0; i < tc.factors.size(); ++i) {
        Transported tr = transport(tc.factors[i], tc.factor_h[i], k, tc.B);
        out.factors.push_back(std::move(tr.f));
        out.factor_h.push_back(std::move(tr.h));
    }
    LaurentPoly prod = LaurentPoly::constant(n, 1);
    for (const LaurentPoly& f : out.factors) prod = prod * f;
    out.h = grade(prod, out.B);
    out.polytope = newton(prod, out.B);

    // geometric route: mutate the polytope directly; the product-route result
    // differs by the factor-normalization translation delta * e_k
    MutatedPolytope mp = mutate_polytope_geometric(tc.polytope, tc.h, k, tc.B);
    ZZ delta = -pos_part(tc.h[k]);
    for (const DegreeVector& h : tc.factor_h) delta += pos_part(h[k]);
    ZVec dvec(n, 0);
    dvec[k] = delta;
    if (!(translate(mp.polytope, dvec) == out.polytope))
        throw RouteMismatch("geometric polytope mutation disagrees with the transported product");

    // re-identify tracked edges by endpoint correlation
    std::map<ZVec, std::pair<ZZ, ZZ>> section_range; // base with k zeroed -> (min, max)
    for (const auto& [p, c] : tc.polytope.weights) {
        ZVec base = p;
        base[k] = 0;
        auto [it, inserted] = section_range.emplace(base, std::make_pair(p[k], p[k]));
        if (!inserted) {
            it->second.first = std::min(it->second.first, p[k]);
            it->second.second = std::max(it->second.second, p[k]);
        }
    }
    auto candidates = [&](const ZVec& v) {
        ZVec base = v;
        base[k] = 0;
        auto [m0, m1] = section_range.at(base);
        std::vector<ZVec> out_pts;
        ZVec key = base;
        if (v[k] == m0) {
            key[k] = m0;
            out_pts.push_back(vec_add(mp.bottom_image.at(key), dvec));
        }
        if (v[k] == m1) {
            key[k] = m1;
            ZVec img = vec_add(mp.top_image.at(key), dvec);
            if (out_pts.empty() || out_pts[0] != img) out_pts.push_back(img);
        }
        if (out_pts.empty())
            throw CorrelationAmbiguous("tracked endpoint is not an endpoint of its section");
        return out_pts;
    };

    EdgeIndex edge_index(out.polytope);
    auto correlate = [&](const TrackedEdge& e) {
        std::vector<ZVec> cp = candidates(e.p), cq = candidates(e.q);
        std::set<std::pair<ZVec, ZVec>> found;
        for (const ZVec& a : cp)
            for (const ZVec& b : cq) {
                if (a == b) continue;
                if (edge_index.has(a, b)) found.insert({a, b});
            }
        if (found.size() != 1)
            throw CorrelationAmbiguous("tracked edge correlates to " +
                                       std::to_string(found.size()) + " edges");
        return TrackedEdge{found.begin()->first, found.begin()->second};
    };
    for (const TrackedEdge& e : tc.edges_minus) out.edges_minus.push_back(correlate(e));
    for (const TrackedEdge& e : tc.edges_plus) out.edges_plus.push_back(correlate(e));

    // invariant: edge vectors stay nonzero and sign-coherent
    tracked_edges(out, -1);
    tracked_edges(out, +1);
    return out;
}

ZMat tracked_edges(const TrackedCube& tc, int eps) {
    int n = tc.B.n;
    const auto& edges = eps > 0 ? tc.edges_plus : tc.edges_minus;
    ZMat m(n, ZVec(n));
    for (int j = 0; j < n; ++j) {
        ZVec v = primitive(vec_sub(edges[j].q, edges[j].p));
        if (is_zero_vec(v)) throw InvariantViolation("tracked edge vector is zero");
        bool pos = false, neg = false;
        for (const ZZ& e : v) {
            if (e > 0) pos = true;
            if (e < 0) neg = true;
        }
        if (pos && neg) throw InvariantViolation("tracked edge vector is not sign-coherent");
        for (int r = 0; r < n; ++r) m[r][j] = v[r];
    }
    return m;
}

ZMat tracked_normals(const TrackedCube& tc, int eps) {
    int n = tc.B.n;
    const auto& edges = eps > 0 ? tc.edges_plus : tc.edges_minus;
    std::vector<Face> fs = faces(tc.polytope);
    std::vector<const Face*> facets;
    for (const Face& f : fs)
        if (f.dim == n - 1) facets.push_back(&f);
    ZMat m(n, ZVec(n));
    for (int i = 0; i < n; ++i) {
        std::vector<ZVec> pts;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            pts.push_back(edges[j].p);
            pts.push_back(edges[j].q);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const Face* found = nullptr;
        for (const Face* f : facets) {
            if (std::includes(f->points.begin(), f->points.end(), pts.begin(), pts.end())) {
                if (found) throw FacetNotFound("edge family lies on more than one facet");
                found = f;
            }
        }
        if (!found) throw FacetNotFound("edge family determines no facet");
        for (int r = 0; r < n; ++r) m[r][i] = found->normal[r];
    }
    return m;
}

ZVec normal_mutation(const ZVec& v, int k, const ZMat& M) {
    if (v[static_cast<size_t>(k)] == 0) return v;
    int n = static_cast<int>(v.size());
    int s = sgn(v[static_cast<size_t>(k)]);
    ZVec out(n);
    for (int j = 0; j < n; ++j) {
        if (j == k)
            out[j] = -v[j];
        else
            out[j] = v[j] + ZZ(s) * pos_part(-M[k][j] * v[static_cast<size_t>(k)]);
    }
    return primitive(out);
}

namespace {

std::vector<ZVec> sorted_columns(std::vector<ZVec> cols) {
    std::sort(cols.begin(), cols.end());
    return cols;
}

} // namespace

std::vector<NormalSet> g_sets(const ExchangeMatrix& B0, const std::vector<int>& path,
                              const std::vector<int>& lambda) {
    if (auto bad = check_tsss_along(B0, path))
        throw NotSignSkewSymmetric("path leaves the sign-skew-symmetric class at step " +
                                   std::to_string(*bad + 1));
    int n = B0.n;
    int r = static_cast<int>(path.size());
    std::vector<ExchangeMatrix> Bs{B0};
    for (int k : path) Bs.push_back(mutate_matrix(Bs.back(), k));

    std::vector<ZVec> ilambda;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = lambda[static_cast<size_t>(i)];
        ilambda.push_back(e);
    }

    std::vector<NormalSet> out;
    std::vector<std::vector<ZVec>> cur{ilambda};
    out.push_back({r, cur});

    for (int j = r; j >= 1; --j) {
        int k = path[static_cast<size_t>(j - 1)];
        ZMat M = negate_transpose(Bs[static_cast<size_t>(j)]).b;

        std::vector<std::vector<ZVec>> next;
        std::set<std::vector<ZVec>> seen;
        for (const std::vector<ZVec>& cols : cur) {
            // pair rays from strictly-positive x strictly-negative 2-faces
            std::vector<ZVec> pair_rays;
            Cone whole = make_cone(n, cols);
            for (size_t l1 = 0; l1 < cols.size(); ++l1) {
                if (sgn(cols[l1][static_cast<size_t>(k)]) <= 0) continue;
                for (size_t l2 = 0; l2 < cols.size(); ++l2) {
                    if (sgn(cols[l2][static_cast<size_t>(k)]) >= 0) continue;
                    Cone two = make_cone(n, {cols[l1], cols[l2]});
                    if (cone_dim(two) != 2) continue;
                    if (!is_face_of(two, whole)) continue;
                    ZVec ray = vec_add(vec_scale(-cols[l2][static_cast<size_t>(k)], cols[l1]),
                                       vec_scale(cols[l1][static_cast<size_t>(k)], cols[l2]));
                    pair_rays.push_back(primitive(ray));
                }
            }
            for (int eps : {+1, -1}) {
                bool has_eps = false;
                for (const ZVec& c : cols)
                    if (sgn(c[static_cast<size_t>(k)]) == eps) has_eps = true;
                if (!has_eps) continue;
                std::vector<ZVec> fresh;
                for (const ZVec& c : cols) {
                    int s = sgn(c[static_cast<size_t>(k)]);
                    if (s != 0 && s != eps) continue;
                    fresh.push_back(normal_mutation(c, k, M));
                }
                fresh.insert(fresh.end(), pair_rays.begin(), pair_rays.end());
                // dedup columns, keep first occurrence
                std::vector<ZVec> dedup;
                for (const ZVec& c : fresh)
                    if (std::find(dedup.begin(), dedup.end(), c) == dedup.end())
                        dedup.push_back(c);
                if (rank_z(dedup) != n) continue;
                for (size_t i1 = 0; i1 < dedup.size(); ++i1)
                    for (size_t i2 = i1 + 1; i2 < dedup.size(); ++i2)
                        if (dedup[i1] == vec_neg(dedup[i2]))
                            throw FaceTestFailure("normal-set matrix holds opposite columns");
                if (seen.insert(sorted_columns(dedup)).second) next.push_back(std::move(dedup));
            }
        }
        cur = std::move(next);
        out.push_back({j - 1, cur});
    }
    return out;
}

namespace {

LaurentPoly catalog_variable_product(const SeedCatalog& cat) {
    LaurentPoly prod = LaurentPoly::constant(cat.base.n, 1);
    for (const CatalogVariable& v : cat.variables) prod = prod * v.expansion;
    return prod;
}

} // namespace

NgResult ng_fan_minkowski(const ExchangeMatrix& B0, int depth_bound, bool require_finite) {
    ExchangeMatrix companion = negate_transpose(B0);
    SeedCatalog cat = enumerate_seeds(companion, depth_bound, require_finite);
    WeightedPolytope sum = newton(catalog_variable_product(cat), companion);
    return {normal_fan(sum), !cat.complete, depth_bound};
}

NgResult ng_fan_refinement(const ExchangeMatrix& B0, int depth_bound, bool require_finite) {
    int n = B0.n;
    SeedCatalog cat = enumerate_seeds(B0, depth_bound, require_finite);
    bool first = true;
    Fan acc;
    for (const CatalogSeed& s : cat.seeds) {
        std::vector<Cone> cones;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> lambda(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) lambda[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
            std::vector<NormalSet> sets = g_sets(B0, s.path, lambda);
            for (const auto& cols : sets.back().matrices) cones.push_back(make_cone(n, cols));
        }
        Fan fan_t = make_fan(n, std::move(cones));
        if (first) {
            acc = fan_t;
            first = false;
        } else {
            acc = common_refinement(acc, fan_t);
        }
    }
    return {acc, !cat.complete, depth_bound};
}

NgResult ng_fan(const ExchangeMatrix& B0, int depth_bound, bool require_finite) {
    NgResult a = ng_fan_minkowski(B0, depth_bound, require_finite);
    NgResult b = ng_fan_refinement(B0, depth_bound, require_finite);
    if (!fan_equal(a.fan, b.fan))
        throw RouteMismatch("Minkowski-sum route and refinement route give different fans");
    return a;
}

void gfan_containment_check(const ExchangeMatrix& B0, int depth_bound, bool require_finite) {
    int n = B0.n;
    NgResult ng = ng_fan(B0, depth_bound, require_finite);
    SeedCatalog cat = enumerate_seeds(B0, depth_bound, require_finite);
    for (const CatalogSeed& s : cat.seeds) {
        std::vector<ZVec> gens;
        for (int i = 0; i < n; ++i) gens.push_back(grade(s.state.vars[i], B0));
        Cone gc = make_cone(n, std::move(gens));
        if (!fan_contains_cone(ng.fan, gc))
            throw ContainmentViolation("g-vector cone of a catalog seed is missing from N_g");
    }
    std::vector<ZVec> pos, negv;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        pos.push_back(e);
        negv.push_back(vec_neg(e));
    }
    if (!fan_contains_cone(ng.fan, make_cone(n, pos)))
        throw ContainmentViolation("non-negative orthant is missing from N_g");
    if (!fan_contains_cone(ng.fan, make_cone(n, negv)))
        throw ContainmentViolation("non-positive orthant is missing from N_g");
}

} // namespace ck
