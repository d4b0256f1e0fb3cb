#include "clusterkit/cones.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ck {

Cone make_cone(int n, std::vector<ZVec> gens) {
    std::set<ZVec> uniq;
    for (ZVec& g : gens) {
        if (is_zero_vec(g)) continue;
        uniq.insert(primitive(g));
    }
    std::vector<ZVec> rays(uniq.begin(), uniq.end());
    // drop generators expressible from the others
    for (size_t i = 0; i < rays.size();) {
        std::vector<ZVec> others;
        for (size_t j = 0; j < rays.size(); ++j)
            if (j != i) others.push_back(rays[j]);
        if (!others.empty() && in_cone_span(others, rays[i]))
            rays.erase(rays.begin() + static_cast<long>(i));
        else
            ++i;
    }
    std::sort(rays.begin(), rays.end());
    return Cone{n, std::move(rays)};
}

int cone_dim(const Cone& c) {
    if (c.rays.empty()) return 0;
    return rank_z(c.rays);
}

bool cone_contains(const Cone& c, const ZVec& v) {
    if (is_zero_vec(v)) return true;
    if (c.rays.empty()) return false;
    return in_cone_span(c.rays, v);
}

bool cone_subset(const Cone& inner, const Cone& outer) {
    for (const ZVec& r : inner.rays)
        if (!cone_contains(outer, r)) return false;
    return true;
}

bool cone_equal(const Cone& a, const Cone& b) {
    return a.n == b.n && cone_subset(a, b) && cone_subset(b, a);
}

std::string cone_key(const Cone& c) {
    std::ostringstream os;
    for (const ZVec& r : c.rays) {
        for (const ZZ& e : r) os << e.get_str() << ',';
        os << ';';
    }
    return os.str();
}

ConeHRep cone_hrep(const Cone& c) {
    ConeHRep out;
    if (c.rays.empty()) {
        // the origin: x = 0
        for (int i = 0; i < c.n; ++i) {
            ZVec e(c.n, 0);
            e[i] = 1;
            out.equalities.push_back(std::move(e));
        }
        return out;
    }
    out.equalities = nullspace_z(c.rays);
    int d = rank_z(c.rays);
    ZMat sbasis = hnf_rows(c.rays); // d independent rows spanning the linear span

    std::set<ZVec> seen;
    size_t nr = c.rays.size();
    std::vector<size_t> sel;
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t need) {
        if (need == 0) {
            ZMat sub;
            for (size_t i : sel) sub.push_back(c.rays[i]);
            if (d > 1 && rank_z(sub) != d - 1) return;
            ZMat sys;
            for (const ZVec& r : sub) {
                ZVec row(sbasis.size());
                for (size_t q = 0; q < sbasis.size(); ++q) row[q] = dot(r, sbasis[q]);
                sys.push_back(std::move(row));
            }
            if (sys.empty()) sys.push_back(ZVec(sbasis.size(), 0));
            std::vector<ZVec> alphas = nullspace_z(sys);
            if (alphas.size() != 1) return;
            ZVec w(c.n, 0);
            for (size_t q = 0; q < sbasis.size(); ++q)
                w = vec_add(w, vec_scale(alphas[0][q], sbasis[q]));
            if (is_zero_vec(w)) return;
            w = primitive(w);
            bool pos = false, neg = false;
            for (const ZVec& r : c.rays) {
                int s = sgn(dot(w, r));
                if (s > 0) pos = true;
                if (s < 0) neg = true;
            }
            if (pos && neg) return;
            if (pos) w = vec_neg(w);
            if (!pos && !neg) return; // orthogonal to everything: not a facet
            if (seen.insert(w).second) out.inequalities.push_back(w);
            return;
        }
        for (size_t i = start; i + need <= nr; ++i) {
            sel.push_back(i);
            rec(i + 1, need - 1);
            sel.pop_back();
        }
    };
    rec(0, static_cast<size_t>(d - 1));
    return out;
}

Cone cone_intersect(const Cone& a, const Cone& b) {
    if (a.n != b.n) throw InvariantViolation("cone rank mismatch in intersection");
    // H-rep of the intersection = union of both H-reps; convert back to
    // generators by double polarity: for the polar cone D spanned by all
    // constraint normals (with +-equalities), the generators of the
    // intersection are exactly D's facet normals plus +-its lineality.
    std::vector<ZVec> normals;
    for (const Cone* c : {&a, &b}) {
        ConeHRep h = cone_hrep(*c);
        for (const ZVec& w : h.inequalities) normals.push_back(w);
        for (const ZVec& w : h.equalities) {
            normals.push_back(w);
            normals.push_back(vec_neg(w));
        }
    }
    Cone polar = make_cone(a.n, std::move(normals));
    std::vector<ZVec> gens;
    if (polar.rays.empty()) {
        // no constraints at all: the whole space
        for (int i = 0; i < a.n; ++i) {
            ZVec e(a.n, 0);
            e[i] = 1;
            gens.push_back(e);
            gens.push_back(vec_neg(e));
        }
    } else {
        ConeHRep hp = cone_hrep(polar);
        for (const ZVec& w : hp.inequalities) gens.push_back(w);
        for (const ZVec& w : hp.equalities) {
            gens.push_back(w);
            gens.push_back(vec_neg(w));
        }
    }
    Cone result = make_cone(a.n, std::move(gens));
    // sanity: the result must sit inside both inputs
    if (!cone_subset(result, a) || !cone_subset(result, b))
        throw InvariantViolation("cone intersection left its inputs");
    return result;
}

std::vector<Cone> cone_faces(const Cone& c) {
    ConeHRep h = cone_hrep(c);
    // a face is generated by the rays annihilated by a set of facet normals;
    // close the facet ray-sets under intersection
    auto rays_on = [&](const ZVec& w) {
        std::vector<ZVec> out;
        for (const ZVec& r : c.rays)
            if (dot(w, r) == 0) out.push_back(r);
        return out;
    };
    std::set<std::vector<ZVec>> sets;
    sets.insert(c.rays);
    for (const ZVec& w : h.inequalities) sets.insert(rays_on(w));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<ZVec>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<ZVec> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::back_inserter(inter));
                if (sets.insert(inter).second) grew = true;
            }
    }
    std::vector<Cone> out;
    for (const auto& s : sets) out.push_back(make_cone(c.n, s));
    // dedup (distinct ray subsets can generate the same cone)
    std::vector<Cone> uniq;
    for (const Cone& f : out) {
        bool dup = false;
        for (const Cone& g : uniq)
            if (cone_equal(f, g)) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(f);
    }
    std::sort(uniq.begin(), uniq.end(),
              [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
    return uniq;
}

bool is_face_of(const Cone& face, const Cone& c) {
    for (const Cone& f : cone_faces(c))
        if (cone_equal(face, f)) return true;
    return false;
}

Fan make_fan(int n, std::vector<Cone> cones) {
    std::vector<Cone> kept;
    for (const Cone& c : cones) {
        bool dominated = false;
        for (const Cone& d : cones)
            if (&c != &d && cone_subset(c, d) && !cone_equal(c, d)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        bool dup = false;
        for (const Cone& d : kept)
            if (cone_equal(c, d)) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
    return Fan{n, std::move(kept)};
}

Fan normal_fan(const WeightedPolytope& p) {
    std::vector<ZVec> verts = hull_vertices(p);
    int d = affine_dim(verts);
    std::vector<Face> fc = faces(p);
    std::vector<Face> facets;
    for (const Face& f : fc)
        if (f.dim == d - 1) facets.push_back(f);
    // lineality: orthogonal complement of the affine span
    std::vector<ZVec> lin;
    if (d < p.n) {
        ZMat diffs;
        for (size_t i = 1; i < verts.size(); ++i) diffs.push_back(vec_sub(verts[i], verts[0]));
        if (diffs.empty()) diffs.push_back(ZVec(p.n, 0));
        for (const ZVec& v : nullspace_z(diffs)) {
            lin.push_back(v);
            lin.push_back(vec_neg(v));
        }
    }
    std::vector<Cone> cones;
    for (const ZVec& v : verts) {
        std::vector<ZVec> gens = lin;
        for (const Face& f : facets)
            if (std::binary_search(f.points.begin(), f.points.end(), v)) gens.push_back(f.normal);
        cones.push_back(make_cone(p.n, std::move(gens)));
    }
    return make_fan(p.n, std::move(cones));
}

Fan common_refinement(const Fan& a, const Fan& b) {
    if (a.n != b.n) throw InvariantViolation("fan rank mismatch in refinement");
    std::vector<Cone> cells;
    for (const Cone& ca : a.maximal)
        for (const Cone& cb : b.maximal) cells.push_back(cone_intersect(ca, cb));
    return make_fan(a.n, std::move(cells));
}

bool fan_equal(const Fan& a, const Fan& b) {
    if (a.n != b.n || a.maximal.size() != b.maximal.size()) return false;
    for (const Cone& ca : a.maximal) {
        bool found = false;
        for (const Cone& cb : b.maximal)
            if (cone_equal(ca, cb)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool fan_contains_cone(const Fan& f, const Cone& c) {
    for (const Cone& m : f.maximal) {
        if (cone_equal(m, c)) return true;
        if (cone_subset(c, m) && is_face_of(c, m)) return true;
    }
    return false;
}

void check_fan_structure(const Fan& f) {
    for (size_t i = 0; i < f.maximal.size(); ++i)
        for (size_t j = i + 1; j < f.maximal.size(); ++j) {
            Cone inter = cone_intersect(f.maximal[i], f.maximal[j]);
            if (!is_face_of(inter, f.maximal[i]) || !is_face_of(inter, f.maximal[j]))
                throw InvariantViolation("fan cones do not meet along common faces");
        }
}

bool fan_is_complete(const Fan& f) {
    for (const Cone& c : f.maximal)
        if (cone_dim(c) != f.n) return false;
    for (const Cone& c : f.maximal) {
        for (const Cone& face : cone_faces(c)) {
            if (cone_dim(face) != f.n - 1 || cone_equal(face, c)) continue;
            int count = 0;
            for (const Cone& m : f.maximal)
                if (cone_subset(face, m)) ++count;
            if (count != 2) return false;
        }
    }
    return true;
}

} // namespace ck
