#include "clusterkit/compat.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ck {

namespace {

std::string cluster_key(const SeedState& s) {
    std::vector<std::string> fps;
    for (const LaurentPoly& v : s.vars) fps.push_back(v.fingerprint());
    std::sort(fps.begin(), fps.end());
    std::ostringstream os;
    for (const std::string& f : fps) os << f << '|';
    return os.str();
}

} // namespace

SeedCatalog enumerate_seeds(const ExchangeMatrix& B, int depth_bound, bool require_finite) {
    const int kFiniteDepthCap = 64;
    const size_t kFiniteSeedCap = 1000000;
    const size_t kFiniteTermBudget = 2000000;
    int bound = require_finite ? kFiniteDepthCap : depth_bound;

    // rank 2 is decided outright: the pattern is mutation-finite iff
    // |b12 * b21| <= 3
    if (require_finite && B.n == 2 && abs(B.b[0][1] * B.b[1][0]) > 3)
        throw DepthExceeded("rank-2 pattern with |b12*b21| > 3 is mutation-infinite");

    SeedCatalog cat;
    cat.base = B;
    cat.depth = depth_bound;

    std::map<std::string, int> by_key;
    std::map<std::string, int> var_by_key;
    std::set<std::pair<int, int>> edges;

    size_t total_terms = 0;
    auto add_variables = [&](const CatalogSeed& cs) {
        for (int i = 0; i < B.n; ++i) {
            const LaurentPoly& v = cs.state.vars[i];
            std::string key = v.fingerprint();
            if (var_by_key.count(key)) continue;
            var_by_key.emplace(key, static_cast<int>(cat.variables.size()));
            cat.variables.push_back({v, grade(v, B), d_vector_of(v), cs.path, i});
            total_terms += v.term_count();
            if (require_finite && total_terms > kFiniteTermBudget)
                throw DepthExceeded("enumeration exceeded the expansion-size safety budget");
        }
    };

    CatalogSeed root{{}, initial_seed(B)};
    by_key.emplace(cluster_key(root.state), 0);
    cat.seeds.push_back(root);
    add_variables(root);

    std::deque<int> frontier{0};
    bool open_frontier = false;
    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        const CatalogSeed cur = cat.seeds[id]; // copy: vector may reallocate
        for (int k = 0; k < B.n; ++k) {
            SeedState next = mutate_seed(cur.state, k);
            std::string key = cluster_key(next);
            auto it = by_key.find(key);
            if (it != by_key.end()) {
                int a = std::min(id, it->second), b = std::max(id, it->second);
                if (a != b) edges.insert({a, b});
                continue;
            }
            if (static_cast<int>(cur.path.size()) >= bound) {
                open_frontier = true;
                continue;
            }
            int nid = static_cast<int>(cat.seeds.size());
            by_key.emplace(key, nid);
            CatalogSeed cs;
            cs.path = cur.path;
            cs.path.push_back(k);
            cs.state = std::move(next);
            cat.seeds.push_back(std::move(cs));
            add_variables(cat.seeds.back());
            edges.insert({id, nid});
            frontier.push_back(nid);
            if (require_finite && cat.seeds.size() > kFiniteSeedCap)
                throw DepthExceeded("enumeration did not close within the safety cap");
        }
    }
    if (require_finite && open_frontier)
        throw DepthExceeded("pattern is not mutation-finite within depth " +
                            std::to_string(bound));
    cat.complete = !open_frontier;
    cat.adjacency.assign(edges.begin(), edges.end());
    return cat;
}

int find_variable(const SeedCatalog& cat, const LaurentPoly& expansion) {
    for (size_t i = 0; i < cat.variables.size(); ++i)
        if (cat.variables[i].expansion == expansion) return static_cast<int>(i);
    return -1;
}

ZZ compatibility_degree(const SeedCatalog& cat, const LaurentPoly& f, const LaurentPoly& x) {
    int vf = find_variable(cat, f);
    if (vf < 0) throw VariableNotInCatalog("query element is not a catalog variable");
    const CatalogVariable& fv = cat.variables[static_cast<size_t>(vf)];

    bool found = false;
    ZZ value = 0;
    for (const CatalogSeed& s : cat.seeds) {
        for (int i = 0; i < cat.base.n; ++i) {
            if (!(s.state.vars[i] == x)) continue;
            // re-express f in the frame of this cluster: rebase at B_t,
            // replay back to the base seed and then out to f's witness seed
            std::vector<int> replay(s.path.rbegin(), s.path.rend());
            replay.insert(replay.end(), fv.path.begin(), fv.path.end());
            Pattern rebased(s.state.B);
            SeedState end = rebased.state_at(replay);
            ZZ d = d_vector_of(end.vars[fv.index])[i];
            if (!found) {
                value = d;
                found = true;
            } else if (d != value) {
                throw WellDefinednessViolation(
                    "compatibility degree differs between clusters containing x: " +
                    value.get_str() + " vs " + d.get_str());
            }
        }
    }
    if (!found) throw VariableNotInCatalog("no catalog cluster contains x");
    return value;
}

namespace {

// Decompose a degree vector as a nonnegative integer combination of the
// g-vectors of one catalog cluster; returns the seed id and exponents.
struct MonomialDecomp {
    int seed = -1;
    std::vector<ZZ> exponents; // per position in the seed
};

MonomialDecomp decompose(const SeedCatalog& cat, const DegreeVector& g) {
    int n = cat.base.n;
    for (size_t sid = 0; sid < cat.seeds.size(); ++sid) {
        const SeedState& s = cat.seeds[sid].state;
        ZMat G(n, ZVec(n));
        for (int i = 0; i < n; ++i) {
            DegreeVector gi = grade(s.vars[i], cat.base);
            for (int r = 0; r < n; ++r) G[r][i] = gi[r];
        }
        QVec rhs(n);
        for (int r = 0; r < n; ++r) rhs[r] = QQ(g[r]);
        auto sol = solve_q(to_qmat(G), rhs);
        if (!sol) continue;
        bool ok = true;
        std::vector<ZZ> a(n);
        for (int i = 0; i < n; ++i) {
            QQ v = (*sol)[i];
            v.canonicalize();
            if (v.get_den() != 1 || v < 0) {
                ok = false;
                break;
            }
            a[i] = v.get_num();
        }
        if (ok) return {static_cast<int>(sid), a};
    }
    return {};
}

} // namespace

bool are_compatible(const SeedCatalog& cat, const DegreeVector& g, const DegreeVector& h) {
    MonomialDecomp dg = decompose(cat, g);
    MonomialDecomp dh = decompose(cat, h);
    if (dg.seed < 0 || dh.seed < 0)
        throw OutOfScope("degree vector is not a catalog cluster-monomial degree");
    int n = cat.base.n;
    std::vector<const LaurentPoly*> fg, fh;
    for (int i = 0; i < n; ++i) {
        if (dg.exponents[i] > 0) fg.push_back(&cat.seeds[dg.seed].state.vars[i]);
        if (dh.exponents[i] > 0) fh.push_back(&cat.seeds[dh.seed].state.vars[i]);
    }
    bool compatible = true;
    for (const LaurentPoly* a : fg)
        for (const LaurentPoly* b : fh) {
            if (compatibility_degree(cat, *a, *b) > 0 || compatibility_degree(cat, *b, *a) > 0) {
                compatible = false;
                break;
            }
        }

    // cross-check: compatible iff some cluster contains every constituent
    std::set<std::string> wanted;
    for (const LaurentPoly* a : fg) wanted.insert(a->fingerprint());
    for (const LaurentPoly* b : fh) wanted.insert(b->fingerprint());
    bool coexist = false;
    for (const CatalogSeed& s : cat.seeds) {
        std::set<std::string> have;
        for (const LaurentPoly& v : s.state.vars) have.insert(v.fingerprint());
        if (std::includes(have.begin(), have.end(), wanted.begin(), wanted.end())) {
            coexist = true;
            break;
        }
    }
    if (cat.complete && coexist != compatible)
        throw WellDefinednessViolation("degree criterion and common-cluster criterion disagree");

    // Minkowski cross-check when g+h is again a catalog monomial degree
    if (compatible) {
        DegreeVector sum(n);
        for (int r = 0; r < n; ++r) sum[r] = g[r] + h[r];
        MonomialDecomp ds = decompose(cat, sum);
        if (ds.seed >= 0) {
            auto poly_of = [&](const MonomialDecomp& d) {
                LaurentPoly prod = LaurentPoly::constant(n, 1);
                for (int i = 0; i < n; ++i)
                    if (d.exponents[i] > 0)
                        prod = prod *
                               cat.seeds[d.seed].state.vars[i].pow(
                                   static_cast<unsigned>(d.exponents[i].get_ui()));
                return newton(prod, cat.base);
            };
            WeightedPolytope lhs = minkowski(poly_of(dg), poly_of(dh));
            if (!(lhs == poly_of(ds)))
                throw WellDefinednessViolation("Minkowski identity N_g + N_h = N_{g+h} fails");
        }
    }
    return compatible;
}

Fan cluster_complex(const SeedCatalog& cat) {
    int n = cat.base.n;
    std::vector<Cone> cones;
    for (const CatalogSeed& s : cat.seeds) {
        std::vector<ZVec> gens;
        for (int i = 0; i < n; ++i) gens.push_back(grade(s.state.vars[i], cat.base));
        cones.push_back(make_cone(n, std::move(gens)));
    }
    Fan f = make_fan(n, std::move(cones));
    check_fan_structure(f);
    return f;
}

void freeze_connectivity_check(const SeedCatalog& cat, const std::vector<int>& I) {
    if (!cat.complete) throw OutOfScope("freeze connectivity requires a complete catalog");
    int n = cat.base.n;
    std::map<std::string, int> by_key;
    for (size_t i = 0; i < cat.seeds.size(); ++i)
        by_key.emplace(cluster_key(cat.seeds[i].state), static_cast<int>(i));

    for (size_t start = 0; start < cat.seeds.size(); ++start) {
        std::set<std::string> frozen;
        for (int i : I) frozen.insert(cat.seeds[start].state.vars[i].fingerprint());
        // all seeds whose clusters contain the frozen variable set
        std::set<int> targets;
        for (size_t sid = 0; sid < cat.seeds.size(); ++sid) {
            std::set<std::string> have;
            for (const LaurentPoly& v : cat.seeds[sid].state.vars) have.insert(v.fingerprint());
            if (std::includes(have.begin(), have.end(), frozen.begin(), frozen.end()))
                targets.insert(static_cast<int>(sid));
        }
        // BFS avoiding mutations at frozen variables
        std::set<int> reached{static_cast<int>(start)};
        std::deque<int> q{static_cast<int>(start)};
        while (!q.empty()) {
            int id = q.front();
            q.pop_front();
            for (int k = 0; k < n; ++k) {
                if (frozen.count(cat.seeds[id].state.vars[k].fingerprint())) continue;
                SeedState next = mutate_seed(cat.seeds[id].state, k);
                auto it = by_key.find(cluster_key(next));
                if (it == by_key.end()) continue;
                if (reached.insert(it->second).second) q.push_back(it->second);
            }
        }
        for (int t : targets)
            if (!reached.count(t))
                throw ConnectivityViolation("seeds " + std::to_string(start) + " and " +
                                            std::to_string(t) +
                                            " share the frozen variables but are not connected "
                                            "by mutations avoiding them");
    }
}

} // namespace ck
