// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits with the number of failures.

#include "clusterkit/compat.hpp"
#include "clusterkit/duality.hpp"
#include "clusterkit/errors.hpp"
#include "clusterkit/fan.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/seed.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace ck;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& what, bool ok, const std::string& extra = "") {
    std::cout << "criterion " << idx << " (" << what << "): " << (ok ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " [" << extra << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

ZMat mat(std::vector<std::vector<long>> rows) {
    ZMat m;
    for (auto& r : rows) {
        ZVec v;
        for (long e : r) v.emplace_back(e);
        m.push_back(std::move(v));
    }
    return m;
}

ZVec vec(std::vector<long> entries) {
    ZVec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

std::vector<ZVec> cols_of(const ZMat& rows) {
    std::vector<ZVec> cols(rows[0].size(), ZVec(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) cols[c][r] = rows[r][c];
    return cols;
}

std::vector<ZVec> sorted_cols(std::vector<ZVec> cols) {
    std::sort(cols.begin(), cols.end());
    return cols;
}

bool set_matches(const NormalSet& s, std::vector<ZMat> expected_rows) {
    std::vector<std::vector<ZVec>> want, have;
    for (const ZMat& rows : expected_rows) want.push_back(sorted_cols(cols_of(rows)));
    for (const auto& m : s.matrices) have.push_back(sorted_cols(m));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
}

// ---- random sampling, mirroring the CLI verification suites ----

ExchangeMatrix random_acyclic(std::mt19937_64& rng, int n, int max_entry) {
    while (true) {
        ZMat b(n, ZVec(n, 0));
        std::uniform_int_distribution<int> mag(0, max_entry), pos(1, max_entry);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = mag(rng);
                if (a == 0) continue;
                b[i][j] = a;
                b[j][i] = -pos(rng);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b[i][j] != 0) return ExchangeMatrix(std::move(b));
    }
}

ExchangeMatrix random_skew_symmetrizable(std::mt19937_64& rng, int n, int max_entry) {
    std::uniform_int_distribution<int> dd(1, 3), mag(0, max_entry), sign01(0, 1);
    while (true) {
        std::vector<long> d(n);
        for (int i = 0; i < n; ++i) d[i] = dd(rng);
        ZMat b(n, ZVec(n, 0));
        bool ok = true, nonzero = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                int a = mag(rng);
                if (a == 0) continue;
                int s = sign01(rng) ? 1 : -1;
                long g = std::gcd(d[i], d[j]);
                long bij = s * a * d[j] / g;
                long bji = -s * a * d[i] / g;
                if (std::abs(bij) > max_entry || std::abs(bji) > max_entry) {
                    ok = false;
                    break;
                }
                b[i][j] = bij;
                b[j][i] = bji;
                nonzero = true;
            }
        if (ok && nonzero) return ExchangeMatrix(std::move(b));
    }
}

std::vector<int> random_path(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), dir(0, n - 1);
    int L = len(rng);
    std::vector<int> p;
    int last = -1;
    for (int i = 0; i < L; ++i) {
        int k = dir(rng);
        while (n > 1 && k == last) k = dir(rng);
        p.push_back(k);
        last = k;
    }
    return p;
}

struct SampleCase {
    ExchangeMatrix B;
    std::vector<int> path;
};

std::vector<SampleCase> duality_samples(int count) {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> rank(2, 4), kind(0, 1);
    std::vector<SampleCase> out;
    for (int c = 0; c < count; ++c) {
        int n = rank(rng);
        ExchangeMatrix m =
            kind(rng) ? random_acyclic(rng, n, 3) : random_skew_symmetrizable(rng, n, 3);
        out.push_back({m, random_path(rng, n, 8)});
    }
    return out;
}

ExchangeMatrix a2() { return ExchangeMatrix(mat({{0, 1}, {-1, 0}})); }
ExchangeMatrix a3() { return ExchangeMatrix(mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})); }
ExchangeMatrix r3() { return ExchangeMatrix(mat({{0, 2, -4}, {-2, 0, 2}, {4, -2, 0}})); }

// ---- criteria ----

void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    try {
        std::vector<NormalSet> sets = g_sets(r3(), {1, 2, 0}, {-1, -1, 1});
        ok = sets.size() == 4;
        if (ok) ok = set_matches(sets[1], {mat({{1, 0, 0}, {-2, -1, 0}, {0, 0, 1}})});
        if (ok) ok = set_matches(sets[2], {mat({{1, 0, 0}, {-2, -1, 2}, {0, 0, -1}})});
        if (ok)
            ok = set_matches(sets[3], {mat({{1, 0, 0}, {0, 0, -2}, {-1, -1, 3}}),
                                       mat({{-3, -2, 1, 0}, {2, 1, 0, 0}, {0, 0, -1, -1}})});
        bool col = false;
        for (const auto& m : sets[3].matrices)
            for (const ZVec& c : m)
                if (c == vec({1, 0, -1})) col = true;
        ok = ok && col;
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    report(1, "rank-3 normal-set example", ok,
           msg.empty() ? std::to_string(dt) + " s" : msg);
}

void criterion_2(const std::vector<SampleCase>& cases) {
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    try {
        for (const SampleCase& c : cases) {
            verify_transpose_duality(c.B, c.path);
            verify_inverse_dualities(c.B, c.path);
            verify_gbc(c.B, c.path);
        }
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    report(2, "duality suite, " + std::to_string(cases.size()) + " random cases", ok,
           msg.empty() ? std::to_string(dt) + " s" : msg);
}

struct RouteResults {
    bool ok3 = true, ok7 = true;
    std::string msg3, msg7;
};

RouteResults criteria_3_and_7(const std::vector<SampleCase>& cases) {
    bool ok3 = true, ok7 = true;
    std::string msg3, msg7;
    int expanded = 0, skipped = 0;
    // the Laurent-expansion half runs under a tight term budget: wild sampled
    // matrices can have astronomically large expansions, and a skipped case is
    // deterministic (term counts are exact), so coverage is reproducible
    size_t old_limit = set_term_limit(20000);
    for (const SampleCase& c : cases) {
        try {
            // sign coherence of G/C is asserted inside gc_along; endpoint
            // sign synchronicity checked explicitly
            GCRecord rec = gc_along(c.B, c.path);
            verify_sign_synchronicity(c.B, c.path);
            try {
                Pattern pat(c.B);
                SeedState end = pat.state_at(c.path);
                for (int i = 0; i < c.B.n; ++i) {
                    f_polynomial(end, i); // shape checks run inside
                    DegreeVector g = g_vector(end, i, c.B);
                    DegreeVector via_rec = g_vector_recurrence(pat, c.path, i);
                    ZVec via_prod(c.B.n);
                    for (int r = 0; r < c.B.n; ++r)
                        via_prod[r] = rec.per_vertex.back().G[r][i];
                    if (g != via_rec || g != via_prod) {
                        ok7 = false;
                        msg7 = "g-vector routes disagree";
                    }
                }
                ++expanded;
            } catch (const TermLimitExceeded&) {
                ++skipped; // beyond the expansion budget; matrix checks still ran
            }
        } catch (const Error& e) {
            ok3 = false;
            msg3 = e.name();
        }
    }
    set_term_limit(old_limit);
    std::string cover = std::to_string(expanded) + " expanded, " + std::to_string(skipped) +
                        " beyond the expansion budget";
    ok3 = ok3 && expanded >= 100;
    ok7 = ok7 && expanded >= 100;
    if (msg3.empty()) msg3 = cover;
    if (msg7.empty()) msg7 = cover;
    return {ok3, ok7, msg3, msg7};
}

void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    int cases = 0;
    try {
        std::mt19937_64 rng(7);
        while (cases < 12 && seconds_since(t0) < 90.0) {
            ExchangeMatrix B = random_acyclic(rng, 3, 2);
            std::vector<int> path = random_path(rng, 3, 6);
            TrackedCube tc = cube(B);
            std::vector<int> sofar;
            for (int k : path) {
                tc = mutate_tracked(tc, k);
                sofar.push_back(k);
                ExchangeMatrix Bt = mutate_along(B, sofar);
                std::vector<int> rev(sofar.rbegin(), sofar.rend());
                for (int eps : {-1, +1}) {
                    ZMat scaled = Bt.b;
                    if (eps < 0)
                        for (auto& row : scaled)
                            for (auto& e : row) e = -e;
                    GCRecord rec = gc_along(ExchangeMatrix(scaled), rev);
                    if (tracked_edges(tc, eps) != rec.per_vertex.back().C)
                        throw IdentityViolation("edge matrix != rebased C-matrix");
                    ZMat bt2 = transpose(Bt.b);
                    for (auto& row : bt2)
                        for (auto& e : row) e = ZZ(-eps) * e;
                    GCRecord grec = gc_along(ExchangeMatrix(bt2), rev);
                    ZMat expect = grec.per_vertex.back().G;
                    for (auto& row : expect)
                        for (auto& e : row) e = ZZ(eps) * e;
                    if (tracked_normals(tc, eps) != expect)
                        throw IdentityViolation("normal matrix != rebased G-matrix");
                }
            }
            ++cases;
        }
        ok = cases >= 5;
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    report(4, "tracked-cube edge/normal realization, rank 3", ok,
           msg.empty() ? std::to_string(cases) + " cases, " + std::to_string(dt) + " s" : msg);
}

void criterion_5() {
    bool ok = true;
    std::string msg;
    int cases = 0;
    auto t0 = Clock::now();
    try {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> rank(2, 3);
        while (cases < 50) {
            int n = rank(rng);
            ExchangeMatrix B = random_acyclic(rng, n, 2);
            std::vector<int> path = random_path(rng, n, n == 2 ? 6 : 4);
            // cube route agreement is asserted inside every mutate_tracked call
            TrackedCube tc = cube(B);
            for (int k : path) tc = mutate_tracked(tc, k);
            // single variables: transport vs geometric mutation along prefixes
            Pattern pat(B);
            std::vector<int> prefix;
            for (size_t step = 0; step <= path.size(); ++step) {
                SeedState s = pat.state_at(prefix);
                for (int i = 0; i < n; ++i) {
                    LaurentPoly f = s.vars[i];
                    DegreeVector h = grade(f, B);
                    for (int k = 0; k < n; ++k) {
                        Transported tr = transport(f, h, k, B);
                        WeightedPolytope alg = newton(tr.f, mutate_matrix(B, k));
                        MutatedPolytope geo = mutate_polytope_geometric(newton(f, B), h, k, B);
                        if (!(alg == geo.polytope) || tr.h != geo.h)
                            throw RouteMismatch("polytope routes disagree");
                    }
                }
                if (step < path.size()) prefix.push_back(path[step]);
            }
            ++cases;
        }
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    report(5, "polytope dual-route, " + std::to_string(cases) + " cases", ok,
           msg.empty() ? std::to_string(seconds_since(t0)) + " s" : msg);
}

void criterion_6() {
    bool ok = true;
    std::string msg;
    try {
        for (const ExchangeMatrix& B : {a2(), a3()}) {
            SeedCatalog cat = enumerate_seeds(B, 32, true);
            size_t want_seeds = B.n == 2 ? 5 : 14;
            size_t want_vars = B.n == 2 ? 5 : 9;
            if (cat.seeds.size() != want_seeds || cat.variables.size() != want_vars)
                throw InvariantViolation("unexpected catalog size");
            for (const CatalogVariable& a : cat.variables)
                for (const CatalogVariable& b : cat.variables) {
                    // well-definedness across clusters is asserted inside
                    ZZ d = compatibility_degree(cat, a.expansion, b.expansion);
                    bool coexist = false;
                    for (const CatalogSeed& s : cat.seeds) {
                        bool ha = false, hb = false;
                        for (const LaurentPoly& v : s.state.vars) {
                            if (v == a.expansion) ha = true;
                            if (v == b.expansion) hb = true;
                        }
                        if (ha && hb) coexist = true;
                    }
                    bool same = a.expansion == b.expansion;
                    if (same && d != -1) throw InvariantViolation("(x|x) != -1");
                    if (!same && ((d == 0) != coexist))
                        throw InvariantViolation("degree 0 <-> common cluster failed");
                }
        }
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    report(6, "finite-type catalogs and compatibility degrees", ok, msg);
}

void criterion_8() {
    bool ok = true;
    std::string msg;
    try {
        for (const ExchangeMatrix& B : {a2(), a3()}) {
            gfan_containment_check(B, 32, true); // runs ng_fan, so both routes
            SeedCatalog cat = enumerate_seeds(B, 32, true);
            for (int i = 0; i < B.n; ++i) freeze_connectivity_check(cat, {i});
        }
    } catch (const Error& e) {
        ok = false;
        msg = e.name();
    }
    report(8, "fan route equality, containment, freeze connectivity", ok, msg);
}

} // namespace

int main() {
    std::vector<SampleCase> cases = duality_samples(200);
    criterion_1();
    criterion_2(cases);
    RouteResults rr = criteria_3_and_7(cases);
    report(3, "sign laws along all sampled paths", rr.ok3, rr.msg3);
    criterion_4();
    criterion_5();
    criterion_6();
    report(7, "g-vector route agreement", rr.ok7, rr.msg7);
    criterion_8();
    std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures;
}
