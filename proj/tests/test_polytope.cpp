#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clusterkit/errors.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/seed.hpp"

#include "helpers.hpp"

using namespace ck;
using tst::vec;

namespace {

WeightedPolytope unit_square() {
    std::map<ZVec, ZZ> w;
    w[vec({0, 0})] = 1;
    w[vec({1, 0})] = 1;
    w[vec({0, 1})] = 1;
    w[vec({1, 1})] = 1;
    return WeightedPolytope(2, std::move(w));
}

} // namespace

TEST_CASE("newton polytopes of cluster variables") {
    ExchangeMatrix B = tst::a2();
    // x_1 -> single point at the origin
    WeightedPolytope p = newton(LaurentPoly::x_var(2, 0), B);
    CHECK(p.weights.size() == 1);
    CHECK(p.weights.at(vec({0, 0})) == 1);
    // mu_1(x_1) -> segment {(0,0),(1,0)}
    Pattern pat(B);
    WeightedPolytope seg = newton(pat.state_at({0}).vars[0], B);
    CHECK(seg.weights.size() == 2);
    CHECK(seg.weights.at(vec({1, 0})) == 1);
    // product of both exchange binomials -> unit square
    SeedState s0 = initial_seed(B);
    LaurentPoly m1m2 = exchange_binomial(s0, 0) * exchange_binomial(s0, 1);
    CHECK(newton(m1m2, B) == unit_square());
}

TEST_CASE("newton rejects inhomogeneous input") {
    ExchangeMatrix B = tst::a2();
    LaurentPoly bad = LaurentPoly::x_var(2, 0) + LaurentPoly::constant(2, 1);
    CHECK_THROWS_AS(newton(bad, B), NotHomogeneous);
}

TEST_CASE("minkowski weight convolution") {
    std::map<ZVec, ZZ> wa, wb;
    wa[vec({0, 0})] = 1;
    wa[vec({1, 0})] = 1;
    WeightedPolytope a(2, wa);
    CHECK(minkowski(a, a).weights.at(vec({1, 0})) == 2);
    wb[vec({0, 0})] = 1;
    wb[vec({0, 1})] = 1;
    CHECK(minkowski(a, WeightedPolytope(2, wb)) == unit_square());
    // identity element
    std::map<ZVec, ZZ> wo;
    wo[vec({0, 0})] = 1;
    CHECK(minkowski(a, WeightedPolytope(2, wo)) == a);
}

TEST_CASE("faces of the unit square") {
    std::vector<Face> fs = faces(unit_square());
    int by_dim[3] = {0, 0, 0};
    for (const Face& f : fs) {
        REQUIRE(f.dim >= 0);
        REQUIRE(f.dim <= 2);
        ++by_dim[f.dim];
    }
    CHECK(by_dim[0] == 4);
    CHECK(by_dim[1] == 4);
    CHECK(by_dim[2] == 1);
    // face normals are valid inequalities
    for (const Face& f : fs)
        for (const auto& [p, w] : unit_square().weights) CHECK(dot(f.normal, p) <= f.offset);
}

TEST_CASE("faces of the unit cube") {
    std::map<ZVec, ZZ> w;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) w[vec({a, b, c})] = 1;
    WeightedPolytope cube(3, std::move(w));
    std::vector<Face> fs = faces(cube);
    int by_dim[4] = {0, 0, 0, 0};
    for (const Face& f : fs) ++by_dim[f.dim];
    CHECK(by_dim[0] == 8);
    CHECK(by_dim[1] == 12);
    CHECK(by_dim[2] == 6);
    CHECK(by_dim[3] == 1);
}

TEST_CASE("hull vertices ignore interior points") {
    std::map<ZVec, ZZ> w;
    w[vec({0, 0})] = 1;
    w[vec({2, 0})] = 1;
    w[vec({0, 2})] = 1;
    w[vec({1, 1})] = 5; // on the hull boundary (edge midpoint)
    w[vec({1, 0})] = 7; // edge midpoint
    WeightedPolytope p(2, std::move(w));
    std::vector<ZVec> vs = hull_vertices(p);
    CHECK(vs.size() == 3);
}

TEST_CASE("section") {
    WeightedPolytope sq = unit_square();
    WeightedPolytope s = section(sq, vec({0, 0}), {0});
    CHECK(s.weights.size() == 2);
    CHECK(s.weights.count(vec({1, 0})) == 1);
    CHECK_THROWS_AS(section(sq, vec({5, 5}), {0}), PointOutside);
}

TEST_CASE("geometric mutation of a point polytope") {
    // the point polytope of x_1 mutated at 1 becomes the segment of the
    // transported variable (F-polynomial 1 + y_1)
    ExchangeMatrix B = tst::a2();
    std::map<ZVec, ZZ> w;
    w[vec({0, 0})] = 1;
    WeightedPolytope pt(2, std::move(w));
    MutatedPolytope mp = mutate_polytope_geometric(pt, vec({1, 0}), 0, B);
    std::map<ZVec, ZZ> expect;
    expect[vec({0, 0})] = 1;
    expect[vec({1, 0})] = 1;
    CHECK(mp.polytope == WeightedPolytope(2, expect));
    CHECK(mp.h == vec({-1, 0}));
    // and the transported expansion confirms it
    Transported tr = transport(LaurentPoly::x_var(2, 0), vec({1, 0}), 0, B);
    CHECK(newton(tr.f, mutate_matrix(B, 0)) == mp.polytope);
    CHECK(tr.h == mp.h);
}

TEST_CASE("geometric mutation matches the algebraic route on the A2 square") {
    ExchangeMatrix B = tst::a2();
    SeedState s0 = initial_seed(B);
    LaurentPoly m1m2 = exchange_binomial(s0, 0) * exchange_binomial(s0, 1);
    DegreeVector h = grade(m1m2, B);
    CHECK(h == vec({0, 1}));
    MutatedPolytope mp = mutate_polytope_geometric(newton(m1m2, B), h, 0, B);
    // frozen support of the transported product, translated by -e1
    std::map<ZVec, ZZ> expect;
    expect[vec({-1, 0})] = 1;
    expect[vec({-1, 1})] = 1;
    expect[vec({0, 0})] = 1;
    expect[vec({0, 1})] = 2;
    expect[vec({1, 1})] = 1;
    CHECK(mp.polytope == WeightedPolytope(2, expect));
    CHECK(mp.h == vec({0, 1}));
}

TEST_CASE("geometric mutation is an involution") {
    ExchangeMatrix B = tst::a2();
    SeedState s0 = initial_seed(B);
    LaurentPoly m1m2 = exchange_binomial(s0, 0) * exchange_binomial(s0, 1);
    DegreeVector h = grade(m1m2, B);
    WeightedPolytope N = newton(m1m2, B);
    MutatedPolytope mp = mutate_polytope_geometric(N, h, 0, B);
    MutatedPolytope back = mutate_polytope_geometric(mp.polytope, mp.h, 0, mutate_matrix(B, 0));
    CHECK(back.polytope == N);
    CHECK(back.h == h);
}

TEST_CASE("negative recovered coefficients are rejected") {
    ExchangeMatrix B = tst::a2();
    std::map<ZVec, ZZ> w;
    // segment of length 2 in direction e1 with middle weight too small for
    // any nonnegative a-decomposition when D = -2
    w[vec({0, 2})] = 1;
    w[vec({1, 2})] = -1;
    CHECK_THROWS_AS(
        [&] {
            WeightedPolytope p(2, w);
            mutate_polytope_geometric(p, vec({0, 0}), 0, B);
        }(),
        ck::Error);
}
