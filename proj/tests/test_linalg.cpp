#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clusterkit/linalg.hpp"

#include "helpers.hpp"

using namespace ck;
using tst::mat;
using tst::vec;

TEST_CASE("rank and determinant") {
    CHECK(rank_z(mat({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_z(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_z(mat({{0, 0}, {0, 0}})) == 0);
    CHECK(det_z(mat({{2, 1}, {1, 1}})) == 1);
    CHECK(det_z(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(det_z(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("matmul and transpose") {
    ZMat a = mat({{1, 2}, {3, 4}});
    ZMat b = mat({{0, 1}, {1, 0}});
    CHECK(matmul(a, b) == mat({{2, 1}, {4, 3}}));
    CHECK(transpose(a) == mat({{1, 3}, {2, 4}}));
    CHECK(matmul(a, identity_mat(2)) == a);
}

TEST_CASE("primitive") {
    CHECK(primitive(vec({2, 4, -6})) == vec({1, 2, -3}));
    CHECK(primitive(vec({0, 0})) == vec({0, 0}));
    CHECK(primitive(vec({-3, 0})) == vec({-1, 0}));
}

TEST_CASE("solve_q") {
    auto s = solve_q(to_qmat(mat({{2, 0}, {0, 3}})), {QQ(4), QQ(6)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == QQ(2));
    CHECK((*s)[1] == QQ(2));
    CHECK(!solve_q(to_qmat(mat({{1, 1}, {1, 1}})), {QQ(0), QQ(1)}).has_value());
}

TEST_CASE("nullspace_z") {
    auto ns = nullspace_z(mat({{1, 1, 0}}));
    CHECK(ns.size() == 2);
    for (const ZVec& v : ns) CHECK(v[0] + v[1] == 0);
    CHECK(nullspace_z(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("hnf_rows spans the same lattice") {
    ZMat h = hnf_rows(mat({{2, 4}, {1, 3}}));
    CHECK(h.size() == 2);
    // determinant of the basis is the lattice index
    ZZ d = det_z(h);
    CHECK((d == 2 || d == -2));
}

TEST_CASE("in_cone_span") {
    std::vector<ZVec> gens = {vec({1, 0}), vec({0, 1})};
    CHECK(in_cone_span(gens, vec({3, 5})));
    CHECK(!in_cone_span(gens, vec({-1, 0})));
    CHECK(in_cone_span(gens, vec({0, 0})));
    std::vector<ZVec> line = {vec({1, 1})};
    CHECK(in_cone_span(line, vec({2, 2})));
    CHECK(!in_cone_span(line, vec({2, 3})));
    CHECK(!in_cone_span(line, vec({-1, -1})));
}
