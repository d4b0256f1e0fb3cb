#pragma once

#include "clusterkit/exchange.hpp"
#include "clusterkit/laurent.hpp"

#include <initializer_list>
#include <vector>

namespace tst {

inline ck::ZMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    ck::ZMat m;
    for (const auto& r : rows) {
        ck::ZVec row;
        for (long e : r) row.emplace_back(e);
        m.push_back(std::move(row));
    }
    return m;
}

inline ck::ZVec vec(std::initializer_list<long> es) {
    ck::ZVec v;
    for (long e : es) v.emplace_back(e);
    return v;
}

inline ck::ExchangeMatrix a2() { return ck::ExchangeMatrix(mat({{0, 1}, {-1, 0}})); }
inline ck::ExchangeMatrix a3() {
    return ck::ExchangeMatrix(mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
}
inline ck::ExchangeMatrix b2() { return ck::ExchangeMatrix(mat({{0, 2}, {-1, 0}})); }
// The rank-3 matrix of the worked normal-set example.
inline ck::ExchangeMatrix r3() {
    return ck::ExchangeMatrix(mat({{0, 2, -4}, {-2, 0, 2}, {4, -2, 0}}));
}

} // namespace tst
