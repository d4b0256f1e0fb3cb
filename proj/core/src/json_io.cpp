#include "clusterkit/json_io.hpp"

#include "clusterkit/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ck {

namespace {

ZZ zz_from_json(const Json& j) {
    if (j.is_string()) return ZZ(j.get<std::string>());
    if (j.is_number_integer()) return ZZ(static_cast<long>(j.get<long long>()));
    throw UsageError("expected an integer or decimal string in JSON input");
}

long zz_to_long(const ZZ& v) {
    if (!v.fits_slong_p()) throw UsageError("exponent too large for JSON serialization");
    return v.get_si();
}

} // namespace

Json matrix_to_json(const ZMat& m) {
    Json rows = Json::array();
    for (const ZVec& r : m) {
        Json row = Json::array();
        for (const ZZ& e : r) row.push_back(e.get_str());
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.size()}, {"rows", std::move(rows)}};
}

ZMat matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw UsageError("matrix JSON must be an object with a \"rows\" array");
    ZMat m;
    for (const Json& row : j["rows"]) {
        ZVec r;
        for (const Json& e : row) r.push_back(zz_from_json(e));
        m.push_back(std::move(r));
    }
    if (j.contains("n") && j["n"].get<size_t>() != m.size())
        throw UsageError("matrix JSON: \"n\" does not match the number of rows");
    for (const ZVec& r : m)
        if (r.size() != m.size()) throw UsageError("matrix JSON: matrix must be square");
    return m;
}

ExchangeMatrix exchange_from_json(const Json& j) { return ExchangeMatrix(matrix_from_json(j)); }

Json vec_to_json(const ZVec& v) {
    Json a = Json::array();
    for (const ZZ& e : v) a.push_back(zz_to_long(e));
    return a;
}

ZVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw UsageError("expected a JSON array of integers");
    ZVec v;
    for (const Json& e : j) v.push_back(zz_from_json(e));
    return v;
}

Json laurent_to_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back(Json{{"x", vec_to_json(k.x)}, {"y", vec_to_json(k.y)}, {"c", c.get_str()}});
    return terms;
}

LaurentPoly laurent_from_json(const Json& j, int n) {
    if (!j.is_array()) throw UsageError("laurent JSON must be an array of terms");
    LaurentPoly f(n);
    for (const Json& t : j) {
        ZVec x = vec_from_json(t.at("x"));
        ZVec y = vec_from_json(t.at("y"));
        if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
            throw UsageError("laurent JSON: exponent vector length mismatch");
        f.add_term({y, x}, zz_from_json(t.at("c")));
    }
    return f;
}

Json polytope_to_json(const WeightedPolytope& p) {
    Json pts = Json::array();
    for (const auto& [pt, w] : p.weights)
        pts.push_back(Json{{"p", vec_to_json(pt)}, {"w", w.get_str()}});
    return Json{{"n", p.n}, {"points", std::move(pts)}};
}

WeightedPolytope polytope_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::map<ZVec, ZZ> w;
    for (const Json& t : j.at("points")) {
        ZVec p = vec_from_json(t.at("p"));
        if (static_cast<int>(p.size()) != n)
            throw UsageError("polytope JSON: point length mismatch");
        w[p] = zz_from_json(t.at("w"));
    }
    return WeightedPolytope(n, std::move(w));
}

Json fan_to_json(const Fan& f) {
    Json cones = Json::array();
    for (const Cone& c : f.maximal) {
        Json rays = Json::array();
        for (const ZVec& r : c.rays) rays.push_back(vec_to_json(r));
        cones.push_back(std::move(rays));
    }
    return Json{{"n", f.n}, {"cones", std::move(cones)}};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot open " + tmp + " for writing");
        out << contents;
        if (!out) throw UsageError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace ck
