#include "clusterkit/laurent.hpp"

#include "clusterkit/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace ck {

static size_t default_term_limit() {
    const char* env = std::getenv("CLUSTER_MAX_TERMS");
    if (env) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 10'000'000;
}

static size_t& term_limit_storage() {
    static size_t limit = default_term_limit();
    return limit;
}

size_t term_limit() { return term_limit_storage(); }

size_t set_term_limit(size_t limit) {
    size_t old = term_limit_storage();
    term_limit_storage() = limit ? limit : default_term_limit();
    return old;
}

LaurentPoly LaurentPoly::monomial(int n, const ZVec& xexp, const ZVec& yexp, const ZZ& coeff) {
    LaurentPoly p(n);
    if (coeff != 0) p.terms_[{yexp, xexp}] = coeff;
    return p;
}

LaurentPoly LaurentPoly::x_var(int n, int i) {
    ZVec x(n, 0);
    x[i] = 1;
    return monomial(n, x, ZVec(n, 0));
}

void LaurentPoly::add_term(const TermKey& k, const ZZ& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    // the result-size guard below cannot bound the pairwise work when the
    // product collapses onto few distinct keys, so bound the work directly
    if (terms_.size() > 0 && o.terms_.size() > 0 &&
        terms_.size() > 100 * term_limit() / o.terms_.size())
        throw TermLimitExceeded("product work exceeds CLUSTER_MAX_TERMS");
    LaurentPoly r(n_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            TermKey k{vec_add(ka.y, kb.y), vec_add(ka.x, kb.x)};
            r.add_term(k, ca * cb);
            if (r.terms_.size() > term_limit())
                throw TermLimitExceeded("product exceeds CLUSTER_MAX_TERMS");
        }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(n_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

void LaurentPoly::check_y_nonnegative() const {
    for (const auto& [k, c] : terms_)
        for (const ZZ& e : k.y)
            if (e < 0) throw InvariantViolation("negative y-exponent in Z[Y][X^±] element");
}

static void append_vars(std::ostringstream& os, const char* name, const ZVec& exps, bool& first) {
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << name << (i + 1);
        if (exps[i] != 1) os << "^" << exps[i].get_str();
    }
}

std::string LaurentPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [k, c] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        bool first = true;
        if (c != 1) {
            os << c.get_str();
            first = false;
        }
        append_vars(os, "y", k.y, first);
        append_vars(os, "x", k.x, first);
        if (first) os << "1";
    }
    return os.str();
}

std::string LaurentPoly::fingerprint() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_) {
        os << "[";
        for (const ZZ& e : k.y) os << e.get_str() << ",";
        os << "|";
        for (const ZZ& e : k.x) os << e.get_str() << ",";
        os << "]=" << c.get_str() << ";";
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw NotDivisible("division by zero");
    int n = f.rank();
    LaurentPoly q(n);
    LaurentPoly rem = f;
    // leading term of g under the canonical (y,x)-lex order
    const auto& gl = *g.terms().rbegin();

    // If f = q*g, every exponent vector of q lies in the componentwise box
    // [min(f) - max(g), max(f) - min(g)]; a quotient term escaping the box
    // certifies that the division is not exact (Laurent division would
    // otherwise descend forever).
    ZVec ylo(n), yhi(n), xlo(n), xhi(n);
    {
        auto box = [&](const LaurentPoly& p, ZVec& ylo_, ZVec& yhi_, ZVec& xlo_, ZVec& xhi_) {
            bool first = true;
            for (const auto& [k, c] : p.terms()) {
                for (int i = 0; i < n; ++i) {
                    if (first || k.y[i] < ylo_[i]) ylo_[i] = k.y[i];
                    if (first || k.y[i] > yhi_[i]) yhi_[i] = k.y[i];
                    if (first || k.x[i] < xlo_[i]) xlo_[i] = k.x[i];
                    if (first || k.x[i] > xhi_[i]) xhi_[i] = k.x[i];
                }
                first = false;
            }
        };
        ZVec fyl(n), fyh(n), fxl(n), fxh(n), gyl(n), gyh(n), gxl(n), gxh(n);
        box(f, fyl, fyh, fxl, fxh);
        box(g, gyl, gyh, gxl, gxh);
        for (int i = 0; i < n; ++i) {
            ylo[i] = fyl[i] - gyh[i];
            yhi[i] = fyh[i] - gyl[i];
            xlo[i] = fxl[i] - gxh[i];
            xhi[i] = fxh[i] - gxl[i];
        }
    }

    size_t guard = 0;
    const size_t max_steps = term_limit();
    while (!rem.is_zero()) {
        if (++guard > max_steps || rem.term_count() > max_steps)
            throw TermLimitExceeded("quotient exceeds CLUSTER_MAX_TERMS");
        const auto& fl = *rem.terms().rbegin();
        ZZ qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), fl.second.get_mpz_t(), gl.second.get_mpz_t());
        if (r != 0) throw NotDivisible("leading coefficient does not divide");
        TermKey qk{vec_sub(fl.first.y, gl.first.y), vec_sub(fl.first.x, gl.first.x)};
        for (int i = 0; i < n; ++i)
            if (qk.y[i] < ylo[i] || qk.y[i] > yhi[i] || qk.x[i] < xlo[i] || qk.x[i] > xhi[i])
                throw NotDivisible("quotient support escapes the exact-division bound");
        q.add_term(qk, qc);
        // subtract qc * monomial(qk) * g from the remainder in place
        for (const auto& [gk, gc] : g.terms())
            rem.add_term({vec_add(qk.y, gk.y), vec_add(qk.x, gk.x)}, -qc * gc);
    }
    return q;
}

DegreeVector grade(const LaurentPoly& f, const ExchangeMatrix& B) {
    if (f.is_zero()) throw NotHomogeneous("zero polynomial has no degree");
    bool have = false;
    DegreeVector deg;
    TermKey first_key;
    for (const auto& [k, c] : f.terms()) {
        // deg = xexp - B * yexp
        ZVec d = vec_sub(k.x, matvec(B.b, k.y));
        if (!have) {
            deg = d;
            first_key = k;
            have = true;
        } else if (d != deg) {
            throw NotHomogeneous("conflicting term degrees (terms " +
                                 LaurentPoly::monomial(f.rank(), first_key.x, first_key.y).pretty() + " vs " +
                                 LaurentPoly::monomial(f.rank(), k.x, k.y).pretty() + ")");
        }
    }
    return deg;
}

LaurentPoly specialize_x(const LaurentPoly& f) {
    LaurentPoly r(f.rank());
    ZVec zero(f.rank(), 0);
    for (const auto& [k, c] : f.terms()) r.add_term({k.y, zero}, c);
    return r;
}

std::map<ZZ, LaurentPoly> x_degree_decompose(const LaurentPoly& f, int k) {
    std::map<ZZ, LaurentPoly> parts;
    for (const auto& [key, c] : f.terms()) {
        ZZ s = key.x[k];
        auto [it, inserted] = parts.emplace(s, LaurentPoly(f.rank()));
        ZVec x = key.x;
        x[k] = 0;
        it->second.add_term({key.y, x}, c);
    }
    return parts;
}

ZVec d_vector_of(const LaurentPoly& f) {
    if (f.is_zero()) throw InvariantViolation("d-vector of zero");
    int n = f.rank();
    ZVec d(n);
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        for (int i = 0; i < n; ++i)
            if (first || -k.x[i] > d[i]) d[i] = -k.x[i];
        first = false;
    }
    return d;
}

} // namespace ck
