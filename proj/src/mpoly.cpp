#include "fvh/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fvh {

namespace {

const Expo kZeroExpo{};

bool divides(const Expo &a, const Expo &b) { // a | b componentwise
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_sub(const Expo &a, const Expo &b) {
    Expo r{};
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

Expo expo_add(const Expo &a, const Expo &b) {
    Expo r{};
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

} // namespace

MPoly::MPoly(const Rat &c) {
    if (c != 0) terms_.emplace(kZeroExpo, c);
}

MPoly MPoly::var(int v, unsigned exp) {
    MPoly p;
    if (v < 0 || v >= kNumVars) throw std::out_of_range("MPoly::var index");
    Expo e{};
    e[v] = static_cast<std::uint16_t>(exp);
    if (exp == 0) return MPoly(Rat(1));
    p.terms_.emplace(e, Rat(1));
    return p;
}

MPoly MPoly::monomial(const Expo &e, const Rat &c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExpo);
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("MPoly: not a constant");
    return terms_.begin()->second;
}

unsigned MPoly::degree() const {
    return terms_.empty() ? 0u : total_degree(terms_.begin()->first);
}

unsigned MPoly::degree_in(int v) const {
    unsigned d = 0;
    for (auto &[e, c] : terms_) d = std::max<unsigned>(d, e[v]);
    return d;
}

const Expo &MPoly::leading_expo() const {
    if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
    return terms_.begin()->first;
}

const Rat &MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
    return terms_.begin()->second;
}

void MPoly::add_term(const Expo &e, const Rat &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto &[e, c] : r.terms_) c = -c;
    return r;
}

MPoly &MPoly::operator+=(const MPoly &o) {
    for (auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o) {
    for (auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (auto &[ea, ca] : a.terms_)
        for (auto &[eb, cb] : b.terms_) r.add_term(expo_add(ea, eb), ca * cb);
    return r;
}

MPoly &MPoly::operator*=(const Rat &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly acc(Rat(1)), base = *this;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool MPoly::operator<(const MPoly &o) const {
    auto ia = terms_.begin(), ib = o.terms_.begin();
    GrlexGreater cmp;
    for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return cmp(ib->first, ia->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == terms_.end() && ib != o.terms_.end();
}

MPoly MPoly::substitute(const std::map<int, Rat> &values) const {
    MPoly r;
    for (auto &[e, c] : terms_) {
        Rat coeff = c;
        Expo rest = e;
        for (auto &[v, val] : values) {
            for (unsigned k = 0; k < e[v]; ++k) coeff *= val;
            rest[v] = 0;
        }
        r.add_term(rest, coeff);
    }
    return r;
}

Rat MPoly::eval(const std::map<int, Rat> &values) const {
    MPoly s = substitute(values);
    return s.constant_value();
}

MPoly MPoly::derivative(int v) const {
    MPoly r;
    for (auto &[e, c] : terms_) {
        if (e[v] == 0) continue;
        Expo d = e;
        d[v] = static_cast<std::uint16_t>(d[v] - 1);
        r.add_term(d, c * Rat(e[v]));
    }
    return r;
}

Rat MPoly::content() const {
    if (terms_.empty()) return Rat(0);
    Int g = 0, l = 1;
    for (auto &[e, c] : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(num(c)));
        l = boost::multiprecision::lcm(l, den(c));
    }
    Rat cont(g, l);
    if (leading_coeff() < 0) cont = -cont;
    return cont;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return MPoly();
    Rat c = content();
    MPoly r = *this;
    r *= Rat(1) / c;
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || a != 1) os << to_string(a);
        bool need_star = !has_vars || a != 1;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << "*";
            os << kVarNames[v];
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

MPoly divide_exact(const MPoly &a, const MPoly &b) {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly rem = a, q;
    const Expo &lb = b.leading_expo();
    const Rat &cb = b.leading_coeff();
    while (!rem.is_zero()) {
        const Expo &lr = rem.leading_expo();
        if (!divides(lb, lr)) throw std::domain_error("MPoly: inexact division");
        MPoly t = MPoly::monomial(expo_sub(lr, lb), rem.leading_coeff() / cb);
        q += t;
        rem -= t * b;
    }
    return q;
}

namespace {

// Univariate view in variable v with multivariate coefficients.
using UniView = std::map<unsigned, MPoly>;

UniView uni_view(const MPoly &p, int v) {
    UniView u;
    for (auto &[e, c] : p.terms()) {
        Expo rest = e;
        unsigned d = e[v];
        rest[v] = 0;
        u[d].add_term(rest, c);
    }
    for (auto it = u.begin(); it != u.end();)
        it = it->second.is_zero() ? u.erase(it) : std::next(it);
    return u;
}

MPoly from_uni(const UniView &u, int v) {
    MPoly p;
    for (auto &[d, c] : u) p += c * MPoly::var(v, d);
    return p;
}

unsigned uni_deg(const UniView &u) { return u.empty() ? 0u : u.rbegin()->first; }

// Content of p with respect to v: gcd of the v-coefficients.
MPoly content_in(const MPoly &p, int v) {
    MPoly g;
    for (auto &[d, c] : uni_view(p, v)) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MPoly leading_coeff_in(const MPoly &p, int v) {
    auto u = uni_view(p, v);
    return u.empty() ? MPoly() : u.rbegin()->second;
}

// Pseudo-remainder of a by b in variable v (deg_v(a) >= deg_v(b) >= 1):
// returns lc_v(b)^(deg a - deg b + 1) * a reduced mod b.
MPoly pseudo_rem(const MPoly &a, const MPoly &b, int v) {
    UniView r = uni_view(a, v);
    UniView bb = uni_view(b, v);
    unsigned db = uni_deg(bb);
    MPoly lb = bb.rbegin()->second;
    unsigned remaining = uni_deg(r) - db + 1;
    while (!r.empty() && uni_deg(r) >= db) {
        --remaining;
        unsigned dr = uni_deg(r);
        MPoly lr = r.rbegin()->second;
        UniView nr;
        for (auto &[d, c] : r) {
            if (d == dr) continue;
            MPoly t = c * lb;
            if (!t.is_zero()) nr[d] = t;
        }
        for (auto &[d, c] : bb) {
            if (d == db) continue;
            unsigned nd = d + (dr - db);
            auto it = nr.find(nd);
            MPoly t = c * lr;
            if (it == nr.end())
                nr[nd] = -t;
            else {
                it->second -= t;
                if (it->second.is_zero()) nr.erase(it);
            }
        }
        r = std::move(nr);
    }
    MPoly rem = from_uni(r, v);
    for (unsigned i = 0; i < remaining; ++i) rem *= lb;
    return rem;
}

// Fast path: gcd with a monomial is a monomial.
std::optional<MPoly> monomial_gcd_fast(const MPoly &a, const MPoly &b) {
    const MPoly *mono = nullptr, *other = nullptr;
    if (a.size() == 1) mono = &a, other = &b;
    else if (b.size() == 1) mono = &b, other = &a;
    else return std::nullopt;
    Expo g = mono->leading_expo();
    for (auto &[e, c] : other->terms())
        for (int i = 0; i < kNumVars; ++i) g[i] = std::min(g[i], e[i]);
    return MPoly::monomial(g, Rat(1));
}

} // namespace

MPoly gcd(const MPoly &a, const MPoly &b) {
    if (a.is_zero()) return b.is_zero() ? MPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
    if (auto fast = monomial_gcd_fast(a, b)) return *fast;

    // Split off the common monomial factor, then run a primitive PRS in the
    // lowest variable occurring in either operand.
    Expo mina{}, minb{};
    mina.fill(std::uint16_t(0xffff));
    minb.fill(std::uint16_t(0xffff));
    for (auto &[e, c] : a.terms())
        for (int i = 0; i < kNumVars; ++i) mina[i] = std::min(mina[i], e[i]);
    for (auto &[e, c] : b.terms())
        for (int i = 0; i < kNumVars; ++i) minb[i] = std::min(minb[i], e[i]);
    Expo common{};
    for (int i = 0; i < kNumVars; ++i) common[i] = std::min(mina[i], minb[i]);
    MPoly A = a, B = b;
    if (total_degree(common) > 0) {
        MPoly mono = MPoly::monomial(common, Rat(1));
        A = divide_exact(A, mono);
        B = divide_exact(B, mono);
    }
    MPoly monopart = MPoly::monomial(common, Rat(1));

    int v = -1;
    for (int i = 0; i < kNumVars && v < 0; ++i)
        if (A.depends_on(i) || B.depends_on(i)) v = i;
    if (v < 0) return monopart; // both constants after stripping

    MPoly ca = content_in(A, v), cb = content_in(B, v);
    MPoly cont = gcd(ca, cb);
    MPoly pa = divide_exact(A, ca).primitive_part();
    MPoly pb = divide_exact(B, cb).primitive_part();
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    // Subresultant PRS: growth-controlled without per-step content gcds.
    MPoly g(Rat(1)), hh(Rat(1));
    MPoly result;
    while (true) {
        unsigned da = pa.degree_in(v), db = pb.degree_in(v);
        if (db == 0) {
            result = pb.is_zero() ? pa : MPoly(Rat(1));
            break;
        }
        unsigned delta = da - db;
        MPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            result = pa;
            break;
        }
        MPoly denom = g;
        for (unsigned i = 0; i < delta; ++i) denom *= hh;
        pb = divide_exact(r, denom);
        g = leading_coeff_in(pa, v);
        if (delta > 0) {
            MPoly gp = g.pow(delta);
            MPoly hp = hh.pow(delta >= 1 ? delta - 1 : 0);
            hh = delta >= 1 ? divide_exact(gp, hp) : hh;
        }
    }
    if (result.degree_in(v) > 0)
        result = divide_exact(result, content_in(result, v)).primitive_part();
    else
        result = MPoly(Rat(1));
    return (monopart * cont * result).primitive_part();
}

} // namespace fvh
