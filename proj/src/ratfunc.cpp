#include "fvh/ratfunc.hpp"

#include <stdexcept>

namespace fvh {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rat c = den_.content();
    if (c != 1) {
        Rat ic = Rat(1) / c;
        num_ *= ic;
        den_ *= ic;
    }
}

Rat RatFunc::to_rat() const {
    if (!is_constant()) throw std::domain_error("RatFunc: not constant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-reduce first; the factors are then coprime and only the content
    // normalization remains.
    MPoly g1 = gcd(a.num_, b.den_);
    MPoly g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    Rat c = r.den_.content();
    if (c != 1) {
        Rat ic = Rat(1) / c;
        r.num_ *= ic;
        r.den_ *= ic;
    }
    return r;
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    Rat c = inv.den_.content();
    if (c != 1) {
        Rat ic = Rat(1) / c;
        inv.num_ *= ic;
        inv.den_ *= ic;
    }
    return a * inv;
}

RatFunc RatFunc::pow(long k) const {
    if (k < 0) return RatFunc(1) / pow(-k);
    RatFunc acc(1), base = *this;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

RatFunc RatFunc::substitute(const std::map<int, Rat> &values) const {
    return RatFunc(num_.substitute(values), den_.substitute(values));
}

Rat RatFunc::eval(const std::map<int, Rat> &values) const {
    Rat d = den_.eval(values);
    if (d == 0) throw std::domain_error("RatFunc: pole at evaluation point");
    return num_.eval(values) / d;
}

RatFunc RatFunc::derivative(int v) const {
    MPoly dn = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatFunc(dn, den_ * den_);
}

std::string RatFunc::str() const {
    if (den_ == MPoly(Rat(1))) return num_.str();
    std::string s = "(" + num_.str() + ")/(" + den_.str() + ")";
    return s;
}

} // namespace fvh
