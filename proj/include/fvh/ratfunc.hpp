#pragma once

#include "fvh/mpoly.hpp"

#include <map>
#include <string>

namespace fvh {

// Reduced fraction of multivariate polynomials over Q. Canonical form:
// gcd(num, den) = 1 and den is integer-primitive with positive leading
// coefficient under the global monomial order.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat &c) : num_(c), den_(Rat(1)) {}
    RatFunc(long long c) : num_(Rat(c)), den_(Rat(1)) {}
    explicit RatFunc(const MPoly &p) : num_(p), den_(Rat(1)) {}
    RatFunc(MPoly num, MPoly den);

    static RatFunc variable(int v) { return RatFunc(MPoly::var(v)); }

    const MPoly &num() const { return num_; }
    const MPoly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat to_rat() const; // throws unless constant

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    RatFunc pow(long k) const;

    bool operator==(const RatFunc &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc &o) const { return !(*this == o); }
    bool operator<(const RatFunc &o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    RatFunc substitute(const std::map<int, Rat> &values) const;
    Rat eval(const std::map<int, Rat> &values) const;
    RatFunc derivative(int v) const;

    std::string str() const;

  private:
    void normalize();
    MPoly num_, den_;
};

inline RatFunc rf_m() { return RatFunc::variable(VM); }
inline RatFunc rf_n() { return RatFunc::variable(VN); }
inline RatFunc rf_lambda() { return RatFunc::variable(VLAM); }
inline RatFunc rf_x() { return RatFunc::variable(VX); }
inline RatFunc rf_z(int k) { return RatFunc::variable(VZ0 + k); }

} // namespace fvh
