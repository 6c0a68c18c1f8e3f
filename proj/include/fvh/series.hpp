#pragma once

#include "fvh/rational.hpp"
#include "fvh/ratfunc.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvh {

inline bool scalar_is_zero(const Rat &r) { return r == 0; }
inline bool scalar_is_zero(const RatFunc &r) { return r.is_zero(); }
inline std::string scalar_str(const Rat &r) { return to_string(r); }
inline std::string scalar_str(const RatFunc &r) { return r.str(); }

// Truncation order sentinel for exact (finite) series.
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

enum class Parity { Any, Even };

// Truncated power series in eps over a scalar ring S. Entries beyond the
// truncation order are unknown, not zero; arithmetic keeps the weaker
// truncation of the operands.
template <class S> class EpsSeries {
  public:
    EpsSeries() : trunc_(kExactOrder) {}
    explicit EpsSeries(int trunc) : trunc_(trunc) {}
    EpsSeries(const S &c0, int trunc = kExactOrder) : trunc_(trunc) {
        if (!scalar_is_zero(c0)) c_.push_back(c0);
    }

    static EpsSeries mono(int k, const S &c, int trunc = kExactOrder) {
        EpsSeries r(trunc);
        r.set(k, c);
        return r;
    }

    int trunc() const { return trunc_; }
    bool exact() const { return trunc_ == kExactOrder; }
    Parity parity() const { return parity_; }
    void set_parity(Parity p) { parity_ = p; }

    bool is_zero() const { return c_.empty(); }
    int max_stored() const { return static_cast<int>(c_.size()) - 1; }

    // Lowest index with a nonzero entry; trunc()+1 for the zero series.
    int min_order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!scalar_is_zero(c_[k])) return static_cast<int>(k);
        return trunc_ == kExactOrder ? kExactOrder : trunc_ + 1;
    }

    const S &at(int k) const {
        if (k > trunc_) throw std::domain_error("EpsSeries: access beyond truncation");
        static const S zero{};
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    void set(int k, const S &v) {
        if (k > trunc_) return;
        if (k >= static_cast<int>(c_.size())) {
            if (scalar_is_zero(v)) return;
            c_.resize(static_cast<std::size_t>(k) + 1);
        }
        c_[static_cast<std::size_t>(k)] = v;
        trim();
    }

    EpsSeries truncated(int e) const {
        EpsSeries r(std::min(trunc_, e));
        r.parity_ = parity_;
        for (int k = 0; k <= std::min(e, max_stored()); ++k) r.c_.push_back(c_[k]);
        r.trim();
        return r;
    }

    EpsSeries operator-() const {
        EpsSeries r = *this;
        for (auto &v : r.c_) v = -v;
        return r;
    }

    friend EpsSeries operator+(const EpsSeries &a, const EpsSeries &b) {
        EpsSeries r(std::min(a.trunc_, b.trunc_));
        r.parity_ = (a.parity_ == Parity::Even && b.parity_ == Parity::Even) ? Parity::Even
                                                                             : Parity::Any;
        std::size_t nn = std::max(a.c_.size(), b.c_.size());
        for (std::size_t k = 0; k < nn; ++k) {
            if (static_cast<int>(k) > r.trunc_) break;
            S v{};
            if (k < a.c_.size()) v = v + a.c_[k];
            if (k < b.c_.size()) v = v + b.c_[k];
            r.c_.push_back(v);
        }
        r.trim();
        return r;
    }

    friend EpsSeries operator-(const EpsSeries &a, const EpsSeries &b) { return a + (-b); }

    friend EpsSeries operator*(const EpsSeries &a, const EpsSeries &b) {
        EpsSeries r(std::min(a.trunc_, b.trunc_));
        r.parity_ = (a.parity_ == Parity::Even && b.parity_ == Parity::Even) ? Parity::Even
                                                                             : Parity::Any;
        if (a.c_.empty() || b.c_.empty()) return r;
        int top = static_cast<int>(a.c_.size() + b.c_.size()) - 2;
        if (!(a.exact() && b.exact())) top = std::min(top, r.trunc_);
        r.c_.assign(static_cast<std::size_t>(top) + 1, S{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                int k = static_cast<int>(i + j);
                if (k > top) break;
                r.c_[static_cast<std::size_t>(k)] =
                    r.c_[static_cast<std::size_t>(k)] + a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    EpsSeries &operator+=(const EpsSeries &o) { return *this = *this + o; }
    EpsSeries &operator-=(const EpsSeries &o) { return *this = *this - o; }
    EpsSeries &operator*=(const EpsSeries &o) { return *this = *this * o; }

    EpsSeries scaled(const S &c) const {
        EpsSeries r = *this;
        if (scalar_is_zero(c)) {
            r.c_.clear();
            return r;
        }
        for (auto &v : r.c_) v = v * c;
        r.trim();
        return r;
    }

    // Multiply by eps^k.
    EpsSeries shifted(int k) const {
        EpsSeries r(trunc_ == kExactOrder ? kExactOrder : trunc_);
        r.parity_ = Parity::Any;
        for (int i = 0; i <= max_stored(); ++i) {
            if (i + k > r.trunc_) break;
            if (i + k < 0) {
                if (!scalar_is_zero(c_[i]))
                    throw std::domain_error("EpsSeries: negative eps power");
                continue;
            }
            r.set(i + k, c_[i]);
        }
        return r;
    }

    bool operator==(const EpsSeries &o) const { return c_ == o.c_; }
    bool operator!=(const EpsSeries &o) const { return !(*this == o); }

  private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
    int trunc_;
    Parity parity_ = Parity::Any;
};

template <class S> S scalar_from_rat(const Rat &r) { return S(r); }

// exp of a series with zero constant term ("non-nilpotent exponent" otherwise).
template <class S> EpsSeries<S> series_exp(const EpsSeries<S> &s) {
    if (!scalar_is_zero(s.at(0))) throw std::domain_error("non-nilpotent exponent");
    if (s.exact())
        throw std::domain_error("series_exp: unbounded truncation order");
    EpsSeries<S> result(S(1), s.trunc());
    EpsSeries<S> power(S(1), s.trunc());
    Rat kfac = 1;
    for (int k = 1; k <= s.trunc(); ++k) {
        power = power * s;
        if (power.is_zero()) break;
        kfac *= k;
        result += power.scaled(scalar_from_rat<S>(Rat(1) / kfac));
    }
    return result;
}

// log of a series with constant term 1.
template <class S> EpsSeries<S> series_log(const EpsSeries<S> &s) {
    if (!(s.at(0) == S(1))) throw std::domain_error("series_log: constant term must be 1");
    if (s.exact()) throw std::domain_error("series_log: unbounded truncation order");
    EpsSeries<S> t = s - EpsSeries<S>(S(1), s.trunc());
    EpsSeries<S> result(s.trunc());
    EpsSeries<S> power(S(1), s.trunc());
    for (int k = 1; k <= s.trunc(); ++k) {
        power = power * t;
        if (power.is_zero()) break;
        Rat c = (k % 2 == 0) ? Rat(-1, k) : Rat(1, k);
        result += power.scaled(scalar_from_rat<S>(c));
    }
    return result;
}

// Multiplicative inverse; the constant term must be invertible in S.
template <class S> EpsSeries<S> series_inverse(const EpsSeries<S> &s) {
    S c0 = s.at(0);
    if (scalar_is_zero(c0)) throw std::domain_error("series_inverse: zero constant term");
    if (s.exact()) throw std::domain_error("series_inverse: unbounded truncation order");
    S ic = S(1) / c0;
    EpsSeries<S> t = EpsSeries<S>(S(1), s.trunc()) - s.scaled(ic);
    EpsSeries<S> result(S(1), s.trunc());
    EpsSeries<S> power(S(1), s.trunc());
    for (int k = 1; k <= s.trunc(); ++k) {
        power = power * t;
        if (power.is_zero()) break;
        result += power;
    }
    return result.scaled(ic);
}

} // namespace fvh
