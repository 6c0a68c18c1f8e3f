#pragma once

#include "fvh/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fvh {

// A partition J = (J_1 >= J_2 >= ... >= 1) of jet orders; u^{(J)} is the
// product u^{(J_1)} u^{(J_2)} ...
using Partition = std::vector<int>;

inline int partition_weight(const Partition &j) {
    int w = 0;
    for (int k : j) w += k;
    return w;
}

template <class S> struct JetKey {
    S kappa;        // exponent of e^{kappa u}
    Partition jets; // sorted non-increasing
    bool operator<(const JetKey &o) const {
        if (kappa < o.kappa) return true;
        if (o.kappa < kappa) return false;
        return jets < o.jets;
    }
    bool operator==(const JetKey &o) const { return !(*this < o) && !(o < *this); }
};

// Element of the differential-polynomial ring with exponential factors:
// finite sums of coeff(eps) * e^{kappa u} * u^{(J)}.
template <class S> class DiffPoly {
  public:
    using Coeff = EpsSeries<S>;
    using TermMap = std::map<JetKey<S>, Coeff>;

    DiffPoly() = default;
    explicit DiffPoly(const Coeff &c) { add_term(S(0), {}, c); }
    explicit DiffPoly(const S &c) { add_term(S(0), {}, Coeff(c)); }

    static DiffPoly one() { return DiffPoly(S(1)); }
    static DiffPoly exp_u(const S &kappa) {
        DiffPoly f;
        f.add_term(kappa, {}, Coeff(S(1)));
        return f;
    }
    static DiffPoly jet(int order, const S &kappa = S(0)) {
        DiffPoly f;
        f.add_term(kappa, {order}, Coeff(S(1)));
        return f;
    }
    static DiffPoly jet_monomial(Partition j, const S &kappa = S(0)) {
        std::sort(j.begin(), j.end(), std::greater<int>());
        DiffPoly f;
        f.add_term(kappa, j, Coeff(S(1)));
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }

    void add_term(const S &kappa, Partition jets, const Coeff &c) {
        if (c.is_zero()) return;
        std::sort(jets.begin(), jets.end(), std::greater<int>());
        for (int k : jets)
            if (k < 1) throw std::domain_error("DiffPoly: jet order must be >= 1");
        JetKey<S> key{kappa, std::move(jets)};
        auto [it, inserted] = terms_.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffPoly operator-() const {
        DiffPoly r = *this;
        for (auto &[k, c] : r.terms_) c = -c;
        return r;
    }
    DiffPoly &operator+=(const DiffPoly &o) {
        for (auto &[k, c] : o.terms_) add_term(k.kappa, k.jets, c);
        return *this;
    }
    DiffPoly &operator-=(const DiffPoly &o) {
        for (auto &[k, c] : o.terms_) add_term(k.kappa, k.jets, -c);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly &b) { return a -= b; }

    friend DiffPoly operator*(const DiffPoly &a, const DiffPoly &b) {
        DiffPoly r;
        for (auto &[ka, ca] : a.terms_)
            for (auto &[kb, cb] : b.terms_) {
                Partition j = ka.jets;
                j.insert(j.end(), kb.jets.begin(), kb.jets.end());
                r.add_term(ka.kappa + kb.kappa, std::move(j), ca * cb);
            }
        return r;
    }
    DiffPoly &operator*=(const DiffPoly &o) { return *this = *this * o; }

    DiffPoly scaled(const S &c) const {
        DiffPoly r;
        for (auto &[k, v] : terms_) r.add_term(k.kappa, k.jets, v.scaled(c));
        return r;
    }
    DiffPoly scaled_series(const Coeff &c) const {
        DiffPoly r;
        for (auto &[k, v] : terms_) r.add_term(k.kappa, k.jets, v * c);
        return r;
    }
    // Multiply by eps^k.
    DiffPoly eps_shifted(int k) const {
        DiffPoly r;
        for (auto &[key, v] : terms_) r.add_term(key.kappa, key.jets, v.shifted(k));
        return r;
    }

    DiffPoly truncated(int e) const {
        DiffPoly r;
        for (auto &[k, v] : terms_) r.add_term(k.kappa, k.jets, v.truncated(e));
        return r;
    }

    // Coefficient of eps^e as an eps-free polynomial.
    DiffPoly eps_slice(int e) const {
        DiffPoly r;
        for (auto &[k, v] : terms_) {
            const S &c = v.at(e);
            if (!scalar_is_zero(c)) r.add_term(k.kappa, k.jets, Coeff(c));
        }
        return r;
    }

    int min_eps_order() const {
        int mo = kExactOrder;
        for (auto &[k, v] : terms_) mo = std::min(mo, v.min_order());
        return mo;
    }
    // Weakest truncation among coefficients (kExactOrder if all exact).
    int trunc() const {
        int t = kExactOrder;
        for (auto &[k, v] : terms_) t = std::min(t, v.trunc());
        return t;
    }
    int max_jet_order() const {
        int m = 0;
        for (auto &[k, v] : terms_)
            if (!k.jets.empty()) m = std::max(m, k.jets.front());
        return m;
    }

    // Total x-derivative (Leibniz; d/dx e^{kappa u} = kappa u' e^{kappa u}).
    DiffPoly dx() const {
        DiffPoly r;
        for (auto &[key, c] : terms_) {
            if (!scalar_is_zero(key.kappa)) {
                Partition j = key.jets;
                j.push_back(1);
                r.add_term(key.kappa, std::move(j), c.scaled(key.kappa));
            }
            for (std::size_t i = 0; i < key.jets.size(); ++i) {
                if (i > 0 && key.jets[i] == key.jets[i - 1]) continue; // distinct values once
                int mult = static_cast<int>(
                    std::count(key.jets.begin(), key.jets.end(), key.jets[i]));
                Partition j = key.jets;
                j[i] += 1;
                r.add_term(key.kappa, std::move(j), c.scaled(S(mult)));
            }
        }
        return r;
    }

    // Formal partial derivative with u, u', u'', ... independent; k = 0 acts
    // through e^{kappa u} as multiplication by kappa.
    DiffPoly partial_jet(int k) const {
        DiffPoly r;
        for (auto &[key, c] : terms_) {
            if (k == 0) {
                if (!scalar_is_zero(key.kappa))
                    r.add_term(key.kappa, key.jets, c.scaled(key.kappa));
                continue;
            }
            auto it = std::find(key.jets.begin(), key.jets.end(), k);
            if (it == key.jets.end()) continue;
            int mult =
                static_cast<int>(std::count(key.jets.begin(), key.jets.end(), k));
            Partition j = key.jets;
            j.erase(std::find(j.begin(), j.end(), k));
            r.add_term(key.kappa, std::move(j), c.scaled(S(mult)));
        }
        return r;
    }

    // f(x + s*eps) expanded as sum_k (s eps)^k/k! dx^k f, truncated at the
    // weakest coefficient truncation (which must be finite).
    DiffPoly shifted_x(const S &s) const {
        int e = trunc();
        if (e == kExactOrder)
            throw std::domain_error("DiffPoly::shifted_x needs a finite truncation");
        DiffPoly r = truncated(e);
        DiffPoly d = *this;
        S spow(1);
        Rat kfac = 1;
        for (int k = 1; k <= e; ++k) {
            d = d.dx();
            if (d.is_zero()) break;
            spow = spow * s;
            kfac *= k;
            r += d.eps_shifted(k).scaled(spow * S(Rat(1) / kfac)).truncated(e);
        }
        return r;
    }

    // Degrees |J| - e over all terms and stored eps-orders.
    std::set<int> grade_set() const {
        std::set<int> ds;
        for (auto &[key, c] : terms_) {
            int w = partition_weight(key.jets);
            for (int e = 0; e <= c.max_stored(); ++e)
                if (!scalar_is_zero(c.at(e))) ds.insert(w - e);
        }
        return ds;
    }
    std::optional<int> grade_deg() const {
        auto ds = grade_set();
        if (ds.empty()) return 0;
        if (ds.size() == 1) return *ds.begin();
        return std::nullopt;
    }

    bool operator==(const DiffPoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffPoly &o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto &[key, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << series_str(c) << ")*e^{" << scalar_str(key.kappa) << "u}";
            int i = 0;
            while (i < static_cast<int>(key.jets.size())) {
                int j = i;
                while (j < static_cast<int>(key.jets.size()) && key.jets[j] == key.jets[i]) ++j;
                os << "*u" << key.jets[i];
                if (j - i > 1) os << "^" << (j - i);
                i = j;
            }
        }
        return os.str();
    }

  private:
    static std::string series_str(const Coeff &c) {
        std::ostringstream os;
        bool first = true;
        for (int e = 0; e <= c.max_stored(); ++e) {
            if (scalar_is_zero(c.at(e))) continue;
            if (!first) os << " + ";
            first = false;
            os << scalar_str(c.at(e));
            if (e > 0) os << "*eps^" << e;
        }
        if (first) os << "0";
        return os.str();
    }

    TermMap terms_;
};

// exp of a differential polynomial with strictly positive minimal eps-order.
template <class S> DiffPoly<S> dp_exp(const DiffPoly<S> &f) {
    int e = f.trunc();
    if (e == kExactOrder) throw std::domain_error("dp_exp: needs a finite truncation");
    if (f.min_eps_order() < 1) throw std::domain_error("dp_exp: non-nilpotent argument");
    DiffPoly<S> result(EpsSeries<S>(S(1), e));
    DiffPoly<S> power(EpsSeries<S>(S(1), e));
    Rat kfac = 1;
    for (int k = 1; k <= e; ++k) {
        power = (power * f).truncated(e);
        if (power.is_zero()) break;
        kfac *= k;
        result += power.scaled(S(Rat(1) / kfac));
    }
    return result;
}

// Inverse of c + O(eps) where c is a nonzero constant (kappa = 0, no jets at
// eps^0). Terminating Neumann series in the eps-adic topology.
template <class S> DiffPoly<S> dp_unit_inverse(const DiffPoly<S> &f) {
    int e = f.trunc();
    if (e == kExactOrder)
        throw std::domain_error("dp_unit_inverse: needs a finite truncation");
    DiffPoly<S> lead = f.eps_slice(0);
    S c0(0);
    for (auto &[key, c] : lead.terms()) {
        if (!scalar_is_zero(key.kappa) || !key.jets.empty())
            throw std::domain_error("dp_unit_inverse: leading part is not constant");
        c0 = c.at(0);
    }
    if (scalar_is_zero(c0)) throw std::domain_error("dp_unit_inverse: zero leading part");
    S ic = S(1) / c0;
    DiffPoly<S> t = DiffPoly<S>(EpsSeries<S>(S(1), e)) - f.scaled(ic);
    if (!t.is_zero() && t.min_eps_order() < 1)
        throw std::domain_error("dp_unit_inverse: non-nilpotent tail");
    DiffPoly<S> result(EpsSeries<S>(S(1), e));
    DiffPoly<S> power(EpsSeries<S>(S(1), e));
    for (int k = 1; k <= e; ++k) {
        power = (power * t).truncated(e);
        if (power.is_zero()) break;
        result += power;
    }
    return result.scaled(ic);
}

// Evaluate a differential polynomial in a target ring T: coeff maps the
// eps-series coefficient, jet maps each jet order, expu maps e^{kappa u}.
template <class S, class T, class CoefFn, class JetFn, class ExpFn>
T substitute_jets(const DiffPoly<S> &f, CoefFn &&coeff, JetFn &&jet, ExpFn &&expu) {
    T acc{};
    for (auto &[key, c] : f.terms()) {
        T t = coeff(c);
        if (!scalar_is_zero(key.kappa)) t = t * expu(key.kappa);
        for (int j : key.jets) t = t * jet(j);
        acc = acc + t;
    }
    return acc;
}

using DiffPolyR = DiffPoly<Rat>;
using DiffPolyF = DiffPoly<RatFunc>;

} // namespace fvh
