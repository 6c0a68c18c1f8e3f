#pragma once

#include "fvh/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fvh {

// Fixed, globally ordered variable universe. The monomial order is graded
// lexicographic with this variable order, so canonical forms (and therefore
// all printed output) are reproducible across runs.
inline constexpr int kNumVars = 17;
inline constexpr const char *kVarNames[kNumVars] = {
    "m", "n", "lambda", "x",  "z0", "z1", "z2", "z3", "z4",
    "z5", "z6", "z7",    "z8", "z9", "z10", "z11", "z12"};

enum Var : int {
    VM = 0,
    VN = 1,
    VLAM = 2,
    VX = 3,
    VZ0 = 4, // z-jet symbols follow contiguously: z_k is VZ0 + k
};

using Expo = std::array<std::uint16_t, kNumVars>;

inline unsigned total_degree(const Expo &e) {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
}

// Graded lex, descending, so map iteration starts at the leading term.
struct GrlexGreater {
    bool operator()(const Expo &a, const Expo &b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class MPoly {
  public:
    using TermMap = std::map<Expo, Rat, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(const Rat &c);
    explicit MPoly(long long c) : MPoly(Rat(c)) {}

    static MPoly var(int v, unsigned exp = 1);
    static MPoly monomial(const Expo &e, const Rat &c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term if the polynomial is constant, otherwise throws.
    Rat constant_value() const;

    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    unsigned degree() const; // total degree, 0 for the zero polynomial
    unsigned degree_in(int v) const;
    bool depends_on(int v) const { return degree_in(v) > 0; }

    const Expo &leading_expo() const;
    const Rat &leading_coeff() const;

    void add_term(const Expo &e, const Rat &c);

    MPoly operator-() const;
    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    MPoly &operator*=(const MPoly &o) { return *this = *this * o; }
    MPoly &operator*=(const Rat &c);
    friend MPoly operator*(MPoly a, const Rat &c) { return a *= c; }

    MPoly pow(unsigned k) const;

    bool operator==(const MPoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly &o) const { return !(*this == o); }
    // Arbitrary but deterministic total order (used for canonical map keys).
    bool operator<(const MPoly &o) const;

    // Substitute numeric values for a subset of variables.
    MPoly substitute(const std::map<int, Rat> &values) const;
    // Full evaluation; every variable appearing must be assigned.
    Rat eval(const std::map<int, Rat> &values) const;

    MPoly derivative(int v) const;

    // Rational content: p = content * primitive_part, where the primitive
    // part has coprime integer coefficients and positive leading coefficient.
    Rat content() const;
    MPoly primitive_part() const;

    std::string str() const;

  private:
    TermMap terms_;
};

// Gcd over Q[vars]; the result is primitive with positive leading coefficient
// (so gcd(a,b) ignores rational content). gcd(0,0) = 0.
MPoly gcd(const MPoly &a, const MPoly &b);

// Exact division; throws std::domain_error when b does not divide a.
MPoly divide_exact(const MPoly &a, const MPoly &b);

} // namespace fvh
