#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvh/bernoulli.hpp"
#include "fvh/linear.hpp"
#include "fvh/mpoly.hpp"
#include "fvh/ratfunc.hpp"
#include "fvh/series.hpp"

using namespace fvh;

namespace {

// Deterministic pseudo-random polynomials for property checks.
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    int small(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

MPoly random_poly(Lcg &g, int nterms, int vars = 3, int maxdeg = 3) {
    MPoly p;
    for (int t = 0; t < nterms; ++t) {
        Expo e{};
        for (int v = 0; v < vars; ++v) e[v] = static_cast<std::uint16_t>(g.small(0, maxdeg));
        p.add_term(e, Rat(g.small(-5, 5)));
    }
    return p;
}

RatFunc random_ratfunc(Lcg &g) {
    MPoly d;
    while (d.is_zero()) d = random_poly(g, 2);
    return RatFunc(random_poly(g, 3), d);
}

} // namespace

TEST_CASE("bernoulli numbers and recurrence") {
    auto B = bernoulli(20);
    CHECK(B[0] == Rat(1));
    CHECK(B[1] == Rat(-1, 2));
    CHECK(B[2] == Rat(1, 6));
    CHECK(B[3] == Rat(0));
    CHECK(B[12] == Rat(-691, 2730));
    for (unsigned k = 1; k <= 19; ++k) {
        Rat s = 0;
        for (unsigned j = 0; j <= k; ++j) s += binomial_int(k + 1, j) * B[j];
        CHECK(s == Rat(0));
    }
}

TEST_CASE("generalized binomial") {
    // binomial(a, 1) = a with a = h/m
    RatFunc h = rf_m() + rf_n();
    RatFunc a = h / rf_m();
    CHECK(gen_binomial(a, 1) == a);
    CHECK(gen_binomial(a, 0) == RatFunc(1));
    // (m,n) = (1,2): a = 3, k = 2 -> 3
    CHECK(gen_binomial(Rat(3), 2) == Rat(3));
    CHECK(gen_binomial(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("mpoly ring axioms and gcd") {
    Lcg g;
    for (int rep = 0; rep < 25; ++rep) {
        MPoly a = random_poly(g, 3), b = random_poly(g, 3), c = random_poly(g, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
    for (int rep = 0; rep < 10; ++rep) {
        MPoly a = random_poly(g, 2), b = random_poly(g, 2), f = random_poly(g, 2);
        if (f.is_zero()) continue;
        MPoly gg = gcd(a * f, b * f);
        if ((a * f).is_zero() || (b * f).is_zero()) continue;
        // f divides gcd(af, bf)
        CHECK_NOTHROW(divide_exact(gg, gcd(f, gg)));
        MPoly q = divide_exact(gg * f.content(), gcd(f, gg) * f.content());
        CHECK(!q.is_zero());
        // and the gcd divides both products
        CHECK_NOTHROW(divide_exact(a * f, gg));
        CHECK_NOTHROW(divide_exact(b * f, gg));
    }
    MPoly x = MPoly::var(VX), m = MPoly::var(VM);
    MPoly p = (x + m) * (x - m);
    CHECK(gcd(p, (x + m) * x) == x + m);
    CHECK(divide_exact(p, x + m) == x - m);
}

TEST_CASE("ratfunc canonical form") {
    MPoly x = MPoly::var(VX), m = MPoly::var(VM);
    RatFunc r((x * x - m * m), (x + m));
    CHECK(r == RatFunc(x - m));
    // den positive leading coefficient
    RatFunc s(MPoly(Rat(1)), (x - m) * Rat(-2));
    CHECK(s.den().leading_coeff() > 0);
    Lcg g;
    for (int rep = 0; rep < 15; ++rep) {
        RatFunc a = random_ratfunc(g), b = random_ratfunc(g), c = random_ratfunc(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) CHECK((a / b) * (b / a) == RatFunc(1));
    }
}

TEST_CASE("eps series arithmetic") {
    using ES = EpsSeries<Rat>;
    ES a(4), b(6);
    a.set(0, Rat(1));
    a.set(1, Rat(2));
    a.set(3, Rat(-1, 3));
    b.set(0, Rat(2));
    b.set(2, Rat(5));
    CHECK(a * b == b * a);
    CHECK((a * b).trunc() == 4);
    ES even(6);
    even.set(0, Rat(1));
    even.set(2, Rat(3));
    even.set_parity(Parity::Even);
    CHECK((even * even).parity() == Parity::Even);
    CHECK((even + even).parity() == Parity::Even);
    CHECK((even * a).parity() == Parity::Any);

    ES t(5);
    t.set(1, Rat(1, 2));
    t.set(2, Rat(-3));
    CHECK(series_log(series_exp(t)) == t);
    ES sa(2);
    sa.set(1, Rat(7)); // eps*a with E=2: exp = 1 + 7eps + 49/2 eps^2
    ES e = series_exp(sa);
    CHECK(e.at(0) == Rat(1));
    CHECK(e.at(1) == Rat(7));
    CHECK(e.at(2) == Rat(49, 2));
    ES zero(3);
    CHECK(series_exp(zero) == ES(Rat(1), 3));
    ES u(4);
    u.set(0, Rat(2));
    u.set(1, Rat(1));
    CHECK(u * series_inverse(u) == ES(Rat(1), 4));
    ES bad(3);
    bad.set(0, Rat(1));
    CHECK_THROWS(series_exp(bad));
}

TEST_CASE("exact linear solver") {
    LinearSystem id2{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(3), Rat(-5)}};
    auto r = solve_exact(id2);
    REQUIRE(r.unique);
    CHECK(r.solution == std::vector<Rat>{Rat(3), Rat(-5)});

    LinearSystem s2{{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(2), Rat(0)}};
    auto r2 = solve_exact(s2);
    REQUIRE(r2.unique);
    CHECK(r2.solution == std::vector<Rat>{Rat(1), Rat(1)});

    // Vandermonde rows from 4 distinct sigma-evaluations of a known cubic.
    std::vector<Rat> coeffs{Rat(2), Rat(-1, 3), Rat(0), Rat(7, 2)}; // c0..c3
    LinearSystem v;
    for (int i = 0; i < 4; ++i) {
        Rat s(i - 2);
        std::vector<Rat> row;
        Rat val = 0, p = 1;
        for (int k = 0; k < 4; ++k) {
            row.push_back(p);
            val += coeffs[k] * p;
            p *= s;
        }
        v.matrix.push_back(row);
        v.rhs.push_back(val);
    }
    auto rv = solve_exact(v);
    REQUIRE(rv.unique);
    CHECK(rv.solution == coeffs);

    // Inconsistent overdetermined system -> structured report.
    LinearSystem bad{{{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)}};
    auto rb = solve_exact(bad);
    CHECK(!rb.consistent);
    CHECK(rb.rank == 1);

    // Rank-deficient but consistent.
    LinearSystem rd{{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(1), Rat(2)}};
    auto rr = solve_exact(rd);
    CHECK(rr.consistent);
    CHECK(rr.rank == 1);
    CHECK(!rr.unique);
}
