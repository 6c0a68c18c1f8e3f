#pragma once

#include "fvh/rational.hpp"

#include <vector>

namespace fvh {

// Bernoulli numbers B_0..B_N in the t/(e^t - 1) convention, i.e. B_1 = -1/2.
std::vector<Rat> bernoulli(unsigned N);

// Binomial coefficient C(n, k) for integer n >= 0.
Rat binomial_int(unsigned n, unsigned k);

// Generalized binomial a(a-1)...(a-k+1)/k! over any commutative ring scalar
// that is constructible from Rat and long long.
template <class S> S gen_binomial(const S &a, unsigned k) {
    S acc(1);
    for (unsigned i = 0; i < k; ++i) acc = acc * (a - S(static_cast<long long>(i)));
    return acc * S(Rat(Int(1), factorial(k)));
}

} // namespace fvh
