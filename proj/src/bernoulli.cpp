#include "fvh/bernoulli.hpp"

#include <stdexcept>

namespace fvh {

std::vector<Rat> bernoulli(unsigned N) {
    // Defining recurrence: sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
    std::vector<Rat> B(N + 1);
    B[0] = 1;
    for (unsigned k = 1; k <= N; ++k) {
        Rat s = 0;
        for (unsigned j = 0; j < k; ++j) s += binomial_int(k + 1, j) * B[j];
        B[k] = -s / Rat(k + 1);
    }
    return B;
}

Rat binomial_int(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1); // always exact at this point
    }
    return Rat(r);
}

} // namespace fvh
