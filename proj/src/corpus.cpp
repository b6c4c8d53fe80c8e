#include "curvesing/corpus.hpp"

#include <numeric>
#include <random>

namespace curvesing {

namespace {

Branch random_branch(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> extra(1, 6);
    QPoly x = QPoly::monomial(Rational(1), m);
    QPoly y = QPoly::monomial(Rational(coeff(rng)), m);
    // One exponent coprime to m keeps the parametrisation injective.
    int e = m + extra(rng);
    while (std::gcd(e, m) != 1) ++e;
    y += QPoly::monomial(Rational(1 + (coeff(rng) + 2) % 3), e);
    for (int k = m + 1; k < e; ++k)
        if (coeff(rng) > 1) y += QPoly::monomial(Rational(coeff(rng)), k);
    if (coeff(rng) > 0) x += QPoly::monomial(Rational(coeff(rng)), m + 1);
    if (coeff(rng) > 0) std::swap(x, y);
    return Branch(std::vector<QPoly>{x, y});
}

}  // namespace

std::vector<MultiGerm> random_plane_corpus(std::size_t count, std::uint32_t seed, int max_mult,
                                           int max_delta) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nbranches(1, 4);
    std::vector<MultiGerm> out;
    while (out.size() < count) {
        const int r = nbranches(rng);
        std::vector<Branch> branches;
        int total = 0;
        for (int i = 0; i < r; ++i) {
            const int m = std::uniform_int_distribution<int>(1, 3)(rng);
            total += m;
            branches.push_back(random_branch(rng, m));
        }
        if (total > max_mult || total < 2) continue;
        try {
            MultiGerm g(2, branches);
            if (delta(g) > max_delta) continue;
            out.push_back(std::move(g));
        } catch (const Error&) {
            // Coincident or non-reduced branches are skipped.
        }
    }
    return out;
}

}  // namespace curvesing
