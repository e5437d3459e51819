#include "schouten/random_gen.hpp"

namespace schouten {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

int Rng::range(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }

Rational Rng::coefficient() {
    int num = range(-3, 3);
    if (num == 0)
        num = 1;
    int den = range(1, 2);
    return Rational(num, den);
}

Scalar random_scalar(Rng& rng, const Chart& chart, int max_degree, int terms) {
    Scalar out = Scalar::zero(chart);
    const int n = chart.coord_count();
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<int>(size_t(n), 0), 0};
        if (n > 0) {
            int deg = rng.range(0, max_degree);
            for (int d = 0; d < deg; ++d)
                m.exps[size_t(rng.below(std::uint64_t(n)))] += 1;
        }
        out += Scalar::monomial(chart, std::move(m), rng.coefficient());
    }
    return out;
}

GrassmannElement random_element(Rng& rng, const Chart& chart, const GenList& gens,
                                int tensor_degree, int max_coeff_degree, int terms) {
    GrassmannElement out(chart, gens);
    const int r = gens.count();
    if (tensor_degree > r || tensor_degree < 0)
        return out;
    for (int t = 0; t < terms; ++t) {
        // random strictly increasing multi-index
        std::vector<int> pool;
        for (int i = 0; i < r; ++i)
            pool.push_back(i);
        MultiIndex idx;
        for (int k = 0; k < tensor_degree; ++k) {
            size_t pick = size_t(rng.below(std::uint64_t(pool.size())));
            idx.push_back(pool[pick]);
            pool.erase(pool.begin() + long(pick));
        }
        std::sort(idx.begin(), idx.end());
        out.add_term(std::move(idx), random_scalar(rng, chart, max_coeff_degree, 1));
    }
    return out;
}

} // namespace schouten
