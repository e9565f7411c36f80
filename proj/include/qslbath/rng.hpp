// rng.hpp — seedable mt19937_64 with pinned uniform/gaussian mappings so
// that draws are reproducible bit-for-bit across runs and platforms.

#pragma once

#include "qslbath/linalg.hpp"

#include <cstdint>
#include <random>

namespace qslbath {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform();
        while (u == 0.0) u = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double phi = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        return {re, gaussian()};
    }

    Matrix hermitian(Index dim, double scale = 1.0) {
        Matrix g(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
        return scale * 0.5 * (g + g.adjoint());
    }

    // Full-rank random state: G G^dag / tr, with Gaussian complex entries.
    Matrix density(Index dim) {
        Matrix g(dim, dim);
        for (Index i = 0; i < dim; ++i)
            for (Index j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
        Matrix rho = g * g.adjoint();
        return rho / rho.trace().real();
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qslbath
