#include "mumch/rng.hpp"

#include <cmath>
#include <numbers>

namespace mumch {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

Eigen::VectorXcd haar_pure_vector(int d, CounterRng& rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

Operator haar_pure_state(int d, CounterRng& rng) {
    const Eigen::VectorXcd v = haar_pure_vector(d, rng);
    return v * v.adjoint();
}

Operator random_operator(int d, CounterRng& rng) {
    Operator m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

Operator random_hermitian(int d, CounterRng& rng) {
    const Operator m = random_operator(d, rng);
    return 0.5 * (m + m.adjoint());
}

RealVector random_simplex(int n, CounterRng& rng) {
    RealVector p(n);
    for (int i = 0; i < n; ++i) p(i) = -std::log(1.0 - rng.uniform());
    return p / p.sum();
}

}  // namespace mumch
