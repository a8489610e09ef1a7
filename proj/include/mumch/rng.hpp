#pragma once

#include <cstdint>

#include "mumch/operator.hpp"

namespace mumch {

// Counter-based generator: the value stream is a pure function of
// (seed, stream, counter), so sample i of a sweep can be regenerated on any
// worker without replaying samples 0..i-1. Uniforms come from SplitMix64,
// normals from Box-Muller; no std:: distributions are involved, keeping
// sequences identical across standard libraries.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    double normal();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar-random pure state |psi> (normalized complex Gaussian vector).
Eigen::VectorXcd haar_pure_vector(int d, CounterRng& rng);
Operator haar_pure_state(int d, CounterRng& rng);

// Matrix with i.i.d. standard complex Gaussian entries.
Operator random_operator(int d, CounterRng& rng);

Operator random_hermitian(int d, CounterRng& rng);

// Uniform point on the probability simplex with n entries.
RealVector random_simplex(int n, CounterRng& rng);

}  // namespace mumch
