#pragma once

#include <random>
#include <vector>

#include "torusfp/hochschild.hpp"

namespace torusfp::testsupport {

// Deterministic sampling, independent of the standard library's distribution
// implementations.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long range(long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    GroupElement element(long bound) {
        return {Int(range(-bound, bound)), Int(range(-bound, bound))};
    }
    RingElement ring_element(long bound, long max_terms) {
        RingElement r;
        long t = range(0, max_terms);
        for (long i = 0; i < t; ++i) r.add_term(element(bound), Int(range(-3, 3)));
        return r;
    }
    TensorChain1 chain1(long bound, long max_terms) {
        TensorChain1 r;
        long t = range(0, max_terms);
        for (long i = 0; i < t; ++i) r.add_term(element(bound), element(bound), Int(range(-3, 3)));
        return r;
    }
    TensorChain2 chain2(long bound, long max_terms) {
        TensorChain2 r;
        long t = range(0, max_terms);
        for (long i = 0; i < t; ++i)
            r.add_term(element(bound), element(bound), element(bound), Int(range(-3, 3)));
        return r;
    }
};

// Endomorphism panel covering det([phi]-I) = 0 (identity, shears, a skew
// singular case) and != 0 (diagonal and rotation cases).
inline std::vector<Endomorphism> phi_panel() {
    return {
        Endomorphism::identity(),
        Endomorphism{1, 0, 1, 1},    // [[1,1],[0,1]] shear
        Endomorphism{1, 0, 2, 3},    // [[1,2],[0,3]] shear-type, b4 != 1
        Endomorphism{1, 1, 0, 1},    // [[1,0],[1,1]] transposed shear
        Endomorphism{2, -1, 1, 0},   // [[2,1],[-1,0]] singular slice, no fixed generator
        Endomorphism{3, 0, 0, 2},    // [[3,0],[0,2]] det([phi]-I) = 2
        Endomorphism{2, 0, 0, 2},    // [[2,0],[0,2]] det([phi]-I) = 1
        Endomorphism{0, 1, -1, 0},   // [[0,-1],[1,0]] rotation, det([phi]-I) = 2
    };
}

inline GroupElement U(long k = 1) { return GroupElement::u(k); }
inline GroupElement V(long k = 1) { return GroupElement::v(k); }
inline GroupElement UV(long m, long n) { return GroupElement{m, n}; }

}  // namespace torusfp::testsupport
