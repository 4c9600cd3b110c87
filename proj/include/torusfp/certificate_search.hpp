#pragma once

#include <memory>
#include <optional>
#include <stdexcept>

#include "torusfp/hochschild.hpp"

namespace torusfp {

/// Thrown when a window would exceed the solver's capacity limits; callers
/// treat it as an inconclusive search, never as a decided answer.
struct SearchCapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary-certificate search: d2(y) = x as an exact integer linear system
// over 2-tensors with bounded exponents, solved by sparse echelon elimination
// with extended-gcd pivoting. Soundness is never delegated to the solver:
// every returned certificate re-verifies through d2 before being reported.
//
// Window semantics:
//   absolute  - every factor exponent pair of a candidate lies in [-b, b]^2
//   relative  - every factor exponent pair lies within L-inf distance b of
//               some exponent pair occurring in x's support
//
// Candidates are restricted to the semiconjugacy classes present in x; d2 is
// class-graded term by term, so any in-window solution projects to one with
// the same support restriction.

struct SearchWindow {
    bool absolute = false;
    long bound = 0;
};

std::optional<TensorChain2> search_certificate(const Endomorphism& phi, const TensorChain1& x,
                                               const SearchWindow& window);

/// Membership-only lattice of in-window boundaries for one class, reusable
/// across queries: building the echelon basis dominates the cost, deciding
/// one more chain against it is cheap.
class CertificateLattice {
public:
    CertificateLattice(const Endomorphism& phi, long absolute_bound, const ClassId& cls);
    ~CertificateLattice();
    CertificateLattice(CertificateLattice&&) noexcept;
    CertificateLattice& operator=(CertificateLattice&&) noexcept;

    /// True iff x (all terms in this lattice's class) is a d2 image of an
    /// in-window 2-chain.
    bool contains(const TensorChain1& x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace torusfp
