#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "torusfp/certificate_search.hpp"
#include "torusfp/trace_engine.hpp"

namespace torusfp {

/// Bounds for the brute-force searches. A failed search inside a window is
/// evidence only for that window, never a global claim.
struct SearchBudget {
    long exponent_bound = 4;
    long max_terms = 4;
};

/// Conjugator search by plain enumeration of z in [-B, B]^2, visited in
/// canonical order (max-norm shells, lexicographic inside a shell). Agrees
/// with same_class whenever the latter's witness fits in the window.
std::optional<Vec2> brute_same_class(const Endomorphism& phi, const GroupElement& g1,
                                     const GroupElement& g2, const SearchBudget& budget);

/// Boundary certificate by exact linear algebra over all 2-tensors whose six
/// exponents lie in [-B, B]; rejects non-cycles.
std::optional<TensorChain2> brute_certificate(const Endomorphism& phi, const TensorChain1& cycle,
                                              const SearchBudget& budget);

/// Repeated-query variant of brute_certificate's existence test: the echelon
/// basis of in-window boundaries is built once per class and then shared.
class CertificateSearcher {
public:
    CertificateSearcher(const Endomorphism& phi, long absolute_bound)
        : phi_(phi), bound_(absolute_bound) {}

    bool certificate_exists(const TensorChain1& cycle);

private:
    Endomorphism phi_;
    long bound_;
    std::map<ClassId, CertificateLattice> lattices_;
};

/// Deterministic (in seed) generator of data passing validate_cellular whose
/// trace is a d1-cycle. Used to fuzz the trace engine; never fabricates
/// invalid data.
CellularHomotopyData generate_valid_data(const Endomorphism& phi, const SearchBudget& budget,
                                         std::uint64_t seed);

}  // namespace torusfp
