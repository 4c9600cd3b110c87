#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "torusfp/group_algebra.hpp"
#include "torusfp/semiconjugacy.hpp"

namespace torusfp {

// Degrees 0..2 of the Hochschild complex of ZG with coefficients in the
// phi-twisted bimodule: 1-chains are combinations of tensors a (x) b,
// 2-chains of a (x) b (x) c. Boundaries:
//   d1(a (x) b)       = b phi(a) - a b
//   d2(a (x) b (x) c) = b (x) c phi(a) - ab (x) c + a (x) bc

/// Z-linear combination of tensors a (x) b in canonical sparse form.
class TensorChain1 {
public:
    using Key = std::pair<GroupElement, GroupElement>;
    using TermMap = std::map<Key, Int>;

    TensorChain1() = default;
    TensorChain1(Int c, const GroupElement& a, const GroupElement& b) {
        add_term(a, b, std::move(c));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const GroupElement& a, const GroupElement& b, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorChain1& operator+=(const TensorChain1& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorChain1& operator-=(const TensorChain1& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    TensorChain1 operator+(const TensorChain1& o) const { auto r = *this; r += o; return r; }
    TensorChain1 operator-(const TensorChain1& o) const { auto r = *this; r -= o; return r; }
    TensorChain1 operator-() const {
        TensorChain1 r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    TensorChain1 operator*(const Int& c) const {
        TensorChain1 r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }

    bool operator==(const TensorChain1& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorChain1& o) const { return !(*this == o); }

    std::string str() const;

private:
    TermMap terms_;
};

/// Z-linear combination of tensors a (x) b (x) c in canonical sparse form.
class TensorChain2 {
public:
    using Key = std::array<GroupElement, 3>;
    using TermMap = std::map<Key, Int>;

    TensorChain2() = default;
    TensorChain2(Int c, const GroupElement& a, const GroupElement& b, const GroupElement& t) {
        add_term(a, b, t, std::move(c));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const GroupElement& a, const GroupElement& b, const GroupElement& t, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(Key{a, b, t}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorChain2& operator+=(const TensorChain2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
        return *this;
    }
    TensorChain2& operator-=(const TensorChain2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], -c);
        return *this;
    }
    TensorChain2 operator+(const TensorChain2& o) const { auto r = *this; r += o; return r; }
    TensorChain2 operator-(const TensorChain2& o) const { auto r = *this; r -= o; return r; }
    TensorChain2 operator-() const {
        TensorChain2 r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    bool operator==(const TensorChain2& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorChain2& o) const { return !(*this == o); }

    std::string str() const;

private:
    TermMap terms_;
};

/// Bilinear expansion of x (x) y over ZG into a 1-chain.
TensorChain1 tensor_expand(const RingElement& x, const RingElement& y);

RingElement d1(const Endomorphism& phi, const TensorChain1& x);
TensorChain1 d2(const Endomorphism& phi, const TensorChain2& x);

bool is_cycle(const Endomorphism& phi, const TensorChain1& x);

/// Splits a 1-chain by the semiconjugacy class of the term products a*b.
/// Both boundary maps preserve these components, so the split is well
/// defined on homology: ab and b phi(a) are semiconjugate via conjugator a.
std::map<ClassId, TensorChain1> decompose_components(const Endomorphism& phi,
                                                     const TensorChain1& x);

struct UPowerReduction {
    TensorChain1 reduced;      // k * (u (x) u^{m+k-1} v^n)
    TensorChain2 certificate;  // d2(certificate) = u^k (x) u^m v^n - reduced
};

/// Reduces u^k (x) u^m v^n to k * (u (x) u^{m+k-1} v^n) with an explicit
/// telescoping boundary certificate. Requires b1 = 1 and b2 = 0 (phi fixes u);
/// the certificate re-verifies exactly under d2 regardless.
UPowerReduction reduce_u_power(const Endomorphism& phi, const Int& k, const Int& m, const Int& n);

/// Left-factor abelianization sum(coeff * Theta(a)) of a cycle. Vanishes on
/// every d2 image, so a nonzero value certifies a nontrivial homology class;
/// the value always lies in ker([phi]-I). Rejects non-cycles.
Vec2 homology_invariant(const Endomorphism& phi, const TensorChain1& x);

struct TrivialityVerdict {
    enum class Kind { trivial, nontrivial, unknown };
    Kind kind = Kind::unknown;
    TensorChain2 certificate;  // trivial: d2(certificate) = tested cycle
    Vec2 invariant;            // nontrivial: nonzero element of ker([phi]-I)
    long searched_bound = 0;   // unknown: largest support bound searched

    bool trivial() const { return kind == Kind::trivial; }
    bool nontrivial() const { return kind == Kind::nontrivial; }
    bool unknown() const { return kind == Kind::unknown; }
};

/// Decides (non)triviality of a single-class cycle: a nonzero invariant is a
/// sound nontriviality witness; otherwise an exact boundary certificate is
/// searched with the support window growing stepwise up to support_bound.
/// Unknown is the honest outcome when the search exhausts the cap.
TrivialityVerdict is_trivial(const Endomorphism& phi, const TensorChain1& component,
                             long support_bound);

}  // namespace torusfp
