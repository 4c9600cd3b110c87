#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace torusfp {

// All coefficients and exponents are arbitrary-precision: reductions scale
// coefficients by |k| and exponents grow under repeated endomorphism action.
using Int = boost::multiprecision::cpp_int;

/// An element u^m v^n of the free abelian group G = <u,v>.
/// Theta(u^m v^n) = (m,n) identifies G with Z^2; composition adds exponents.
struct GroupElement {
    Int m;
    Int n;

    GroupElement() : m(0), n(0) {}
    GroupElement(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {}

    static GroupElement one() { return {}; }
    static GroupElement u(Int k = 1) { return {std::move(k), 0}; }
    static GroupElement v(Int k = 1) { return {0, std::move(k)}; }

    GroupElement operator*(const GroupElement& o) const { return {m + o.m, n + o.n}; }
    GroupElement inverse() const { return {-m, -n}; }
    bool is_identity() const { return m == 0 && n == 0; }

    bool operator==(const GroupElement& o) const { return m == o.m && n == o.n; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    // Lexicographic on (m,n); this is the canonical term order everywhere.
    bool operator<(const GroupElement& o) const {
        if (m != o.m) return m < o.m;
        return n < o.n;
    }

    std::string str() const;
};

/// The induced endomorphism phi of G, as the integer matrix
///   [phi] = ( b1 b3 )
///           ( b2 b4 )
/// acting on exponent columns: phi(u^m v^n) = u^{m b1 + n b3} v^{m b2 + n b4}.
struct Endomorphism {
    Int b1, b2, b3, b4;

    Endomorphism() : b1(1), b2(0), b3(0), b4(1) {}
    Endomorphism(Int b1_, Int b2_, Int b3_, Int b4_)
        : b1(std::move(b1_)), b2(std::move(b2_)), b3(std::move(b3_)), b4(std::move(b4_)) {}

    static Endomorphism identity() { return {}; }

    GroupElement apply(const GroupElement& g) const {
        return {g.m * b1 + g.n * b3, g.m * b2 + g.n * b4};
    }
    bool is_identity() const { return b1 == 1 && b2 == 0 && b3 == 0 && b4 == 1; }

    Endomorphism compose(const Endomorphism& o) const {
        // matrix product [this][o]
        return {b1 * o.b1 + b3 * o.b2, b2 * o.b1 + b4 * o.b2,
                b1 * o.b3 + b3 * o.b4, b2 * o.b3 + b4 * o.b4};
    }

    bool operator==(const Endomorphism& o) const {
        return b1 == o.b1 && b2 == o.b2 && b3 == o.b3 && b4 == o.b4;
    }
};

/// An element of the integral group ring ZG: a finite Z-linear combination of
/// group elements, kept in canonical sparse form (no zero coefficients, terms
/// ordered lexicographically by exponent pair).
class RingElement {
public:
    using TermMap = std::map<GroupElement, Int>;

    RingElement() = default;
    explicit RingElement(const GroupElement& g) { terms_[g] = 1; }
    RingElement(Int coeff, const GroupElement& g) { add_term(g, std::move(coeff)); }

    static RingElement zero() { return {}; }
    static RingElement one() { return RingElement(GroupElement::one()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int coeff(const GroupElement& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const GroupElement& g, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    RingElement operator+(const RingElement& o) const { RingElement r = *this; r += o; return r; }
    RingElement operator-(const RingElement& o) const { RingElement r = *this; r -= o; return r; }
    RingElement operator-() const {
        RingElement r;
        for (const auto& [g, c] : terms_) r.terms_[g] = -c;
        return r;
    }
    RingElement operator*(const Int& c) const {
        RingElement r;
        if (c == 0) return r;
        for (const auto& [g, k] : terms_) r.terms_[g] = k * c;
        return r;
    }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    TermMap terms_;
};

/// g - 1 and friends come up constantly; small helpers.
RingElement monomial(const GroupElement& g);
RingElement fox_difference(const GroupElement& g);  // g - 1 in ZG

/// Applies phi to every term: sends c * g to c * phi(g). Z-linear, and a ring
/// homomorphism since phi is one on G.
RingElement apply_phi(const Endomorphism& phi, const RingElement& x);

/// Bilinear product in ZG; on monomials (a*g)(b*h) = ab * (gh).
RingElement ring_mul(const RingElement& x, const RingElement& y);

inline RingElement operator*(const RingElement& x, const RingElement& y) { return ring_mul(x, y); }

/// (x^k - 1)/(x - 1) as an element of ZG for x in {u, v}: the geometric sum
/// 1 + x + ... + x^{k-1} for k >= 0, and -(x^k + ... + x^{-1}) for k < 0.
RingElement geometric_sum(const GroupElement& x, const Int& k);

}  // namespace torusfp
