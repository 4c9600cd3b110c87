#include "torusfp/group_algebra.hpp"

#include <sstream>

namespace torusfp {

std::string GroupElement::str() const {
    if (is_identity()) return "1";
    std::ostringstream os;
    if (m != 0) {
        os << "u";
        if (m != 1) os << "^" << m;
    }
    if (n != 0) {
        os << "v";
        if (n != 1) os << "^" << n;
    }
    return os.str();
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || g.is_identity()) os << a;
        if (!g.is_identity()) os << g.str();
        first = false;
    }
    return os.str();
}

RingElement monomial(const GroupElement& g) { return RingElement(g); }

RingElement fox_difference(const GroupElement& g) {
    RingElement r(g);
    r.add_term(GroupElement::one(), -1);
    return r;
}

RingElement apply_phi(const Endomorphism& phi, const RingElement& x) {
    RingElement r;
    for (const auto& [g, c] : x.terms()) r.add_term(phi.apply(g), c);
    return r;
}

RingElement ring_mul(const RingElement& x, const RingElement& y) {
    RingElement r;
    for (const auto& [g, a] : x.terms())
        for (const auto& [h, b] : y.terms()) r.add_term(g * h, a * b);
    return r;
}

RingElement geometric_sum(const GroupElement& x, const Int& k) {
    RingElement r;
    if (k >= 0) {
        GroupElement p = GroupElement::one();
        for (Int i = 0; i < k; ++i) {
            r.add_term(p, 1);
            p = p * x;
        }
    } else {
        GroupElement p = x.inverse();
        for (Int i = 0; i < -k; ++i) {
            r.add_term(p, -1);
            p = p * x.inverse();
        }
    }
    return r;
}

}  // namespace torusfp
