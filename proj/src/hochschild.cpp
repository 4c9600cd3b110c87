#include "torusfp/hochschild.hpp"

#include <sstream>
#include <stdexcept>

#include "torusfp/certificate_search.hpp"

namespace torusfp {

std::string TensorChain1::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1) os << a << " ";
        os << k.first.str() << " (x) " << k.second.str();
        first = false;
    }
    return os.str();
}

std::string TensorChain2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1) os << a << " ";
        os << k[0].str() << " (x) " << k[1].str() << " (x) " << k[2].str();
        first = false;
    }
    return os.str();
}

TensorChain1 tensor_expand(const RingElement& x, const RingElement& y) {
    TensorChain1 r;
    for (const auto& [g, a] : x.terms())
        for (const auto& [h, b] : y.terms()) r.add_term(g, h, a * b);
    return r;
}

RingElement d1(const Endomorphism& phi, const TensorChain1& x) {
    RingElement r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [a, b] = k;
        r.add_term(b * phi.apply(a), c);
        r.add_term(a * b, -c);
    }
    return r;
}

TensorChain1 d2(const Endomorphism& phi, const TensorChain2& x) {
    TensorChain1 r;
    for (const auto& [k, c] : x.terms()) {
        const GroupElement& a = k[0];
        const GroupElement& b = k[1];
        const GroupElement& t = k[2];
        r.add_term(b, t * phi.apply(a), c);
        r.add_term(a * b, t, -c);
        r.add_term(a, b * t, c);
    }
    return r;
}

bool is_cycle(const Endomorphism& phi, const TensorChain1& x) { return d1(phi, x).is_zero(); }

std::map<ClassId, TensorChain1> decompose_components(const Endomorphism& phi,
                                                     const TensorChain1& x) {
    std::map<ClassId, TensorChain1> comps;
    for (const auto& [k, c] : x.terms())
        comps[class_id(phi, k.first * k.second)].add_term(k.first, k.second, c);
    return comps;
}

UPowerReduction reduce_u_power(const Endomorphism& phi, const Int& k, const Int& m,
                               const Int& n) {
    if (phi.b1 != 1 || phi.b2 != 0)
        throw std::invalid_argument("reduce_u_power requires b1 = 1 and b2 = 0");

    UPowerReduction out;
    out.reduced.add_term(GroupElement::u(), GroupElement{m + k - 1, n}, k);

    // Telescoping 2-chain with d2(certificate) = u^k (x) u^m v^n - reduced.
    if (k == 0) {
        out.certificate.add_term(GroupElement::one(), GroupElement::one(), GroupElement{m, n}, 1);
    } else if (k > 1) {
        for (Int s = 1; s < k; ++s)
            out.certificate.add_term(GroupElement::u(s), GroupElement::u(),
                                     GroupElement{m + k - 1 - s, n}, -1);
    } else if (k < 0) {
        for (Int j = 0; j < -k; ++j)
            out.certificate.add_term(GroupElement::u(k + j), GroupElement::u(),
                                     GroupElement{m - 1 - j, n}, 1);
        out.certificate.add_term(GroupElement::one(), GroupElement::one(),
                                 GroupElement{m + k, n}, 1);
    }
    return out;
}

Vec2 homology_invariant(const Endomorphism& phi, const TensorChain1& x) {
    if (!is_cycle(phi, x)) throw std::invalid_argument("homology_invariant requires a cycle");
    Vec2 v;
    for (const auto& [k, c] : x.terms()) {
        v.x += c * k.first.m;
        v.y += c * k.first.n;
    }
    return v;
}

TrivialityVerdict is_trivial(const Endomorphism& phi, const TensorChain1& component,
                             long support_bound) {
    if (!is_cycle(phi, component))
        throw std::invalid_argument("is_trivial requires a cycle");

    TrivialityVerdict verdict;
    if (component.is_zero()) {
        verdict.kind = TrivialityVerdict::Kind::trivial;
        return verdict;
    }
    if (decompose_components(phi, component).size() > 1)
        throw std::invalid_argument("is_trivial requires a single-class chain");

    Vec2 inv = homology_invariant(phi, component);
    if (!inv.is_zero()) {
        verdict.kind = TrivialityVerdict::Kind::nontrivial;
        verdict.invariant = inv;
        return verdict;
    }

    long searched = support_bound;
    for (long b = 0; b <= support_bound; ++b) {
        try {
            if (auto cert = search_certificate(phi, component, SearchWindow{false, b})) {
                verdict.kind = TrivialityVerdict::Kind::trivial;
                verdict.certificate = std::move(*cert);
                return verdict;
            }
        } catch (const SearchCapacityExceeded&) {
            searched = b - 1;
            break;
        }
    }
    verdict.kind = TrivialityVerdict::Kind::unknown;
    verdict.searched_bound = searched;
    return verdict;
}

}  // namespace torusfp
