#include "torusfp/oracle.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace torusfp {

std::optional<Vec2> brute_same_class(const Endomorphism& phi, const GroupElement& g1,
                                     const GroupElement& g2, const SearchBudget& budget) {
    IntMatrix2 M = phi_shifted(phi);
    GroupElement diff = g2 * g1.inverse();
    Vec2 w{diff.m, diff.n};
    long B = budget.exponent_bound;
    auto hit = [&](long x, long y) { return M.apply(Vec2{x, y}) == w; };
    // Max-norm shells, lexicographic inside a shell.
    for (long t = 0; t <= B; ++t) {
        if (t == 0) {
            if (hit(0, 0)) return Vec2{0, 0};
            continue;
        }
        for (long y = -t; y <= t; ++y)
            if (hit(-t, y)) return Vec2{-t, y};
        for (long x = -t + 1; x < t; ++x) {
            if (hit(x, -t)) return Vec2{x, -t};
            if (hit(x, t)) return Vec2{x, t};
        }
        for (long y = -t; y <= t; ++y)
            if (hit(t, y)) return Vec2{t, y};
    }
    return std::nullopt;
}

std::optional<TensorChain2> brute_certificate(const Endomorphism& phi, const TensorChain1& cycle,
                                              const SearchBudget& budget) {
    if (!is_cycle(phi, cycle)) throw std::invalid_argument("brute_certificate requires a cycle");
    return search_certificate(phi, cycle, SearchWindow{true, budget.exponent_bound});
}

bool CertificateSearcher::certificate_exists(const TensorChain1& cycle) {
    if (!is_cycle(phi_, cycle)) throw std::invalid_argument("certificate_exists requires a cycle");
    for (const auto& [cls, comp] : decompose_components(phi_, cycle)) {
        auto it = lattices_.find(cls);
        if (it == lattices_.end())
            it = lattices_.emplace(cls, CertificateLattice(phi_, bound_, cls)).first;
        if (!it->second.contains(comp)) return false;
    }
    return true;
}

namespace {

// Deterministic sampling helpers; plain modulo keeps the stream identical
// across standard library implementations.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    GroupElement element(long bound) { return {Int(range(-bound, bound)), Int(range(-bound, bound))}; }
    RingElement ring_element(long bound, long max_terms) {
        RingElement r;
        long terms = range(0, max_terms);
        for (long i = 0; i < terms; ++i) r.add_term(element(bound), Int(range(-3, 3)));
        return r;
    }
};

// Scalar c with col = c * prim (prim a primitive vector), 0 for col = 0.
Int column_multiple(const Vec2& col, const Vec2& prim) {
    if (prim.x != 0) return col.x / prim.x;
    return col.y / prim.y;
}

}  // namespace

CellularHomotopyData generate_valid_data(const Endomorphism& phi, const SearchBudget& budget,
                                         std::uint64_t seed) {
    Rng rng(seed);
    long eb = budget.exponent_bound;

    ChainMapData F0 = base_chain_map(phi, RingElement(rng.element(eb)));
    RingElement p = rng.ring_element(eb, budget.max_terms);
    RingElement q = rng.ring_element(eb, budget.max_terms);

    // The trace is (u-1) (x) X + (1-v) (x) Y with X = s - p, Y = q + r, and it
    // is a cycle iff X (u - phi(u)) = Y (v - phi(v)). Pick (X, Y) from an
    // exact solution family of that equation, then back out s and r.
    RingElement X, Y;
    Int dt = det_slice(phi);
    if (phi.is_identity()) {
        // Zero trace: the fixed point free regime.
    } else if (dt != 0) {
        RingElement w = rng.ring_element(eb, budget.max_terms);
        RingElement vm = RingElement(GroupElement::v()) - apply_phi(phi, RingElement(GroupElement::v()));
        RingElement um = RingElement(GroupElement::u()) - apply_phi(phi, RingElement(GroupElement::u()));
        X = -(vm * w);
        Y = -(um * w);
    } else {
        // Singular slice with phi != I: both columns of [phi]-I sit on the
        // primitive line through prim; write u - phi(u) = u (1 - Q^{c1}) and
        // v - phi(v) = v (1 - Q^{c2}) with Q the primitive monomial, and take
        //   X = e * v * (1 - Q^{c2})/(1 - Q^{g}) * T,
        //   Y = e * u * (1 - Q^{c1})/(1 - Q^{g}) * T,   g = gcd(c1, c2),
        // with T a sum of monomials whose u*v*T-terms lie in pairwise distinct
        // classes. Each such class then carries one index of sign e.
        Vec2 col1{phi.b1 - 1, phi.b2}, col2{phi.b3, phi.b4 - 1};
        Vec2 prim = col1.is_zero() ? col2 : col1;
        {
            Int g = gcd_int(prim.x, prim.y);
            prim = Vec2{prim.x / g, prim.y / g};
        }
        Int c1 = column_multiple(col1, prim);
        Int c2 = column_multiple(col2, prim);
        Int g = gcd_int(c1, c2);
        GroupElement Qg{prim.x * g, prim.y * g};
        RingElement S1 = geometric_sum(Qg, c1 / g);
        RingElement S2 = geometric_sum(Qg, c2 / g);

        Int sign = rng.range(0, 1) == 0 ? 1 : -1;
        RingElement T;
        std::set<ClassId> seen;
        long want = std::max<long>(1, rng.range(1, budget.max_terms));
        for (long i = 0; i < 4 * want && static_cast<long>(seen.size()) < want; ++i) {
            GroupElement gk = rng.element(eb);
            ClassId cls = class_id(phi, GroupElement::u() * GroupElement::v() * gk);
            if (seen.insert(cls).second) T.add_term(gk, 1);
        }
        X = RingElement(GroupElement::v()) * S2 * T * sign;
        Y = RingElement(GroupElement::u()) * S1 * T * sign;
    }

    RingElement s = p + X;
    RingElement r = Y - q;
    return make_homotopy_data(phi, F0, p, q, r, s);
}

}  // namespace torusfp
