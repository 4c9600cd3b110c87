#include <doctest.h>

#include "test_support.hpp"

using namespace torusfp;
using namespace torusfp::testsupport;

TEST_CASE("apply_phi on single terms") {
    Endomorphism shear{1, 0, 1, 1};  // [[1,1],[0,1]]
    CHECK(apply_phi(shear, RingElement(V())) == RingElement(UV(1, 1)));
    CHECK(shear.apply(V()) == UV(1, 1));
    CHECK(shear.apply(U()) == U());

    Endomorphism id = Endomorphism::identity();
    RingElement x;
    x.add_term(UV(2, -5), 3);
    x.add_term(UV(0, 1), -1);
    CHECK(apply_phi(id, x) == x);

    Endomorphism diag{3, 0, 0, 2};  // [[3,0],[0,2]]
    RingElement y;
    y.add_term(U(), 2);
    y.add_term(V(), -1);
    RingElement expect;
    expect.add_term(U(3), 2);
    expect.add_term(V(2), -1);
    CHECK(apply_phi(diag, y) == expect);
}

TEST_CASE("ring_mul on single terms and cancellation") {
    CHECK(RingElement(U()) * RingElement(V()) == RingElement(UV(1, 1)));
    CHECK(RingElement(UV(1, 1)) * RingElement(UV(-1, -1)) == RingElement::one());

    RingElement um1 = fox_difference(U());                        // u - 1
    RingElement up1 = RingElement(U()) + RingElement::one();     // u + 1
    RingElement expect = RingElement(U(2)) - RingElement::one();  // u^2 - 1
    CHECK(um1 * up1 == expect);
}

TEST_CASE("canonical sparse form") {
    RingElement x;
    x.add_term(U(), 1);
    x.add_term(U(), -1);
    CHECK(x.is_zero());
    x.add_term(V(), 2);
    x.add_term(V(), 1);
    CHECK(x.term_count() == 1);
    CHECK(x.coeff(V()) == 3);
}

TEST_CASE("ring axioms on random elements") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        RingElement x = rng.ring_element(6, 4);
        RingElement y = rng.ring_element(6, 4);
        RingElement z = rng.ring_element(6, 4);
        CHECK(ring_mul(x, y) == ring_mul(y, x));
        CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
        CHECK(ring_mul(x, y + z) == ring_mul(x, y) + ring_mul(x, z));
    }
}

TEST_CASE("apply_phi is a ring homomorphism") {
    Rng rng(7);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 60; ++i) {
            RingElement x = rng.ring_element(5, 4);
            RingElement y = rng.ring_element(5, 4);
            CHECK(apply_phi(phi, x * y) == apply_phi(phi, x) * apply_phi(phi, y));
            CHECK(apply_phi(phi, x + y) == apply_phi(phi, x) + apply_phi(phi, y));
        }
    }
}

TEST_CASE("apply_phi respects composition of matrices") {
    Rng rng(11);
    auto panel = phi_panel();
    for (int i = 0; i < 100; ++i) {
        const Endomorphism& f = panel[static_cast<std::size_t>(rng.range(0, static_cast<long>(panel.size()) - 1))];
        const Endomorphism& g = panel[static_cast<std::size_t>(rng.range(0, static_cast<long>(panel.size()) - 1))];
        RingElement x = rng.ring_element(4, 3);
        CHECK(apply_phi(f.compose(g), x) == apply_phi(f, apply_phi(g, x)));
    }
}

TEST_CASE("geometric sums telescope") {
    for (long k = -8; k <= 8; ++k) {
        RingElement lhs = fox_difference(U()) * geometric_sum(U(), k);
        RingElement rhs = RingElement(U(k)) - RingElement::one();
        CHECK(lhs == rhs);
    }
}
