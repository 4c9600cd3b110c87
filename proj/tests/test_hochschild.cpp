#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "torusfp/certificate_search.hpp"

using namespace torusfp;
using namespace torusfp::testsupport;

TEST_CASE("d1 worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    CHECK(d1(shear, TensorChain1(1, U(), V())).is_zero());  // v phi(u) - u v = 0

    RingElement expect;  // u phi(v) - v u = u^2 v - u v
    expect.add_term(UV(2, 1), 1);
    expect.add_term(UV(1, 1), -1);
    CHECK(d1(shear, TensorChain1(1, V(), U())) == expect);

    for (const Endomorphism& phi : phi_panel())
        CHECK(d1(phi, TensorChain1(1, GroupElement::one(), UV(4, -2))).is_zero());
}

TEST_CASE("d2 worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    TensorChain1 img = d2(shear, TensorChain2(1, U(), U(), GroupElement::one()));
    TensorChain1 expect;  // 2 (u (x) u) - u^2 (x) 1
    expect.add_term(U(), U(), 2);
    expect.add_term(U(2), GroupElement::one(), -1);
    CHECK(img == expect);

    for (const Endomorphism& phi : phi_panel()) {
        GroupElement g = UV(3, -1);
        CHECK(d2(phi, TensorChain2(1, GroupElement::one(), GroupElement::one(), g)) ==
              TensorChain1(1, GroupElement::one(), g));
        CHECK(d2(phi, TensorChain2()).is_zero());
    }
}

TEST_CASE("d2 matches the exponent form") {
    // b (x) t phi(a) - ab (x) t + a (x) bt, written out in exponents.
    Rng rng(101);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 50; ++i) {
            GroupElement a = rng.element(8), b = rng.element(8), t = rng.element(8);
            TensorChain1 expect;
            expect.add_term(b, GroupElement{t.m + a.m * phi.b1 + a.n * phi.b3,
                                            t.n + a.m * phi.b2 + a.n * phi.b4}, 1);
            expect.add_term(GroupElement{a.m + b.m, a.n + b.n}, t, -1);
            expect.add_term(a, GroupElement{b.m + t.m, b.n + t.n}, 1);
            CHECK(d2(phi, TensorChain2(1, a, b, t)) == expect);
        }
    }
}

TEST_CASE("d1 after d2 vanishes on random 2-chains") {
    Rng rng(55);
    for (const Endomorphism& phi : phi_panel())
        for (int i = 0; i < 150; ++i)
            CHECK(d1(phi, d2(phi, rng.chain2(20, 8))).is_zero());
}

TEST_CASE("single-tensor cycles match the kernel criterion") {
    for (const Endomorphism& phi : phi_panel()) {
        IntMatrix2 shifted = phi_shifted(phi);
        for (long k = -5; k <= 5; ++k)
            for (long l = -5; l <= 5; ++l) {
                bool in_kernel = shifted.apply(Vec2{k, l}) == Vec2{0, 0};
                // the right factor never matters; spot-check two of them
                CHECK(is_cycle(phi, TensorChain1(1, UV(k, l), UV(2, -1))) == in_kernel);
                CHECK(is_cycle(phi, TensorChain1(1, UV(k, l), GroupElement::one())) == in_kernel);
            }
    }
}

TEST_CASE("shear-type cycles are exactly the l = 0 tensors") {
    for (const Endomorphism& phi :
         {Endomorphism{1, 0, 1, 1}, Endomorphism{1, 0, 2, 3}, Endomorphism{1, 0, -1, 1}}) {
        for (long k = -4; k <= 4; ++k)
            for (long l = -4; l <= 4; ++l)
                CHECK(is_cycle(phi, TensorChain1(1, UV(k, l), UV(1, 2))) == (l == 0));
    }
}

TEST_CASE("decompose_components partitions and is boundary-compatible") {
    Endomorphism shear{1, 0, 1, 1};
    {
        TensorChain1 x;
        x.add_term(U(), U(), 1);
        x.add_term(U(), UV(1, 1), 1);
        auto comps = decompose_components(shear, x);
        CHECK(comps.size() == 2);  // u^2 and u^2 v are in different classes
    }
    {
        TensorChain1 x;
        x.add_term(U(), U(), 1);
        x.add_term(U(3), U(-1), 1);
        auto comps = decompose_components(shear, x);
        CHECK(comps.size() == 1);  // both products are u-powers
    }

    Rng rng(77);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 40; ++i) {
            TensorChain1 x = rng.chain1(6, 5);
            auto comps = decompose_components(phi, x);
            TensorChain1 sum;
            for (const auto& [cls, part] : comps) {
                sum += part;
                for (const auto& [k, c] : part.terms())
                    CHECK(class_id(phi, k.first * k.second) == cls);
            }
            CHECK(sum == x);
        }
    }
}

TEST_CASE("boundaries stay within the components of their source") {
    Rng rng(78);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 60; ++i) {
            TensorChain2 y = rng.chain2(6, 4);
            std::set<ClassId> source_classes;
            for (const auto& [k, c] : y.terms())
                source_classes.insert(class_id(phi, k[0] * k[1] * k[2]));
            for (const auto& [cls, part] : decompose_components(phi, d2(phi, y)))
                CHECK(source_classes.count(cls) == 1);
        }
    }
}

TEST_CASE("reduce_u_power certificates are exact") {
    Endomorphism shear{1, 0, 1, 1};

    {  // k = 0: certificate 1 (x) 1 (x) u^m v^n
        UPowerReduction red = reduce_u_power(shear, 0, 4, -2);
        CHECK(red.reduced.is_zero());
        CHECK(red.certificate == TensorChain2(1, GroupElement::one(), GroupElement::one(), UV(4, -2)));
        CHECK(d2(shear, red.certificate) == TensorChain1(1, GroupElement::one(), UV(4, -2)));
    }
    {  // k = 1: already reduced
        UPowerReduction red = reduce_u_power(shear, 1, 4, -2);
        CHECK(red.reduced == TensorChain1(1, U(), UV(4, -2)));
        CHECK(red.certificate.is_zero());
    }
    {  // k = 2, m = n = 0: certificate -(u (x) u (x) 1), d2 = u^2 (x) 1 - 2 u (x) u
        UPowerReduction red = reduce_u_power(shear, 2, 0, 0);
        TensorChain1 expect_reduced(2, U(), U());
        CHECK(red.reduced == expect_reduced);
        CHECK(red.certificate == TensorChain2(-1, U(), U(), GroupElement::one()));
    }

    for (const Endomorphism& phi : {Endomorphism{1, 0, 1, 1}, Endomorphism{1, 0, 2, 3}}) {
        for (long k = -12; k <= 12; ++k)
            for (long m = -5; m <= 5; ++m)
                for (long n = -5; n <= 5; ++n) {
                    UPowerReduction red = reduce_u_power(phi, k, m, n);
                    TensorChain1 lhs = TensorChain1(1, U(k), UV(m, n)) - red.reduced;
                    CHECK(d2(phi, red.certificate) == lhs);
                }
    }

    CHECK_THROWS_AS(reduce_u_power(Endomorphism{2, 0, 0, 2}, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(reduce_u_power(Endomorphism{1, 1, 0, 1}, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("homology_invariant worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    for (long m = -3; m <= 3; ++m)
        CHECK(homology_invariant(shear, TensorChain1(1, U(), UV(m, 0))) == Vec2{1, 0});

    // boundaries map to zero
    TensorChain1 b = d2(shear, TensorChain2(1, U(), U(), GroupElement::one()));
    CHECK(homology_invariant(shear, b) == Vec2{0, 0});

    CHECK(homology_invariant(shear, TensorChain1(1, GroupElement::one(), UV(2, 2))) ==
          Vec2{0, 0});

    CHECK_THROWS_AS(homology_invariant(shear, TensorChain1(1, V(), U())),
                    std::invalid_argument);
}

TEST_CASE("homology_invariant lies in the kernel lattice") {
    Rng rng(91);
    for (const Endomorphism& phi : phi_panel()) {
        Lattice ker = semicentralizer(phi);
        for (int i = 0; i < 60; ++i) {
            // cycles built from single-tensor cycles plus random boundaries
            TensorChain1 x = d2(phi, rng.chain2(5, 3));
            for (int j = 0; j < 3 && ker.rank > 0; ++j) {
                Vec2 kv = ker.basis[0] * Int(rng.range(-2, 2));
                x += TensorChain1(Int(rng.range(-2, 2)), GroupElement{kv.x, kv.y},
                                  rng.element(4));
            }
            REQUIRE(is_cycle(phi, x));
            CHECK(ker.contains(homology_invariant(phi, x)));
        }
    }
}

TEST_CASE("is_trivial worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    {
        TrivialityVerdict v = is_trivial(shear, TensorChain1(1, U(), U()), 4);
        CHECK(v.nontrivial());
        CHECK(v.invariant == Vec2{1, 0});
    }
    for (const Endomorphism& phi : phi_panel()) {
        GroupElement g = UV(2, -1);
        TrivialityVerdict v = is_trivial(phi, TensorChain1(1, GroupElement::one(), g), 4);
        REQUIRE(v.trivial());
        CHECK(d2(phi, v.certificate) == TensorChain1(1, GroupElement::one(), g));

        TrivialityVerdict z = is_trivial(phi, TensorChain1(), 4);
        CHECK(z.trivial());
        CHECK(z.certificate.is_zero());
    }
}

TEST_CASE("is_trivial rejects non-cycles and mixed-class chains") {
    Endomorphism shear{1, 0, 1, 1};
    CHECK_THROWS_AS(is_trivial(shear, TensorChain1(1, V(), U()), 2), std::invalid_argument);
    TensorChain1 mixed;
    mixed.add_term(U(), U(), 1);
    mixed.add_term(U(), UV(1, 1), 1);  // distinct classes, still a cycle
    CHECK_THROWS_AS(is_trivial(shear, mixed, 2), std::invalid_argument);
}

TEST_CASE("trivial verdicts carry re-verifying certificates on random boundaries") {
    Rng rng(119);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 12; ++i) {
            TensorChain2 y = rng.chain2(3, 2);
            TensorChain1 x = d2(phi, y);
            for (const auto& [cls, comp] : decompose_components(phi, x)) {
                TrivialityVerdict v = is_trivial(phi, comp, 2);
                CHECK(!v.nontrivial());  // boundaries are never nontrivial
                if (v.trivial()) CHECK(d2(phi, v.certificate) == comp);
            }
        }
    }
}
