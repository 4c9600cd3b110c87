#include <doctest.h>

#include "test_support.hpp"
#include "torusfp/oracle.hpp"

using namespace torusfp;
using namespace torusfp::testsupport;

TEST_CASE("brute_same_class worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    SearchBudget b6{6, 4};
    auto w = brute_same_class(shear, GroupElement::one(), U(5), b6);
    REQUIRE(w.has_value());
    CHECK(phi_shifted(shear).apply(*w) == Vec2{5, 0});

    CHECK(!brute_same_class(shear, GroupElement::one(), V(), b6).has_value());

    auto self = brute_same_class(shear, UV(2, 2), UV(2, 2), SearchBudget{0, 1});
    REQUIRE(self.has_value());
    CHECK(*self == Vec2{0, 0});
}

TEST_CASE("brute_same_class agrees with same_class") {
    SearchBudget budget{20, 4};
    for (const Endomorphism& phi : phi_panel()) {
        for (long m1 = -3; m1 <= 3; ++m1)
            for (long n1 = -3; n1 <= 3; n1 += 2)
                for (long m2 = -3; m2 <= 3; m2 += 2)
                    for (long n2 = -3; n2 <= 3; ++n2) {
                        GroupElement g1 = UV(m1, n1), g2 = UV(m2, n2);
                        auto fast = same_class(phi, g1, g2);
                        auto brute = brute_same_class(phi, g1, g2, budget);
                        CHECK(fast.has_value() == brute.has_value());
                        if (brute)
                            CHECK(phi_shifted(phi).apply(*brute) ==
                                  Vec2{g2.m - g1.m, g2.n - g1.n});
                    }
    }
}

TEST_CASE("brute_same_class returns the canonically first witness") {
    // kernel of [phi]-I is the u-axis, so witnesses for 1 ~ 1 are (z, 0);
    // the canonical enumeration must yield (0, 0).
    Endomorphism shear{1, 0, 1, 1};
    auto w = brute_same_class(shear, U(2), U(2), SearchBudget{5, 1});
    REQUIRE(w.has_value());
    CHECK(*w == Vec2{0, 0});
}

TEST_CASE("brute_certificate worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    {
        GroupElement g = UV(1, -1);
        auto cert = brute_certificate(shear, TensorChain1(1, GroupElement::one(), g),
                                      SearchBudget{2, 4});
        REQUIRE(cert.has_value());
        CHECK(d2(shear, *cert) == TensorChain1(1, GroupElement::one(), g));
    }
    {  // nontrivial cycle: no window contains a certificate
        auto cert = brute_certificate(shear, TensorChain1(1, U(), U()), SearchBudget{3, 4});
        CHECK(!cert.has_value());
    }
    {
        auto cert = brute_certificate(shear, TensorChain1(), SearchBudget{2, 4});
        REQUIRE(cert.has_value());
        CHECK(cert->is_zero());
    }
    CHECK_THROWS_AS(brute_certificate(shear, TensorChain1(1, V(), U()), SearchBudget{2, 4}),
                    std::invalid_argument);
}

TEST_CASE("brute_certificate round-trips on random boundaries") {
    Rng rng(303);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 6; ++i) {
            TensorChain2 y = rng.chain2(2, 2);
            TensorChain1 x = d2(phi, y);
            auto cert = brute_certificate(phi, x, SearchBudget{3, 4});
            REQUIRE(cert.has_value());  // y itself fits the window
            CHECK(d2(phi, *cert) == x);
        }
    }
}

TEST_CASE("certificate searcher matches one-shot results and reuses lattices") {
    Endomorphism shear{1, 0, 1, 1};
    CertificateSearcher searcher(shear, 3);
    for (long m = -2; m <= 2; ++m) {
        TensorChain1 nontrivial(1, U(), UV(m, 0));
        CHECK(!searcher.certificate_exists(nontrivial));
        TensorChain1 boundary(1, GroupElement::one(), UV(m, 1));
        CHECK(searcher.certificate_exists(boundary));
    }
}

TEST_CASE("cross-validation with is_trivial verdicts") {
    Rng rng(404);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 4; ++i) {
            TensorChain2 y = rng.chain2(2, 2);
            for (const auto& [cls, comp] : decompose_components(phi, d2(phi, y))) {
                TrivialityVerdict v = is_trivial(phi, comp, 2);
                if (v.trivial()) {
                    auto cert = brute_certificate(phi, comp, SearchBudget{4, 4});
                    REQUIRE(cert.has_value());
                    CHECK(d2(phi, *cert) == comp);
                }
                if (v.nontrivial())
                    CHECK(!brute_certificate(phi, comp, SearchBudget{3, 4}).has_value());
            }
        }
    }
}

TEST_CASE("generate_valid_data is deterministic and valid") {
    SearchBudget budget;
    for (const Endomorphism& phi : phi_panel()) {
        for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
            CellularHomotopyData a = generate_valid_data(phi, budget, seed);
            CellularHomotopyData b = generate_valid_data(phi, budget, seed);
            CHECK(validate_cellular(phi, a).empty());
            CHECK(a.D0_u == b.D0_u);
            CHECK(a.D0_v == b.D0_v);
            CHECK(a.D1_u == b.D1_u);
            CHECK(a.D1_v == b.D1_v);
            CHECK(a.F0.deg0 == b.F0.deg0);
            CHECK(a.F1.deg2 == b.F1.deg2);
            CHECK(is_cycle(phi, one_parameter_trace(phi, a)));
        }
    }
}

TEST_CASE("generated identity data has zero trace") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CellularHomotopyData data =
            generate_valid_data(Endomorphism::identity(), SearchBudget{}, seed);
        CHECK(one_parameter_trace(Endomorphism::identity(), data).is_zero());
    }
}
