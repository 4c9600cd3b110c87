#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "torusfp/semiconjugacy.hpp"

using namespace torusfp;
using namespace torusfp::testsupport;

namespace {

// g1 = g * g2 * phi(g)^{-1} for the reconstructed conjugator g.
bool witness_reconstructs(const Endomorphism& phi, const GroupElement& g1,
                          const GroupElement& g2, const Vec2& z) {
    GroupElement g{z.x, z.y};
    return g * g2 * phi.apply(g).inverse() == g1;
}

}  // namespace

TEST_CASE("same_class worked examples") {
    Endomorphism shear{1, 0, 1, 1};
    auto w = same_class(shear, GroupElement::one(), U(5));
    REQUIRE(w.has_value());
    CHECK(*w == Vec2{0, 5});
    CHECK(witness_reconstructs(shear, GroupElement::one(), U(5), *w));

    CHECK(!same_class(shear, GroupElement::one(), V()).has_value());

    for (const Endomorphism& phi : phi_panel()) {
        GroupElement g = UV(2, -3);
        auto self = same_class(phi, g, g);
        REQUIRE(self.has_value());
        CHECK(*self == Vec2{0, 0});
    }
}

TEST_CASE("same_class witnesses reconstruct the conjugation") {
    Rng rng(5);
    for (const Endomorphism& phi : phi_panel()) {
        for (int i = 0; i < 80; ++i) {
            GroupElement g1 = rng.element(6);
            GroupElement g2 = rng.element(6);
            if (auto w = same_class(phi, g1, g2))
                CHECK(witness_reconstructs(phi, g1, g2, *w));
        }
    }
}

TEST_CASE("same_class is an equivalence relation") {
    Rng rng(13);
    for (const Endomorphism& phi : phi_panel()) {
        IntMatrix2 shifted = phi_shifted(phi);
        for (int i = 0; i < 60; ++i) {
            GroupElement a = rng.element(5), b = rng.element(5), c = rng.element(5);
            CHECK(same_class(phi, a, a).has_value());
            CHECK(same_class(phi, a, b).has_value() == same_class(phi, b, a).has_value());
            auto zab = same_class(phi, a, b);
            auto zbc = same_class(phi, b, c);
            if (zab && zbc) {
                CHECK(same_class(phi, a, c).has_value());
                // composed witnesses solve the composed system
                Vec2 zac = *zab + *zbc;
                CHECK(shifted.apply(zac) == Vec2{c.m - a.m, c.n - a.n});
            }
        }
    }
}

TEST_CASE("class_id worked examples") {
    Endomorphism diag{3, 0, 0, 2};  // [phi]-I = diag(2,1)
    CHECK(class_id(diag, UV(3, 7)).rep == UV(1, 0));

    for (const Endomorphism& phi : phi_panel())
        CHECK(class_id(phi, GroupElement::one()).rep == GroupElement::one());

    Endomorphism shear{1, 0, 1, 1};
    for (long k = -6; k <= 6; ++k)
        CHECK(class_id(shear, U(k)).rep == GroupElement::one());  // all u-powers ~ 1
}

TEST_CASE("class_id agrees with same_class exhaustively on [-6,6]^2") {
    for (const Endomorphism& phi : phi_panel()) {
        std::vector<ClassId> ids;
        for (long m = -6; m <= 6; ++m)
            for (long n = -6; n <= 6; ++n) ids.push_back(class_id(phi, UV(m, n)));
        std::size_t i = 0;
        for (long m1 = -6; m1 <= 6; ++m1)
            for (long n1 = -6; n1 <= 6; ++n1, ++i) {
                std::size_t j = 0;
                for (long m2 = -6; m2 <= 6; ++m2)
                    for (long n2 = -6; n2 <= 6; ++n2, ++j) {
                        bool same = same_class(phi, UV(m1, n1), UV(m2, n2)).has_value();
                        if (same != (ids[i] == ids[j]))
                            FAIL("class_id mismatch at ", m1, ",", n1, " vs ", m2, ",", n2);
                    }
            }
    }
}

TEST_CASE("semicentralizer worked examples") {
    CHECK(semicentralizer(Endomorphism{1, 0, 1, 1}).rank == 1);
    CHECK(semicentralizer(Endomorphism{1, 0, 1, 1}).basis[0] == Vec2{1, 0});
    CHECK(semicentralizer(Endomorphism::identity()).rank == 2);
    CHECK(semicentralizer(Endomorphism{3, 0, 0, 2}).rank == 0);
}

TEST_CASE("class_count worked examples") {
    CHECK(class_count(Endomorphism{3, 0, 0, 2}).finite);
    CHECK(class_count(Endomorphism{3, 0, 0, 2}).count == 2);
    CHECK(!class_count(Endomorphism::identity()).finite);
    CHECK(class_count(Endomorphism{2, 0, 0, 2}).count == 1);
}

TEST_CASE("distinct class_id count over a window matches |det|") {
    Rng rng(31);
    int tested = 0;
    while (tested < 25) {
        Endomorphism phi{rng.range(-3, 4), rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 4)};
        ClassCount cc = class_count(phi);
        if (!cc.finite || cc.count > 10) continue;
        ++tested;
        long d = static_cast<long>(cc.count);
        std::set<ClassId> ids, shifted_ids;
        for (long m = 0; m < 2 * d; ++m)
            for (long n = 0; n < 2 * d; ++n) {
                ids.insert(class_id(phi, UV(m, n)));
                shifted_ids.insert(class_id(phi, UV(m - d, n - d)));
            }
        CHECK(Int(ids.size()) == cc.count);
        CHECK(Int(shifted_ids.size()) == cc.count);
    }
}
