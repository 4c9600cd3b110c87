#pragma once

#include <optional>

#include "torusfp/group_algebra.hpp"
#include "torusfp/integer_lattice.hpp"

namespace torusfp {

// g1 and g2 are semiconjugate iff g1 = g * g2 * phi(g)^{-1} for some g, i.e.
// iff Theta(g2 g1^{-1}) lies in the image of [phi] - I. Classes are the
// cosets of that image.

inline IntMatrix2 phi_matrix(const Endomorphism& phi) {
    return {phi.b1, phi.b3, phi.b2, phi.b4};
}
inline IntMatrix2 phi_shifted(const Endomorphism& phi) {
    return {phi.b1 - 1, phi.b3, phi.b2, phi.b4 - 1};  // [phi] - I
}

/// Canonical label of a semiconjugacy class: the unique coset representative
/// of Theta(g) inside the half-open fundamental region of im([phi]-I).
struct ClassId {
    GroupElement rep;

    bool operator==(const ClassId& o) const { return rep == o.rep; }
    bool operator!=(const ClassId& o) const { return !(*this == o); }
    bool operator<(const ClassId& o) const { return rep < o.rep; }
};

/// Conjugator witness z with ([phi]-I) z = Theta(g2 g1^{-1}), so that
/// g = u^{z.x} v^{z.y} satisfies g1 = g * g2 * phi(g)^{-1}. Empty when the
/// elements lie in different classes.
std::optional<Vec2> same_class(const Endomorphism& phi, const GroupElement& g1,
                               const GroupElement& g2);

ClassId class_id(const Endomorphism& phi, const GroupElement& g);

/// The semicentralizer Z(g) = ker([phi]-I); the same lattice for every g.
Lattice semicentralizer(const Endomorphism& phi);

struct ClassCount {
    bool finite = false;
    Int count = 0;  // |det([phi]-I)| when finite
};

ClassCount class_count(const Endomorphism& phi);

}  // namespace torusfp
