#include "torusfp/semiconjugacy.hpp"

namespace torusfp {

std::optional<Vec2> same_class(const Endomorphism& phi, const GroupElement& g1,
                               const GroupElement& g2) {
    GroupElement diff = g2 * g1.inverse();
    auto sol = solve_affine(phi_shifted(phi), Vec2{diff.m, diff.n});
    if (!sol) return std::nullopt;
    return sol->particular;
}

ClassId class_id(const Endomorphism& phi, const GroupElement& g) {
    Vec2 r = reduce_mod_image(phi_shifted(phi), Vec2{g.m, g.n});
    return ClassId{GroupElement{r.x, r.y}};
}

Lattice semicentralizer(const Endomorphism& phi) { return kernel_lattice(phi_shifted(phi)); }

ClassCount class_count(const Endomorphism& phi) {
    Int dt = phi_shifted(phi).det();
    if (dt == 0) return {false, 0};
    return {true, dt < 0 ? -dt : dt};
}

}  // namespace torusfp
