#include "torusfp/trace_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torusfp {

namespace {

const GroupElement kU = GroupElement::u();
const GroupElement kV = GroupElement::v();

RingElement u_minus_1() { return fox_difference(kU); }
RingElement v_minus_1() { return fox_difference(kV); }
RingElement one_minus_v() { return -fox_difference(kV); }

RingElement phi_u_minus_1(const Endomorphism& phi) { return fox_difference(phi.apply(kU)); }
RingElement phi_v_minus_1(const Endomorphism& phi) { return fox_difference(phi.apply(kV)); }

void check(std::vector<Violation>& out, std::string where, RingElement lhs, RingElement rhs) {
    if (lhs != rhs) out.push_back({std::move(where), std::move(lhs), std::move(rhs)});
}

void check_chain_map(std::vector<Violation>& out, const Endomorphism& phi,
                     const ChainMapData& F, const std::string& name) {
    RingElement pu = phi_u_minus_1(phi);
    RingElement pv = phi_v_minus_1(phi);
    check(out, name + ": chain map, degree 1, cell u",
          u_minus_1() * F.deg1[0][0] + v_minus_1() * F.deg1[1][0], F.deg0 * pu);
    check(out, name + ": chain map, degree 1, cell v",
          u_minus_1() * F.deg1[0][1] + v_minus_1() * F.deg1[1][1], F.deg0 * pv);
    check(out, name + ": chain map, degree 2, u-component", one_minus_v() * F.deg2,
          F.deg1[0][0] * (-pv) + F.deg1[0][1] * pu);
    check(out, name + ": chain map, degree 2, v-component", u_minus_1() * F.deg2,
          F.deg1[1][0] * (-pv) + F.deg1[1][1] * pu);
}

}  // namespace

std::string Violation::str() const {
    return where + ": " + lhs.str() + " != " + rhs.str();
}

std::vector<Violation> validate_cellular(const Endomorphism& phi,
                                         const CellularHomotopyData& data) {
    std::vector<Violation> out;
    check_chain_map(out, phi, data.F0, "F0");
    check_chain_map(out, phi, data.F1, "F1");

    RingElement pu = phi_u_minus_1(phi);
    RingElement pv = phi_v_minus_1(phi);

    check(out, "homotopy identity, degree 0",
          u_minus_1() * data.D0_u + v_minus_1() * data.D0_v, data.F1.deg0 - data.F0.deg0);
    check(out, "homotopy identity, degree 1, cell u, u-component",
          one_minus_v() * data.D1_u + data.D0_u * pu, data.F1.deg1[0][0] - data.F0.deg1[0][0]);
    check(out, "homotopy identity, degree 1, cell u, v-component",
          u_minus_1() * data.D1_u + data.D0_v * pu, data.F1.deg1[1][0] - data.F0.deg1[1][0]);
    check(out, "homotopy identity, degree 1, cell v, u-component",
          one_minus_v() * data.D1_v + data.D0_u * pv, data.F1.deg1[0][1] - data.F0.deg1[0][1]);
    check(out, "homotopy identity, degree 1, cell v, v-component",
          u_minus_1() * data.D1_v + data.D0_v * pv, data.F1.deg1[1][1] - data.F0.deg1[1][1]);
    return out;
}

TensorChain1 one_parameter_trace(const Endomorphism& phi, const CellularHomotopyData& data,
                                 SignConvention sign) {
    if (!validate_cellular(phi, data).empty())
        throw std::invalid_argument("one_parameter_trace requires valid cellular data");

    TensorChain1 R;
    R -= tensor_expand(u_minus_1(), data.D0_u);
    R -= tensor_expand(v_minus_1(), data.D0_v);
    R += tensor_expand(one_minus_v(), data.D1_u);
    R += tensor_expand(u_minus_1(), data.D1_v);
    if (sign == SignConvention::left) R = -R;

    if (!data.excluded_classes.empty()) {
        std::set<ClassId> excluded;
        for (const ClassId& c : data.excluded_classes)
            excluded.insert(class_id(phi, c.rep));  // canonicalize caller-supplied reps
        TensorChain1 kept;
        for (const auto& [k, c] : R.terms())
            if (!excluded.count(class_id(phi, k.first * k.second))) kept.add_term(k.first, k.second, c);
        R = std::move(kept);
    }
    return R;
}

Int det_slice(const Endomorphism& phi) { return phi_shifted(phi).det(); }

TraceReport analyze(const Endomorphism& phi, const TensorChain1& R, long support_bound) {
    if (!is_cycle(phi, R)) throw std::invalid_argument("analyze requires a d1-cycle");

    TraceReport report;
    report.R = R;

    bool any_unknown = false;
    for (auto& [cls, comp] : decompose_components(phi, R)) {
        ComponentReport cr{cls, is_trivial(phi, comp, support_bound)};
        if (cr.verdict.nontrivial()) {
            ++report.N;
            report.L = report.L + cr.verdict.invariant;
        }
        if (cr.verdict.unknown()) any_unknown = true;
        report.components.push_back(std::move(cr));
    }

    Lattice kernel = semicentralizer(phi);
    switch (kernel.rank) {
        case 1:
            report.alpha_kind = AlphaKind::generator;
            report.alpha = kernel.basis[0];
            break;
        case 2:
            report.alpha_kind = AlphaKind::any_primitive;
            break;
        default:
            report.alpha_kind = AlphaKind::absent;
            break;
    }

    if (any_unknown) {
        report.theorem = TheoremStatus::inconclusive;
    } else if (kernel.rank == 1) {
        Vec2 na = kernel.basis[0] * Int(report.N);
        report.theorem =
            (report.L == na || report.L == -na) ? TheoremStatus::holds : TheoremStatus::fails;
    } else {
        // Rank 0 forces N = L = 0 (the invariant lives in the kernel); rank 2
        // follows the degenerate convention R(F) = 0 for identity phi.
        report.theorem = (report.N == 0 && report.L.is_zero()) ? TheoremStatus::holds
                                                               : TheoremStatus::fails;
    }
    return report;
}

ChainMapData base_chain_map(const Endomorphism& phi, const RingElement& f0) {
    // Degree 1 solves (u-1) G00 + (v-1) G10 = phi(u) - 1 (and likewise for v)
    // by the telescoping x^k - 1 = (x^k - 1)/(x - 1) * (x - 1):
    //   phi(u) - 1 = (u^{b1} - 1) v^{b2} + (v^{b2} - 1).
    ChainMapData F;
    RingElement g00 = geometric_sum(kU, phi.b1) * RingElement(GroupElement::v(phi.b2));
    RingElement g10 = geometric_sum(kV, phi.b2);
    RingElement g01 = geometric_sum(kU, phi.b3) * RingElement(GroupElement::v(phi.b4));
    RingElement g11 = geometric_sum(kV, phi.b4);
    F.deg0 = f0;
    F.deg1[0][0] = f0 * g00;
    F.deg1[1][0] = f0 * g10;
    F.deg1[0][1] = f0 * g01;
    F.deg1[1][1] = f0 * g11;
    F.deg2 = f0 * (g00 * g11 - g01 * g10);
    return F;
}

CellularHomotopyData make_homotopy_data(const Endomorphism& phi, const ChainMapData& F0,
                                        const RingElement& p, const RingElement& q,
                                        const RingElement& r, const RingElement& s) {
    RingElement pu = phi_u_minus_1(phi);
    RingElement pv = phi_v_minus_1(phi);

    CellularHomotopyData data;
    data.D0_u = p;
    data.D0_v = q;
    data.D1_u = r;
    data.D1_v = s;
    data.F0 = F0;
    data.F1 = F0;
    data.F1.deg0 += u_minus_1() * p + v_minus_1() * q;
    data.F1.deg1[0][0] += one_minus_v() * r + p * pu;
    data.F1.deg1[1][0] += u_minus_1() * r + q * pu;
    data.F1.deg1[0][1] += one_minus_v() * s + p * pv;
    data.F1.deg1[1][1] += u_minus_1() * s + q * pv;
    data.F1.deg2 += r * (-pv) + s * pu;
    return data;
}

std::pair<Endomorphism, CellularHomotopyData> fixed_point_free_example() {
    Endomorphism phi = Endomorphism::identity();
    ChainMapData F0 = base_chain_map(phi, RingElement::one());
    CellularHomotopyData data = make_homotopy_data(phi, F0, RingElement::zero(),
                                                   RingElement::zero(), RingElement::zero(),
                                                   RingElement::zero());
    return {phi, data};
}

std::pair<Endomorphism, CellularHomotopyData> shear_example() {
    Endomorphism phi{1, 0, 1, 1};  // u -> u, v -> uv
    ChainMapData F0 = base_chain_map(phi, RingElement::one());
    RingElement s;  // trace (u - 1) (x) s with u*s-terms in two distinct classes
    s.add_term(GroupElement{3, 0}, 1);
    s.add_term(GroupElement{1, 1}, 1);
    CellularHomotopyData data =
        make_homotopy_data(phi, F0, RingElement::zero(), RingElement::zero(),
                           RingElement::zero(), s);
    return {phi, data};
}

std::pair<Endomorphism, CellularHomotopyData> case_two_example() {
    Endomorphism phi{3, 0, 0, 2};  // det([phi]-I) = 2
    ChainMapData F0 = base_chain_map(phi, RingElement::one());
    // Cycle family: s - p = -(v - phi(v)) w, q + r = -(u - phi(u)) w at w = 1.
    RingElement s = apply_phi(phi, RingElement(kV)) - RingElement(kV);  // v^2 - v
    RingElement r = apply_phi(phi, RingElement(kU)) - RingElement(kU);  // u^3 - u
    CellularHomotopyData data = make_homotopy_data(phi, F0, RingElement::zero(),
                                                   RingElement::zero(), r, s);
    return {phi, data};
}

}  // namespace torusfp
