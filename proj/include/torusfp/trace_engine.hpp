#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "torusfp/hochschild.hpp"

namespace torusfp {

// Chain-level model over the standard CW structure of the torus: one 0-cell w,
// 1-cells u, v, one 2-cell E attached along the commutator. Chains are right
// ZG-modules on the chosen lifts; the boundary operators are
//   d1(u~) = w~ (u - 1),  d1(v~) = w~ (v - 1),
//   d2(E~) = u~ (1 - v) + v~ (u - 1).
// Chain maps F~ are phi-twisted (F(c g) = F(c) phi(g)); the chain homotopy D~
// satisfies d D + D d = F1 - F0 degreewise.

/// Matrix data of one phi-twisted chain map in degrees 0, 1, 2.
struct ChainMapData {
    RingElement deg0;                                  // w~ -> w~ * deg0
    std::array<std::array<RingElement, 2>, 2> deg1{};  // [row][col] over (u~, v~)
    RingElement deg2;                                  // E~ -> E~ * deg2
};

struct CellularHomotopyData {
    RingElement D0_u, D0_v;  // D~0(w~) = u~ D0_u + v~ D0_v
    RingElement D1_u, D1_v;  // D~1(u~) = E~ D1_u,  D~1(v~) = E~ D1_v
    ChainMapData F0, F1;
    std::vector<ClassId> excluded_classes;  // classes meeting the boundary slices
};

struct Violation {
    std::string where;
    RingElement lhs, rhs;

    std::string str() const;
};

/// Checks that F0 and F1 are chain maps and that the homotopy identity
/// d D + D d = F1 - F0 holds in degrees 0 and 1. Empty result iff valid;
/// violations are data, not exceptions.
std::vector<Violation> validate_cellular(const Endomorphism& phi,
                                         const CellularHomotopyData& data);

enum class SignConvention { right, left };

/// The one-parameter trace R = tr(-[d1] (x) [D0]) + tr([d2] (x) [D1]) with
/// tr(A (x) B) expanded entrywise and bilinearly, then with all terms in
/// excluded classes deleted. The left convention flips the global sign.
/// Rejects data that fails validate_cellular.
TensorChain1 one_parameter_trace(const Endomorphism& phi, const CellularHomotopyData& data,
                                 SignConvention sign = SignConvention::right);

/// det([phi] - I): the Lefschetz number of each time slice.
Int det_slice(const Endomorphism& phi);

enum class TheoremStatus { holds, fails, inconclusive };
enum class AlphaKind { absent, generator, any_primitive };

struct ComponentReport {
    ClassId cls;
    TrivialityVerdict verdict;
};

struct TraceReport {
    TensorChain1 R;
    std::vector<ComponentReport> components;  // ordered by class
    long N = 0;                               // count of nontrivial indices
    Vec2 L;                                   // sum of their images in H_1(G)
    AlphaKind alpha_kind = AlphaKind::absent;
    Vec2 alpha;                               // set when alpha_kind == generator
    TheoremStatus theorem = TheoremStatus::holds;
};

/// Splits a trace cycle into class components, decides each one, and checks
/// L = +-N alpha. Kernel rank 2 uses the degenerate convention N = L = 0;
/// any unknown verdict makes the outcome inconclusive. Rejects non-cycles.
TraceReport analyze(const Endomorphism& phi, const TensorChain1& R, long support_bound);

/// A homotopy with identity induced endomorphism and zero trace: chain data
/// for the constant-witness deformation of a fixed point free family.
std::pair<Endomorphism, CellularHomotopyData> fixed_point_free_example();

/// Worked example with phi = [[1,1],[0,1]]: a valid data set whose trace is
/// (u - 1) (x) (u^3 + uv), exhibiting two nontrivial classes.
std::pair<Endomorphism, CellularHomotopyData> shear_example();

/// Worked example with phi = [[3,0],[0,2]] (det([phi]-I) != 0): every class
/// component of the trace is a boundary.
std::pair<Endomorphism, CellularHomotopyData> case_two_example();

// Builders shared with the data generator.

/// phi-twisted chain map with degree-0 entry f0; degree 1 solves the chain
/// map identity through telescoped geometric sums, degree 2 is forced.
ChainMapData base_chain_map(const Endomorphism& phi, const RingElement& f0);

/// Valid homotopy data with D = (p, q, r, s) on top of the base map F0;
/// F1 is F0 shifted by the boundary of D, which keeps every identity exact.
CellularHomotopyData make_homotopy_data(const Endomorphism& phi, const ChainMapData& F0,
                                        const RingElement& p, const RingElement& q,
                                        const RingElement& r, const RingElement& s);

}  // namespace torusfp
