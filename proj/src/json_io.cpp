#include "torusfp/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace torusfp {

namespace {

const Int kInt64Max = std::numeric_limits<std::int64_t>::max();
const Int kInt64Min = std::numeric_limits<std::int64_t>::min();

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

json to_json(const Int& v) {
    if (v >= kInt64Min && v <= kInt64Max) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    bad("expected an integer (number or decimal string)");
}

json to_json(const Vec2& v) { return json::array({to_json(v.x), to_json(v.y)}); }

Vec2 vec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("expected a pair [x, y]");
    return {int_from_json(j[0]), int_from_json(j[1])};
}

json to_json(const GroupElement& g) { return json::array({to_json(g.m), to_json(g.n)}); }

GroupElement group_element_from_json(const json& j) {
    Vec2 v = vec2_from_json(j);
    return {v.x, v.y};
}

json to_json(const Endomorphism& phi) {
    return json::array({json::array({to_json(phi.b1), to_json(phi.b3)}),
                        json::array({to_json(phi.b2), to_json(phi.b4)})});
}

Endomorphism endomorphism_from_json(const json& j) {
    IntMatrix2 m = int_matrix_from_json(j);
    return {m.a, m.c, m.b, m.d};  // rows [[b1, b3], [b2, b4]]
}

json to_json(const IntMatrix2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}),
                        json::array({to_json(m.c), to_json(m.d)})});
}

IntMatrix2 int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        bad("expected a 2x2 matrix [[a, b], [c, d]]");
    return {int_from_json(j[0][0]), int_from_json(j[0][1]), int_from_json(j[1][0]),
            int_from_json(j[1][1])};
}

json to_json(const RingElement& x) {
    json out = json::array();
    for (const auto& [g, c] : x.terms())
        out.push_back(json::array({to_json(c), to_json(g.m), to_json(g.n)}));
    return out;
}

RingElement ring_element_from_json(const json& j) {
    if (!j.is_array()) bad("expected a list of [c, m, n] triples");
    RingElement x;
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 3) bad("expected a [c, m, n] triple");
        x.add_term(GroupElement{int_from_json(t[1]), int_from_json(t[2])}, int_from_json(t[0]));
    }
    return x;
}

json to_json(const TensorChain1& x) {
    json out = json::array();
    for (const auto& [k, c] : x.terms()) {
        json term;
        term["c"] = to_json(c);
        term["a"] = to_json(k.first);
        term["b"] = to_json(k.second);
        out.push_back(std::move(term));
    }
    return out;
}

TensorChain1 chain1_from_json(const json& j) {
    if (!j.is_array()) bad("expected a list of 1-chain terms");
    TensorChain1 x;
    for (const json& t : j)
        x.add_term(group_element_from_json(t.at("a")), group_element_from_json(t.at("b")),
                   int_from_json(t.at("c")));
    return x;
}

json to_json(const TensorChain2& x) {
    json out = json::array();
    for (const auto& [k, c] : x.terms()) {
        json term;
        term["c"] = to_json(c);
        term["a"] = to_json(k[0]);
        term["b"] = to_json(k[1]);
        term["t"] = to_json(k[2]);
        out.push_back(std::move(term));
    }
    return out;
}

TensorChain2 chain2_from_json(const json& j) {
    if (!j.is_array()) bad("expected a list of 2-chain terms");
    TensorChain2 x;
    for (const json& t : j)
        x.add_term(group_element_from_json(t.at("a")), group_element_from_json(t.at("b")),
                   group_element_from_json(t.at("t")), int_from_json(t.at("c")));
    return x;
}

json to_json(const Lattice& lat) {
    json basis = json::array();
    for (int i = 0; i < lat.rank; ++i) basis.push_back(to_json(lat.basis[static_cast<std::size_t>(i)]));
    return json{{"rank", lat.rank}, {"basis", std::move(basis)}};
}

json to_json(const SmithDecomposition& snf) {
    return json{{"U", to_json(snf.U)}, {"S", to_json(snf.S)}, {"V", to_json(snf.V)}};
}

json to_json(const Cokernel& co) {
    json out;
    out["finite"] = co.finite;
    out["invariant_factors"] =
        json::array({to_json(co.invariant_factors[0]), to_json(co.invariant_factors[1])});
    if (co.finite) {
        json reps = json::array();
        for (const Vec2& r : co.reps) reps.push_back(to_json(r));
        out["reps"] = std::move(reps);
    }
    return out;
}

json to_json(const ChainMapData& f) {
    json out;
    out["deg0"] = to_json(f.deg0);
    out["deg1"] = json::array({json::array({to_json(f.deg1[0][0]), to_json(f.deg1[0][1])}),
                               json::array({to_json(f.deg1[1][0]), to_json(f.deg1[1][1])})});
    out["deg2"] = to_json(f.deg2);
    return out;
}

ChainMapData chain_map_from_json(const json& j) {
    ChainMapData f;
    f.deg0 = ring_element_from_json(j.at("deg0"));
    const json& m = j.at("deg1");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2)
        bad("expected a 2x2 matrix of ZG elements under \"deg1\"");
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            f.deg1[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                ring_element_from_json(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    f.deg2 = ring_element_from_json(j.at("deg2"));
    return f;
}

json to_json(const CellularHomotopyData& data) {
    json out;
    out["D0"] = json{{"u", to_json(data.D0_u)}, {"v", to_json(data.D0_v)}};
    out["D1"] = json{{"u", to_json(data.D1_u)}, {"v", to_json(data.D1_v)}};
    out["F0"] = to_json(data.F0);
    out["F1"] = to_json(data.F1);
    json excl = json::array();
    for (const ClassId& c : data.excluded_classes) excl.push_back(to_json(c.rep));
    out["excluded_classes"] = std::move(excl);
    return out;
}

CellularHomotopyData cellular_from_json(const json& j) {
    CellularHomotopyData data;
    data.D0_u = ring_element_from_json(j.at("D0").at("u"));
    data.D0_v = ring_element_from_json(j.at("D0").at("v"));
    data.D1_u = ring_element_from_json(j.at("D1").at("u"));
    data.D1_v = ring_element_from_json(j.at("D1").at("v"));
    data.F0 = chain_map_from_json(j.at("F0"));
    data.F1 = chain_map_from_json(j.at("F1"));
    if (j.contains("excluded_classes"))
        for (const json& c : j.at("excluded_classes"))
            data.excluded_classes.push_back(ClassId{group_element_from_json(c)});
    return data;
}

json document_to_json(const Endomorphism& phi, const CellularHomotopyData& data) {
    return json{{"phi", to_json(phi)}, {"cellular", to_json(data)}};
}

std::pair<Endomorphism, CellularHomotopyData> document_from_json(const json& j) {
    return {endomorphism_from_json(j.at("phi")), cellular_from_json(j.at("cellular"))};
}

json to_json(const TrivialityVerdict& v) {
    json out;
    switch (v.kind) {
        case TrivialityVerdict::Kind::trivial:
            out["verdict"] = "trivial";
            out["certificate"] = to_json(v.certificate);
            break;
        case TrivialityVerdict::Kind::nontrivial:
            out["verdict"] = "nontrivial";
            out["invariant"] = to_json(v.invariant);
            break;
        case TrivialityVerdict::Kind::unknown:
            out["verdict"] = "unknown";
            out["searched_bound"] = v.searched_bound;
            break;
    }
    return out;
}

json to_json(const TraceReport& report) {
    json out;
    out["R"] = to_json(report.R);
    json comps = json::array();
    for (const ComponentReport& c : report.components) {
        json jc = to_json(c.verdict);
        jc["class"] = to_json(c.cls.rep);
        comps.push_back(std::move(jc));
    }
    out["components"] = std::move(comps);
    out["N"] = report.N;
    out["L"] = to_json(report.L);
    switch (report.alpha_kind) {
        case AlphaKind::generator: out["alpha"] = to_json(report.alpha); break;
        case AlphaKind::any_primitive: out["alpha"] = "any"; break;
        case AlphaKind::absent: out["alpha"] = nullptr; break;
    }
    switch (report.theorem) {
        case TheoremStatus::holds: out["theorem_holds"] = true; break;
        case TheoremStatus::fails: out["theorem_holds"] = false; break;
        case TheoremStatus::inconclusive: out["theorem_holds"] = "inconclusive"; break;
    }
    return out;
}

json to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const Violation& v : violations)
        out.push_back(json{{"where", v.where}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
    return out;
}

}  // namespace torusfp
