#include "torusfp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "torusfp/json_io.hpp"

namespace torusfp {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBadInput = 2;
constexpr int kTheoremFails = 3;
constexpr int kInconclusive = 4;

struct Options {
    std::string phi;
    std::string in;
    std::string out;
    long support_bound = 4;
    std::string sign = "right";
    std::string format = "json";
    std::string g1, g2;
    long k = 0, m = 0, n = 0;
};

Endomorphism parse_phi(const std::string& text) {
    return endomorphism_from_json(json::parse(text));
}

GroupElement parse_element(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected an exponent pair m,n");
    return GroupElement{Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
}

SignConvention parse_sign(const std::string& s) {
    if (s == "right") return SignConvention::right;
    if (s == "left") return SignConvention::left;
    throw std::invalid_argument("--sign must be left or right");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

void emit(const Options& opt, const json& j, const std::string& text, std::ostream& out) {
    std::string body = opt.format == "text" ? text + "\n" : render(j);
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
        f << body;
    } else {
        out << body;
    }
}

std::string vec_text(const Vec2& v) {
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

// trace/analyze/verify accept either a full document or a bare chain file.
bool is_document(const json& j) { return j.is_object() && j.contains("cellular"); }

struct AnalysisInput {
    Endomorphism phi;
    TensorChain1 R;
    bool from_document = false;
    std::vector<Violation> violations;
};

AnalysisInput load_analysis_input(const Options& opt) {
    json j = load_json(opt.in);
    AnalysisInput res;
    if (is_document(j)) {
        auto [phi, data] = document_from_json(j);
        res.phi = phi;
        res.from_document = true;
        res.violations = validate_cellular(phi, data);
        if (res.violations.empty())
            res.R = one_parameter_trace(phi, data, parse_sign(opt.sign));
    } else {
        if (opt.phi.empty())
            throw std::invalid_argument("--phi is required with a bare chain input");
        res.phi = parse_phi(opt.phi);
        res.R = chain1_from_json(j.is_object() && j.contains("R") ? j.at("R") : j);
        if (parse_sign(opt.sign) == SignConvention::left) res.R = -res.R;
    }
    return res;
}

int report_violations(const Options& opt, const std::vector<Violation>& violations,
                      std::ostream& err) {
    err << render(json{{"violations", to_json(violations)}});
    return kBadInput;
}

std::string theorem_text(const TraceReport& r) {
    switch (r.theorem) {
        case TheoremStatus::holds: return "holds";
        case TheoremStatus::fails: return "fails";
        default: return "inconclusive";
    }
}

int theorem_exit_code(const TraceReport& r) {
    if (r.theorem == TheoremStatus::fails) return kTheoremFails;
    if (r.theorem == TheoremStatus::inconclusive) return kInconclusive;
    return kOk;
}

std::string report_text(const TraceReport& r) {
    std::ostringstream os;
    os << "R = " << r.R.str() << "\n";
    for (const ComponentReport& c : r.components) {
        os << "class " << c.cls.rep.str() << ": ";
        if (c.verdict.nontrivial())
            os << "nontrivial, invariant " << vec_text(c.verdict.invariant);
        else if (c.verdict.trivial())
            os << "trivial, certificate " << c.verdict.certificate.str();
        else
            os << "unknown up to support bound " << c.verdict.searched_bound;
        os << "\n";
    }
    os << "N = " << r.N << ", L = " << vec_text(r.L);
    if (r.alpha_kind == AlphaKind::generator) os << ", alpha = " << vec_text(r.alpha);
    os << "\ntheorem L = +-N alpha: " << theorem_text(r);
    return os.str();
}

// Re-check every verdict against its defining identity, independently of how
// the analysis produced it.
bool recheck_report(const Endomorphism& phi, const TraceReport& report) {
    auto comps = decompose_components(phi, report.R);
    if (comps.size() != report.components.size()) return false;
    auto it = comps.begin();
    for (const ComponentReport& c : report.components) {
        if (!(it->first == c.cls)) return false;
        if (c.verdict.trivial() && d2(phi, c.verdict.certificate) != it->second) return false;
        if (c.verdict.nontrivial()) {
            if (c.verdict.invariant.is_zero()) return false;
            if (!(homology_invariant(phi, it->second) == c.verdict.invariant)) return false;
        }
        ++it;
    }
    return true;
}

int cmd_classes(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    ClassCount cc = class_count(phi);
    Cokernel co = cokernel_reps(phi_shifted(phi));
    json j = to_json(co);
    j["det"] = to_json(det_slice(phi));
    j["count"] = cc.finite ? to_json(cc.count) : json("infinite");
    std::ostringstream text;
    text << "det([phi]-I) = " << det_slice(phi) << "\n"
         << "semiconjugacy classes: " << (cc.finite ? cc.count.str() : "infinite");
    emit(opt, j, text.str(), out);
    return kOk;
}

int cmd_same_class(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    auto witness = same_class(phi, parse_element(opt.g1), parse_element(opt.g2));
    json j;
    j["same_class"] = witness.has_value();
    j["witness"] = witness ? to_json(*witness) : json(nullptr);
    emit(opt, j,
         witness ? "same class, witness z = " + vec_text(*witness) : "different classes", out);
    return kOk;
}

int cmd_kernel(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    Lattice ker = semicentralizer(phi);
    std::ostringstream text;
    text << "kernel rank " << ker.rank;
    for (int i = 0; i < ker.rank; ++i) text << " " << vec_text(ker.basis[static_cast<std::size_t>(i)]);
    emit(opt, to_json(ker), text.str(), out);
    return kOk;
}

int cmd_cycle_check(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    TensorChain1 x = chain1_from_json(load_json(opt.in));
    RingElement boundary = d1(phi, x);
    json j{{"cycle", boundary.is_zero()}, {"boundary", to_json(boundary)}};
    emit(opt, j, boundary.is_zero() ? "cycle" : "not a cycle, d1 = " + boundary.str(), out);
    return kOk;
}

int cmd_d1(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    RingElement r = d1(phi, chain1_from_json(load_json(opt.in)));
    emit(opt, to_json(r), r.str(), out);
    return kOk;
}

int cmd_d2(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    TensorChain1 r = d2(phi, chain2_from_json(load_json(opt.in)));
    emit(opt, to_json(r), r.str(), out);
    return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    UPowerReduction red = reduce_u_power(phi, opt.k, opt.m, opt.n);
    json j{{"reduced", to_json(red.reduced)}, {"certificate", to_json(red.certificate)}};
    emit(opt, j, "reduced: " + red.reduced.str() + "\ncertificate: " + red.certificate.str(),
         out);
    return kOk;
}

int cmd_invariant(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    Vec2 v = homology_invariant(phi, chain1_from_json(load_json(opt.in)));
    emit(opt, to_json(v), "invariant " + vec_text(v), out);
    return kOk;
}

int cmd_trivial(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    TrivialityVerdict v =
        is_trivial(phi, chain1_from_json(load_json(opt.in)), opt.support_bound);
    std::string text = v.trivial()      ? "trivial, certificate " + v.certificate.str()
                       : v.nontrivial() ? "nontrivial, invariant " + vec_text(v.invariant)
                                        : "unknown up to support bound " +
                                              std::to_string(v.searched_bound);
    emit(opt, to_json(v), text, out);
    return kOk;
}

int cmd_trace(const Options& opt, std::ostream& out, std::ostream& err) {
    json j = load_json(opt.in);
    if (!is_document(j)) throw std::invalid_argument("trace expects a full input document");
    auto [phi, data] = document_from_json(j);
    auto violations = validate_cellular(phi, data);
    if (!violations.empty()) return report_violations(opt, violations, err);
    TensorChain1 R = one_parameter_trace(phi, data, parse_sign(opt.sign));
    emit(opt, to_json(R), "R = " + R.str(), out);
    return kOk;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
    AnalysisInput input = load_analysis_input(opt);
    if (!input.violations.empty()) return report_violations(opt, input.violations, err);
    TraceReport report = analyze(input.phi, input.R, opt.support_bound);
    emit(opt, to_json(report), report_text(report), out);
    return theorem_exit_code(report);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    AnalysisInput input = load_analysis_input(opt);
    if (!input.violations.empty()) return report_violations(opt, input.violations, err);
    TraceReport report = analyze(input.phi, input.R, opt.support_bound);
    bool rechecked = recheck_report(input.phi, report);
    json j = to_json(report);
    j["certificates_verified"] = rechecked;
    emit(opt, j,
         report_text(report) + std::string("\ncertificates re-verified: ") +
             (rechecked ? "yes" : "NO"),
         out);
    if (!rechecked) return kTheoremFails;
    return theorem_exit_code(report);
}

int cmd_oracle_class(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    SearchBudget budget;
    budget.exponent_bound = opt.support_bound;
    auto witness = brute_same_class(phi, parse_element(opt.g1), parse_element(opt.g2), budget);
    json j{{"witness", witness ? to_json(*witness) : json(nullptr)}};
    emit(opt, j,
         witness ? "witness z = " + vec_text(*witness) : "no witness within the window", out);
    return kOk;
}

int cmd_oracle_certify(const Options& opt, std::ostream& out) {
    Endomorphism phi = parse_phi(opt.phi);
    SearchBudget budget;
    budget.exponent_bound = opt.support_bound;
    auto cert = brute_certificate(phi, chain1_from_json(load_json(opt.in)), budget);
    json j{{"certificate", cert ? to_json(*cert) : json(nullptr)}};
    emit(opt, j, cert ? "certificate: " + cert->str() : "no certificate within the window",
         out);
    return kOk;
}

int cmd_examples(const Options& opt, std::ostream& out) {
    std::filesystem::path dir = opt.out.empty() ? "corpus" : opt.out;
    std::filesystem::create_directories(dir);
    auto write_doc = [&](const std::string& name, const Endomorphism& phi,
                         const CellularHomotopyData& data) {
        std::ofstream f(dir / name);
        if (!f) throw std::invalid_argument("cannot write " + (dir / name).string());
        f << render(document_to_json(phi, data));
        return (dir / name).string();
    };
    json written = json::array();
    {
        auto [phi, data] = shear_example();
        written.push_back(write_doc("shear.json", phi, data));
    }
    {
        auto [phi, data] = fixed_point_free_example();
        written.push_back(write_doc("identity.json", phi, data));
    }
    {
        auto [phi, data] = case_two_example();
        written.push_back(write_doc("case2.json", phi, data));
    }
    {
        Endomorphism phi{1, 0, 1, 1};
        CellularHomotopyData data = generate_valid_data(phi, SearchBudget{}, 1);
        written.push_back(write_doc("generated.json", phi, data));
    }
    std::string text;
    for (const auto& w : written) text += w.get<std::string>() + "\n";
    if (!text.empty()) text.pop_back();
    json j{{"written", written}};
    std::string body = opt.format == "text" ? text + "\n" : render(j);
    out << body;
    return kOk;
}

}  // namespace

const std::vector<CommandBinding>& command_bindings() {
    static const std::vector<CommandBinding> table = {
        {"apply_phi", "d1"},
        {"ring_mul", "d2"},
        {"smith_normal_form", "kernel"},
        {"solve_affine", "same-class"},
        {"cokernel_reps", "classes"},
        {"same_class", "same-class"},
        {"class_id", "classes"},
        {"semicentralizer", "kernel"},
        {"class_count", "classes"},
        {"d1", "d1"},
        {"d2", "d2"},
        {"is_cycle", "cycle-check"},
        {"decompose_components", "analyze"},
        {"reduce_u_power", "reduce"},
        {"homology_invariant", "invariant"},
        {"is_trivial", "trivial"},
        {"validate_cellular", "verify"},
        {"one_parameter_trace", "trace"},
        {"det_slice", "classes"},
        {"analyze", "analyze"},
        {"fixed_point_free_example", "examples"},
        {"brute_same_class", "oracle-class"},
        {"brute_certificate", "oracle-certify"},
        {"generate_valid_data", "examples"},
    };
    return table;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fixed-point invariants of torus homotopies"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_phi, bool needs_in) {
        auto* phi = sub->add_option("--phi", opt.phi, "endomorphism matrix [[b1,b3],[b2,b4]]");
        if (needs_phi) phi->required();
        auto* in = sub->add_option("--in", opt.in, "input file (JSON)");
        if (needs_in) in->required();
        sub->add_option("--out", opt.out, "write the result to a file instead of stdout");
        sub->add_option("--format", opt.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        return sub;
    };

    int code = kOk;

    auto* c_classes = add_common(app.add_subcommand("classes", "semiconjugacy class count and representatives"), true, false);
    c_classes->callback([&] { code = cmd_classes(opt, out); });

    auto* c_same = add_common(app.add_subcommand("same-class", "decide semiconjugacy of two elements"), true, false);
    c_same->add_option("--g1", opt.g1, "first element, exponents m,n")->required();
    c_same->add_option("--g2", opt.g2, "second element, exponents m,n")->required();
    c_same->callback([&] { code = cmd_same_class(opt, out); });

    auto* c_kernel = add_common(app.add_subcommand("kernel", "semicentralizer ker([phi]-I)"), true, false);
    c_kernel->callback([&] { code = cmd_kernel(opt, out); });

    auto* c_cycle = add_common(app.add_subcommand("cycle-check", "test whether a 1-chain is a cycle"), true, true);
    c_cycle->callback([&] { code = cmd_cycle_check(opt, out); });

    auto* c_d1 = add_common(app.add_subcommand("d1", "boundary of a 1-chain"), true, true);
    c_d1->callback([&] { code = cmd_d1(opt, out); });

    auto* c_d2 = add_common(app.add_subcommand("d2", "boundary of a 2-chain"), true, true);
    c_d2->callback([&] { code = cmd_d2(opt, out); });

    auto* c_reduce = add_common(app.add_subcommand("reduce", "u-power reduction with certificate"), true, false);
    c_reduce->add_option("--k", opt.k, "left exponent k")->required();
    c_reduce->add_option("--m", opt.m, "right exponent m")->required();
    c_reduce->add_option("--n", opt.n, "right exponent n")->required();
    c_reduce->callback([&] { code = cmd_reduce(opt, out); });

    auto* c_inv = add_common(app.add_subcommand("invariant", "homology invariant of a cycle"), true, true);
    c_inv->callback([&] { code = cmd_invariant(opt, out); });

    auto* c_triv = add_common(app.add_subcommand("trivial", "triviality verdict for a single-class cycle"), true, true);
    c_triv->add_option("--support-bound", opt.support_bound, "certificate search cap");
    c_triv->callback([&] { code = cmd_trivial(opt, out); });

    auto* c_trace = add_common(app.add_subcommand("trace", "one-parameter trace of cellular data"), false, true);
    c_trace->add_option("--sign", opt.sign, "left or right action convention")
        ->check(CLI::IsMember({"left", "right"}));
    c_trace->callback([&] { code = cmd_trace(opt, out, err); });

    auto* c_analyze = add_common(app.add_subcommand("analyze", "class components, N, L, theorem status"), false, true);
    c_analyze->add_option("--support-bound", opt.support_bound, "certificate search cap");
    c_analyze->add_option("--sign", opt.sign, "left or right action convention")
        ->check(CLI::IsMember({"left", "right"}));
    c_analyze->callback([&] { code = cmd_analyze(opt, out, err); });

    auto* c_verify = add_common(app.add_subcommand("verify", "analyze plus certificate re-verification; exit code reflects the verdict"), false, true);
    c_verify->add_option("--support-bound", opt.support_bound, "certificate search cap");
    c_verify->add_option("--sign", opt.sign, "left or right action convention")
        ->check(CLI::IsMember({"left", "right"}));
    c_verify->callback([&] { code = cmd_verify(opt, out, err); });

    auto* c_ocls = add_common(app.add_subcommand("oracle-class", "conjugator search by enumeration"), true, false);
    c_ocls->add_option("--g1", opt.g1, "first element, exponents m,n")->required();
    c_ocls->add_option("--g2", opt.g2, "second element, exponents m,n")->required();
    c_ocls->add_option("--support-bound", opt.support_bound, "enumeration window");
    c_ocls->callback([&] { code = cmd_oracle_class(opt, out); });

    auto* c_ocert = add_common(app.add_subcommand("oracle-certify", "boundary certificate search in an absolute window"), true, true);
    c_ocert->add_option("--support-bound", opt.support_bound, "absolute exponent window");
    c_ocert->callback([&] { code = cmd_oracle_certify(opt, out); });

    auto* c_examples = add_common(app.add_subcommand("examples", "write the worked example corpus"), false, false);
    c_examples->callback([&] { code = cmd_examples(opt, out); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int cli_code = app.exit(e, e.get_exit_code() == 0 ? out : sink, err);
        return cli_code == 0 ? kOk : kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SearchCapacityExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return code;
}

}  // namespace torusfp
