// trirep: triangular representations of linear codes from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "manifest.hpp"
#include "trirep/complex.hpp"
#include "trirep/enumerator.hpp"
#include "trirep/errors.hpp"
#include "trirep/gadgets.hpp"
#include "trirep/linear_code.hpp"
#include "trirep/potts.hpp"
#include "trirep/representation.hpp"

using namespace trirep;
using trirep::cli::Manifest;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        std::size_t pos = 0;
        const auto x = std::stoull(v, &pos);
        if (pos == std::string(v).size()) return x;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed " << name << "='" << v << "'\n";
    return fallback;
}

struct Options {
    std::string input;
    std::string field;
    std::string out;
    std::string manifest;
    std::uint64_t budget_codewords = 10'000'000;
    std::size_t budget_triangles = 1'000'000;

    EnumerationBudget enumeration() const { return {budget_codewords}; }
    RepresentationBudget construction() const { return {budget_triangles}; }
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out, "Output path (file or prefix)");
    sub->add_option("--manifest", o.manifest, "Manifest path (default: <out>.manifest.json, else stderr)");
    sub->add_option("--budget-codewords", o.budget_codewords, "Enumeration cap (env TRIREP_BUDGET_CODEWORDS)");
    sub->add_option("--budget-triangles", o.budget_triangles, "Triangle cap (env TRIREP_BUDGET_TRIANGLES)");
}

// Writes `bytes` to `path`, or to stdout when no path is set.
void emit(Manifest& m, const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    cli::write_atomic(path, bytes);
    m.output(path, bytes);
}

void report(Manifest& m, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        m.check(c);
    }
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t pos = 0;
        const auto v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed list entry '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

VariableAssignment parse_lambda(const std::string& text, std::size_t length) {
    VariableAssignment l{0, {}};
    for (auto v : parse_list(text)) {
        if (v == 0) throw std::invalid_argument("--lambda variables are numbered from 1");
        l.var_of.push_back(v - 1);
        l.vars = std::max<std::size_t>(l.vars, v);
    }
    l.validate(length);
    return l;
}

int run_represent(const Options& o, Manifest& m) {
    if (o.out.empty()) throw std::invalid_argument("represent needs --out <prefix>");
    m.input(o.input);
    const auto code = read_code_file(o.input);
    m.field(code.field().to_string());
    const auto rep = build_representation(code, o.construction());
    if (rep.rescaled) m.note("rational basis rescaled to integer entries");

    std::ostringstream cx;
    write_complex(cx, rep.delta);
    emit(m, o.out + ".complex", cx.str());
    emit(m, o.out + ".json", representation_metadata_json(rep));

    bool enumerate = true;
    if (code.field().is_prime_field()) {
        try {
            codeword_count(rep.doubled, o.enumeration());
        } catch (const BudgetExceeded&) {
            enumerate = false;
            m.note("enumerative checks skipped: codeword budget");
        }
    }
    report(m, verify_representation(rep, o.enumeration(), enumerate));
    std::cout << "n=" << rep.n << " dim=" << code.dimension() << " e=" << rep.e
              << " triangles=" << rep.triangles.size() << "\n";
    return m.all_pass() ? kOk : kVerifyFailed;
}

int run_kernel(const Options& o, Manifest& m) {
    m.input(o.input);
    const auto field = FieldSpec::parse(o.field);
    m.field(field.to_string());
    const auto delta = read_complex_file(o.input);
    const auto kb = kernel(delta, field);
    nlohmann::ordered_json j;
    j["field"] = field.to_string();
    j["triangles"] = kb.triangles.size();
    j["rank"] = kb.rank;
    j["dimension"] = kb.dimension();
    auto ids = nlohmann::json::array();
    for (const auto& t : kb.triangles) ids.push_back(to_string(t));
    j["columns"] = ids;
    auto vecs = nlohmann::json::array();
    for (const auto& v : kb.vectors) {
        auto row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        vecs.push_back(row);
    }
    j["vectors"] = vecs;
    emit(m, o.out, j.dump(2) + "\n");
    return kOk;
}

int run_wenum(const Options& o, bool is_code, const std::string& lambda_text, Manifest& m) {
    m.input(o.input);
    LaurentPolynomial p(1);
    if (is_code) {
        const auto code = read_code_file(o.input);
        m.field(code.field().to_string());
        if (!lambda_text.empty()) {
            p = multivariate_weight_enumerator(code, parse_lambda(lambda_text, code.length()), o.enumeration());
        } else {
            p = weight_enumerator(code, o.enumeration());
        }
    } else {
        if (o.field.empty()) throw std::invalid_argument("wenum on a complex needs --field");
        const auto field = FieldSpec::parse(o.field);
        m.field(field.to_string());
        const auto delta = read_complex_file(o.input);
        p = kernel_weight_enumerator(kernel(delta, field), o.enumeration());
    }
    std::cerr << p.to_string() << "\n";
    emit(m, o.out, to_json(p));
    return kOk;
}

int run_recover(const Options& o, std::size_t e, bool no_halve, std::size_t reserved, Manifest& m) {
    m.input(o.input);
    const auto poly = polynomial_from_json(cli::read_file(o.input));
    LaurentPolynomial out(1);
    if (poly.vars() == 1) {
        out = recover_code_enumerator(poly, e, !no_halve);
    } else {
        const std::size_t r = reserved == 0 ? poly.vars() : reserved;
        if (r > poly.vars()) throw std::invalid_argument("--reserved exceeds the number of variables");
        out = recover_multivariate_enumerator(poly, e, r - 1);
    }
    std::cerr << out.to_string() << "\n";
    emit(m, o.out, to_json(out));
    return kOk;
}

int run_verify(const Options& o, const std::string& lambda_text, Manifest& m) {
    m.input(o.input);
    const auto code = read_code_file(o.input);
    m.field(code.field().to_string());
    const auto rep = build_representation(code, o.construction());
    if (rep.rescaled) m.note("rational basis rescaled to integer entries");
    std::cout << "n=" << rep.n << " dim=" << code.dimension() << " e=" << rep.e
              << " triangles=" << rep.triangles.size() << "\n";
    report(m, verify_representation(rep, o.enumeration(), true));
    if (code.field().is_prime_field()) {
        std::optional<VariableAssignment> lambda;
        if (!lambda_text.empty()) lambda = parse_lambda(lambda_text, code.length());
        report(m, verify_enumerators(rep, o.enumeration(), lambda ? &*lambda : nullptr));
    } else {
        m.note("enumerator checks need a finite field");
    }
    if (!o.out.empty()) emit(m, o.out, representation_metadata_json(rep));
    return m.all_pass() ? kOk : kVerifyFailed;
}

int run_potts(const Options& o, std::size_t q, const std::string& via, Manifest& m) {
    m.input(o.input);
    m.field("gf:" + std::to_string(q));
    const auto g = read_graph_file(o.input);
    nlohmann::ordered_json j;
    j["q"] = q;
    std::optional<LaurentPolynomial> direct, viarep;
    if (via == "direct" || via == "both") {
        direct = potts_direct(g, q, o.enumeration());
        std::cout << "direct: " << direct->to_string() << "\n";
        j["direct"] = nlohmann::json::parse(to_json(*direct));
    }
    if (via == "representation" || via == "both") {
        const auto r = potts_via_representation(g, q, o.enumeration(), o.construction());
        viarep = r.polynomial;
        std::cout << "representation: " << viarep->to_string() << " (e=" << r.e << ", triangles=" << r.triangles
                  << ", e/|E|=" << (g.edges.empty() ? 0.0 : double(r.e) / double(g.edges.size())) << ")\n";
        j["representation"] = nlohmann::json::parse(to_json(*viarep));
        j["e"] = r.e;
        j["triangles"] = r.triangles;
    }
    if (direct && viarep) {
        const bool same = *direct == *viarep;
        std::cout << (same ? "PASS" : "FAIL") << "\n";
        m.check({"potts-equivalence", same, direct->to_string()});
        j["match"] = same;
    }
    if (!o.out.empty()) emit(m, o.out, j.dump(2) + "\n");
    return m.all_pass() ? kOk : kVerifyFailed;
}

int run_gadget(const Options& o, const std::string& kind, std::size_t size, const std::string& mults,
               std::size_t min_class, Manifest& m) {
    if (o.out.empty()) throw std::invalid_argument("gadget needs --out <prefix>");
    const auto field = FieldSpec::parse(o.field.empty() ? "q" : o.field);
    m.field(field.to_string());
    OrientedTriangularConfiguration cx;
    std::vector<std::pair<std::string, std::vector<Triangle>>> groups;
    if (kind == "sphere") {
        LabelFactory labels("S");
        auto s = build_sphere(size, labels);
        const auto kb = kernel(s.complex.complex, field);
        m.check({"sphere-kernel-dimension", kb.dimension() == 1, std::to_string(kb.dimension())});
        cx = std::move(s.complex);
    } else if (kind == "tunnel") {
        LabelFactory labels("T");
        auto t = build_tunnel(labels);
        std::set<Edge> inner;
        for (const auto& e : tunnel_between(t.positive_end, t.negative_end).inner_edges) inner.insert(e);
        const auto kb = restricted_kernel(t.complex.complex, inner, field);
        m.check({"tunnel-inner-kernel-dimension", kb.dimension() == 1, std::to_string(kb.dimension())});
        groups.push_back({"positive_end", {t.positive_end}});
        groups.push_back({"negative_end", {t.negative_end}});
        cx = std::move(t.complex);
    } else if (kind == "multisphere") {
        auto ms = build_multisphere(parse_list(mults), min_class, field.one());
        for (std::size_t i = 0; i < ms.values.size(); ++i) {
            groups.push_back({"class_plus_" + std::to_string(i + 1), ms.class_plus[i]});
            groups.push_back({"class_minus_" + std::to_string(i + 1), ms.class_minus[i]});
        }
        groups.push_back({"connectors", ms.connectors});
        m.check({"multisphere-kernel", true, "dimension 1, values n_i x 1 on the classes"});
        cx = std::move(ms.complex);
    } else {
        throw std::invalid_argument("unknown gadget '" + kind + "' (sphere, tunnel, multisphere)");
    }
    std::ostringstream out;
    write_complex(out, cx.complex);
    emit(m, o.out + ".complex", out.str());
    emit(m, o.out + ".json", gadget_sidecar_json(cx, groups));
    return m.all_pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular representations of linear codes over GF(p) and Q"};
    app.require_subcommand(1);
    Options o;
    o.budget_codewords = env_or("TRIREP_BUDGET_CODEWORDS", o.budget_codewords);
    o.budget_triangles = env_or("TRIREP_BUDGET_TRIANGLES", o.budget_triangles);

    auto* represent = app.add_subcommand("represent", "Build the representation of a code file");
    represent->add_option("code", o.input, "Code file")->required();

    auto* kern = app.add_subcommand("kernel", "Kernel basis of a complex file");
    kern->add_option("complex", o.input, "Complex file")->required();
    kern->add_option("--field", o.field, "gf:<p> or q")->required();

    bool wenum_code = false;
    std::string lambda_text;
    auto* wenum = app.add_subcommand("wenum", "Weight enumerator of a kernel or a code");
    wenum->add_option("input", o.input, "Complex file (or code file with --code)")->required();
    wenum->add_option("--field", o.field, "gf:<p> (complex input)");
    wenum->add_flag("--code", wenum_code, "Input is a code file");
    wenum->add_option("--lambda", lambda_text, "Variable per coordinate, e.g. 1,2,1 (code input)");

    std::size_t e = 0, reserved = 0;
    bool no_halve = false;
    auto* recover = app.add_subcommand("recover", "Recover W_C from a kernel enumerator JSON");
    recover->add_option("poly", o.input, "Polynomial JSON")->required();
    recover->add_option("--e", e, "Exponent e")->required()->check(CLI::PositiveNumber);
    recover->add_flag("--no-halve", no_halve, "Reduce mod e without halving (univariate)");
    recover->add_option("--reserved", reserved, "Reserved variable, 1-based (default: last)");

    auto* verify = app.add_subcommand("verify", "Run the invariant suite on a code file");
    verify->add_option("code", o.input, "Code file")->required();
    verify->add_option("--lambda", lambda_text, "Variable per coordinate for the multivariate check");

    std::size_t q = 0;
    std::string via = "both";
    auto* potts = app.add_subcommand("potts", "q-Potts partition function of a graph file");
    potts->add_option("graph", o.input, "Graph file")->required();
    potts->add_option("--q", q, "Prime q")->required();
    potts->add_option("--via", via, "direct, representation or both")
        ->check(CLI::IsMember({"direct", "representation", "both"}));

    std::string kind, mults = "1,2";
    std::size_t size = 8, min_class = 2;
    auto* gadget = app.add_subcommand("gadget", "Build a sphere, tunnel or multisphere gadget");
    gadget->add_option("kind", kind, "sphere, tunnel or multisphere")->required();
    gadget->add_option("--m", size, "Sphere size");
    gadget->add_option("--n", mults, "Multisphere multipliers, e.g. 1,2");
    gadget->add_option("--M", min_class, "Multisphere class bound");
    gadget->add_option("--field", o.field, "gf:<p> or q (default q)");

    for (auto* sub : {represent, kern, wenum, recover, verify, potts, gadget}) add_common(sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? kOk : kInputError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Manifest m(name);
    m.budgets(o.budget_codewords, o.budget_triangles);
    int rc = kOk;
    try {
        if (name == "represent") rc = run_represent(o, m);
        else if (name == "kernel") rc = run_kernel(o, m);
        else if (name == "wenum") rc = run_wenum(o, wenum_code, lambda_text, m);
        else if (name == "recover") rc = run_recover(o, e, no_halve, reserved, m);
        else if (name == "verify") rc = run_verify(o, lambda_text, m);
        else if (name == "potts") rc = run_potts(o, q, via, m);
        else rc = run_gadget(o, kind, size, mults, min_class, m);
    } catch (const BudgetExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        m.error("budget", err.what());
        rc = kBudget;
    } catch (const InvariantViolation& err) {
        std::cerr << "verification failed: " << err.what() << "\n";
        m.error("invariant", err.what());
        rc = kVerifyFailed;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        m.error("input", err.what());
        rc = kInputError;
    }

    std::string manifest_path = o.manifest;
    if (manifest_path.empty() && !o.out.empty()) manifest_path = o.out + ".manifest.json";
    try {
        if (manifest_path.empty()) std::cerr << m.dump();
        else cli::write_atomic(manifest_path, m.dump());
    } catch (const std::exception& err) {
        std::cerr << "error: cannot write manifest: " << err.what() << "\n";
        if (rc == kOk) rc = kInputError;
    }
    return rc;
}
