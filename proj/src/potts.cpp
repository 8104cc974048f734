#include "trirep/potts.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trirep/errors.hpp"

namespace trirep {

void WeightedGraph::validate() const {
    for (const auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
}

bool WeightedGraph::connected() const {
    if (vertex_count == 0) return false;
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t components = vertex_count;
    for (const auto& e : edges) {
        auto a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::int64_t WeightedGraph::total_weight() const {
    std::int64_t s = 0;
    for (const auto& e : edges) s += e.weight;
    return s;
}

std::vector<std::int64_t> WeightedGraph::weight_classes() const {
    std::vector<std::int64_t> w;
    for (const auto& e : edges) w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

namespace {

std::int64_t parse_int(const std::string& s, std::size_t lineno) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ParseError(lineno, "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
    WeightedGraph g;
    bool have_vertices = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_vertices) {
            if (toks[0] != "vertices" || toks.size() != 2) throw ParseError(lineno, "expected 'vertices <n>'");
            const auto n = parse_int(toks[1], lineno);
            if (n <= 0) throw ParseError(lineno, "vertex count must be positive");
            g.vertex_count = static_cast<std::size_t>(n);
            have_vertices = true;
            continue;
        }
        if (toks[0] != "edge" || toks.size() != 4) throw ParseError(lineno, "expected 'edge <u> <v> <w>'");
        const auto u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.vertex_count ||
            static_cast<std::size_t>(v) >= g.vertex_count)
            throw ParseError(lineno, "vertex out of range 0.." + std::to_string(g.vertex_count - 1));
        if (u == v) throw ParseError(lineno, "self-loop");
        g.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), parse_int(toks[3], lineno)});
    }
    if (!have_vertices) throw ParseError(lineno, "missing 'vertices' line");
    return g;
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return read_graph(in);
}

std::int64_t hamiltonian(const WeightedGraph& g, const std::vector<std::size_t>& spins) {
    if (spins.size() != g.vertex_count) throw std::invalid_argument("spin assignment is not total");
    std::int64_t h = 0;
    for (const auto& e : g.edges) {
        if (spins[e.u] == spins[e.v]) h += e.weight;
    }
    return h;
}

LaurentPolynomial potts_direct(const WeightedGraph& g, std::size_t q, const EnumerationBudget& budget) {
    g.validate();
    if (q == 0) throw std::invalid_argument("q must be positive");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.vertex_count; ++i) {
        if (total > budget.max_codewords / q)
            throw BudgetExceeded("q^|V| spin assignments exceed the budget of " +
                                 std::to_string(budget.max_codewords));
        total *= q;
    }
    LaurentPolynomial p(1);
    std::vector<std::size_t> s(g.vertex_count, 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        p.add_term({hamiltonian(g, s)}, 1);
        for (std::size_t pos = g.vertex_count; pos-- > 0;) {
            if (++s[pos] < q) break;
            s[pos] = 0;
        }
    }
    return p;
}

LinearCode cut_space_code(const WeightedGraph& g, std::size_t q, bool reversed) {
    g.validate();
    const FieldSpec field = FieldSpec::prime(q);
    std::vector<Vector> rows(g.vertex_count, Vector(g.edges.size(), field.zero()));
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto lo = std::min(g.edges[k].u, g.edges[k].v), hi = std::max(g.edges[k].u, g.edges[k].v);
        if (reversed) std::swap(lo, hi);
        rows[hi][k] += field.one();
        rows[lo][k] -= field.one();
    }
    return LinearCode(field, g.edges.size(), independent_rows(rows, field));
}

PottsViaRepresentation potts_via_representation(const WeightedGraph& g, std::size_t q,
                                                const EnumerationBudget& enumeration,
                                                const RepresentationBudget& construction) {
    g.validate();
    if (!g.connected()) throw std::invalid_argument("the representation path needs a connected graph");
    PottsViaRepresentation out{LaurentPolynomial::constant(static_cast<std::int64_t>(q)), 0, 0, 0};
    if (g.edges.empty()) return out;

    const auto code = cut_space_code(g, q);
    const auto classes = g.weight_classes();
    VariableAssignment lambda{classes.size(), {}};
    for (const auto& e : g.edges) {
        lambda.var_of.push_back(static_cast<std::size_t>(
            std::lower_bound(classes.begin(), classes.end(), e.weight) - classes.begin()));
    }

    const auto rep = build_representation(code, construction);
    const auto lifted = lift_assignment(rep, lambda);
    const auto kernel_poly = multivariate_weight_enumerator(kernel_code(rep), lifted, enumeration);
    const auto recovered = recover_multivariate_enumerator(kernel_poly, rep.e, classes.size() - 1);

    std::vector<std::int64_t> powers;
    for (auto w : classes) powers.push_back(-w);
    auto prefactor = LaurentPolynomial::monomial({g.total_weight()}, static_cast<std::int64_t>(q));
    out.polynomial = prefactor * recovered.substitute(powers);
    out.e = rep.e;
    out.triangles = rep.triangles.size();
    out.classes = classes.size();
    return out;
}

}  // namespace trirep
