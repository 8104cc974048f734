#include "trirep/gadgets.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "trirep/errors.hpp"

namespace trirep {

Vertex LabelFactory::next() {
    char buf[32];
    std::snprintf(buf, sizeof buf, "_%05llu", static_cast<unsigned long long>(counter_++));
    return prefix_ + buf;
}

BnGadget build_Bn(std::size_t n, const std::string& prefix) {
    if (n == 0) throw std::invalid_argument("build_Bn: n must be positive");
    BnGadget out;
    const std::size_t width = std::to_string(n - 1).size();
    for (std::size_t j = 0; j < n; ++j) {
        std::string idx = std::to_string(j);
        const std::string base = prefix + std::string(width - idx.size(), '0') + idx;
        auto t = make_triangle(base + "a", base + "b", base + "c");
        out.complex.add_triangle(t);
        out.triangles.push_back(t);
    }
    return out;
}

TunnelTriangles tunnel_between(const Triangle& positive_end, const Triangle& negative_end) {
    const auto& [A, B, C] = positive_end;
    const auto& [X, Y, Z] = negative_end;
    TunnelTriangles tt;
    tt.positive_side = {make_triangle(A, B, X), make_triangle(B, C, Y), make_triangle(C, A, Z)};
    tt.negative_side = {make_triangle(B, X, Y), make_triangle(C, Y, Z), make_triangle(A, Z, X)};
    tt.inner_edges = {make_edge(A, X), make_edge(B, X), make_edge(B, Y),
                      make_edge(C, Y), make_edge(C, Z), make_edge(A, Z)};
    return tt;
}

TunnelGadget build_tunnel(LabelFactory& labels) {
    TunnelGadget g;
    std::array<Vertex, 6> v;
    for (auto& x : v) x = labels.next();
    g.positive_end = make_triangle(v[0], v[1], v[2]);
    g.negative_end = make_triangle(v[3], v[4], v[5]);
    for (const auto& end : {g.positive_end, g.negative_end}) {
        for (const auto& e : edges_of(end)) g.complex.complex.add_edge(e);
    }
    link(g.complex, g.positive_end, g.negative_end);
    return g;
}

TunnelTriangles link(OrientedTriangularConfiguration& delta, const Triangle& t1, const Triangle& t2) {
    for (const auto& t : {t1, t2}) {
        for (const auto& e : edges_of(t)) {
            if (!delta.complex.has_edge(e))
                throw std::invalid_argument("link: edge " + to_string(e) + " of " + to_string(t) + " not present");
        }
    }
    if (shares_edge(t1, t2)) throw std::invalid_argument("link: triangles share an edge");
    if (shares_vertex(t1, t2)) throw std::invalid_argument("link: triangles share a vertex");
    auto tt = tunnel_between(t1, t2);
    for (const auto& e : tt.inner_edges) {
        if (delta.complex.has_edge(e))
            throw std::invalid_argument("link: inner edge " + to_string(e) + " already present");
    }
    for (const auto& t : tt.positive_side) delta.add_triangle(t, Sign::plus);
    for (const auto& t : tt.negative_side) delta.add_triangle(t, Sign::minus);
    return tt;
}

namespace {

std::optional<Sign> sign_of(const OrientedTriangularConfiguration& delta, const Triangle& t) {
    auto it = delta.sign.find(t);
    if (it == delta.sign.end()) return std::nullopt;
    return it->second;
}

void add_signed(OrientedTriangularConfiguration& delta, const Triangle& t, std::optional<Sign> s, bool flip) {
    if (s) {
        delta.add_triangle(t, flip ? opposite(*s) : *s);
    } else {
        delta.complex.add_triangle(t);
    }
}

}  // namespace

std::vector<Triangle> subdivide_A(OrientedTriangularConfiguration& delta, const Triangle& t_in,
                                  LabelFactory& labels) {
    const Triangle t = t_in;  // t_in may alias a member of delta
    if (!delta.complex.has_triangle(t)) throw std::invalid_argument("subdivide_A: unknown triangle " + to_string(t));
    const auto s = sign_of(delta, t);
    delta.remove_triangle(t);
    const auto& [A, B, C] = t;
    const Vertex a = labels.next(), b = labels.next(), c = labels.next();
    std::vector<Triangle> patch = {make_triangle(A, B, c), make_triangle(B, c, a), make_triangle(B, C, a),
                                   make_triangle(C, a, b), make_triangle(C, A, b), make_triangle(A, b, c),
                                   make_triangle(a, b, c)};
    for (std::size_t i = 0; i < patch.size(); ++i) add_signed(delta, patch[i], s, i % 2 == 1);
    return patch;
}

std::vector<Triangle> subdivide_B(OrientedTriangularConfiguration& delta, const Triangle& t1, const Triangle& t2,
                                  LabelFactory& labels) {
    for (const auto& t : {t1, t2}) {
        if (!delta.complex.has_triangle(t))
            throw std::invalid_argument("subdivide_B: unknown triangle " + to_string(t));
    }
    std::vector<Vertex> shared;
    for (const auto& v : t1) {
        if (std::find(t2.begin(), t2.end(), v) != t2.end()) shared.push_back(v);
    }
    if (shared.size() != 2) throw std::invalid_argument("subdivide_B: triangles do not share exactly one edge");
    const Edge ab = make_edge(shared[0], shared[1]);
    const Triangle u1 = t1, u2 = t2;
    if (delta.complex.edge_degree(ab) != 2)
        throw std::invalid_argument("subdivide_B: shared edge " + to_string(ab) + " does not have degree 2");
    auto apex = [&](const Triangle& t) {
        for (const auto& v : t) {
            if (v != ab[0] && v != ab[1]) return v;
        }
        throw std::logic_error("unreachable");
    };
    const Vertex C = apex(u1), D = apex(u2);
    const auto s1 = sign_of(delta, u1), s2 = sign_of(delta, u2);
    delta.remove_triangle(u1);
    delta.remove_triangle(u2);
    delta.complex.remove_edge(ab);
    const Vertex& A = ab[0];
    const Vertex& B = ab[1];
    const Vertex p = labels.next(), q = labels.next();
    std::vector<Triangle> patch = {make_triangle(A, p, C), make_triangle(p, q, C), make_triangle(q, B, C),
                                   make_triangle(A, p, D), make_triangle(p, q, D), make_triangle(q, B, D)};
    for (std::size_t i = 0; i < 3; ++i) add_signed(delta, patch[i], s1, i == 1);
    for (std::size_t i = 3; i < 6; ++i) add_signed(delta, patch[i], s2, i == 4);
    return patch;
}

bool sphere_size_representable(std::size_t m) { return m == 8 || (m >= 12 && m % 2 == 0); }

SphereGadget build_sphere(std::size_t m, LabelFactory& labels) {
    if (!sphere_size_representable(m))
        throw std::invalid_argument("sphere size " + std::to_string(m) + " is not of the form 8+6l+4k");
    SphereGadget g;
    g.m = m;
    std::size_t l = (m - 8) / 6;
    while ((m - 8 - 6 * l) % 4 != 0) --l;
    g.steps_a = l;
    g.steps_b = (m - 8 - 6 * l) / 4;

    std::array<Vertex, 6> v;
    for (auto& x : v) x = labels.next();
    auto& s = g.complex;
    s.add_triangle(make_triangle(v[0], v[1], v[2]), Sign::plus);
    s.add_triangle(make_triangle(v[0], v[2], v[3]), Sign::minus);
    s.add_triangle(make_triangle(v[0], v[3], v[4]), Sign::plus);
    s.add_triangle(make_triangle(v[0], v[4], v[1]), Sign::minus);
    s.add_triangle(make_triangle(v[5], v[1], v[2]), Sign::minus);
    s.add_triangle(make_triangle(v[5], v[2], v[3]), Sign::plus);
    s.add_triangle(make_triangle(v[5], v[3], v[4]), Sign::minus);
    s.add_triangle(make_triangle(v[5], v[4], v[1]), Sign::plus);

    for (std::size_t i = 0; i < g.steps_a; ++i) subdivide_A(s, *s.complex.triangles().rbegin(), labels);
    for (std::size_t i = 0; i < g.steps_b; ++i) {
        const Edge& e = *s.complex.edges().rbegin();
        auto cf = s.complex.cofaces(e);
        subdivide_B(s, cf[0], cf[1], labels);
    }
    if (s.complex.triangles().size() != m) throw InvariantViolation("sphere has the wrong triangle count");
    if (!is_properly_signed_sphere(s)) throw InvariantViolation("sphere coloring is not proper");
    return g;
}

bool is_properly_signed_sphere(const OrientedTriangularConfiguration& s) {
    if (!s.sign_is_total()) return false;
    for (const auto& e : s.complex.edges()) {
        if (s.complex.edge_degree(e) != 2) return false;
        auto cf = s.complex.cofaces(e);
        if (s.sign.at(cf[0]) == s.sign.at(cf[1])) return false;
    }
    return true;
}

namespace {

std::size_t next_sphere_size(std::size_t m) {
    ++m;
    while (!sphere_size_representable(m)) ++m;
    return m;
}

struct SphereState {
    std::vector<Triangle> triangles;  // canonical order
    std::set<Edge> blocked;
};

std::optional<MultisphereGadget> try_multisphere(const std::vector<std::uint64_t>& n, std::size_t M,
                                                 const FieldElement& g, const std::string& prefix, std::size_t m) {
    const std::size_t k = n.size();
    MultisphereGadget ms;
    ms.multipliers = n;
    ms.min_class = M;
    ms.sphere_size = m;
    ms.class_plus.resize(k);
    ms.class_minus.resize(k);
    ms.free_plus.resize(k);
    ms.free_minus.resize(k);
    for (auto x : n) ms.values.push_back(n_times(x, g));

    auto& delta = ms.complex;
    std::vector<SphereState> spheres(k);
    for (std::size_t i = 0; i < k; ++i) {
        LabelFactory labels(prefix + "s" + std::to_string(i));
        auto sg = build_sphere(m, labels);
        delta = union_of(delta, sg.complex);
        spheres[i].triangles.assign(sg.complex.complex.triangles().begin(), sg.complex.complex.triangles().end());
    }

    LabelFactory conn_labels(prefix + "c");
    std::vector<std::array<Triangle, 2>> conn(k > 0 ? k - 1 : 0);
    for (auto& pair : conn) {
        for (auto& t : pair) {
            const Vertex a = conn_labels.next(), b = conn_labels.next(), c = conn_labels.next();
            t = make_triangle(a, b, c);
            for (const auto& e : edges_of(t)) delta.complex.add_edge(e);
            ms.connectors.push_back(t);
        }
    }

    // Tunnel triangles, attributed to a sphere and a class.
    std::vector<std::pair<std::size_t, TunnelTriangles>> tunnels;

    auto choose = [&](std::size_t i, Sign s, std::uint64_t count) -> std::optional<std::vector<Triangle>> {
        std::vector<Triangle> picked;
        for (const auto& t : spheres[i].triangles) {
            if (picked.size() == count) break;
            if (!delta.complex.has_triangle(t) || delta.sign.at(t) != s) continue;
            bool ok = true;
            for (const auto& e : edges_of(t)) ok = ok && !spheres[i].blocked.count(e);
            for (const auto& u : picked) ok = ok && !shares_vertex(t, u);
            if (ok) picked.push_back(t);
        }
        if (picked.size() != count) return std::nullopt;
        return picked;
    };

    for (std::size_t round = 0; round < 2; ++round) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const Triangle& t = conn[i][round];
            auto minus_i = choose(i, Sign::minus, n[i + 1]);
            if (!minus_i) return std::nullopt;
            for (const auto& c : *minus_i) {
                for (const auto& e : edges_of(c)) spheres[i].blocked.insert(e);
            }
            auto plus_next = choose(i + 1, Sign::plus, n[i]);
            if (!plus_next) return std::nullopt;
            for (const auto& c : *plus_next) {
                for (const auto& e : edges_of(c)) spheres[i + 1].blocked.insert(e);
            }
            for (const auto& c : *minus_i) tunnels.emplace_back(i, link(delta, t, c));
            for (const auto& c : *plus_next) tunnels.emplace_back(i + 1, link(delta, c, t));
            for (const auto& c : *minus_i) delta.remove_triangle(c);
            for (const auto& c : *plus_next) delta.remove_triangle(c);
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& t : spheres[i].triangles) {
            if (!delta.complex.has_triangle(t)) continue;
            const Sign s = delta.sign.at(t);
            (s == Sign::plus ? ms.class_plus : ms.class_minus)[i].push_back(t);
            bool untouched = true;
            for (const auto& e : edges_of(t)) untouched = untouched && !spheres[i].blocked.count(e);
            if (untouched) (s == Sign::plus ? ms.free_plus : ms.free_minus)[i].push_back(t);
        }
        if (ms.free_plus[i].size() < M || ms.free_minus[i].size() < M) return std::nullopt;
    }
    for (const auto& [i, tt] : tunnels) {
        for (const auto& t : tt.positive_side) ms.class_plus[i].push_back(t);
        for (const auto& t : tt.negative_side) ms.class_minus[i].push_back(t);
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::sort(ms.class_plus[i].begin(), ms.class_plus[i].end());
        std::sort(ms.class_minus[i].begin(), ms.class_minus[i].end());
    }
    return ms;
}

}  // namespace

MultisphereGadget build_multisphere(const std::vector<std::uint64_t>& multipliers, std::size_t min_class,
                                    const FieldElement& generator, const std::string& prefix) {
    if (multipliers.empty()) throw std::invalid_argument("multisphere needs at least one multiplier");
    if (generator.is_zero()) throw std::invalid_argument("multisphere generator must be nonzero");
    const FieldSpec field = generator.field();
    std::set<std::uint64_t> seen;
    for (auto x : multipliers) {
        if (x == 0) throw std::invalid_argument("multisphere multipliers must be positive");
        if (!seen.insert(x).second) throw std::invalid_argument("multisphere multipliers must be distinct");
        if (field.is_prime_field() && x % field.modulus() == 0)
            throw std::invalid_argument("multiplier " + std::to_string(x) + " vanishes in " + field.to_string());
    }
    const std::size_t k = multipliers.size();
    std::size_t need = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t h = min_class;
        if (i > 0) h += 2 * multipliers[i - 1];
        if (i + 1 < k) h += 2 * multipliers[i + 1];
        need = std::max(need, h);
    }
    std::size_t m = std::max<std::size_t>(2 * need, k == 1 ? 8 : 12);
    if (!sphere_size_representable(m)) m = next_sphere_size(m);
    for (std::size_t attempt = 0; attempt < 64; ++attempt, m = next_sphere_size(m)) {
        auto ms = try_multisphere(multipliers, min_class, generator, prefix, m);
        if (!ms) continue;
        const auto kb = kernel(ms->complex.complex, field);
        if (kb.dimension() != 1)
            throw InvariantViolation("multisphere kernel has dimension " + std::to_string(kb.dimension()));
        const auto& v = kb.vectors[0];
        const FieldElement ref = v[kb.index_of(ms->class_plus[0].front())];
        if (ref.is_zero()) throw InvariantViolation("multisphere generator vanishes on class +1");
        const FieldElement scale = ms->values[0] / ref;
        ms->generator.reserve(v.size());
        for (const auto& x : v) ms->generator.push_back(x * scale);
        verify_multisphere(*ms);
        return std::move(*ms);
    }
    throw std::invalid_argument("multisphere: no feasible sphere size found");
}

void verify_multisphere(const MultisphereGadget& ms) {
    const FieldSpec field = ms.values.at(0).field();
    const auto& tris = ms.complex.complex.triangles();
    if (tris.size() % 2 != 0) throw InvariantViolation("multisphere has an odd number of triangles");
    const auto kb = kernel(ms.complex.complex, field);
    if (kb.dimension() != 1)
        throw InvariantViolation("multisphere kernel has dimension " + std::to_string(kb.dimension()));
    if (ms.generator.size() != tris.size()) throw InvariantViolation("multisphere generator has the wrong length");
    // The stored generator must be a multiple of the recomputed one.
    const auto& v = kb.vectors[0];
    std::optional<FieldElement> ratio;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero() != ms.generator[j].is_zero()) throw InvariantViolation("multisphere generator support");
        if (v[j].is_zero()) continue;
        const FieldElement r = ms.generator[j] / v[j];
        if (!ratio) ratio = r;
        else if (!(*ratio == r)) throw InvariantViolation("multisphere generator is not in the kernel");
    }
    std::size_t covered = 0;
    for (std::size_t i = 0; i < ms.values.size(); ++i) {
        if (ms.class_plus[i].size() < ms.min_class || ms.class_minus[i].size() < ms.min_class)
            throw InvariantViolation("multisphere class smaller than M");
        for (const auto& t : ms.class_plus[i]) {
            if (!(ms.generator[kb.index_of(t)] == ms.values[i]))
                throw InvariantViolation("multisphere value on +" + std::to_string(i + 1) + " at " + to_string(t));
        }
        for (const auto& t : ms.class_minus[i]) {
            if (!(ms.generator[kb.index_of(t)] == -ms.values[i]))
                throw InvariantViolation("multisphere value on -" + std::to_string(i + 1) + " at " + to_string(t));
        }
        covered += ms.class_plus[i].size() + ms.class_minus[i].size();
    }
    if (covered != tris.size()) throw InvariantViolation("multisphere classes do not cover every triangle");
}

std::string gadget_sidecar_json(const OrientedTriangularConfiguration& complex,
                                const std::vector<std::pair<std::string, std::vector<Triangle>>>& groups) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json signs;
    signs["plus"] = nlohmann::json::array();
    signs["minus"] = nlohmann::json::array();
    for (const auto& [t, s] : complex.sign) signs[s == Sign::plus ? "plus" : "minus"].push_back(to_string(t));
    j["signs"] = signs;
    nlohmann::ordered_json g = nlohmann::ordered_json::object();
    for (const auto& [name, ts] : groups) {
        auto arr = nlohmann::json::array();
        for (const auto& t : ts) arr.push_back(to_string(t));
        g[name] = arr;
    }
    j["groups"] = g;
    return j.dump(2) + "\n";
}

}  // namespace trirep
