#include "trirep/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "trirep/errors.hpp"

namespace trirep {

RepresentationPart build_delta_b(const Vector& b, const BnGadget& bn, const std::string& prefix) {
    const std::size_t n2 = bn.triangles.size();
    if (b.size() != n2) throw std::invalid_argument("build_delta_b: vector length differs from B^n");
    std::vector<std::size_t> support;
    Vector values;
    for (std::size_t j = 0; j < n2; ++j) {
        if (!b[j].is_zero()) {
            support.push_back(j);
            values.push_back(b[j]);
        }
    }
    if (support.empty()) throw std::invalid_argument("build_delta_b: zero vector");
    const auto dec = cyclic_decompose(values);

    std::vector<std::uint64_t> distinct = dec.multipliers;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto sphere_of = [&](std::uint64_t mult) {
        return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), mult) - distinct.begin());
    };
    std::map<std::pair<std::size_t, int>, std::size_t> need;
    for (std::size_t k = 0; k < support.size(); ++k) ++need[{sphere_of(dec.multipliers[k]), dec.signs[k]}];
    std::size_t min_class = 1;
    for (const auto& [key, count] : need) min_class = std::max(min_class, count);

    for (std::size_t M = min_class; M <= min_class + n2 + 8; ++M) {
        auto ms = build_multisphere(distinct, M, dec.generator, prefix + "m");
        std::vector<Triangle> chosen;
        std::set<Triangle> used;
        bool ok = true;
        for (std::size_t k = 0; k < support.size() && ok; ++k) {
            const std::size_t i = sphere_of(dec.multipliers[k]);
            const auto& pool = dec.signs[k] > 0 ? ms.free_plus[i] : ms.free_minus[i];
            ok = false;
            for (const auto& t : pool) {
                if (used.count(t)) continue;
                if (std::any_of(chosen.begin(), chosen.end(), [&](const Triangle& u) { return shares_edge(t, u); }))
                    continue;
                chosen.push_back(t);
                used.insert(t);
                ok = true;
                break;
            }
        }
        if (!ok) continue;

        RepresentationPart part;
        part.b = b;
        part.multipliers = distinct;
        part.min_class = M;
        part.complex = std::move(ms.complex);
        for (const auto& t : bn.triangles) part.complex.add_triangle(t, Sign::plus);
        part.picks.assign(n2, Triangle{});
        for (std::size_t k = 0; k < support.size(); ++k) {
            link(part.complex, chosen[k], bn.triangles[support[k]]);
            part.picks[support[k]] = chosen[k];
        }
        for (const auto& t : chosen) part.complex.remove_triangle(t);
        for (const auto& t : part.complex.complex.triangles()) {
            if (!bn.complex.has_triangle(t)) part.own.insert(t);
        }
        return part;
    }
    throw std::invalid_argument("build_delta_b: no edge-disjoint choice of linked triangles");
}

KernelBasis part_generator(const RepresentationPart& part, const std::vector<Triangle>& bn) {
    const FieldSpec field = part.b.at(0).field();
    auto kb = kernel(part.complex.complex, field);
    if (kb.dimension() != 1)
        throw InvariantViolation("part kernel has dimension " + std::to_string(kb.dimension()));
    auto& v = kb.vectors[0];
    std::size_t j0 = 0;
    while (part.b[j0].is_zero()) ++j0;
    const FieldElement ref = v[kb.index_of(bn[j0])];
    if (ref.is_zero()) throw InvariantViolation("part generator vanishes on a linked coordinate triangle");
    const FieldElement scale = part.b[j0] / ref;
    for (auto& x : v) x *= scale;
    for (std::size_t j = 0; j < bn.size(); ++j) {
        if (!(v[kb.index_of(bn[j])] == part.b[j]))
            throw InvariantViolation("part generator differs from b at coordinate " + std::to_string(j));
    }
    for (const auto& t : part.own) {
        if (v[kb.index_of(t)].is_zero()) throw InvariantViolation("part generator vanishes on " + to_string(t));
    }
    return kb;
}

BalanceResult balance(BalanceTarget& target, std::size_t threshold) {
    BalanceResult r;
    const std::size_t count = target.part_count();
    if (count == 0) return r;
    auto A = [&](std::size_t i) {
        target.step_a(i);
        r.steps.push_back({i, 'A'});
    };
    auto B = [&](std::size_t i) {
        target.step_b(i);
        r.steps.push_back({i, 'B'});
    };

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return target.surplus(x) > target.surplus(y); });

    std::vector<std::size_t> I{order[0]};
    for (std::size_t idx = 1; idx < count; ++idx) {
        const std::size_t i = order[idx];
        // A part with no usable degree-2 pair gets one from a step A; applying
        // it to all of I and i keeps the gap.
        auto a_everywhere = [&] {
            for (auto x : I) A(x);
            A(i);
        };
        for (;;) {
            const std::size_t k = target.surplus(I.front());
            const std::size_t ki = target.surplus(i);
            if (ki > k) throw InvariantViolation("balance: part exceeds the processed parts");
            const std::size_t gap = k - ki;
            if (gap == 0) break;
            if (gap >= 6) {
                A(i);
            } else if (gap % 2 != 0) {
                throw InvariantViolation("balance: odd surplus gap " + std::to_string(gap));
            } else if (gap == 4) {
                if (target.can_step_b(i)) B(i);
                else a_everywhere();
            } else {  // gap == 2
                if (std::all_of(I.begin(), I.end(), [&](std::size_t x) { return target.can_step_b(x); })) {
                    for (auto x : I) B(x);
                    A(i);
                } else {
                    a_everywhere();
                }
            }
        }
        I.push_back(i);
    }
    while (target.surplus(order[0]) <= threshold) {
        for (std::size_t i = 0; i < count; ++i) A(i);
    }
    r.e = target.surplus(0);
    for (std::size_t i = 1; i < count; ++i) {
        if (target.surplus(i) != r.e) throw InvariantViolation("balance: parts differ after balancing");
    }
    return r;
}

namespace {

class PartBalancer : public BalanceTarget {
public:
    PartBalancer(std::vector<RepresentationPart>& parts, std::size_t base_triangles, std::size_t max_triangles)
        : parts_(parts), base_(base_triangles), max_(max_triangles) {
        for (std::size_t i = 0; i < parts.size(); ++i) labels_.emplace_back("p" + std::to_string(i) + "x");
    }

    std::size_t part_count() const override { return parts_.size(); }
    std::size_t surplus(std::size_t i) const override { return parts_[i].surplus(); }

    void step_a(std::size_t i) override {
        auto& p = parts_[i];
        const Triangle t = *p.own.begin();
        charge(6);
        auto patch = subdivide_A(p.complex, t, labels_[i]);
        p.own.erase(t);
        p.own.insert(patch.begin(), patch.end());
        ++p.steps_a;
    }

    bool can_step_b(std::size_t i) const override { return pair(i).has_value(); }

    void step_b(std::size_t i) override {
        auto& p = parts_[i];
        auto pr = pair(i);
        if (!pr) throw std::logic_error("step_b without a degree-2 pair");
        charge(4);
        auto patch = subdivide_B(p.complex, pr->first, pr->second, labels_[i]);
        p.own.erase(pr->first);
        p.own.erase(pr->second);
        p.own.insert(patch.begin(), patch.end());
        ++p.steps_b;
    }

private:
    std::optional<std::pair<Triangle, Triangle>> pair(std::size_t i) const {
        const auto& own = parts_[i].own;
        return find_degree2_pair(parts_[i].complex.complex, [&](const Triangle& t) { return own.count(t) > 0; });
    }

    void charge(std::size_t extra) {
        std::size_t total = base_ + extra;
        for (const auto& p : parts_) total += p.own.size();
        if (total > max_)
            throw BudgetExceeded("representation would exceed the budget of " + std::to_string(max_) +
                                 " triangles");
    }

    std::vector<RepresentationPart>& parts_;
    std::vector<LabelFactory> labels_;
    std::size_t base_;
    std::size_t max_;
};

}  // namespace

std::size_t Representation::column(const Triangle& t) const {
    auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it == triangles.end() || *it != t) throw std::invalid_argument("triangle not in the representation: " + to_string(t));
    return static_cast<std::size_t>(it - triangles.begin());
}

Representation build_representation(const LinearCode& code, const RepresentationBudget& budget) {
    const FieldSpec field = code.field();
    const auto check = is_representable_basis(code.basis(), field);
    if (!check.representable) throw std::invalid_argument("basis is not representable");
    LinearCode working(field, code.length(), check.witness);
    LinearCode doubled = double_code(working);
    const std::size_t n = code.length();
    const std::size_t n2 = 2 * n;
    const auto bn = build_Bn(n2, "B");

    Representation rep{code, working, check.rescaled, doubled, n, {}, {}, bn.triangles, {}, 0, {}, {}, {}};

    std::size_t total = n2;
    for (std::size_t i = 0; i < doubled.dimension(); ++i) {
        rep.parts.push_back(build_delta_b(doubled.basis()[i], bn, "p" + std::to_string(i)));
        total += rep.parts.back().own.size();
        if (total > budget.max_triangles)
            throw BudgetExceeded("representation would exceed the budget of " +
                                 std::to_string(budget.max_triangles) + " triangles");
    }

    if (rep.parts.empty()) {
        rep.e = n2 + 1;
    } else {
        PartBalancer balancer(rep.parts, n2, budget.max_triangles);
        auto result = balance(balancer, n2);
        rep.e = result.e;
        rep.balance_steps = std::move(result.steps);
    }

    rep.delta = bn.complex;
    for (const auto& p : rep.parts) rep.delta = union_of(rep.delta, p.complex.complex);
    rep.triangles.assign(rep.delta.triangles().begin(), rep.delta.triangles().end());

    for (const auto& p : rep.parts) {
        const auto kb = part_generator(p, bn.triangles);
        Vector g(rep.triangles.size(), field.zero());
        for (std::size_t k = 0; k < kb.triangles.size(); ++k) g[rep.column(kb.triangles[k])] = kb.vectors[0][k];
        rep.generators.push_back(std::move(g));
    }

    for (const auto& p : rep.parts) rep.S.insert(p.own.begin(), p.own.end());
    for (std::size_t j = n; j < n2; ++j) rep.S.insert(rep.mu[j]);

    const auto kb = kernel(rep.delta, field);
    if (kb.dimension() != code.dimension())
        throw InvariantViolation("dim ker Delta = " + std::to_string(kb.dimension()) + " but dim C = " +
                                 std::to_string(code.dimension()));
    return rep;
}

Vector double_word(const Vector& c) {
    Vector out = c;
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

Vector map_f(const Representation& rep, const Vector& c) {
    auto alpha = rep.doubled.coefficients(c);
    if (!alpha) throw std::invalid_argument("map_f: vector is not a codeword of the double code");
    Vector out(rep.triangles.size(), rep.code.field().zero());
    for (std::size_t i = 0; i < alpha->size(); ++i) {
        if ((*alpha)[i].is_zero()) continue;
        const auto& g = rep.generators[i];
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!g[k].is_zero()) out[k] += (*alpha)[i] * g[k];
        }
    }
    return out;
}

Vector inverse_f(const Representation& rep, const Vector& v) {
    if (v.size() != rep.triangles.size()) throw std::invalid_argument("inverse_f: vector length mismatch");
    const FieldSpec field = rep.code.field();
    Vector gamma;
    Vector residual = v;
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        const std::size_t col = rep.column(*rep.parts[i].own.begin());
        const auto& g = rep.generators[i];
        gamma.push_back(v[col] / g[col]);
        if (gamma.back().is_zero()) continue;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!g[k].is_zero()) residual[k] -= gamma.back() * g[k];
        }
    }
    for (std::size_t k = 0; k < residual.size(); ++k) {
        if (!residual[k].is_zero())
            throw InvariantViolation("inverse_f: residual nonzero at " + to_string(rep.triangles[k]));
    }
    if (rep.parts.empty()) return Vector(2 * rep.n, field.zero());
    return rep.doubled.combine(gamma);
}

LinearCode punctured_kernel(const Representation& rep) {
    const FieldSpec field = rep.code.field();
    const auto kb = kernel(rep.delta, field);
    std::vector<Vector> rows;
    for (const auto& v : kb.vectors) {
        Vector r;
        for (std::size_t j = 0; j < rep.n; ++j) r.push_back(v[kb.index_of(rep.mu[j])]);
        rows.push_back(std::move(r));
    }
    return LinearCode(field, rep.n, independent_rows(rows, field));
}

namespace {

// Visits (c, f(c)) for every codeword of C^2 over a finite field, or for the
// coefficient vectors with entries in {-1, 0, 1, 2} over Q.
void for_each_pair(const Representation& rep, const EnumerationBudget& budget,
                   const std::function<void(const Vector& c, const Vector& alpha, const Vector& fc)>& visit) {
    const FieldSpec field = rep.code.field();
    if (field.is_prime_field()) {
        for_each_codeword(rep.doubled, budget, [&](const Codeword& cw) {
            visit(cw.coordinates, cw.coefficients, map_f(rep, cw.coordinates));
        });
        return;
    }
    const std::size_t d = rep.doubled.dimension();
    std::vector<int> digits(d, -1);
    for (;;) {
        Vector alpha;
        for (auto x : digits) alpha.push_back(field.from_int(x));
        const Vector c = rep.doubled.combine(alpha);
        visit(c, alpha, map_f(rep, c));
        std::size_t pos = d;
        while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = -1;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
}

CheckResult make_check(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

}  // namespace

MinimalityReport verify_minimal_preservation(const Representation& rep, const EnumerationBudget& budget) {
    MinimalityReport r;
    if (!rep.code.field().is_prime_field()) {
        r.skipped = true;
        return r;
    }
    std::vector<Support> code_supports, kernel_supports;
    for_each_pair(rep, budget, [&](const Vector& c, const Vector&, const Vector& fc) {
        code_supports.push_back(support_of(c));
        kernel_supports.push_back(support_of(fc));
    });
    const auto a = minimal_support_flags(code_supports);
    const auto b = minimal_support_flags(kernel_supports);
    r.codewords = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i]) ++r.minimal;
        if (a[i] && !b[i]) ++r.forward_violations;
        if (!a[i] && b[i]) ++r.reverse_violations;
    }
    return r;
}

std::vector<CheckResult> verify_representation(const Representation& rep, const EnumerationBudget& budget,
                                               bool enumerate) {
    std::vector<CheckResult> out;
    const FieldSpec field = rep.code.field();
    const std::size_t d = rep.code.dimension();

    const auto kb = kernel(rep.delta, field);
    out.push_back(make_check("kernel-dimension", kb.dimension() == d,
                             "dim ker = " + std::to_string(kb.dimension()) + ", dim C = " + std::to_string(d)));

    const auto pk = punctured_kernel(rep);
    out.push_back(make_check("punctured-kernel-is-code", pk.dimension() == d && pk.same_code(rep.code),
                             "punctured dimension " + std::to_string(pk.dimension())));

    bool mu_ok = true;
    for (const auto& b : rep.doubled.basis()) {
        const auto fb = map_f(rep, b);
        for (std::size_t j = 0; j < 2 * rep.n; ++j) mu_ok = mu_ok && fb[rep.column(rep.mu[j])] == b[j];
    }
    out.push_back(make_check("mu-projection", mu_ok, "f(b) at mu(j) equals b^j"));

    bool balanced = true;
    for (const auto& p : rep.parts) balanced = balanced && p.surplus() == rep.e;
    out.push_back(make_check("balanced", balanced, "e = " + std::to_string(rep.e)));
    out.push_back(make_check("e-exceeds-2n", rep.e > 2 * rep.n,
                             "e = " + std::to_string(rep.e) + ", 2n = " + std::to_string(2 * rep.n)));
    if (d > 0) {
        out.push_back(make_check("e-formula", rep.S.size() - rep.n == rep.e * d,
                                 "|S| = " + std::to_string(rep.S.size()) + ", n = " + std::to_string(rep.n)));
    }

    bool disjoint = true;
    std::set<Vertex> base_vertices;
    for (const auto& t : rep.mu) base_vertices.insert(t.begin(), t.end());
    std::map<Vertex, std::size_t> owner;
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        for (const auto& v : rep.parts[i].complex.complex.vertices()) {
            if (base_vertices.count(v)) continue;
            auto [it, inserted] = owner.emplace(v, i);
            if (!inserted && it->second != i) disjoint = false;
        }
    }
    out.push_back(make_check("parts-share-only-B", disjoint, std::to_string(rep.parts.size()) + " parts"));

    bool onto = true;
    for (const auto& v : kb.vectors) {
        try {
            onto = onto && map_f(rep, inverse_f(rep, v)) == v;
        } catch (const std::exception&) {
            onto = false;
        }
    }
    out.push_back(make_check("f-of-inverse", onto, "f(inverse_f(v)) = v on a kernel basis"));
    if (!enumerate) return out;

    bool weight_ok = true, band_ok = true, round_ok = true;
    std::size_t visited = 0;
    for_each_pair(rep, budget, [&](const Vector& c, const Vector& alpha, const Vector& fc) {
        ++visited;
        const std::size_t k = degree(alpha);
        const std::size_t w = weight(fc);
        weight_ok = weight_ok && w == weight(c) + k * rep.e;
        band_ok = band_ok && k * rep.e <= w && w <= k * rep.e + 2 * rep.n;
        round_ok = round_ok && inverse_f(rep, fc) == c;
    });
    const std::string scope = field.is_prime_field() ? " over all " : " over sampled ";
    out.push_back(make_check("weight-law", weight_ok, scope.substr(1) + std::to_string(visited) + " codewords"));
    out.push_back(make_check("band-law", band_ok, "k e <= w <= k e + 2n"));
    out.push_back(make_check("inverse-of-f", round_ok, "inverse_f(f(c)) = c"));

    const auto mr = verify_minimal_preservation(rep, budget);
    if (mr.skipped) {
        out.push_back(make_check("minimal-preservation", true, "skipped over Q"));
        out.push_back(make_check("minimal-reflection", true, "skipped over Q"));
    } else {
        out.push_back(make_check("minimal-preservation", mr.forward_violations == 0,
                                 std::to_string(mr.minimal) + " minimal codewords, " +
                                     std::to_string(mr.forward_violations) + " with f(c) not minimal"));
        out.push_back(make_check("minimal-reflection", mr.reverse_violations == 0,
                                 std::to_string(mr.reverse_violations) +
                                     " non-minimal codewords with f(c) minimal"));
    }
    return out;
}

std::string representation_metadata_json(const Representation& rep) {
    nlohmann::ordered_json j;
    j["field"] = rep.code.field().to_string();
    j["n"] = rep.n;
    j["dim"] = rep.code.dimension();
    j["e"] = rep.e;
    j["rescaled"] = rep.rescaled;
    j["triangles"] = rep.triangles.size();
    auto mu = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < rep.mu.size(); ++k) {
        mu.push_back({{"coordinate", k}, {"triangle", to_string(rep.mu[k])}});
    }
    j["mu"] = mu;
    auto S = nlohmann::json::array();
    for (const auto& t : rep.S) S.push_back(to_string(t));
    j["S"] = S;
    auto parts = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        const auto& p = rep.parts[i];
        auto b = nlohmann::json::array();
        for (const auto& x : p.b) b.push_back(x.to_string());
        parts.push_back({{"index", i},
                         {"basis_vector", b},
                         {"weight", weight(p.b)},
                         {"triangles", p.own.size() + weight(p.b)},
                         {"surplus", p.surplus()},
                         {"multipliers", p.multipliers},
                         {"min_class", p.min_class},
                         {"steps_a", p.steps_a},
                         {"steps_b", p.steps_b}});
    }
    j["parts"] = parts;
    return j.dump(2) + "\n";
}

}  // namespace trirep
