#include "trirep/enumerator.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trirep/errors.hpp"
#include "trirep/representation.hpp"

namespace trirep {

LaurentPolynomial::LaurentPolynomial(std::size_t vars) : vars_(vars) {
    if (vars == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c, std::size_t vars) {
    LaurentPolynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponents& exps, std::int64_t c) {
    LaurentPolynomial p(exps.size());
    p.add_term(exps, c);
    return p;
}

std::int64_t LaurentPolynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(const Exponents& exps, std::int64_t c) {
    if (exps.size() != vars_) throw std::invalid_argument("exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("adding polynomials in different variables");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("multiplying polynomials in different variables");
    LaurentPolynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            LaurentPolynomial::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::int64_t LaurentPolynomial::total() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::vector<std::int64_t>& powers) const {
    if (powers.size() != vars_) throw std::invalid_argument("substitution needs one power per variable");
    LaurentPolynomial out(1);
    for (const auto& [e, c] : terms_) {
        std::int64_t x = 0;
        for (std::size_t i = 0; i < vars_; ++i) x += e[i] * powers[i];
        out.add_term({x}, c);
    }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_ == 1 ? "x" : "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (first) out << (c < 0 ? "-" : "");
        else out << (c < 0 ? " - " : " + ");
        if (mono.empty()) out << mag;
        else if (mag == 1) out << mono;
        else out << mag << (vars_ == 1 ? "" : "*") << mono;
        first = false;
    }
    return out.str();
}

std::string to_json(const LaurentPolynomial& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.vars();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", c}});
    j["terms"] = terms;
    return j.dump() + "\n";
}

LaurentPolynomial polynomial_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    try {
        LaurentPolynomial p(j.at("vars").get<std::size_t>());
        for (const auto& t : j.at("terms")) {
            p.add_term(t.at("exps").get<LaurentPolynomial::Exponents>(), t.at("coeff").get<std::int64_t>());
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
}

void VariableAssignment::validate(std::size_t length) const {
    if (vars == 0) throw std::invalid_argument("assignment needs at least one variable");
    if (var_of.size() != length)
        throw std::invalid_argument("assignment covers " + std::to_string(var_of.size()) + " of " +
                                    std::to_string(length) + " coordinates");
    for (auto v : var_of) {
        if (v >= vars) throw std::invalid_argument("assignment uses variable " + std::to_string(v + 1) +
                                                   " of " + std::to_string(vars));
    }
}

LaurentPolynomial weight_enumerator(const LinearCode& code, const EnumerationBudget& budget) {
    LaurentPolynomial p(1);
    for_each_codeword(code, budget, [&](const Codeword& c) {
        p.add_term({static_cast<std::int64_t>(weight(c.coordinates))}, 1);
    });
    return p;
}

LaurentPolynomial kernel_weight_enumerator(const KernelBasis& kb, const EnumerationBudget& budget) {
    return weight_enumerator(LinearCode(kb.field, kb.triangles.size(), kb.vectors), budget);
}

LaurentPolynomial extended_weight_enumerator(const LinearCode& code, std::size_t k, const EnumerationBudget& budget) {
    LaurentPolynomial p(1);
    for_each_codeword(code, budget, [&](const Codeword& c) {
        if (degree(c.coefficients) == k) p.add_term({static_cast<std::int64_t>(weight(c.coordinates))}, 1);
    });
    return p;
}

LaurentPolynomial multivariate_weight_enumerator(const LinearCode& code, const VariableAssignment& lambda,
                                                 const EnumerationBudget& budget) {
    lambda.validate(code.length());
    LaurentPolynomial p(lambda.vars);
    LaurentPolynomial::Exponents e(lambda.vars);
    for_each_codeword(code, budget, [&](const Codeword& c) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t j = 0; j < c.coordinates.size(); ++j) {
            if (!c.coordinates[j].is_zero()) ++e[lambda.var_of[j]];
        }
        p.add_term(e, 1);
    });
    return p;
}

LaurentPolynomial recover_code_enumerator(const LaurentPolynomial& kernel_poly, std::size_t e, bool halve) {
    if (e == 0) throw std::invalid_argument("recovery needs e > 0");
    if (kernel_poly.vars() != 1) throw std::invalid_argument("recover_code_enumerator is univariate");
    LaurentPolynomial out(1);
    const auto E = static_cast<std::int64_t>(e);
    for (const auto& [x, c] : kernel_poly.terms()) {
        if (x[0] < 0) throw std::invalid_argument("kernel enumerator has a negative exponent");
        std::int64_t r = x[0] % E;
        if (halve) {
            if (r % 2 != 0)
                throw InvariantViolation("odd reduced exponent " + std::to_string(r) + " (from x^" +
                                         std::to_string(x[0]) + ")");
            r /= 2;
        }
        out.add_term({r}, c);
    }
    return out;
}

LaurentPolynomial recover_multivariate_enumerator(const LaurentPolynomial& kernel_poly, std::size_t e,
                                                  std::size_t reserved) {
    if (e == 0) throw std::invalid_argument("recovery needs e > 0");
    if (reserved >= kernel_poly.vars()) throw std::invalid_argument("reserved variable out of range");
    LaurentPolynomial out(kernel_poly.vars());
    const auto E = static_cast<std::int64_t>(e);
    for (const auto& [x, c] : kernel_poly.terms()) {
        LaurentPolynomial::Exponents y = x;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] < 0) throw std::invalid_argument("kernel enumerator has a negative exponent");
            if (j == reserved) y[j] %= E;
            if (y[j] % 2 != 0)
                throw InvariantViolation("odd exponent " + std::to_string(y[j]) + " of x" + std::to_string(j + 1));
            y[j] /= 2;
        }
        out.add_term(y, c);
    }
    return out;
}

VariableAssignment lift_assignment(const Representation& rep, const VariableAssignment& lambda) {
    lambda.validate(rep.n);
    VariableAssignment out{lambda.vars, std::vector<std::size_t>(rep.triangles.size(), lambda.vars - 1)};
    for (std::size_t j = 0; j < rep.n; ++j) {
        out.var_of[rep.column(rep.mu[j])] = lambda.var_of[j];
        out.var_of[rep.column(rep.mu[j + rep.n])] = lambda.var_of[j];
    }
    return out;
}

LinearCode kernel_code(const Representation& rep) {
    const auto kb = kernel(rep.delta, rep.code.field());
    return LinearCode(kb.field, kb.triangles.size(), kb.vectors);
}

LinearCode generator_code(const Representation& rep) {
    return LinearCode(rep.code.field(), rep.triangles.size(), rep.generators);
}

std::vector<CheckResult> verify_enumerators(const Representation& rep, const EnumerationBudget& budget,
                                            const VariableAssignment* lambda) {
    std::vector<CheckResult> out;
    const auto wc = weight_enumerator(rep.code, budget);
    const auto kernel_poly = kernel_weight_enumerator(kernel(rep.delta, rep.code.field()), budget);
    const auto recovered = recover_code_enumerator(kernel_poly, rep.e, true);
    out.push_back({"enumerator-recovery", recovered == wc, "W_C = " + wc.to_string()});

    std::int64_t expected = 1;
    for (std::size_t i = 0; i < rep.code.dimension(); ++i) expected *= rep.code.field().modulus();
    out.push_back({"total-count", wc.total() == expected && kernel_poly.total() == expected,
                   "W(1) = " + std::to_string(wc.total())});

    LaurentPolynomial doubled_exps(1);
    for (const auto& [x, c] : wc.terms()) doubled_exps.add_term({2 * x[0]}, c);
    out.push_back({"doubling-law", weight_enumerator(rep.doubled, budget) == doubled_exps, "W_{C^2}(x) = W_C(x^2)"});

    bool shift = true;
    const auto gens = generator_code(rep);
    for (std::size_t k = 0; k <= rep.code.dimension(); ++k) {
        const auto shifted = extended_weight_enumerator(rep.doubled, k, budget) *
                             LaurentPolynomial::monomial({static_cast<std::int64_t>(k * rep.e)});
        shift = shift && extended_weight_enumerator(gens, k, budget) == shifted;
    }
    out.push_back({"shift-law", shift, "W^k_ker = W^k_{C^2} x^{k e} for every k"});

    if (lambda) {
        const auto direct = multivariate_weight_enumerator(rep.code, *lambda, budget);
        const auto lifted = lift_assignment(rep, *lambda);
        const auto kpoly = multivariate_weight_enumerator(kernel_code(rep), lifted, budget);
        const auto rec = recover_multivariate_enumerator(kpoly, rep.e, lambda->vars - 1);
        out.push_back({"multivariate-recovery", rec == direct, "W^lambda_C = " + direct.to_string()});
    }
    return out;
}

}  // namespace trirep
