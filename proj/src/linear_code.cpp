#include "trirep/linear_code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trirep/errors.hpp"

namespace trirep {

LinearCode::LinearCode(FieldSpec field, std::size_t length, std::vector<Vector> basis)
    : field_(field), length_(length), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
        if (b.size() != length_)
            throw std::invalid_argument("basis vector of length " + std::to_string(b.size()) +
                                        " in a code of length " + std::to_string(length_));
        for (const auto& x : b) {
            if (!(x.field() == field_))
                throw std::invalid_argument("basis entry " + x.to_string() + " not over " +
                                            field_.to_string());
        }
    }
    if (basis_.size() > length_) throw std::invalid_argument("more basis vectors than coordinates");
    solver_ = std::make_shared<const SpanSolver>(basis_, field_);  // throws on dependence
}

std::optional<Vector> LinearCode::coefficients(const Vector& v) const {
    if (v.size() != length_) return std::nullopt;
    if (basis_.empty()) {
        for (const auto& x : v) {
            if (!x.is_zero()) return std::nullopt;
        }
        return Vector{};
    }
    return solver_->coefficients(v);
}

Vector LinearCode::combine(const Vector& alpha) const {
    if (alpha.size() != basis_.size()) throw std::invalid_argument("coefficient count mismatch");
    Vector out(length_, field_.zero());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (alpha[i].is_zero()) continue;
        for (std::size_t j = 0; j < length_; ++j) {
            if (!basis_[i][j].is_zero()) out[j] += alpha[i] * basis_[i][j];
        }
    }
    return out;
}

bool LinearCode::same_code(const LinearCode& other) const {
    if (!(field_ == other.field_) || length_ != other.length_ || dimension() != other.dimension())
        return false;
    for (const auto& b : other.basis_) {
        if (!contains(b)) return false;
    }
    return true;
}

std::size_t weight(const Vector& c) {
    std::size_t w = 0;
    for (const auto& x : c) w += x.is_zero() ? 0 : 1;
    return w;
}

std::size_t degree(const Vector& coefficients) { return weight(coefficients); }

std::size_t degree(const Vector& c, const LinearCode& code) {
    auto alpha = code.coefficients(c);
    if (!alpha) throw std::invalid_argument("degree: vector is not in the span of the basis");
    return degree(*alpha);
}

std::uint64_t codeword_count(const LinearCode& code, const EnumerationBudget& budget) {
    if (!code.field().is_prime_field())
        throw std::invalid_argument("cannot enumerate a code over Q (infinitely many codewords)");
    std::uint64_t count = 1;
    const std::uint64_t p = code.field().modulus();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (count > budget.max_codewords / p)
            throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" +
                                 std::to_string(code.dimension()) + " codewords exceeds the budget of " +
                                 std::to_string(budget.max_codewords));
        count *= p;
    }
    if (count > budget.max_codewords)
        throw BudgetExceeded("enumeration exceeds the budget of " + std::to_string(budget.max_codewords));
    return count;
}

void for_each_codeword(const LinearCode& code, const EnumerationBudget& budget,
                       const std::function<void(const Codeword&)>& visit) {
    const std::uint64_t total = codeword_count(code, budget);
    const FieldSpec& f = code.field();
    const std::size_t d = code.dimension();
    const auto p = static_cast<std::int64_t>(f.modulus());
    Codeword cw{Vector(code.length(), f.zero()), Vector(d, f.zero())};
    std::vector<std::int64_t> digits(d, 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        visit(cw);
        // Odometer on the coefficient vector, least significant digit last.
        for (std::size_t pos = d; pos-- > 0;) {
            const auto& b = code.basis()[pos];
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (!b[j].is_zero()) cw.coordinates[j] += b[j];
            }
            if (++digits[pos] < p) {
                cw.coefficients[pos] = f.from_int(digits[pos]);
                break;
            }
            digits[pos] = 0;
            cw.coefficients[pos] = f.zero();
        }
    }
}

std::vector<Codeword> enumerate_codewords(const LinearCode& code, const EnumerationBudget& budget) {
    std::vector<Codeword> out;
    out.reserve(static_cast<std::size_t>(codeword_count(code, budget)));
    for_each_codeword(code, budget, [&](const Codeword& c) { out.push_back(c); });
    return out;
}

LinearCode puncture(const LinearCode& code, const std::set<std::size_t>& removed) {
    for (auto i : removed) {
        if (i >= code.length())
            throw std::invalid_argument("puncture index " + std::to_string(i) + " out of range for length " +
                                        std::to_string(code.length()));
    }
    std::vector<Vector> rows;
    rows.reserve(code.dimension());
    for (const auto& b : code.basis()) {
        Vector v;
        v.reserve(code.length() - removed.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!removed.count(j)) v.push_back(b[j]);
        }
        rows.push_back(std::move(v));
    }
    const std::size_t n = code.length() - removed.size();
    auto kept = independent_rows(rows, code.field());
    return LinearCode(code.field(), n, std::move(kept));
}

Support support_of(const Vector& v) {
    Support s((v.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) s[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return s;
}

bool support_subset(const Support& a, const Support& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & ~b[i]) return false;
    }
    return true;
}

std::vector<bool> minimal_support_flags(const std::vector<Support>& supports) {
    auto empty = [](const Support& s) {
        for (auto w : s) {
            if (w) return false;
        }
        return true;
    };
    std::vector<bool> flags(supports.size(), false);
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (empty(supports[i])) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < supports.size() && minimal; ++j) {
            if (i == j || empty(supports[j])) continue;
            if (support_subset(supports[j], supports[i]) && supports[j] != supports[i]) minimal = false;
        }
        flags[i] = minimal;
    }
    return flags;
}

std::vector<Codeword> minimal_codewords(const LinearCode& code, const EnumerationBudget& budget) {
    auto all = enumerate_codewords(code, budget);
    std::vector<Support> supports;
    supports.reserve(all.size());
    for (const auto& c : all) supports.push_back(support_of(c.coordinates));
    const auto flags = minimal_support_flags(supports);
    std::vector<Codeword> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (flags[i]) out.push_back(std::move(all[i]));
    }
    return out;
}

LinearCode double_code(const LinearCode& code) {
    std::vector<Vector> basis;
    basis.reserve(code.dimension());
    for (const auto& b : code.basis()) {
        Vector v = b;
        v.insert(v.end(), b.begin(), b.end());
        basis.push_back(std::move(v));
    }
    return LinearCode(code.field(), 2 * code.length(), std::move(basis));
}

BasisCheck is_representable_basis(const std::vector<Vector>& basis, const FieldSpec& field) {
    BasisCheck out;
    out.representable = true;
    if (field.is_prime_field()) {
        out.witness = basis;
        return out;
    }
    out.witness = integerize_basis(basis);
    out.rescaled = out.witness != basis;
    return out;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

LinearCode read_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<FieldSpec> field;
    std::optional<std::size_t> length;
    std::vector<Vector> basis;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        try {
            if (!field) {
                if (toks[0] != "field" || toks.size() != 2) throw ParseError(lineno, "expected 'field <gf:p|q>'");
                field = FieldSpec::parse(toks[1]);
            } else if (!length) {
                if (toks[0] != "length" || toks.size() != 2) throw ParseError(lineno, "expected 'length <n>'");
                std::size_t pos = 0;
                const long n = std::stol(toks[1], &pos);
                if (pos != toks[1].size() || n <= 0) throw ParseError(lineno, "length must be a positive integer");
                length = static_cast<std::size_t>(n);
            } else {
                if (toks.size() != *length)
                    throw ParseError(lineno, "expected " + std::to_string(*length) + " entries, got " +
                                                 std::to_string(toks.size()));
                Vector v;
                for (const auto& t : toks) v.push_back(field->element(t));
                basis.push_back(std::move(v));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!field) throw ParseError(lineno, "missing 'field' line");
    if (!length) throw ParseError(lineno, "missing 'length' line");
    try {
        return LinearCode(*field, *length, std::move(basis));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
    return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& code) {
    out << "field " << code.field().to_string() << "\n";
    out << "length " << code.length() << "\n";
    for (const auto& b : code.basis()) {
        for (std::size_t j = 0; j < b.size(); ++j) out << (j ? " " : "") << b[j].to_string();
        out << "\n";
    }
}

}  // namespace trirep
