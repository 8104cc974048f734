// Linear codes over GF(p) and Q with an explicit basis.
//
// Coordinates are 0-based in the API; file formats and reports use the same
// indices.

#ifndef TRIREP_LINEAR_CODE_HPP
#define TRIREP_LINEAR_CODE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trirep/field.hpp"
#include "trirep/linalg.hpp"

namespace trirep {

struct EnumerationBudget {
    std::uint64_t max_codewords = 10'000'000;
};

class LinearCode {
public:
    /// Throws std::invalid_argument if the basis is dependent, has the wrong
    /// length, or mixes fields.
    LinearCode(FieldSpec field, std::size_t length, std::vector<Vector> basis);

    const FieldSpec& field() const { return field_; }
    std::size_t length() const { return length_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    /// Unique expansion in the basis, or nullopt if v is not a codeword.
    std::optional<Vector> coefficients(const Vector& v) const;
    bool contains(const Vector& v) const { return coefficients(v).has_value(); }

    /// Sum of alpha_i * basis_i.
    Vector combine(const Vector& alpha) const;

    /// Same row space (field, length and span all equal).
    bool same_code(const LinearCode& other) const;

private:
    FieldSpec field_;
    std::size_t length_;
    std::vector<Vector> basis_;
    std::shared_ptr<const SpanSolver> solver_;
};

struct Codeword {
    Vector coordinates;
    Vector coefficients;
};

std::size_t weight(const Vector& c);

/// Number of nonzero expansion coefficients.
std::size_t degree(const Vector& coefficients);
/// Degree of c with respect to the code's basis; throws if c is not in the code.
std::size_t degree(const Vector& c, const LinearCode& code);

/// Number of codewords p^d; throws BudgetExceeded past the budget and
/// std::invalid_argument over Q.
std::uint64_t codeword_count(const LinearCode& code, const EnumerationBudget& budget = {});

/// Visits every codeword in lexicographic order of the coefficient vector.
void for_each_codeword(const LinearCode& code, const EnumerationBudget& budget,
                       const std::function<void(const Codeword&)>& visit);

std::vector<Codeword> enumerate_codewords(const LinearCode& code, const EnumerationBudget& budget = {});

/// Deletes the coordinates in `removed` and re-extracts an independent basis.
LinearCode puncture(const LinearCode& code, const std::set<std::size_t>& removed);

/// Nonzero codewords whose support contains the support of no other nonzero
/// codeword except with equality.
std::vector<Codeword> minimal_codewords(const LinearCode& code, const EnumerationBudget& budget = {});

/// Support as a packed bitset; used for support-containment checks.
using Support = std::vector<std::uint64_t>;
Support support_of(const Vector& v);
bool support_subset(const Support& a, const Support& b);

/// Index sets of minimal supports among `supports` (nonzero entries only).
std::vector<bool> minimal_support_flags(const std::vector<Support>& supports);

/// Each codeword concatenated with itself; basis vectors are doubled in order.
LinearCode double_code(const LinearCode& code);

struct BasisCheck {
    bool representable = false;
    /// The basis actually usable by the construction (integer-scaled over Q).
    std::vector<Vector> witness;
    bool rescaled = false;
};

/// GF(p): always representable. Q: representable after integer scaling.
BasisCheck is_representable_basis(const std::vector<Vector>& basis, const FieldSpec& field);

/// Code file: `field <spec>`, `length <n>`, then one basis vector per line.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& code);

}  // namespace trirep

#endif
