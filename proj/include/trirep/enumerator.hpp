// Weight enumerators of finite codes and kernels, and the mod-e recovery maps.

#ifndef TRIREP_ENUMERATOR_HPP
#define TRIREP_ENUMERATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/linear_code.hpp"
#include "trirep/representation.hpp"

namespace trirep {

/// Sparse polynomial with integer (possibly negative) exponents and nonzero
/// integer coefficients.
class LaurentPolynomial {
public:
    using Exponents = std::vector<std::int64_t>;

    explicit LaurentPolynomial(std::size_t vars = 1);
    static LaurentPolynomial constant(std::int64_t c, std::size_t vars = 1);
    static LaurentPolynomial monomial(const Exponents& exps, std::int64_t c = 1);

    std::size_t vars() const { return vars_; }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const Exponents& exps) const;

    void add_term(const Exponents& exps, std::int64_t c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// Sum of coefficients (value at x = 1).
    std::int64_t total() const;

    /// Univariate polynomial obtained by x_j -> x^{powers[j]}.
    LaurentPolynomial substitute(const std::vector<std::int64_t>& powers) const;

    /// `3x^3 + 18x + 6` (univariate) or `x1^2*x2 + 1`, highest exponents first.
    std::string to_string() const;

private:
    std::size_t vars_;
    std::map<Exponents, std::int64_t> terms_;
};

/// `{"vars": k, "terms": [{"exps": [..], "coeff": N}, ...]}`, terms sorted by exponent vector.
std::string to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const std::string& text);

/// Maps each coordinate to a variable index in [0, vars).
struct VariableAssignment {
    std::size_t vars = 1;
    std::vector<std::size_t> var_of;

    /// Throws std::invalid_argument unless total on `length` coordinates and within range.
    void validate(std::size_t length) const;
};

LaurentPolynomial weight_enumerator(const LinearCode& code, const EnumerationBudget& budget = {});

/// Enumerator of the span of a kernel basis (1 for the zero kernel).
LaurentPolynomial kernel_weight_enumerator(const KernelBasis& kb, const EnumerationBudget& budget = {});

/// Sum over codewords of degree k with respect to the code's basis.
LaurentPolynomial extended_weight_enumerator(const LinearCode& code, std::size_t k,
                                             const EnumerationBudget& budget = {});

LaurentPolynomial multivariate_weight_enumerator(const LinearCode& code, const VariableAssignment& lambda,
                                                 const EnumerationBudget& budget = {});

/// a_i x^i -> a_i x^{(i mod e)/2} with halve, a_i x^{i mod e} without.
/// Throws InvariantViolation on an odd reduced exponent when halving.
LaurentPolynomial recover_code_enumerator(const LaurentPolynomial& kernel_poly, std::size_t e, bool halve);

/// Halves every exponent and reduces the `reserved` one mod e first.
LaurentPolynomial recover_multivariate_enumerator(const LaurentPolynomial& kernel_poly, std::size_t e,
                                                  std::size_t reserved);

/// Assignment on the representation's triangles: mu(j) and mu(j+n) get
/// lambda(j), every other triangle the last variable.
VariableAssignment lift_assignment(const Representation& rep, const VariableAssignment& lambda);

/// The kernel of the representation as a code indexed by its triangles.
LinearCode kernel_code(const Representation& rep);

/// The span of the part generators, so degrees count parts.
LinearCode generator_code(const Representation& rep);

/// Recovery, doubling, shift and count laws of a representation against
/// brute-force enumerators of the code; multivariate recovery when lambda is given.
std::vector<CheckResult> verify_enumerators(const Representation& rep, const EnumerationBudget& budget = {},
                                            const VariableAssignment* lambda = nullptr);

}  // namespace trirep

#endif
