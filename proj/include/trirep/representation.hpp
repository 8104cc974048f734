// Triangular representation of a linear code: the doubled code is realized as
// a punctured kernel of a balanced triangular configuration.

#ifndef TRIREP_REPRESENTATION_HPP
#define TRIREP_REPRESENTATION_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/gadgets.hpp"
#include "trirep/linear_code.hpp"

namespace trirep {

struct RepresentationBudget {
    std::size_t max_triangles = 1'000'000;
};

/// Delta_b together with its kernel generator.
struct RepresentationPart {
    Vector b;                              // doubled basis vector
    OrientedTriangularConfiguration complex;  // includes all of B^{2n}
    std::set<Triangle> own;                // T(Delta_b - B^{2n})
    std::vector<Triangle> picks;           // picks[j]: linked multisphere triangle, deleted (empty if b^j = 0)
    std::vector<std::uint64_t> multipliers;
    std::size_t min_class = 0;
    std::size_t steps_a = 0;
    std::size_t steps_b = 0;

    std::size_t surplus() const { return own.size(); }
};

/// Builds Delta_b for one doubled basis vector. `bn` is B^{n2}; labels of the
/// part use `prefix`. The returned part is unbalanced.
RepresentationPart build_delta_b(const Vector& b, const BnGadget& bn, const std::string& prefix);

/// Kernel generator of a single part scaled so that B_j carries b^j; throws
/// InvariantViolation if the part's kernel is not 1-dimensional or the
/// generator vanishes on an own triangle. Indexed by the part's triangles.
KernelBasis part_generator(const RepresentationPart& part, const std::vector<Triangle>& bn);

/// Hooks used by the balancing algorithm.
class BalanceTarget {
public:
    virtual ~BalanceTarget() = default;
    virtual std::size_t part_count() const = 0;
    virtual std::size_t surplus(std::size_t i) const = 0;
    virtual void step_a(std::size_t i) = 0;
    /// False when part i has no degree-2 edge between two own triangles.
    virtual bool can_step_b(std::size_t i) const = 0;
    virtual void step_b(std::size_t i) = 0;
};

struct BalanceStep {
    std::size_t part;
    char kind;  // 'A' or 'B'
};

struct BalanceResult {
    std::size_t e = 0;
    std::vector<BalanceStep> steps;
};

/// Equalizes all surpluses with steps A (+6) and B (+4), then applies A to
/// every part until the common value exceeds `threshold`.
BalanceResult balance(BalanceTarget& target, std::size_t threshold);

struct Representation {
    LinearCode code;      // C as given
    LinearCode working;   // same code; integer basis over Q
    bool rescaled = false;
    LinearCode doubled;   // C^2 with the doubled working basis
    std::size_t n = 0;
    TriangularConfiguration delta;
    std::vector<Triangle> triangles;  // canonical column order
    std::vector<Triangle> mu;         // mu[j] = B_j, j < 2n
    std::set<Triangle> S;
    std::size_t e = 0;
    std::vector<RepresentationPart> parts;
    std::vector<Vector> generators;   // per basis vector, indexed like `triangles`
    std::vector<BalanceStep> balance_steps;

    std::size_t column(const Triangle& t) const;
};

Representation build_representation(const LinearCode& code, const RepresentationBudget& budget = {});

/// Sum of alpha_b <Delta_b> for c in C^2 (length 2n); throws if c is not in C^2.
Vector map_f(const Representation& rep, const Vector& c);

/// Inverse of map_f; throws InvariantViolation if v is not a combination of
/// the part generators.
Vector inverse_f(const Representation& rep, const Vector& v);

/// (c, c) for a codeword c of C.
Vector double_word(const Vector& c);

/// ker Delta punctured along S, as a code of length n.
LinearCode punctured_kernel(const Representation& rep);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MinimalityReport {
    bool skipped = false;  // infinite code
    std::size_t codewords = 0;
    std::size_t minimal = 0;
    std::size_t forward_violations = 0;  // c minimal, f(c) not
    std::size_t reverse_violations = 0;  // f(c) minimal, c not
};

/// Brute-force comparison of minimality in C^2 and in ker Delta over all codewords.
MinimalityReport verify_minimal_preservation(const Representation& rep, const EnumerationBudget& budget = {});

/// Full invariant suite. With `enumerate` the weight, band, round-trip and
/// minimality checks run over all codewords (sampled coefficients over Q).
std::vector<CheckResult> verify_representation(const Representation& rep, const EnumerationBudget& budget = {},
                                               bool enumerate = true);

/// Metadata JSON: n, dim, e, S, mu and per-part counts.
std::string representation_metadata_json(const Representation& rep);

}  // namespace trirep

#endif
