// Dense exact elimination for short lists of long vectors (code bases,
// kernel bases). The sparse incidence-matrix solver lives in complex.hpp.

#ifndef TRIREP_LINALG_HPP
#define TRIREP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "trirep/field.hpp"

namespace trirep {

/// Reduced row echelon form; pivots[i] is the leading column of rows[i].
struct RowEchelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

RowEchelon rref(std::vector<Vector> rows, const FieldSpec& field);

std::size_t rank(const std::vector<Vector>& rows, const FieldSpec& field);

/// Keeps the rows (in order) that are independent of the ones kept before.
std::vector<Vector> independent_rows(const std::vector<Vector>& rows, const FieldSpec& field);

/// Expresses vectors in a fixed independent family.
class SpanSolver {
public:
    SpanSolver(const std::vector<Vector>& basis, const FieldSpec& field);

    /// Coefficients alpha with sum alpha_i basis_i == v, or nullopt if v is
    /// outside the span.
    std::optional<Vector> coefficients(const Vector& v) const;

    std::size_t dimension() const { return pivots_.size(); }

private:
    FieldSpec field_;
    std::size_t basis_size_;
    std::size_t length_;
    // Reduced rows and, for each, the combination of basis vectors producing it.
    std::vector<Vector> rows_;
    std::vector<Vector> transforms_;
    std::vector<std::size_t> pivots_;
};

}  // namespace trirep

#endif
