#include "trirep/linalg.hpp"

#include <stdexcept>

namespace trirep {

namespace {

// row <- row - factor * other, for columns >= from
void axpy(Vector& row, const FieldElement& factor, const Vector& other, std::size_t from = 0) {
    for (std::size_t j = from; j < row.size(); ++j) {
        if (!other[j].is_zero()) row[j] -= factor * other[j];
    }
}

}  // namespace

RowEchelon rref(std::vector<Vector> rows, const FieldSpec& field) {
    RowEchelon out;
    if (rows.empty()) return out;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const FieldElement inv = rows[r][c].inv();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FieldElement factor = rows[i][c];
            axpy(rows[i], factor, rows[r], c);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    (void)field;
    return out;
}

std::size_t rank(const std::vector<Vector>& rows, const FieldSpec& field) {
    return rref(rows, field).pivots.size();
}

std::vector<Vector> independent_rows(const std::vector<Vector>& rows, const FieldSpec& field) {
    std::vector<Vector> kept;
    std::vector<Vector> reduced;  // echelon rows of kept, normalized
    std::vector<std::size_t> pivots;
    for (const auto& row : rows) {
        Vector v = row;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (!v[pivots[i]].is_zero()) {
                const FieldElement factor = v[pivots[i]];
                axpy(v, factor, reduced[i]);
            }
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        if (lead == v.size()) continue;
        const FieldElement inv = v[lead].inv();
        for (auto& x : v) x *= inv;
        reduced.push_back(std::move(v));
        pivots.push_back(lead);
        kept.push_back(row);
    }
    (void)field;
    return kept;
}

SpanSolver::SpanSolver(const std::vector<Vector>& basis, const FieldSpec& field)
    : field_(field), basis_size_(basis.size()), length_(basis.empty() ? 0 : basis.front().size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vector v = basis[i];
        Vector t(basis.size(), field.zero());
        t[i] = field.one();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (!v[pivots_[k]].is_zero()) {
                const FieldElement factor = v[pivots_[k]];
                axpy(v, factor, rows_[k]);
                axpy(t, factor, transforms_[k]);
            }
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        if (lead == v.size()) throw std::invalid_argument("SpanSolver: basis vectors are dependent");
        const FieldElement inv = v[lead].inv();
        for (auto& x : v) x *= inv;
        for (auto& x : t) x *= inv;
        rows_.push_back(std::move(v));
        transforms_.push_back(std::move(t));
        pivots_.push_back(lead);
    }
}

std::optional<Vector> SpanSolver::coefficients(const Vector& v) const {
    if (v.size() != length_ && basis_size_ > 0)
        throw std::invalid_argument("SpanSolver: vector length mismatch");
    Vector residual = v;
    Vector alpha(basis_size_, field_.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (!residual[pivots_[k]].is_zero()) {
            const FieldElement factor = residual[pivots_[k]];
            axpy(residual, factor, rows_[k]);
            for (std::size_t i = 0; i < basis_size_; ++i) {
                if (!transforms_[k][i].is_zero()) alpha[i] += factor * transforms_[k][i];
            }
        }
    }
    for (const auto& x : residual) {
        if (!x.is_zero()) return std::nullopt;
    }
    return alpha;
}

}  // namespace trirep
