// q-Potts partition function of an edge-weighted graph, directly and through
// the triangular representation of the graph's cut-space code.

#ifndef TRIREP_POTTS_HPP
#define TRIREP_POTTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trirep/enumerator.hpp"
#include "trirep/linear_code.hpp"
#include "trirep/representation.hpp"

namespace trirep {

struct GraphEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::int64_t weight = 1;
};

/// Vertices are 0..vertex_count-1; parallel edges are distinct entries.
struct WeightedGraph {
    std::size_t vertex_count = 0;
    std::vector<GraphEdge> edges;

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    void validate() const;
    bool connected() const;
    std::int64_t total_weight() const;
    /// Distinct edge weights in increasing order.
    std::vector<std::int64_t> weight_classes() const;
};

/// `vertices <n>` then `edge <u> <v> <w>` lines (0-based vertices).
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);

std::int64_t hamiltonian(const WeightedGraph& g, const std::vector<std::size_t>& spins);

/// Sum of x^{H(s)} over all q^{|V|} spin assignments.
LaurentPolynomial potts_direct(const WeightedGraph& g, std::size_t q, const EnumerationBudget& budget = {});

/// {O^T z : z in GF(q)^V} with edge u->v for u < v; entry z_v - z_u.
LinearCode cut_space_code(const WeightedGraph& g, std::size_t q, bool reversed = false);

struct PottsViaRepresentation {
    LaurentPolynomial polynomial;
    std::size_t e = 0;
    std::size_t triangles = 0;
    std::size_t classes = 0;
};

/// q x^{sum w} W^lambda_C(x^{-w_1}, ..., x^{-w_k}) with W recovered from the
/// kernel of the cut-space code's representation; the last weight class is
/// the reserved variable.
PottsViaRepresentation potts_via_representation(const WeightedGraph& g, std::size_t q,
                                                const EnumerationBudget& enumeration = {},
                                                const RepresentationBudget& construction = {});

}  // namespace trirep

#endif
