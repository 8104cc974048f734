// Abstract triangular configurations: 2-complexes whose maximal simplices are
// triangles or edges, their 0/1 incidence matrices, and exact kernels.
//
// Simplices are sorted tuples of vertex labels, so the std::set orderings are
// the canonical (lexicographic) orderings used for matrix layout.

#ifndef TRIREP_COMPLEX_HPP
#define TRIREP_COMPLEX_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trirep/field.hpp"

namespace trirep {

using Vertex = std::string;
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;

Edge make_edge(Vertex a, Vertex b);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);
std::array<Edge, 3> edges_of(const Triangle& t);
bool shares_edge(const Triangle& a, const Triangle& b);
bool shares_vertex(const Triangle& a, const Triangle& b);

std::string to_string(const Edge& e);
std::string to_string(const Triangle& t);
/// Inverse of to_string(Triangle): three space-separated labels.
Triangle parse_triangle_id(const std::string& id);

bool is_valid_label(const std::string& label);

class TriangularConfiguration {
public:
    void add_vertex(const Vertex& v);
    void add_edge(const Edge& e);
    /// Adds the triangle together with its edges and vertices.
    void add_triangle(const Triangle& t);
    /// Removes the triangle only; its faces stay.
    void remove_triangle(const Triangle& t);
    /// Removes an edge that lies in no triangle; its vertices stay.
    void remove_edge(const Edge& e);

    bool has_vertex(const Vertex& v) const { return vertices_.count(v) > 0; }
    bool has_edge(const Edge& e) const { return edges_.count(e) > 0; }
    bool has_triangle(const Triangle& t) const { return triangles_.count(t) > 0; }

    const std::set<Vertex>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    const std::set<Triangle>& triangles() const { return triangles_; }

    /// Number of triangles containing e; throws std::invalid_argument for an unknown edge.
    std::size_t edge_degree(const Edge& e) const;
    std::vector<Triangle> cofaces(const Edge& e) const;

    /// Vertex triples whose three edges exist but whose triangle does not.
    std::vector<Triangle> empty_triangles() const;

    /// Edges contained in no triangle.
    std::vector<Edge> maximal_edges() const;

    friend bool operator==(const TriangularConfiguration& a, const TriangularConfiguration& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.triangles_ == b.triangles_;
    }

private:
    std::set<Vertex> vertices_;
    std::set<Edge> edges_;
    std::set<Triangle> triangles_;
    std::map<Edge, std::set<Vertex>> apexes_;  // third vertices of the cofaces
};

TriangularConfiguration union_of(const TriangularConfiguration& a, const TriangularConfiguration& b);

/// Triangles of a not in b, keeping only the edges and vertices of surviving triangles.
TriangularConfiguration difference(const TriangularConfiguration& a, const TriangularConfiguration& b);

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct OrientedTriangularConfiguration {
    TriangularConfiguration complex;
    std::map<Triangle, Sign> sign;

    void add_triangle(const Triangle& t, Sign s) {
        complex.add_triangle(t);
        sign[t] = s;
    }
    void remove_triangle(const Triangle& t) {
        complex.remove_triangle(t);
        sign.erase(t);
    }
    std::vector<Triangle> with_sign(Sign s) const;
    /// Sign map is defined exactly on the triangles.
    bool sign_is_total() const;
};

OrientedTriangularConfiguration union_of(const OrientedTriangularConfiguration& a,
                                         const OrientedTriangularConfiguration& b);

/// Edge rows by triangle columns, unit entries, canonical orders on both sides.
struct IncidenceMatrix {
    FieldSpec field;
    std::vector<Edge> rows;
    std::vector<Triangle> cols;
    std::vector<std::array<std::size_t, 3>> col_rows;

    /// A * v over the field.
    Vector multiply(const Vector& v) const;
    FieldElement entry(std::size_t row, std::size_t col) const;
};

IncidenceMatrix incidence_matrix(const TriangularConfiguration& delta, const FieldSpec& field);

struct KernelBasis {
    FieldSpec field;
    std::vector<Triangle> triangles;  // column order of the vectors
    std::vector<Vector> vectors;
    std::size_t rank = 0;             // rank of the (restricted) incidence matrix

    std::size_t dimension() const { return vectors.size(); }
    std::size_t index_of(const Triangle& t) const;
};

/// Exact kernel. Pivots are the first nonzero in canonical column order and
/// the basis is reduced against the free columns (one unit per vector).
KernelBasis kernel(const TriangularConfiguration& delta, const FieldSpec& field);

/// Kernel of the row-submatrix indexed by `rows` (which must be edges of delta).
KernelBasis restricted_kernel(const TriangularConfiguration& delta, const std::set<Edge>& rows,
                              const FieldSpec& field);

/// Sparse elimination kernel for a 0/1 matrix given by per-row column lists.
/// Returns the kernel vectors and sets `rank_out`.
std::vector<Vector> unit_matrix_kernel(std::size_t ncols, const std::vector<std::vector<std::size_t>>& rows,
                                       const FieldSpec& field, std::size_t& rank_out);

/// Complex file: `t a b c` per triangle, `e a b` per maximal edge.
TriangularConfiguration read_complex(std::istream& in);
TriangularConfiguration read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const TriangularConfiguration& delta);

}  // namespace trirep

#endif
