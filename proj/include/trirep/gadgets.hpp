// Building blocks of triangular representations.
//
// Each gadget records enough structure (ends, sign classes) to be checked by
// the kernel solver; builders verify their own kernel and throw
// InvariantViolation when the check fails.

#ifndef TRIREP_GADGETS_HPP
#define TRIREP_GADGETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/field.hpp"

namespace trirep {

/// Fresh vertex labels `<prefix>_<counter>`, zero padded so that label order
/// matches creation order.
class LabelFactory {
public:
    explicit LabelFactory(std::string prefix) : prefix_(std::move(prefix)) {}
    Vertex next();
    const std::string& prefix() const { return prefix_; }

private:
    std::string prefix_;
    std::uint64_t counter_ = 0;
};

struct BnGadget {
    TriangularConfiguration complex;
    std::vector<Triangle> triangles;  // triangles[j] is the j-th coordinate triangle
};

/// n vertex-disjoint triangles labelled `<prefix><j>a|b|c`, j zero padded.
BnGadget build_Bn(std::size_t n, const std::string& prefix = "B");

struct TunnelGadget {
    OrientedTriangularConfiguration complex;
    Triangle positive_end;  // empty triangle
    Triangle negative_end;  // empty triangle
};

/// Six triangles of a triangulated prism between the two ends. Triangles
/// meeting the positive end are signed +.
struct TunnelTriangles {
    std::array<Triangle, 3> positive_side;
    std::array<Triangle, 3> negative_side;
    std::array<Edge, 6> inner_edges;
};
TunnelTriangles tunnel_between(const Triangle& positive_end, const Triangle& negative_end);

TunnelGadget build_tunnel(LabelFactory& labels);

/// Links t1 (positive end) to t2 (negative end) by a fresh tunnel in place.
/// Both may be filled or empty triangles of delta; they must be vertex
/// disjoint and none of the tunnel's inner edges may exist yet.
TunnelTriangles link(OrientedTriangularConfiguration& delta, const Triangle& t1, const Triangle& t2);

/// Replaces t by 7 triangles around an inner triangle; boundary edges keep
/// exactly one patch triangle each. Returns the patch.
std::vector<Triangle> subdivide_A(OrientedTriangularConfiguration& delta, const Triangle& t, LabelFactory& labels);

/// Replaces the pair sharing a degree-2 edge by 6 triangles; the shared edge
/// becomes a path of three edges.
std::vector<Triangle> subdivide_B(OrientedTriangularConfiguration& delta, const Triangle& t1, const Triangle& t2,
                                  LabelFactory& labels);

/// First degree-2 edge in canonical order whose two cofaces satisfy `allowed`.
template <typename Pred>
std::optional<std::pair<Triangle, Triangle>> find_degree2_pair(const TriangularConfiguration& delta,
                                                               Pred allowed) {
    for (const auto& e : delta.edges()) {
        if (delta.edge_degree(e) != 2) continue;
        auto cf = delta.cofaces(e);
        if (allowed(cf[0]) && allowed(cf[1])) return std::make_pair(cf[0], cf[1]);
    }
    return std::nullopt;
}

struct SphereGadget {
    OrientedTriangularConfiguration complex;
    std::size_t m = 0;
    std::size_t steps_a = 0;
    std::size_t steps_b = 0;
};

/// True for 8 and every even m >= 12.
bool sphere_size_representable(std::size_t m);

/// Octahedron refined by subdivisions A (+6) and B (+4) up to m triangles.
SphereGadget build_sphere(std::size_t m, LabelFactory& labels);

/// Checks that every edge has one + and one - coface.
bool is_properly_signed_sphere(const OrientedTriangularConfiguration& s);

struct MultisphereGadget {
    OrientedTriangularConfiguration complex;
    std::vector<std::uint64_t> multipliers;   // n_1..n_k
    std::size_t min_class = 0;                // M
    std::size_t sphere_size = 0;
    std::vector<FieldElement> values;         // a_i = n_i x g
    std::vector<std::vector<Triangle>> class_plus;
    std::vector<std::vector<Triangle>> class_minus;
    /// Sphere triangles of each class with no edge touched by a tunnel.
    std::vector<std::vector<Triangle>> free_plus;
    std::vector<std::vector<Triangle>> free_minus;
    std::vector<Triangle> connectors;         // the empty triangles t, t'
    /// Kernel generator in canonical triangle order (a_i on [+i], -a_i on [-i]).
    Vector generator;
};

/// Chains k oriented spheres through pairs of empty triangles. Sphere sizes
/// start at the smallest representable m with m/2 >= 2 n_{i-1} + 2 n_{i+1} + M
/// and grow until every link and class requirement can be met.
MultisphereGadget build_multisphere(const std::vector<std::uint64_t>& multipliers, std::size_t min_class,
                                    const FieldElement& generator, const std::string& prefix = "M");

/// Kernel dimension and generator pattern of a built multisphere, recomputed
/// from scratch; throws InvariantViolation on mismatch.
void verify_multisphere(const MultisphereGadget& ms);

/// JSON sidecar describing sign classes and ends of a gadget.
std::string gadget_sidecar_json(const OrientedTriangularConfiguration& complex,
                                const std::vector<std::pair<std::string, std::vector<Triangle>>>& groups);

}  // namespace trirep

#endif
