#ifndef CAYPLAN_PLANARITY_HPP
#define CAYPLAN_PLANARITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cayplan {

class ProductGraph;
struct CayleyBall;

/// Finite simple loop-free graph with optional per-vertex labels
/// (defaults to the index as a decimal string).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n, std::vector<std::pair<int, int>> edges = {},
                         std::vector<std::string> labels = {});

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of a label, or -1. Labels are unique by construction.
    int find_label(const std::string& label) const;

    /// Copy with one edge removed.
    SimpleGraph without_edge(int u, int v) const;
    /// Copy with an extra vertex adjacent to every existing vertex.
    SimpleGraph with_apex(const std::string& label = "*apex*") const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // a < b, sorted unique
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

SimpleGraph as_simple_graph(const ProductGraph& g);
SimpleGraph as_simple_graph(const ProductGraph& g, const CayleyBall& b);

/// Combinatorial embedding: per vertex, the cyclic order of its neighbors.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

/// Number of faces traced by the rotation system, per connected component
/// (components listed by smallest contained vertex; edgeless components
/// count one face).
std::vector<int> face_counts(const SimpleGraph& g, const RotationSystem& rs);

/// V - E + F = 2 on every connected component.
bool satisfies_euler(const SimpleGraph& g, const RotationSystem& rs);

/// Planarity test; on success the returned rotation system passes
/// satisfies_euler.
std::pair<bool, std::optional<RotationSystem>> is_planar(const SimpleGraph& g);

/// True iff g plus an apex vertex joined to every vertex is planar
/// (no K4 or K_{2,3} subdivision).
bool is_outerplanar(const SimpleGraph& g);

/// A subdivision-of-H certificate inside a host graph. For K23/K33 the
/// first 2 resp. 3 branch vertices form one side of the bipartition.
struct GraphCertificate {
    enum class Model { K4, K23, K5, K33 };

    Model model = Model::K33;
    std::vector<std::string> branch;               // host labels
    std::vector<std::vector<std::string>> paths;   // one per model edge

    static int branch_count(Model m);
    static std::vector<std::pair<int, int>> model_edges(Model m);
};

std::string to_string(GraphCertificate::Model m);
GraphCertificate::Model certificate_model_from_string(const std::string& s);

/// Checks every certificate invariant inside g: endpoints are branch
/// vertices, the endpoint pairs match the model edges exactly, consecutive
/// path vertices are adjacent in g, paths are simple and internally
/// disjoint from each other and from all branch vertices.
bool verify_certificate(const SimpleGraph& g, const GraphCertificate& c);

/// Extracts a K5 or K33 subdivision from a non-planar graph by greedily
/// deleting edges while non-planarity persists, then reading branch
/// vertices and paths off the edge-minimal remainder. The result passes
/// verify_certificate. Throws precondition_error on planar input.
GraphCertificate kuratowski_witness(const SimpleGraph& g);

/// A K4 or K23 subdivision inside a non-outerplanar graph, obtained from
/// the Kuratowski subdivision of the apex extension. Throws
/// precondition_error on outerplanar input.
GraphCertificate outerplanarity_certificate(const SimpleGraph& g);

} // namespace cayplan

#endif
