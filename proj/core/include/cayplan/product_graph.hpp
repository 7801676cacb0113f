#ifndef CAYPLAN_PRODUCT_GRAPH_HPP
#define CAYPLAN_PRODUCT_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cayplan {

/// A finite simplicial graph whose vertices carry finite cyclic group
/// orders (>= 2). Vertices are identified by opaque string ids; internally
/// they are stored sorted lexicographically, so vertex indices respect the
/// id order. All instances are immutable after construction.
class ProductGraph {
public:
    ProductGraph() = default;

    /// Builds and validates a graph. Throws input_error on duplicate ids,
    /// orders < 2, self-loops, duplicate edges or unknown endpoints.
    ProductGraph(std::vector<std::pair<std::string, int>> vertices,
                 std::vector<std::pair<std::string, std::string>> edges);

    int size() const { return static_cast<int>(ids_.size()); }

    const std::string& id(int v) const { return ids_[v]; }
    int order(int v) const { return orders_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }

    /// Index of an id, or -1 if absent.
    int find(const std::string& id) const;
    /// Index of an id; throws input_error if absent.
    int at(const std::string& id) const;

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Edges as index pairs (a < b), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const ProductGraph& other) const = default;

private:
    std::vector<std::string> ids_;                 // sorted lexicographically
    std::vector<int> orders_;
    std::vector<std::vector<int>> adj_;            // sorted neighbor lists
    std::vector<std::pair<int, int>> edges_;       // a < b, sorted
};

/// Vertex labels given as products of cyclic factors; reduced to a
/// ProductGraph by expand_abelian.
class AbelianProductGraph {
public:
    AbelianProductGraph() = default;
    AbelianProductGraph(std::vector<std::pair<std::string, std::vector<int>>> vertices,
                        std::vector<std::pair<std::string, std::string>> edges);

    const std::vector<std::pair<std::string, std::vector<int>>>& vertices() const {
        return vertices_;
    }
    const std::vector<std::pair<std::string, std::string>>& edges() const {
        return edges_;
    }

private:
    std::vector<std::pair<std::string, std::vector<int>>> vertices_;
    std::vector<std::pair<std::string, std::string>> edges_;
};

/// Induced subgraph on the given vertex ids. Unknown ids are input_errors.
ProductGraph induced_subgraph(const ProductGraph& g, const std::vector<std::string>& vs);

/// (graph on order-2 vertices, graph on order->2 vertices), both induced.
std::pair<ProductGraph, ProductGraph> split_by_order(const ProductGraph& g);

/// Induced subgraph on the neighbors of v (v itself excluded).
ProductGraph link(const ProductGraph& g, const std::string& v);

/// Partition of the vertex ids into connected components, each sorted,
/// components ordered by smallest id. Empty graph -> empty list.
std::vector<std::vector<std::string>> connected_components(const ProductGraph& g);

/// Some chordless cycle (length >= 3) through v, as an id sequence starting
/// at v, or nullopt. The result is re-checked chord-free before returning.
std::optional<std::vector<std::string>> has_induced_cycle_through(const ProductGraph& g,
                                                                  const std::string& v);

/// Replaces every vertex by a clique of its cyclic factors; edges become
/// complete joins between cliques. Single-factor vertices keep their id,
/// k-factor vertices become id.1 ... id.k (collisions are input_errors).
ProductGraph expand_abelian(const AbelianProductGraph& g);

} // namespace cayplan

#endif
