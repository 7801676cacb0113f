#ifndef CAYPLAN_CAYLEY_BALL_HPP
#define CAYPLAN_CAYLEY_BALL_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayplan/product_graph.hpp"
#include "cayplan/words.hpp"

namespace cayplan {

inline constexpr std::size_t kDefaultBallVertexCap = 200000;

/// Finite radius-r ball of the Cayley graph, rooted at the identity
/// (vertex 0), as an undirected simple graph. Each edge is kept once per
/// unordered pair and remembers the generating vertex.
struct CayleyBall {
    struct Edge {
        int a = 0;            // a < b, indices into vertices
        int b = 0;
        int generator = 0;    // vertex index in the ProductGraph

        auto operator<=>(const Edge&) const = default;
    };

    int radius = 0;
    std::vector<NormalForm> vertices;   // [0] is the identity
    std::vector<Edge> edges;            // sorted by (a, b)
    std::vector<int> distance;          // word metric from the identity

    int find(const NormalForm& nf) const {
        auto it = index.find(nf);
        return it == index.end() ? -1 : it->second;
    }

    std::unordered_map<NormalForm, int, NormalFormHash> index;
};

/// BFS enumeration of all elements at word-metric distance <= r, with every
/// undirected simple Cayley edge between them. Throws resource_limit_error
/// once more than `max_vertices` elements are discovered.
CayleyBall ball(const ProductGraph& g, int r, std::size_t max_vertices = kDefaultBallVertexCap);

/// Number of elements at each exact distance 0..r.
std::vector<std::size_t> sphere_sizes(const ProductGraph& g, int r,
                                      std::size_t max_vertices = kDefaultBallVertexCap);

/// Sub-ball on the elements supported on `vs`, rooted-isomorphic to a ball
/// of the graph product over the induced subgraph on `vs`.
CayleyBall restrict_to_subgroup(const ProductGraph& g, const CayleyBall& b,
                                const std::vector<std::string>& vs);

} // namespace cayplan

#endif
