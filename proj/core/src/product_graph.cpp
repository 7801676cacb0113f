#include "cayplan/product_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cayplan/errors.hpp"

namespace cayplan {

ProductGraph::ProductGraph(std::vector<std::pair<std::string, int>> vertices,
                           std::vector<std::pair<std::string, std::string>> edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& [id, order] = vertices[i];
        if (i > 0 && id == vertices[i - 1].first)
            throw input_error("duplicate vertex id '" + id + "'");
        if (order < 2)
            throw input_error("vertex '" + id + "': order " + std::to_string(order) +
                              " is not a non-trivial finite cyclic group");
        ids_.push_back(id);
        orders_.push_back(order);
    }
    adj_.assign(ids_.size(), {});

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = at(a), v = at(b);
        if (u == v)
            throw input_error("self-loop at vertex '" + a + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw input_error("duplicate edge {" + a + "," + b + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int ProductGraph::find(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int ProductGraph::at(const std::string& id) const {
    int v = find(id);
    if (v < 0) throw input_error("unknown vertex id '" + id + "'");
    return v;
}

bool ProductGraph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

AbelianProductGraph::AbelianProductGraph(
    std::vector<std::pair<std::string, std::vector<int>>> vertices,
    std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string> ids;
    for (const auto& [id, orders] : vertices_) {
        if (!ids.insert(id).second)
            throw input_error("duplicate vertex id '" + id + "'");
        if (orders.empty())
            throw input_error("vertex '" + id + "': empty factor list");
        for (int o : orders)
            if (o < 2)
                throw input_error("vertex '" + id + "': factor order " + std::to_string(o) +
                                  " is not a non-trivial finite cyclic group");
    }
    for (const auto& [a, b] : edges_)
        if (!ids.count(a) || !ids.count(b))
            throw input_error("edge {" + a + "," + b + "} has an undeclared endpoint");
}

ProductGraph induced_subgraph(const ProductGraph& g, const std::vector<std::string>& vs) {
    std::set<int> keep;
    for (const auto& id : vs) keep.insert(g.at(id));

    std::vector<std::pair<std::string, int>> vertices;
    for (int v : keep) vertices.emplace_back(g.id(v), g.order(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges())
        if (keep.count(u) && keep.count(v))
            edges.emplace_back(g.id(u), g.id(v));
    return ProductGraph(std::move(vertices), std::move(edges));
}

std::pair<ProductGraph, ProductGraph> split_by_order(const ProductGraph& g) {
    std::vector<std::string> two, more;
    for (int v = 0; v < g.size(); ++v)
        (g.order(v) == 2 ? two : more).push_back(g.id(v));
    return {induced_subgraph(g, two), induced_subgraph(g, more)};
}

ProductGraph link(const ProductGraph& g, const std::string& v) {
    int idx = g.at(v);
    std::vector<std::string> nbrs;
    for (int u : g.neighbors(idx)) nbrs.push_back(g.id(u));
    return induced_subgraph(g, nbrs);
}

std::vector<std::vector<std::string>> connected_components(const ProductGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    q.push(u);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<std::string>> out(ncomp);
    for (int v = 0; v < g.size(); ++v) out[comp[v]].push_back(g.id(v));
    return out;
}

namespace {

// Shortest path between a and b in the subgraph induced on `allowed`,
// as a vertex index sequence a..b; empty if none.
std::vector<int> shortest_path_within(const ProductGraph& g, int a, int b,
                                      const std::vector<bool>& allowed) {
    std::vector<int> prev(g.size(), -2);
    std::queue<int> q;
    q.push(a);
    prev[a] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == b) break;
        for (int u : g.neighbors(v))
            if (allowed[u] && prev[u] == -2) {
                prev[u] = v;
                q.push(u);
            }
    }
    if (prev[b] == -2) return {};
    std::vector<int> path;
    for (int v = b; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

bool cycle_is_chordless(const ProductGraph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

} // namespace

std::optional<std::vector<std::string>> has_induced_cycle_through(const ProductGraph& g,
                                                                  const std::string& v) {
    int c = g.at(v);
    const auto& nbrs = g.neighbors(c);

    // A triangle through v is already chordless.
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) {
                std::vector<int> cycle{c, nbrs[i], nbrs[j]};
                if (cycle_is_chordless(g, cycle))
                    return std::vector<std::string>{g.id(c), g.id(nbrs[i]), g.id(nbrs[j])};
            }

    // Longer induced cycles: a shortest a-b path avoiding v and all other
    // neighbors of v has no chords, and none of its interior vertices can
    // be adjacent to v, so closing it through v stays chordless.
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            int a = nbrs[i], b = nbrs[j];
            if (g.adjacent(a, b)) continue;
            std::vector<bool> allowed(g.size(), true);
            allowed[c] = false;
            for (int u : nbrs) allowed[u] = false;
            allowed[a] = allowed[b] = true;
            auto path = shortest_path_within(g, a, b, allowed);
            if (path.empty()) continue;
            std::vector<int> cycle;
            cycle.push_back(c);
            cycle.insert(cycle.end(), path.begin(), path.end());
            if (!cycle_is_chordless(g, cycle)) continue;
            std::vector<std::string> out;
            for (int u : cycle) out.push_back(g.id(u));
            return out;
        }
    return std::nullopt;
}

ProductGraph expand_abelian(const AbelianProductGraph& g) {
    std::set<std::string> declared;
    for (const auto& [id, orders] : g.vertices()) declared.insert(id);

    std::map<std::string, std::vector<std::string>> parts;
    std::vector<std::pair<std::string, int>> vertices;
    std::set<std::string> used;
    for (const auto& [id, orders] : g.vertices()) {
        std::vector<std::string> mine;
        if (orders.size() == 1) {
            mine.push_back(id);
        } else {
            for (std::size_t k = 0; k < orders.size(); ++k)
                mine.push_back(id + "." + std::to_string(k + 1));
        }
        for (std::size_t k = 0; k < mine.size(); ++k) {
            if ((mine[k] != id && declared.count(mine[k])) || !used.insert(mine[k]).second)
                throw input_error("expanded id '" + mine[k] + "' collides with another vertex");
            vertices.emplace_back(mine[k], orders[k]);
        }
        parts[id] = std::move(mine);
    }

    std::vector<std::pair<std::string, std::string>> edges;
    // cliques inside each expanded vertex
    for (const auto& [id, mine] : parts)
        for (std::size_t i = 0; i < mine.size(); ++i)
            for (std::size_t j = i + 1; j < mine.size(); ++j)
                edges.emplace_back(mine[i], mine[j]);
    // complete joins across original edges
    for (const auto& [a, b] : g.edges())
        for (const auto& x : parts.at(a))
            for (const auto& y : parts.at(b))
                edges.emplace_back(x, y);
    return ProductGraph(std::move(vertices), std::move(edges));
}

} // namespace cayplan
