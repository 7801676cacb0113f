#include "cayplan/cayley_ball.hpp"

#include <algorithm>
#include <set>

#include "cayplan/errors.hpp"

namespace cayplan {

namespace {

// Undirected one-step neighbors: a_v and, when the order allows a distinct
// inverse, a_v^-1. Order-2 generators contribute a single edge (the paper's
// glued double edge).
std::vector<std::pair<NormalForm, int>> generator_neighbors(const ProductGraph& g,
                                                            const NormalForm& x) {
    std::vector<std::pair<NormalForm, int>> out;
    for (int v = 0; v < g.size(); ++v) {
        NormalForm step = normalize(g, {{v, 1}});
        out.emplace_back(multiply(g, x, step), v);
        if (g.order(v) > 2) {
            NormalForm inv_step = normalize(g, {{v, g.order(v) - 1}});
            out.emplace_back(multiply(g, x, inv_step), v);
        }
    }
    return out;
}

} // namespace

CayleyBall ball(const ProductGraph& g, int r, std::size_t max_vertices) {
    if (r < 0) throw input_error("ball radius must be >= 0");

    CayleyBall b;
    b.radius = r;
    b.vertices.push_back(NormalForm{});
    b.distance.push_back(0);
    b.index.emplace(NormalForm{}, 0);

    std::size_t head = 0;
    while (head < b.vertices.size()) {
        int i = static_cast<int>(head++);
        if (b.distance[i] == r) continue;
        NormalForm x = b.vertices[i];
        for (auto& [y, gen] : generator_neighbors(g, x)) {
            if (b.index.count(y)) continue;
            if (b.vertices.size() >= max_vertices)
                throw resource_limit_error("ball vertex cap " + std::to_string(max_vertices) +
                                           " exceeded at radius " + std::to_string(r));
            int j = static_cast<int>(b.vertices.size());
            b.index.emplace(y, j);
            b.vertices.push_back(std::move(y));
            b.distance.push_back(b.distance[i] + 1);
        }
    }

    std::set<CayleyBall::Edge> edges;
    for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i)
        for (auto& [y, gen] : generator_neighbors(g, b.vertices[i])) {
            int j = b.find(y);
            if (j < 0) continue;
            edges.insert({std::min(i, j), std::max(i, j), gen});
        }
    b.edges.assign(edges.begin(), edges.end());
    return b;
}

std::vector<std::size_t> sphere_sizes(const ProductGraph& g, int r, std::size_t max_vertices) {
    CayleyBall b = ball(g, r, max_vertices);
    std::vector<std::size_t> counts(static_cast<std::size_t>(r) + 1, 0);
    for (int d : b.distance) ++counts[d];
    return counts;
}

CayleyBall restrict_to_subgroup(const ProductGraph& g, const CayleyBall& b,
                                const std::vector<std::string>& vs) {
    std::vector<bool> keep_vertex(g.size(), false);
    for (const auto& id : vs) keep_vertex[g.at(id)] = true;

    CayleyBall out;
    out.radius = b.radius;
    std::vector<int> remap(b.vertices.size(), -1);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const auto& nf = b.vertices[i];
        bool supported = std::all_of(nf.syllables().begin(), nf.syllables().end(),
                                     [&](const Syllable& s) { return keep_vertex[s.vertex]; });
        if (!supported) continue;
        remap[i] = static_cast<int>(out.vertices.size());
        out.index.emplace(nf, remap[i]);
        out.vertices.push_back(nf);
        out.distance.push_back(b.distance[i]);
    }
    for (const auto& e : b.edges) {
        if (remap[e.a] < 0 || remap[e.b] < 0 || !keep_vertex[e.generator]) continue;
        int a = remap[e.a], bb = remap[e.b];
        out.edges.push_back({std::min(a, bb), std::max(a, bb), e.generator});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace cayplan
