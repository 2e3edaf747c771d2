#include <kk/canonical.hpp>
#include <kk/graph6.hpp>

#include <algorithm>
#include <map>
#include <tuple>

using std::string;
using std::vector;

namespace kk {

namespace
{
    using Cells = vector<vector<Vertex>>;

    // Splits cells by neighbour counts into each splitter cell until stable.
    // Sub-cells are ordered by count, so the result commutes with isomorphisms.
    void refine(const Graph & g, Cells & cells)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && ! changed; ++s) {
                auto splitter = VertexSet::of(g.order(), cells[s]);
                Cells next;
                next.reserve(cells.size() + 1);
                for (auto & cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::map<int, vector<Vertex>> by_count;
                    for (auto v : cell)
                        by_count[g.neighbors(v).count_and(splitter)].push_back(v);
                    if (by_count.size() > 1)
                        changed = true;
                    for (auto & [count, part] : by_count)
                        next.push_back(std::move(part));
                }
                cells = std::move(next);
            }
        }
    }

    auto adjacency_key(const Graph & g, const vector<Vertex> & order) -> vector<bool>
    {
        auto n = order.size();
        vector<bool> key;
        key.reserve(n * (n - 1) / 2);
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                key.push_back(g.has_edge(order[i], order[j]));
        return key;
    }

    auto are_twins(const Graph & g, Vertex u, Vertex v) -> bool
    {
        auto nu = g.neighbors(u), nv = g.neighbors(v);
        nu.reset(v);
        nv.reset(u);
        return nu == nv;
    }

    struct Search
    {
        const Graph & g;
        vector<bool> best_key;
        vector<Vertex> best_order;
        bool have_best = false;

        void explore(Cells cells)
        {
            refine(g, cells);

            std::size_t target = cells.size();
            for (std::size_t c = 0; c < cells.size(); ++c)
                if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                    target = c;

            if (target == cells.size()) {
                vector<Vertex> order;
                for (auto & cell : cells)
                    order.push_back(cell.front());
                auto key = adjacency_key(g, order);
                if (! have_best || key > best_key) {
                    best_key = std::move(key);
                    best_order = std::move(order);
                    have_best = true;
                }
                return;
            }

            const auto & cell = cells[target];
            for (std::size_t k = 0; k < cell.size(); ++k) {
                auto v = cell[k];
                // swapping twins fixes the partition, so their subtrees coincide
                bool redundant = false;
                for (std::size_t e = 0; e < k && ! redundant; ++e)
                    redundant = are_twins(g, cell[e], v);
                if (redundant)
                    continue;

                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (c != target) {
                        child.push_back(cells[c]);
                        continue;
                    }
                    child.push_back({v});
                    vector<Vertex> rest;
                    for (auto w : cells[c])
                        if (w != v)
                            rest.push_back(w);
                    child.push_back(std::move(rest));
                }
                explore(std::move(child));
            }
        }
    };

    // canonical order of a connected graph, as a list of its vertices
    auto connected_order(const Graph & g) -> vector<Vertex>
    {
        if (g.order() <= 1)
            return g.vertices().to_vector();

        std::map<std::pair<int, std::int64_t>, vector<Vertex>> initial;
        for (Vertex v = 0; v < g.order(); ++v)
            initial[{g.degree(v), triangle_degree(g, v)}].push_back(v);
        Cells cells;
        for (auto & [key, cell] : initial)
            cells.push_back(std::move(cell));

        Search search{g, {}, {}, false};
        search.explore(std::move(cells));
        return search.best_order;
    }
}

auto canonical_labelling(const Graph & g) -> vector<Vertex>
{
    // components are canonised separately and then sorted, so large symmetric
    // unions of small pieces stay cheap
    struct Piece
    {
        int size;
        vector<bool> key;
        vector<Vertex> order;
    };
    vector<Piece> pieces;
    for (auto & component : connected_components(g)) {
        auto members = component.to_vector();
        auto sub = g.induced_subgraph(component);
        auto local = connected_order(sub);
        vector<Vertex> order;
        order.reserve(local.size());
        for (auto v : local)
            order.push_back(members[static_cast<std::size_t>(v)]);
        pieces.push_back({static_cast<int>(members.size()), adjacency_key(g, order), std::move(order)});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece & a, const Piece & b) {
        return std::tie(b.size, b.key) < std::tie(a.size, a.key);
    });

    vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    Vertex next = 0;
    for (auto & piece : pieces)
        for (auto v : piece.order)
            perm[static_cast<std::size_t>(v)] = next++;
    return perm;
}

auto canonical_form(const Graph & g) -> Graph
{
    return g.relabelled(canonical_labelling(g));
}

auto canonical_graph6(const Graph & g) -> string
{
    return to_graph6(canonical_form(g));
}

}
