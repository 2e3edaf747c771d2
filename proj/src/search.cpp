#include <kk/canonical.hpp>
#include <kk/graph6.hpp>
#include <kk/search.hpp>
#include <kk/shadow.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

using std::int64_t;
using std::optional;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace kk {

SearchProblem::SearchProblem(int n, Rational t) :
    n(n),
    t(t)
{
    if (n < 0)
        throw std::invalid_argument("search: n must be non-negative");
    if (t < Rational(2))
        throw std::invalid_argument("search: t must be at least 2");
}

auto SearchProblem::threshold() const -> Rational
{
    return t * (t - Rational(1)) / Rational(2);
}

auto SearchProblem::required_triangles() const -> int64_t
{
    return threshold().ceil();
}

auto SearchProblem::min_degree() const -> int
{
    auto need = required_triangles();
    int d = 0;
    while (binomial(d, 2) < need)
        ++d;
    return d;
}

auto is_feasible(const Graph & g, const Rational & t) -> bool
{
    if (t < Rational(2))
        throw std::invalid_argument("is_feasible: t must be at least 2");
    if (g.order() == 0)
        return false;
    auto threshold = t * (t - Rational(1)) / Rational(2);
    return Rational(min_triangle_degree(g)) >= threshold;
}

auto is_feasible(const Graph & g, double t) -> bool
{
    return is_feasible(g, Rational::approximate(t));
}

auto satisfies_row_order(const Graph & g) -> bool
{
    auto n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b)
                    continue;
                bool ra = g.has_edge(a, c), rb = g.has_edge(b, c);
                if (ra != rb) {
                    if (ra)
                        return false;
                    break;
                }
            }
    return true;
}

namespace
{
    constexpr int max_order = 32;

    // Partial assignment of the edge slots of a graph on `order` vertices.
    struct Node
    {
        std::array<uint32_t, max_order> present{};
        std::array<uint32_t, max_order> undecided{};
        int edges = 0;
        int depth = 0;
    };

    struct LayerSearch
    {
        int order;
        int64_t target_edges;
        int64_t required;
        int min_degree;
        uint32_t all;

        std::atomic<uint64_t> * spent;
        uint64_t budget;
        std::atomic<bool> * aborted;

        auto charge() const -> bool
        {
            auto used = spent->fetch_add(1, std::memory_order_relaxed) + 1;
            if (budget != 0 && used > budget) {
                aborted->store(true, std::memory_order_relaxed);
                return false;
            }
            return ! aborted->load(std::memory_order_relaxed);
        }

        void decide(Node & node, int u, int v, bool edge) const
        {
            node.undecided[static_cast<std::size_t>(u)] &= ~(1U << v);
            node.undecided[static_cast<std::size_t>(v)] &= ~(1U << u);
            if (edge) {
                node.present[static_cast<std::size_t>(u)] |= 1U << v;
                node.present[static_cast<std::size_t>(v)] |= 1U << u;
                ++node.edges;
            }
        }

        auto undecided_edges(const Node & node) const -> int64_t
        {
            int64_t total = 0;
            for (int v = 0; v < order; ++v)
                total += std::popcount(node.undecided[static_cast<std::size_t>(v)]);
            return total / 2;
        }

        void force_all(Node & node, bool edge) const
        {
            for (int u = 0; u < order; ++u) {
                auto rest = node.undecided[static_cast<std::size_t>(u)] & ~((2U << u) - 1);
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    decide(node, u, v, edge);
                }
            }
        }

        // Bounds and propagation; false means no completion can be a solution.
        auto consistent(Node & node) const -> bool
        {
            if (node.edges > target_edges)
                return false;
            auto open = undecided_edges(node);
            if (node.edges + open < target_edges)
                return false;
            if (node.edges == target_edges && open > 0)
                force_all(node, false);
            else if (node.edges + open == target_edges && open > 0)
                force_all(node, true);

            int64_t floor_sum = 0, deficit = 0;
            std::array<int, max_order> degree{};
            for (int v = 0; v < order; ++v) {
                degree[static_cast<std::size_t>(v)] = std::popcount(node.present[static_cast<std::size_t>(v)]);
                floor_sum += std::max(degree[static_cast<std::size_t>(v)], min_degree);
                deficit += std::max(0, min_degree - degree[static_cast<std::size_t>(v)]);
            }
            if (node.edges + (deficit + 1) / 2 > target_edges)
                return false;

            // a vertex may not take degree that the others' minimum needs leave unavailable
            for (int v = 0; v < order; ++v) {
                auto d = degree[static_cast<std::size_t>(v)];
                auto cap = 2 * target_edges - (floor_sum - std::max(d, min_degree));
                if (d > cap)
                    return false;
                if (d == cap && node.undecided[static_cast<std::size_t>(v)]) {
                    auto rest = node.undecided[static_cast<std::size_t>(v)];
                    while (rest) {
                        int w = std::countr_zero(rest);
                        rest &= rest - 1;
                        decide(node, v, w, false);
                    }
                }
            }

            std::array<uint32_t, max_order> possible{};
            for (int v = 0; v < order; ++v)
                possible[static_cast<std::size_t>(v)] = node.present[static_cast<std::size_t>(v)] | node.undecided[static_cast<std::size_t>(v)];

            for (int v = 0; v < order; ++v) {
                auto p = possible[static_cast<std::size_t>(v)];
                if (std::popcount(p) < min_degree)
                    return false;
                int64_t twice = 0;
                auto rest = p;
                while (rest) {
                    int a = std::countr_zero(rest);
                    rest &= rest - 1;
                    twice += std::popcount(p & possible[static_cast<std::size_t>(a)]);
                }
                if (twice / 2 < required)
                    return false;
            }

            uint32_t reached = 1U, frontier = 1U;
            while (frontier) {
                uint32_t next = 0;
                auto rest = frontier;
                while (rest) {
                    int a = std::countr_zero(rest);
                    rest &= rest - 1;
                    next |= possible[static_cast<std::size_t>(a)];
                }
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached != all)
                return false;

            // symmetry breaking: rows must be lexicographically non-decreasing
            for (int a = 0; a < order; ++a)
                for (int b = a + 1; b < order; ++b) {
                    uint32_t mask = all & ~(1U << a) & ~(1U << b);
                    auto pa = node.present[static_cast<std::size_t>(a)], pb = node.present[static_cast<std::size_t>(b)];
                    auto ua = node.undecided[static_cast<std::size_t>(a)], ub = node.undecided[static_cast<std::size_t>(b)];
                    auto x = ((pa ^ pb) | ua | ub) & mask;
                    if (! x)
                        continue;
                    int c = std::countr_zero(x);
                    auto bit = 1U << c;
                    if (! ((ua | ub) & bit) && (pa & bit))
                        return false;
                }
            return true;
        }

        auto next_slot(const Node & node) const -> std::pair<int, int>
        {
            for (int u = 0; u < order; ++u) {
                auto later = node.undecided[static_cast<std::size_t>(u)] & ~((2U << u) - 1);
                if (later)
                    return {u, std::countr_zero(later)};
            }
            return {-1, -1};
        }

        auto leaf_key(const Node & node) const -> string
        {
            Graph g(order);
            for (int u = 0; u < order; ++u) {
                auto rest = node.present[static_cast<std::size_t>(u)] & ~((2U << u) - 1);
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    g.add_edge(u, v);
                }
            }
            return canonical_graph6(g);
        }

        // Explores below `node`. Nodes at `split_depth` are handed to
        // `on_split` instead of being expanded, when it is set.
        void explore(Node node, std::set<string> & found, const std::function<void(const Node &)> * on_split, int split_depth) const
        {
            if (! charge())
                return;
            if (! consistent(node))
                return;
            auto [u, v] = next_slot(node);
            if (u < 0) {
                found.insert(leaf_key(node));
                return;
            }
            if (on_split && node.depth == split_depth) {
                (*on_split)(node);
                return;
            }
            for (bool edge : {true, false}) {
                Node child = node;
                decide(child, u, v, edge);
                ++child.depth;
                explore(child, found, on_split, split_depth);
            }
        }
    };

    struct LayerKey
    {
        int order;
        int64_t required;
        int min_degree;
        int64_t edges;

        auto operator<(const LayerKey & o) const -> bool
        {
            return std::tie(order, required, min_degree, edges) < std::tie(o.order, o.required, o.min_degree, o.edges);
        }
    };

    std::mutex layer_memo_mutex;
    std::map<LayerKey, ConnectedLayer> layer_memo;
}

auto connected_layer(int order, const SearchProblem & p, int64_t edges, uint64_t budget, unsigned threads) -> ConnectedLayer
{
    if (order < 1 || order > max_order)
        throw std::invalid_argument("connected_layer: order must lie in 1.." + std::to_string(max_order));

    LayerKey key{order, p.required_triangles(), p.min_degree(), edges};
    {
        std::lock_guard lock(layer_memo_mutex);
        auto it = layer_memo.find(key);
        if (it != layer_memo.end() && (budget == 0 || it->second.nodes <= budget))
            return it->second;
    }

    std::atomic<uint64_t> spent{0};
    std::atomic<bool> aborted{false};
    LayerSearch search{order, edges, key.required, key.min_degree, order == 32 ? ~0U : (1U << order) - 1, &spent, budget, &aborted};

    Node root;
    for (int u = 0; u < order; ++u)
        root.undecided[static_cast<std::size_t>(u)] = search.all & ~(1U << u);

    // split the tree into prefix subtrees that workers take in order
    vector<Node> tasks;
    std::set<string> found;
    std::function<void(const Node &)> collect = [&](const Node & node) { tasks.push_back(node); };
    int split_depth = std::min(10, order * (order - 1) / 2);
    search.explore(root, found, &collect, split_depth);

    vector<std::set<string>> per_task(tasks.size());
    std::atomic<std::size_t> next_task{0};
    auto worker = [&]() {
        while (true) {
            auto i = next_task.fetch_add(1);
            if (i >= tasks.size())
                return;
            // the split node was charged and checked already; expand its children
            auto node = tasks[i];
            auto [u, v] = search.next_slot(node);
            for (bool edge : {true, false}) {
                Node child = node;
                search.decide(child, u, v, edge);
                ++child.depth;
                search.explore(child, per_task[i], nullptr, 0);
            }
        }
    };

    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1)
        worker();
    else {
        vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto & th : pool)
            th.join();
    }

    for (auto & s : per_task)
        found.insert(s.begin(), s.end());

    ConnectedLayer result{vector<string>(found.begin(), found.end()), spent.load(), ! aborted.load()};
    if (budget != 0 && result.nodes > budget)
        result.nodes = budget;
    if (result.complete) {
        std::lock_guard lock(layer_memo_mutex);
        layer_memo.emplace(key, result);
    }
    return result;
}

namespace
{
    struct ComponentState
    {
        int64_t lower = 0;
        bool exact = false;
        bool searchable = true;
        vector<string> graphs;
    };

    void partitions(int remaining, int smallest, vector<int> & current, vector<vector<int>> & out)
    {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = smallest; part <= remaining; ++part) {
            current.push_back(part);
            partitions(remaining - part, part, current, out);
            current.pop_back();
        }
    }

    auto multichoose(int64_t kinds, int64_t count) -> int64_t
    {
        return binomial(kinds + count - 1, count);
    }

    // every multiset of component classes realising the given partition
    void assemble(const vector<int> & parts, const std::map<int, ComponentState> & state, std::set<string> & out, std::size_t cap)
    {
        std::map<int, int> multiplicity;
        for (auto s : parts)
            ++multiplicity[s];
        vector<std::pair<int, int>> groups(multiplicity.begin(), multiplicity.end());

        vector<vector<int>> choice(groups.size());
        std::function<void(std::size_t)> go = [&](std::size_t g) {
            if (out.size() >= cap)
                return;
            if (g == groups.size()) {
                Graph whole(0);
                for (std::size_t i = 0; i < groups.size(); ++i)
                    for (auto idx : choice[i])
                        whole = whole.disjoint_union(from_graph6(state.at(groups[i].first).graphs[static_cast<std::size_t>(idx)]));
                out.insert(canonical_graph6(whole));
                return;
            }
            auto kinds = static_cast<int>(state.at(groups[g].first).graphs.size());
            std::function<void(int, int)> pick = [&](int from, int left) {
                if (left == 0) {
                    go(g + 1);
                    return;
                }
                for (int k = from; k < kinds; ++k) {
                    choice[g].push_back(k);
                    pick(k, left - 1);
                    choice[g].pop_back();
                }
            };
            pick(0, groups[g].second);
        };
        go(0);
    }
}

auto min_edges_exact(const SearchProblem & p, const SearchOptions & options) -> SearchResult
{
    SearchResult result;
    result.n = p.n;
    result.t = p.t;
    result.optimality = "exact";

    auto dmin = p.min_degree();
    auto smallest_part = dmin + 1;
    if (p.n < smallest_part || p.n == 0) {
        result.certified = true;
        return result;
    }

    std::map<int, ComponentState> state;
    for (int s = smallest_part; s <= p.n; ++s) {
        ComponentState cs;
        cs.lower = std::max<int64_t>((static_cast<int64_t>(s) * dmin + 1) / 2, s - 1);
        cs.searchable = s <= std::min(options.max_certified_n, max_order);
        state[s] = cs;
    }

    vector<vector<int>> all_partitions;
    vector<int> current;
    partitions(p.n, smallest_part, current, all_partitions);

    auto cost = [&](const vector<int> & parts) {
        int64_t total = 0;
        for (auto s : parts)
            total += state[s].lower;
        return total;
    };
    auto all_exact = [&](const vector<int> & parts) {
        return std::all_of(parts.begin(), parts.end(), [&](int s) { return state[s].exact; });
    };

    bool certified = true;
    while (true) {
        int64_t best = -1;
        for (auto & parts : all_partitions) {
            auto c = cost(parts);
            if (best < 0 || c < best)
                best = c;
        }

        std::set<int> to_deepen;
        for (auto & parts : all_partitions)
            if (cost(parts) == best)
                for (auto s : parts)
                    if (! state[s].exact)
                        to_deepen.insert(s);
        if (to_deepen.empty())
            break;

        bool stuck = false;
        for (auto s : to_deepen) {
            auto & cs = state[s];
            if (! cs.searchable) {
                stuck = true;
                continue;
            }
            uint64_t remaining = 0;
            if (options.budget != 0) {
                if (result.nodes >= options.budget) {
                    stuck = true;
                    break;
                }
                remaining = options.budget - result.nodes;
            }
            auto layer = connected_layer(s, p, cs.lower, remaining, options.threads);
            result.nodes += layer.nodes;
            if (! layer.complete) {
                stuck = true;
                break;
            }
            if (layer.graphs.empty())
                ++cs.lower;
            else {
                cs.exact = true;
                cs.graphs = std::move(layer.graphs);
            }
        }
        if (stuck) {
            certified = false;
            break;
        }
    }

    // optimum (or best known) among partitions whose parts are all settled
    optional<int64_t> best_known;
    for (auto & parts : all_partitions)
        if (all_exact(parts)) {
            auto c = cost(parts);
            if (! best_known || c < *best_known)
                best_known = c;
        }

    result.certified = certified;
    result.min_edges = best_known;
    if (best_known) {
        std::set<string> witnesses;
        int64_t classes = 0;
        for (auto & parts : all_partitions) {
            if (! all_exact(parts) || cost(parts) != *best_known)
                continue;
            std::map<int, int64_t> multiplicity;
            for (auto s : parts)
                ++multiplicity[s];
            int64_t here = 1;
            for (auto [s, m] : multiplicity)
                here *= multichoose(static_cast<int64_t>(state[s].graphs.size()), m);
            classes += here;
            assemble(parts, state, witnesses, 100000);
        }
        result.witness_classes = classes;
        for (auto & w : witnesses) {
            if (result.witnesses.size() >= options.max_witnesses)
                break;
            result.witnesses.push_back(w);
        }
    }
    else if (certified)
        result.certified = true;

    for (auto & [s, cs] : state)
        if (cs.exact)
            result.component_optima.emplace_back(s, cs.lower);
    return result;
}

auto brute_force_oracle(const SearchProblem & p) -> SearchResult
{
    if (p.n > 8)
        throw std::invalid_argument("brute_force_oracle: n must be at most 8");

    SearchResult result;
    result.n = p.n;
    result.t = p.t;
    result.optimality = "oracle-confirmed";
    result.certified = true;
    if (p.n == 0)
        return result;

    auto n = p.n;
    auto required = p.required_triangles();
    vector<std::pair<int, int>> slot;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            slot.emplace_back(i, j);
    auto slots = static_cast<int>(slot.size());

    auto relabel = [&](uint32_t mask, const vector<int> & perm) {
        uint32_t out = 0;
        for (int k = 0; k < slots; ++k)
            if (mask >> k & 1U) {
                auto a = perm[static_cast<std::size_t>(slot[static_cast<std::size_t>(k)].first)];
                auto b = perm[static_cast<std::size_t>(slot[static_cast<std::size_t>(k)].second)];
                if (a > b)
                    std::swap(a, b);
                out |= 1U << (b * (b - 1) / 2 + a);
            }
        return out;
    };

    for (int m = 0; m <= slots; ++m) {
        std::set<uint32_t> classes;
        uint64_t visited = 0;
        auto visit = [&](uint32_t mask) {
            ++visited;
            std::array<int, 8> degree{};
            std::array<uint32_t, 8> adj{};
            for (int k = 0; k < slots; ++k)
                if (mask >> k & 1U) {
                    auto [a, b] = slot[static_cast<std::size_t>(k)];
                    ++degree[static_cast<std::size_t>(a)];
                    ++degree[static_cast<std::size_t>(b)];
                    adj[static_cast<std::size_t>(a)] |= 1U << b;
                    adj[static_cast<std::size_t>(b)] |= 1U << a;
                }
            for (int v = 1; v < n; ++v)
                if (degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(v - 1)])
                    return;
            for (int v = 0; v < n; ++v) {
                int64_t count = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if ((adj[static_cast<std::size_t>(v)] >> a & 1U) && (adj[static_cast<std::size_t>(v)] >> b & 1U)
                            && (adj[static_cast<std::size_t>(a)] >> b & 1U))
                            ++count;
                if (count < required)
                    return;
            }
            // smallest relabelling among permutations that keep degrees sorted
            vector<int> perm(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                perm[static_cast<std::size_t>(v)] = v;
            uint32_t best = mask;
            std::function<void(int)> permute_blocks = [&](int start) {
                if (start == n) {
                    best = std::min(best, relabel(mask, perm));
                    return;
                }
                int end = start;
                while (end < n && degree[static_cast<std::size_t>(end)] == degree[static_cast<std::size_t>(start)])
                    ++end;
                auto first = perm.begin() + start, last = perm.begin() + end;
                std::sort(first, last);
                do
                    permute_blocks(end);
                while (std::next_permutation(first, last));
            };
            permute_blocks(0);
            classes.insert(best);
        };

        if (m == 0)
            visit(0);
        else {
            uint64_t limit = uint64_t{1} << slots;
            uint64_t mask = (uint64_t{1} << m) - 1;
            while (mask < limit) {
                visit(static_cast<uint32_t>(mask));
                auto low = mask & (~mask + 1);
                auto ripple = mask + low;
                mask = (((ripple ^ mask) >> 2) / low) | ripple;
            }
        }
        result.nodes += visited;

        if (! classes.empty()) {
            result.min_edges = m;
            result.witness_classes = static_cast<int64_t>(classes.size());
            std::set<string> keys;
            for (auto mask : classes) {
                Graph g(n);
                for (int k = 0; k < slots; ++k)
                    if (mask >> k & 1U)
                        g.add_edge(slot[static_cast<std::size_t>(k)].first, slot[static_cast<std::size_t>(k)].second);
                keys.insert(canonical_graph6(g));
            }
            for (auto & k : keys)
                if (result.witnesses.size() < 100)
                    result.witnesses.push_back(k);
            return result;
        }
    }
    return result;
}

}
