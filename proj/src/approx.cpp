#include "dim2/approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dim2/forcing.hpp"
#include "dim2/rng.hpp"

namespace dim2 {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

void require_transitive_dag(const Digraph& g, const std::string& op) {
    if (!is_acyclic(g))
        throw CyclicInput(op + " requires an acyclic graph");
    if (!is_transitive(g))
        throw NotTransitive(op + " requires a transitive graph");
}

// Scores candidate orders by how many edges of g the induced subgraph keeps;
// shares one tie-break linearization across all evaluations.
class KeptEvaluator {
public:
    explicit KeptEvaluator(const Digraph& g)
        : g_(g), l_g_(topological_order(g)), edges_(g.edges()) {}

    const LinearOrder& l_g() const { return l_g_; }

    std::size_t operator()(const LinearOrder& cand) const {
        LinearOrder o1 = complement_merge_unchecked(g_, cand, l_g_);
        LinearOrder o2 = complement_merge_unchecked(g_, cand.reversed(), l_g_);
        std::size_t kept = 0;
        for (const Edge& e : edges_)
            if (o1.rank(e.tail) < o1.rank(e.head) && o2.rank(e.tail) < o2.rank(e.head))
                ++kept;
        return kept;
    }

private:
    const Digraph& g_;
    LinearOrder l_g_;
    std::vector<Edge> edges_;
};

} // namespace

Digraph tree_cover(const Digraph& g) {
    require_transitive_dag(g, "tree_cover");
    std::size_t n = g.vertex_count();
    std::vector<Edge> forest;
    for (VertexId v = 0; v < n; ++v) {
        VertexId pick = kNone;
        std::size_t pick_desc = 0;
        for (VertexId p : g.predecessors(v)) {
            // Only reduction edges qualify: no intermediate p -> z -> v.
            bool reduction = true;
            for (VertexId z : g.successors(p)) {
                if (z != v && g.has_edge(z, v)) {
                    reduction = false;
                    break;
                }
            }
            if (!reduction)
                continue;
            // g is transitive, so |successors| counts all descendants.
            std::size_t desc = g.successors(p).size();
            if (pick == kNone || desc > pick_desc) {
                pick = p;
                pick_desc = desc;
            }
        }
        if (pick != kNone)
            forest.push_back({pick, v});
    }
    return transitive_closure(Digraph(g.vertices(), std::move(forest)));
}

Digraph improve(const Digraph& g, const Digraph& s) {
    if (!(s.vertices() == g.vertices()))
        throw NotSubgraph("subgraph is over a different vertex set");
    for (const Edge& e : s.edges())
        if (!g.has_edge(e.tail, e.head))
            throw NotSubgraph("edge " + s.vertices().name(e.tail) + " -> " +
                              s.vertices().name(e.head) + " is not in the graph");
    require_transitive_dag(g, "improve");
    if (!is_transitive(s))
        throw NotTransitive("improve requires a transitive subgraph");
    auto ord = complement_orientation_order(s);
    if (!ord)
        throw NotOrientable("subgraph has no transitively orientable complement");
    return induced_subgraph_unchecked(g, *ord);
}

SearchResult local_search(const Digraph& g, std::size_t budget, std::uint64_t seed) {
    require_transitive_dag(g, "local_search");
    KeptEvaluator eval(g);
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    SplitMix64 rng(seed);

    std::vector<VertexId> cur(eval.l_g().sequence().begin(), eval.l_g().sequence().end());
    std::size_t iters = 0;
    auto score = [&](const std::vector<VertexId>& perm) {
        ++iters;
        return eval(LinearOrder(perm));
    };
    std::size_t cur_kept = score(cur);
    std::vector<VertexId> best = cur;
    std::size_t best_kept = cur_kept;
    auto consider_best = [&]() {
        if (cur_kept > best_kept || (cur_kept == best_kept && cur < best)) {
            best = cur;
            best_kept = cur_kept;
        }
    };

    while (iters < budget && best_kept < m && n >= 2) {
        // Climb with adjacent transpositions until a full pass stalls.
        bool improved = true;
        while (improved && iters < budget && cur_kept < m) {
            improved = false;
            for (std::size_t p = 0; p + 1 < n && iters < budget; ++p) {
                std::swap(cur[p], cur[p + 1]);
                std::size_t k = score(cur);
                if (k > cur_kept) {
                    cur_kept = k;
                    consider_best();
                    improved = true;
                } else {
                    std::swap(cur[p], cur[p + 1]);
                }
            }
        }
        if (iters >= budget || best_kept >= m)
            break;
        // Try kicking out of the local optimum with single-vertex moves.
        bool gained = false;
        for (std::size_t t = 0; t < n && iters < budget && cur_kept < m; ++t) {
            std::size_t from = rng.next_below(n);
            std::size_t to = rng.next_below(n - 1);
            if (to >= from)
                ++to;
            std::vector<VertexId> cand = cur;
            VertexId v = cand[from];
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(from));
            cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(to), v);
            std::size_t k = score(cand);
            if (k > cur_kept) {
                cur = std::move(cand);
                cur_kept = k;
                consider_best();
                gained = true;
            }
        }
        if (gained || iters >= budget || best_kept >= m)
            continue;
        // Restart from a fresh random permutation.
        for (std::size_t k = n - 1; k > 0; --k)
            std::swap(cur[k], cur[rng.next_below(k + 1)]);
        cur_kept = score(cur);
        consider_best();
    }

    LinearOrder best_order(std::move(best));
    Digraph sub = induced_subgraph_unchecked(g, best_order);
    return SearchResult{std::move(best_order), std::move(sub), best_kept, m - best_kept, iters};
}

SearchResult exhaustive_best(const Digraph& g) {
    if (g.vertex_count() > 9)
        throw TooLarge("exhaustive_best is limited to 9 vertices");
    require_transitive_dag(g, "exhaustive_best");
    KeptEvaluator eval(g);
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();

    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexId> best = perm;
    std::size_t best_kept = eval(LinearOrder(perm));
    std::size_t iters = 1;
    while (best_kept < m && std::next_permutation(perm.begin(), perm.end())) {
        std::size_t k = eval(LinearOrder(perm));
        ++iters;
        if (k > best_kept) {
            best_kept = k;
            best = perm;
        }
    }

    LinearOrder best_order(std::move(best));
    Digraph sub = induced_subgraph_unchecked(g, best_order);
    return SearchResult{std::move(best_order), std::move(sub), best_kept, m - best_kept, iters};
}

std::vector<std::vector<Edge>> enumerate_locally_maximal_2d(const Digraph& g) {
    if (g.vertex_count() > 5)
        throw TooLarge("enumerate_locally_maximal_2d is limited to 5 vertices");
    if (g.edge_count() > 12)
        throw TooLarge("enumerate_locally_maximal_2d is limited to 12 edges");
    if (!is_acyclic(g))
        throw CyclicInput("enumerate_locally_maximal_2d requires an acyclic graph");

    std::vector<Edge> all = g.edges();
    std::size_t m = all.size();
    std::vector<std::vector<Edge>> feasible;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Edge> subset;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b))
                subset.push_back(all[b]);
        Digraph cand(g.vertices(), subset);
        if (!is_transitive(cand))
            continue;
        if (!is_transitively_orientable(complement(cand)))
            continue;
        feasible.push_back(std::move(subset));
    }

    // Largest first; anything strictly contained in an accepted set is
    // dominated (every feasible set extends to a maximal one).
    std::sort(feasible.begin(), feasible.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    std::vector<std::vector<Edge>> maximal;
    for (const auto& s : feasible) {
        bool dominated = false;
        for (const auto& t : maximal) {
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

} // namespace dim2
