#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dim2/approx.hpp"
#include "dim2/forcing.hpp"
#include "dim2/io.hpp"
#include "dim2/merge.hpp"
#include "dim2/rng.hpp"
#include "dim2/twodim.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dim2::Error("cannot open '" + path + "'");
    return in;
}

dim2::Digraph load_graph(const std::string& path) {
    auto in = open_input(path);
    return dim2::read_edge_list(in);
}

dim2::Digraph load_graph(const std::string& path, const dim2::VertexTable& table) {
    auto in = open_input(path);
    return dim2::read_edge_list(in, table);
}

dim2::LinearOrder load_order(const std::string& path, const dim2::VertexTable& table) {
    auto in = open_input(path);
    return dim2::read_order(in, table);
}

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw dim2::Error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_stats(std::size_t kept, std::size_t removed) {
    std::cerr << "kept=" << kept << " removed=" << removed << "\n";
}

dim2::LinearOrder random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<dim2::VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    dim2::SplitMix64 rng(seed);
    for (std::size_t k = n; k > 1; --k)
        std::swap(perm[k - 1], perm[rng.next_below(k)]);
    return dim2::LinearOrder(std::move(perm));
}

int run(const CLI::App& app,
        const std::string& graph_path, const std::string& second_path,
        const std::string& out_path, bool check, bool stats, bool auto_condense,
        std::uint64_t seed, std::size_t search_budget, std::size_t bench_reps) {
    using namespace dim2;

    if (app.got_subcommand("closure")) {
        Digraph g = load_graph(graph_path);
        if (!is_acyclic(g)) {
            if (!auto_condense)
                throw CyclicInput("graph has a directed cycle (use --auto-condense)");
            g = condense(g).first;
        }
        Sink sink(out_path);
        write_edge_list(sink.stream(), transitive_closure(g));
        return 0;
    }
    if (app.got_subcommand("condense")) {
        Digraph g = load_graph(graph_path);
        Sink sink(out_path);
        write_edge_list(sink.stream(), condense(g).first);
        return 0;
    }
    if (app.got_subcommand("orient-complement")) {
        Digraph g = load_graph(graph_path);
        auto ord = complement_orientation_order(g);
        if (!ord)
            throw NotOrientable("complement is not transitively orientable");
        Sink sink(out_path);
        write_order(sink.stream(), *ord, g.vertices());
        return 0;
    }
    if (app.got_subcommand("merge")) {
        Digraph g = load_graph(graph_path);
        LinearOrder l = load_order(second_path, g.vertices());
        Sink sink(out_path);
        write_order(sink.stream(), merge(g, l), g.vertices());
        return 0;
    }
    if (app.got_subcommand("cmerge")) {
        Digraph g = load_graph(graph_path);
        LinearOrder l = load_order(second_path, g.vertices());
        LinearOrder result = check ? complement_merge(g, l) : complement_merge_unchecked(g, l);
        Sink sink(out_path);
        write_order(sink.stream(), result, g.vertices());
        return 0;
    }
    if (app.got_subcommand("index")) {
        Digraph g = load_graph(graph_path);
        LinearOrder l = load_order(second_path, g.vertices());
        TwoDimIndex idx = check ? build_index(g, l) : build_index_unchecked(g, l);
        Sink sink(out_path);
        write_index(sink.stream(), idx, g.vertices());
        return 0;
    }
    if (app.got_subcommand("query")) {
        auto in = open_input(graph_path);
        auto [idx, table] = read_index(in);
        auto pairs = open_input(second_path);
        Sink sink(out_path);
        std::string line;
        while (std::getline(pairs, line)) {
            if (!line.empty() && line.front() == '#')
                continue;
            std::istringstream ls(line);
            std::string a, b, extra;
            if (!(ls >> a))
                continue;
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("query line must have exactly two labels");
            auto u = table.find(a);
            auto v = table.find(b);
            if (!u)
                throw UnknownVertex("unknown vertex '" + a + "'");
            if (!v)
                throw UnknownVertex("unknown vertex '" + b + "'");
            sink.stream() << (reachable(idx, *u, *v) ? '1' : '0') << '\n';
        }
        return 0;
    }
    if (app.got_subcommand("induced")) {
        Digraph g = load_graph(graph_path);
        LinearOrder l = load_order(second_path, g.vertices());
        Digraph sub = check ? induced_subgraph(g, l) : induced_subgraph_unchecked(g, l);
        Sink sink(out_path);
        write_edge_list(sink.stream(), sub);
        if (stats)
            print_stats(sub.edge_count(), g.edge_count() - sub.edge_count());
        return 0;
    }
    if (app.got_subcommand("tree-cover")) {
        Digraph g = load_graph(graph_path);
        Digraph t = tree_cover(g);
        Sink sink(out_path);
        write_edge_list(sink.stream(), t);
        if (stats)
            print_stats(t.edge_count(), g.edge_count() - t.edge_count());
        return 0;
    }
    if (app.got_subcommand("improve")) {
        Digraph g = load_graph(graph_path);
        Digraph s = load_graph(second_path, g.vertices());
        Digraph r = improve(g, s);
        Sink sink(out_path);
        write_edge_list(sink.stream(), r);
        if (stats)
            print_stats(r.edge_count(), g.edge_count() - r.edge_count());
        return 0;
    }
    if (app.got_subcommand("search")) {
        Digraph g = load_graph(graph_path);
        SearchResult r = local_search(g, search_budget, seed);
        Sink sink(out_path);
        write_edge_list(sink.stream(), r.best_subgraph);
        if (stats)
            print_stats(r.kept_edges, r.removed_edges);
        return 0;
    }
    if (app.got_subcommand("verify")) {
        Digraph g = load_graph(graph_path);
        bool acyclic = is_acyclic(g);
        bool transitive = is_transitive(g);
        std::cout << "acyclic: " << (acyclic ? "yes" : "no") << "\n";
        std::cout << "transitive: " << (transitive ? "yes" : "no") << "\n";
        bool ok;
        if (second_path.empty()) {
            bool twodim = acyclic && transitive && is_two_dimensional(g);
            std::cout << "2-dimensional: " << (twodim ? "yes" : "no") << "\n";
            ok = acyclic && transitive && twodim;
        } else {
            Digraph s = load_graph(second_path, g.vertices());
            bool included = true;
            for (const Edge& e : s.edges())
                if (!g.has_edge(e.tail, e.head)) {
                    included = false;
                    break;
                }
            bool s_transitive = is_transitive(s);
            bool s_twodim = included && s_transitive && is_acyclic(s) && is_two_dimensional(s);
            std::cout << "subgraph: " << (included ? "yes" : "no") << "\n";
            std::cout << "subgraph-transitive: " << (s_transitive ? "yes" : "no") << "\n";
            std::cout << "subgraph-2-dimensional: " << (s_twodim ? "yes" : "no") << "\n";
            ok = acyclic && transitive && included && s_transitive && s_twodim;
        }
        return ok ? 0 : 4;
    }
    if (app.got_subcommand("bench")) {
        Digraph g = load_graph(graph_path);
        LinearOrder l_g = topological_order(g);
        LinearOrder l_h = random_permutation(g.vertex_count(), seed);
        std::size_t reps = bench_reps == 0 ? 1 : bench_reps;
        double min_ms = 0, max_ms = 0;
        for (std::size_t r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            LinearOrder out = complement_merge_unchecked(g, l_h, l_g);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (r == 0 || ms < min_ms)
                min_ms = ms;
            if (r == 0 || ms > max_ms)
                max_ms = ms;
        }
        Sink sink(out_path);
        sink.stream() << "n=" << g.vertex_count() << " m=" << g.edge_count()
                      << " reps=" << reps << std::fixed << std::setprecision(3)
                      << " min_ms=" << min_ms << " max_ms=" << max_ms << "\n";
        return 0;
    }
    return 2; // unreachable: require_subcommand(1)
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal 2-dimensional subgraph approximation and O(1) reachability queries"};
    app.require_subcommand(1);

    std::string graph_path, second_path, out_path;
    bool check = false, stats = false, auto_condense = false;
    std::uint64_t seed = 0;
    std::size_t search_budget = 1000, bench_reps = 5;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");
    };

    auto* closure = app.add_subcommand("closure", "transitive closure of a DAG");
    closure->add_option("graph", graph_path, "edge-list file")->required();
    closure->add_flag("--auto-condense", auto_condense,
                      "condense strongly connected components first");
    add_output(closure);

    auto* condense_cmd = app.add_subcommand("condense", "condensation into strongly connected components");
    condense_cmd->add_option("graph", graph_path, "edge-list file")->required();
    add_output(condense_cmd);

    auto* orient = app.add_subcommand("orient-complement",
                                      "linear order describing a transitive orientation of the complement");
    orient->add_option("graph", graph_path, "edge-list file")->required();
    add_output(orient);

    auto* merge_cmd = app.add_subcommand("merge", "linear extension of graph and described complement orientation");
    merge_cmd->add_option("graph", graph_path, "edge-list file")->required();
    merge_cmd->add_option("order", second_path, "order file")->required();
    add_output(merge_cmd);

    auto* cmerge = app.add_subcommand("cmerge", "countdown merge of a transitive DAG with a complement orientation");
    cmerge->add_option("graph", graph_path, "edge-list file")->required();
    cmerge->add_option("order", second_path, "order file")->required();
    cmerge->add_flag("--check", check, "validate that the graph is transitive");
    add_output(cmerge);

    auto* index_cmd = app.add_subcommand("index", "two-linear-order reachability index");
    index_cmd->add_option("graph", graph_path, "edge-list file")->required();
    index_cmd->add_option("order", second_path, "order file")->required();
    index_cmd->add_flag("--check", check, "validate that the graph is transitive");
    add_output(index_cmd);

    auto* query = app.add_subcommand("query", "answer reachability queries from an index file");
    query->add_option("index", graph_path, "index file")->required();
    query->add_option("pairs", second_path, "file of vertex pairs")->required();
    add_output(query);

    auto* induced = app.add_subcommand("induced", "2-dimensional subgraph induced by a complement orientation");
    induced->add_option("graph", graph_path, "edge-list file")->required();
    induced->add_option("order", second_path, "order file")->required();
    induced->add_flag("--check", check, "validate that the graph is transitive");
    induced->add_flag("--stats", stats, "print kept/removed edge counts to stderr");
    add_output(induced);

    auto* tree = app.add_subcommand("tree-cover", "baseline tree-shaped transitive subgraph");
    tree->add_option("graph", graph_path, "edge-list file")->required();
    tree->add_flag("--stats", stats, "print kept/removed edge counts to stderr");
    add_output(tree);

    auto* improve_cmd = app.add_subcommand("improve", "grow a 2-dimensional subgraph within a larger graph");
    improve_cmd->add_option("graph", graph_path, "edge-list file")->required();
    improve_cmd->add_option("subgraph", second_path, "edge-list file of the seed subgraph")->required();
    improve_cmd->add_flag("--stats", stats, "print kept/removed edge counts to stderr");
    add_output(improve_cmd);

    auto* search = app.add_subcommand("search", "heuristic search for a large 2-dimensional subgraph");
    search->add_option("graph", graph_path, "edge-list file")->required();
    search->add_option("--budget", search_budget, "candidate evaluations allowed")
        ->default_val(std::size_t{1000});
    search->add_option("--seed", seed, "random seed")->default_val(std::uint64_t{0});
    search->add_flag("--stats", stats, "print kept/removed edge counts to stderr");
    add_output(search);

    auto* verify = app.add_subcommand("verify", "check transitivity/2-dimensionality; exit 4 on failure");
    verify->add_option("graph", graph_path, "edge-list file")->required();
    verify->add_option("subgraph", second_path, "optional subgraph to validate");

    auto* bench = app.add_subcommand("bench", "time the countdown merge on a graph");
    bench->add_option("graph", graph_path, "edge-list file")->required();
    bench->add_option("--seed", seed, "random seed for the complement orientation")
        ->default_val(std::uint64_t{0});
    bench->add_option("--budget", bench_reps, "repetitions")->default_val(std::size_t{5});
    add_output(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return run(app, graph_path, second_path, out_path, check, stats, auto_condense,
                   seed, search_budget, bench_reps);
    } catch (const dim2::CyclicInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dim2::NotTransitive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dim2::NotOrientable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dim2::NotSubgraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dim2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
