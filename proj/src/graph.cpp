#include "rectiplan/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "rectiplan/spq_tree.hpp"

namespace rectiplan {

graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw parse_error(0, "negative vertex count");
    graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(0, "vertex index out of range in edge " + std::to_string(e));
        if (u == v) throw parse_error(0, "self-loop in edge " + std::to_string(e));
        g.adj[u].push_back(e);
        g.adj[v].push_back(e);
    }
    return g;
}

// ==== classification ====

namespace {

bool is_connected(const graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.adj[v]) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n;
}

// Iterative low-point DFS. Parallel edges count as distinct, so a digon has
// no cut vertex and passes.
bool has_cut_vertex(const graph& g) {
    std::vector<int> num(g.n, -1), low(g.n, 0), parent_edge(g.n, -1), it(g.n, 0);
    int timer = 0;
    std::vector<int> stack;
    stack.push_back(0);
    num[0] = low[0] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < g.degree(v)) {
            int e = g.adj[v][it[v]++];
            if (e == parent_edge[v]) continue;
            int w = g.other_end(e, v);
            if (num[w] == -1) {
                num[w] = low[w] = timer++;
                parent_edge[w] = e;
                stack.push_back(w);
                if (v == 0) ++root_children;
            } else {
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= num[p]) return true;
            }
        }
    }
    return root_children > 1;
}

}  // namespace

bool is_biconnected(const graph& g) {
    if (g.n < 2 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 2) return false;
    return !has_cut_vertex(g);
}

bool is_simple_cycle_graph(const graph& g) {
    if (g.n < 2 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

graph_class classify(const graph& g) {
    graph_class c;
    c.is_degree4 = true;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 4) c.is_degree4 = false;

    c.is_biconnected = is_biconnected(g);
    c.is_simple_cycle = is_simple_cycle_graph(g);

    if (c.is_simple_cycle) {
        c.is_sp = true;
        c.is_independent_parallel = true;  // a cycle has no P-nodes
    } else if (c.is_biconnected) {
        try {
            spq_tree t = build_spq_tree(g);
            c.is_sp = true;
            c.is_independent_parallel = independent_parallel_poles(t);
        } catch (const reject_error&) {
            c.is_sp = false;
            c.is_independent_parallel = false;
        }
    }
    return c;
}

// ==== parsing and serialization ====

namespace {

graph parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            bool blank = true;
            for (char ch : line)
                if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
            if (!blank) return true;
        }
        ++lineno;
        return false;
    };

    if (!next_line()) throw parse_error(1, "empty input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw parse_error(lineno, "malformed header, expected \"n m\"");
    std::string junk;
    if (head >> junk) throw parse_error(lineno, "trailing tokens after header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error(lineno, "expected " + std::to_string(m) +
                                                        " edge lines, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error(lineno, "malformed edge line");
        if (es >> junk) throw parse_error(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex index out of range");
        if (u == v) throw parse_error(lineno, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) throw parse_error(lineno, "unexpected content after edge list");
    return make_graph(static_cast<int>(n), std::move(edges));
}

graph parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line number, for uniform error reporting
        size_t upto = std::min(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw parse_error(line, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error(1, "JSON graph must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw parse_error(1, "\"n\" must be an integer");
    long long n = j["n"].get<long long>();
    if (n < 0) throw parse_error(1, "negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw parse_error(1, "each edge must be a pair of integers");
        long long u = item[0].get<long long>(), v = item[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error(1, "vertex index out of range");
        if (u == v) throw parse_error(1, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

graph parse_graph(std::string_view text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_json(text);
        break;
    }
    return parse_text(text);
}

std::string to_text(const graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_json(const graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j.dump();
}

}  // namespace rectiplan
