#include "sfactor/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sfactor {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.vertex_count = n;
    g.adj.assign(n, Bits{});
    g.vertex_labels.resize(n);
    for (int v = 0; v < n; ++v) g.vertex_labels[v] = std::to_string(v);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

ElementSet boundary_set(const FiniteGroup& g, const ElementSet& a) {
    if (a.empty()) throw Error(errc::empty_set, "boundary set of an empty subset");
    ElementSet s(g.order);
    for (int x = a.bits.lowest(); x >= 0; x = a.bits.next(x))
        for (int y = a.bits.lowest(); y >= 0; y = a.bits.next(y)) s.bits.set(g.mul(g.inv(x), y));
    s.bits.reset(g.identity);
    return s;
}

Graph cayley_graph(const FiniteGroup& g, const ElementSet& s) {
    if (s.contains(g.identity))
        throw Error(errc::bad_entry, "connection set must not contain the identity");
    for (int x = s.bits.lowest(); x >= 0; x = s.bits.next(x))
        if (!s.contains(g.inv(x)))
            throw Error(errc::bad_entry, "connection set must be inverse-closed");

    Graph out;
    out.vertex_count = g.order;
    out.adj.assign(g.order, Bits{});
    out.vertex_labels = g.labels;
    out.cayley = true;
    for (int u = 0; u < g.order; ++u)
        for (int x = s.bits.lowest(); x >= 0; x = s.bits.next(x)) out.adj[u].set(g.mul(x, u));
    return out;
}

std::vector<Bits> components_of(const Graph& g) {
    std::vector<Bits> out;
    Bits seen;
    for (int root = 0; root < g.vertex_count; ++root) {
        if (seen.test(root)) continue;
        Bits comp = Bits::single(root);
        Bits frontier = comp;
        while (frontier.any()) {
            Bits next;
            for (int v = frontier.lowest(); v >= 0; v = frontier.next(v)) next |= g.adj[v];
            frontier = next.minus(comp);
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<ElementSet> graph_components(const FiniteGroup& g, const ElementSet& s) {
    Graph graph = cayley_graph(g, s);
    std::vector<ElementSet> out;
    for (const Bits& comp : components_of(graph)) {
        ElementSet cell(g.order);
        cell.bits = comp;
        out.push_back(std::move(cell));
    }
    return out;
}

std::string export_dot(const Graph& g, const Bits* highlight) {
    std::ostringstream out;
    out << "graph cayley {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        out << "  " << v << " [label=\"" << g.vertex_labels[v] << "\"";
        if (highlight && highlight->test(v)) out << " style=filled fillcolor=palegreen";
        out << "];\n";
    }
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = g.adj[u].next(u); v >= 0; v = g.adj[u].next(v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bits& vertices) {
    std::vector<int> map;
    for (int v = vertices.lowest(); v >= 0; v = vertices.next(v)) map.push_back(v);
    int m = static_cast<int>(map.size());
    Graph sub;
    sub.vertex_count = m;
    sub.adj.assign(m, Bits{});
    sub.vertex_labels.resize(m);
    for (int i = 0; i < m; ++i) {
        sub.vertex_labels[i] = g.vertex_labels[map[i]];
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(map[i], map[j])) {
                sub.adj[i].set(j);
                sub.adj[j].set(i);
            }
    }
    return {std::move(sub), std::move(map)};
}

std::pair<Graph, std::vector<int>> vt_reduce_with_map(const Graph& g, int v) {
    Bits keep = g.vertex_mask().minus(g.closed_neighborhood(v));
    return induced_subgraph(g, keep);
}

Graph vt_reduce(const Graph& g, int v) { return vt_reduce_with_map(g, v).first; }

}  // namespace sfactor
