#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sfactor/group.hpp"

namespace sfactor {

// Undirected simple graph on at most Bits::max_bits vertices, adjacency as
// bit-vector rows.  `cayley` records provenance: graphs built by
// cayley_graph are vertex-transitive with coset-copy components, which the
// solver exploits.
struct Graph {
    int vertex_count = 0;
    std::vector<Bits> adj;
    std::vector<std::string> vertex_labels;
    bool cayley = false;

    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < vertex_count; ++v) d = std::max(d, degree(v));
        return d;
    }

    long edge_count() const {
        long twice = 0;
        for (int v = 0; v < vertex_count; ++v) twice += degree(v);
        return twice / 2;
    }

    Bits closed_neighborhood(int v) const { return adj[v] | Bits::single(v); }
    Bits vertex_mask() const { return Bits::first_n(vertex_count); }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

// dA = A^-1 A \ {e}; inverse-closed and identity-free by construction
ElementSet boundary_set(const FiniteGroup& g, const ElementSet& a);

// Left Cayley graph: u ~ v iff v u^-1 in S.  Requires e not in S and S = S^-1.
Graph cayley_graph(const FiniteGroup& g, const ElementSet& s);

// Connected components of Cay(G,S) as element sets; each is a right coset
// of <S>, ordered by ascending minimal element.
std::vector<ElementSet> graph_components(const FiniteGroup& g, const ElementSet& s);

// components of an arbitrary graph, ordered by ascending minimal vertex
std::vector<Bits> components_of(const Graph& g);

// Byte-stable DOT text; highlighted vertices get a filled style.
std::string export_dot(const Graph& g, const Bits* highlight = nullptr);

// Induced subgraph plus the map from new vertex ids back to old ones
// (ascending, so relative order is preserved).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bits& vertices);

// Induced subgraph on V \ N[v].  For a vertex-transitive input both
// invariants drop by exactly one: i(G) = i(X)+1 and alpha(G) = alpha(X)+1.
Graph vt_reduce(const Graph& g, int v);
std::pair<Graph, std::vector<int>> vt_reduce_with_map(const Graph& g, int v);

}  // namespace sfactor
