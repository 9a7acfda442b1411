// Pointed multigraphs with embedded labeled cycles, admissible edge/forest
// collapses, and exhaustive enumeration of the quotient complexes at small
// parameters.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgb/words.hpp"

namespace fgb {

struct InadmissibleEdge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MultiGraph {
  int num_vertices = 0;
  int basepoint = 0;
  std::vector<std::pair<int, int>> edges;  // endpoints; loops allowed

  int num_edges() const { return static_cast<int>(edges.size()); }
  int genus() const { return num_edges() - num_vertices + 1; }
  int degree(int v) const;
  bool connected() const;
  std::vector<int> bridge_edges() const;
};

// Embedded circle: edge ids in traversal order starting (and ending) at base.
struct Cycle {
  int base = 0;
  std::vector<int> edges;
};

// nk: cycle base points are marked and valence 2 is allowed there and at the
//     basepoint.  kn: no marked cycle points; valence 2 only at the basepoint.
enum class GraphVariant { nk, kn };
std::string variant_name(GraphVariant v);
std::optional<GraphVariant> parse_variant(const std::string& s);

struct NkGraph {
  MultiGraph graph;
  std::vector<Cycle> cycles;
};

// Vertices visited by the cycle starting at its base; nullopt when the edge
// list is not a closed walk of distinct edges.
std::optional<std::vector<int>> cycle_vertex_path(const MultiGraph& g, const Cycle& c);

// All violated conditions; empty means the graph is valid.
std::vector<std::string> validate(const NkGraph& g, int n, int k, GraphVariant variant);

// Bipartite incidence structure: one node per cycle, one node per point lying
// on at least two cycles, an edge when the point lies on the cycle.
struct DualGraph {
  MultiGraph graph;            // nodes 0..k-1 are cycles, then shared points
  std::vector<int> shared_points;  // vertex ids in the host graph
  bool forest = false;
};
DualGraph dual_cycle_graph(const NkGraph& g);

// Number of connected components of the union of the cycles.
int cycle_union_components(const NkGraph& g);

// An edge is collapsible when its endpoints are distinct and, for non-cycle
// edges, lie in different components of the union of the cycles.
bool edge_collapsible(const NkGraph& g, int e, std::string* reason = nullptr);
NkGraph collapse_edge(const NkGraph& g, int e);  // throws InadmissibleEdge

// A forest is admissible when it contains no graph cycle, keeps at least one
// edge of every marked cycle, and its non-cycle part stays a forest after
// contracting the cycle union.
bool forest_admissible(const NkGraph& g, const std::vector<int>& edge_ids);
std::vector<std::vector<int>> admissible_forests(const NkGraph& g);
int max_admissible_forest_size(const NkGraph& g);
NkGraph collapse_forest(const NkGraph& g, std::vector<int> edge_ids);

// A maximal admissible forest avoiding the given edge; collapsing it yields
// a reduced graph.
std::vector<int> max_forest_avoiding(const NkGraph& g, int e);

// Canonical certificate under basepoint-preserving isomorphism; cycles map
// label-to-label unless sigma is set, in which case labels may permute.
std::string canonical_certificate(const NkGraph& g, GraphVariant variant, bool sigma);
NkGraph canonical_form(const NkGraph& g, GraphVariant variant, bool sigma);

struct EnumerationBudget {
  int max_edges = 9;
};

struct EnumeratedComplex {
  int n = 0;
  int k = 0;
  GraphVariant variant = GraphVariant::nk;
  bool sigma = false;
  std::vector<NkGraph> graphs;  // canonical representatives, certificate order
};

// Exhaustive enumeration up to isomorphism.  The serial driver is the
// reference; the parallel driver shards the underlying-graph stream across
// OpenMP threads and merges through canonical-form deduplication.
EnumeratedComplex enumerate_graphs(int n, int k, GraphVariant variant, bool sigma,
                                   const EnumerationBudget& budget = {},
                                   bool parallel = true);
EnumeratedComplex enumerate_graphs_serial(int n, int k, GraphVariant variant, bool sigma,
                                          const EnumerationBudget& budget = {});

// Largest admissible forest over the enumerated complex = dimension of the
// quotient complex.
int quotient_dimension(const EnumeratedComplex& labeled);
// Closed form the enumeration is checked against.
int quotient_dimension_formula(int n, int k, GraphVariant variant);

struct CensusRow {
  int c = 0;          // components of the cycle union
  int v = 0;
  int e = 0;
  int count = 0;      // maximally blown-up graphs with this c
  bool matches = false;  // v == 2n+2k+c-1 and e == (3v-c-1)/2
};
// Vertex/edge census over the poset-maximal graphs of a labeled enumeration.
std::vector<CensusRow> census(const EnumeratedComplex& labeled, int n, int k);

// Text exchange format:
//   nk-graph n k
//   vertices V
//   basepoint b
//   edge <id> <u> <v>
//   cycle <j> base <b> edges <id...>
std::string to_exchange_format(const NkGraph& g, int n, int k);
NkGraph from_exchange_format(const std::string& text, int* n = nullptr, int* k = nullptr);

}  // namespace fgb
