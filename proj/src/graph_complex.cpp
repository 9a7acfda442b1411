#include "fgb/graph_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

bool MultiGraph::connected() const {
  if (num_vertices == 0) return false;
  UnionFind uf(num_vertices);
  for (const auto& [a, b] : edges) uf.unite(a, b);
  for (int v = 1; v < num_vertices; ++v) {
    if (uf.find(v) != uf.find(0)) return false;
  }
  return true;
}

std::vector<int> MultiGraph::bridge_edges() const {
  const int V = num_vertices;
  const int E = num_edges();
  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbor, edge id)
  for (int e = 0; e < E; ++e) {
    auto [a, b] = edges[e];
    if (a == b) continue;  // loops are never bridges
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  std::vector<int> disc(V, -1), low(V, 0);
  std::vector<int> bridges;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int in_edge) {
    disc[v] = low[v] = timer++;
    for (auto [to, e] : adj[v]) {
      if (e == in_edge) continue;
      if (disc[to] >= 0) {
        low[v] = std::min(low[v], disc[to]);
      } else {
        dfs(to, e);
        low[v] = std::min(low[v], low[to]);
        if (low[to] > disc[v]) bridges.push_back(e);
      }
    }
  };
  for (int v = 0; v < V; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::string variant_name(GraphVariant v) { return v == GraphVariant::nk ? "nk" : "kn"; }

std::optional<GraphVariant> parse_variant(const std::string& s) {
  if (s == "nk") return GraphVariant::nk;
  if (s == "kn") return GraphVariant::kn;
  return std::nullopt;
}

std::optional<std::vector<int>> cycle_vertex_path(const MultiGraph& g, const Cycle& c) {
  if (c.edges.empty()) return std::nullopt;
  std::set<int> seen_edges(c.edges.begin(), c.edges.end());
  if (seen_edges.size() != c.edges.size()) return std::nullopt;
  std::vector<int> path;
  int cur = c.base;
  for (int e : c.edges) {
    if (e < 0 || e >= g.num_edges()) return std::nullopt;
    auto [a, b] = g.edges[e];
    path.push_back(cur);
    if (cur == a) {
      cur = b;
    } else if (cur == b) {
      cur = a;
    } else {
      return std::nullopt;
    }
  }
  if (cur != c.base) return std::nullopt;
  return path;
}

std::vector<std::string> validate(const NkGraph& g, int n, int k, GraphVariant variant) {
  std::vector<std::string> bad;
  const MultiGraph& mg = g.graph;
  if (mg.num_vertices < 1) {
    bad.push_back("graph has no vertices");
    return bad;
  }
  if (mg.basepoint < 0 || mg.basepoint >= mg.num_vertices) {
    bad.push_back("basepoint out of range");
    return bad;
  }
  for (const auto& [a, b] : mg.edges) {
    if (a < 0 || a >= mg.num_vertices || b < 0 || b >= mg.num_vertices) {
      bad.push_back("edge endpoint out of range");
      return bad;
    }
  }
  if (!mg.connected()) bad.push_back("graph is not connected");
  if (mg.genus() != n + k) {
    bad.push_back("genus " + std::to_string(mg.genus()) + " != n+k = " + std::to_string(n + k));
  }
  if (static_cast<int>(g.cycles.size()) != k) {
    bad.push_back("expected " + std::to_string(k) + " cycles");
    return bad;
  }

  std::vector<std::set<int>> cyc_vertices(k);
  for (int j = 0; j < k; ++j) {
    auto path = cycle_vertex_path(mg, g.cycles[j]);
    if (!path) {
      bad.push_back("cycle " + std::to_string(j + 1) + " is not a closed edge walk");
      return bad;
    }
    std::set<int> verts(path->begin(), path->end());
    if (verts.size() != path->size()) {
      bad.push_back("cycle " + std::to_string(j + 1) + " is not an embedded circle");
      return bad;
    }
    cyc_vertices[j] = std::move(verts);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::set<int> ei(g.cycles[i].edges.begin(), g.cycles[i].edges.end());
      for (int e : g.cycles[j].edges) {
        if (ei.count(e)) {
          bad.push_back("cycles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " share an edge");
        }
      }
      std::vector<int> common;
      std::set_intersection(cyc_vertices[i].begin(), cyc_vertices[i].end(),
                            cyc_vertices[j].begin(), cyc_vertices[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) {
        bad.push_back("cycles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " meet in more than a point");
      }
    }
  }
  if (!dual_cycle_graph(g).forest) bad.push_back("dual graph of the cycles is not a forest");
  for (int e : mg.bridge_edges()) {
    bad.push_back("separating edge " + std::to_string(e));
  }
  for (int v = 0; v < mg.num_vertices; ++v) {
    int d = mg.degree(v);
    if (d < 2) {
      bad.push_back("vertex " + std::to_string(v) + " has valence " + std::to_string(d));
      continue;
    }
    if (d == 2) {
      if (variant == GraphVariant::kn) {
        if (v != mg.basepoint) {
          bad.push_back("valence-2 vertex " + std::to_string(v) + " is not the basepoint");
        }
      } else {
        bool allowed = v == mg.basepoint;
        for (const Cycle& c : g.cycles) allowed = allowed || c.base == v;
        if (!allowed) {
          bad.push_back("valence-2 vertex " + std::to_string(v) +
                        " is neither the basepoint nor a cycle base point");
        }
      }
    }
  }
  if (variant == GraphVariant::nk) {
    for (int j = 0; j < k; ++j) {
      if (!cyc_vertices[j].count(g.cycles[j].base)) {
        bad.push_back("base point of cycle " + std::to_string(j + 1) + " is not on the cycle");
      }
    }
  }
  return bad;
}

DualGraph dual_cycle_graph(const NkGraph& g) {
  const int k = static_cast<int>(g.cycles.size());
  std::vector<std::set<int>> cyc_vertices(k);
  for (int j = 0; j < k; ++j) {
    auto path = cycle_vertex_path(g.graph, g.cycles[j]);
    if (path) cyc_vertices[j] = std::set<int>(path->begin(), path->end());
  }
  std::map<int, int> times_on_cycles;
  for (const auto& verts : cyc_vertices) {
    for (int v : verts) times_on_cycles[v] += 1;
  }
  DualGraph dual;
  for (const auto& [v, cnt] : times_on_cycles) {
    if (cnt >= 2) dual.shared_points.push_back(v);
  }
  dual.graph.num_vertices = k + static_cast<int>(dual.shared_points.size());
  for (std::size_t p = 0; p < dual.shared_points.size(); ++p) {
    for (int j = 0; j < k; ++j) {
      if (cyc_vertices[j].count(dual.shared_points[p])) {
        dual.graph.edges.push_back({j, k + static_cast<int>(p)});
      }
    }
  }
  UnionFind uf(std::max(1, dual.graph.num_vertices));
  dual.forest = true;
  for (const auto& [a, b] : dual.graph.edges) {
    if (!uf.unite(a, b)) dual.forest = false;
  }
  return dual;
}

int cycle_union_components(const NkGraph& g) {
  UnionFind uf(std::max(1, g.graph.num_vertices));
  std::set<int> on_cycles;
  for (const Cycle& c : g.cycles) {
    auto path = cycle_vertex_path(g.graph, c);
    if (!path) continue;
    for (int v : *path) on_cycles.insert(v);
    for (int e : c.edges) {
      uf.unite(g.graph.edges[e].first, g.graph.edges[e].second);
    }
  }
  std::set<int> roots;
  for (int v : on_cycles) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

namespace {

std::vector<int> edge_cycle_membership(const NkGraph& g) {
  std::vector<int> owner(g.graph.num_edges(), -1);
  for (std::size_t j = 0; j < g.cycles.size(); ++j) {
    for (int e : g.cycles[j].edges) owner[e] = static_cast<int>(j);
  }
  return owner;
}

UnionFind cycle_components(const NkGraph& g) {
  UnionFind uf(std::max(1, g.graph.num_vertices));
  for (const Cycle& c : g.cycles) {
    for (int e : c.edges) uf.unite(g.graph.edges[e].first, g.graph.edges[e].second);
  }
  return uf;
}

}  // namespace

bool edge_collapsible(const NkGraph& g, int e, std::string* reason) {
  if (e < 0 || e >= g.graph.num_edges()) {
    if (reason) *reason = "no such edge";
    return false;
  }
  auto [a, b] = g.graph.edges[e];
  if (a == b) {
    if (reason) *reason = "edge is a loop";
    return false;
  }
  if (edge_cycle_membership(g)[e] < 0) {
    UnionFind uf = cycle_components(g);
    if (uf.find(a) == uf.find(b)) {
      if (reason) *reason = "edge becomes a loop once the cycles are collapsed";
      return false;
    }
  }
  return true;
}

NkGraph collapse_edge(const NkGraph& g, int e) {
  std::string reason;
  if (!edge_collapsible(g, e, &reason)) throw InadmissibleEdge(reason);
  auto [a, b] = g.graph.edges[e];
  int keep = std::min(a, b);
  int gone = std::max(a, b);
  auto remap_vertex = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  NkGraph out;
  out.graph.num_vertices = g.graph.num_vertices - 1;
  out.graph.basepoint = remap_vertex(g.graph.basepoint);
  std::vector<int> edge_map(g.graph.num_edges(), -1);
  for (int t = 0; t < g.graph.num_edges(); ++t) {
    if (t == e) continue;
    edge_map[t] = out.graph.num_edges();
    out.graph.edges.push_back({remap_vertex(g.graph.edges[t].first),
                               remap_vertex(g.graph.edges[t].second)});
  }
  for (const Cycle& c : g.cycles) {
    Cycle nc;
    nc.base = remap_vertex(c.base);
    for (int t : c.edges) {
      if (t == e) continue;
      nc.edges.push_back(edge_map[t]);
    }
    out.cycles.push_back(std::move(nc));
  }
  return out;
}

bool forest_admissible(const NkGraph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::set<int> fs(edge_ids.begin(), edge_ids.end());
  if (fs.size() != edge_ids.size()) return false;
  for (int e : edge_ids) {
    if (e < 0 || e >= g.graph.num_edges()) return false;
  }
  // forest in the graph itself
  UnionFind uf(g.graph.num_vertices);
  for (int e : fs) {
    auto [a, b] = g.graph.edges[e];
    if (a == b || !uf.unite(a, b)) return false;
  }
  // keep at least one edge of each marked cycle
  for (const Cycle& c : g.cycles) {
    std::size_t hit = 0;
    for (int e : c.edges) hit += fs.count(e);
    if (hit == c.edges.size()) return false;
  }
  // non-cycle part stays a forest after contracting the cycle union
  std::vector<int> owner = edge_cycle_membership(g);
  UnionFind quotient = cycle_components(g);
  for (int e : fs) {
    if (owner[e] >= 0) continue;
    auto [a, b] = g.graph.edges[e];
    if (quotient.find(a) == quotient.find(b)) return false;
    quotient.unite(a, b);
  }
  return true;
}

std::vector<std::vector<int>> admissible_forests(const NkGraph& g) {
  const int E = g.graph.num_edges();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << E); ++mask) {
    std::vector<int> f;
    for (int e = 0; e < E; ++e) {
      if (mask & (1u << e)) f.push_back(e);
    }
    if (forest_admissible(g, f)) out.push_back(std::move(f));
  }
  return out;
}

int max_admissible_forest_size(const NkGraph& g) {
  int best = 0;
  for (const auto& f : admissible_forests(g)) {
    best = std::max(best, static_cast<int>(f.size()));
  }
  return best;
}

NkGraph collapse_forest(const NkGraph& g, std::vector<int> edge_ids) {
  if (!forest_admissible(g, edge_ids)) {
    throw InadmissibleEdge("edge set is not an admissible forest");
  }
  NkGraph cur = g;
  while (!edge_ids.empty()) {
    bool progress = false;
    for (std::size_t t = 0; t < edge_ids.size(); ++t) {
      if (!edge_collapsible(cur, edge_ids[t])) continue;
      int e = edge_ids[t];
      cur = collapse_edge(cur, e);
      edge_ids.erase(edge_ids.begin() + static_cast<long>(t));
      for (int& other : edge_ids) {
        if (other > e) --other;
      }
      progress = true;
      break;
    }
    if (!progress) throw std::logic_error("collapse_forest: no collapsible edge left");
  }
  return cur;
}

std::vector<int> max_forest_avoiding(const NkGraph& g, int e) {
  std::vector<int> forest;
  std::vector<int> owner = edge_cycle_membership(g);
  for (const Cycle& c : g.cycles) {
    bool has_e = std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
    int drop = has_e ? e : c.edges.back();
    for (int t : c.edges) {
      if (t != drop) forest.push_back(t);
    }
  }
  UnionFind quotient = cycle_components(g);
  for (int t = 0; t < g.graph.num_edges(); ++t) {
    if (t == e || owner[t] >= 0) continue;
    auto [a, b] = g.graph.edges[t];
    if (quotient.find(a) == quotient.find(b)) continue;
    quotient.unite(a, b);
    forest.push_back(t);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

// ---------------------------------------------------------------------------
// canonical forms
// ---------------------------------------------------------------------------

namespace {

void push_int(std::string& s, int v) { s.push_back(static_cast<char>(v + 1)); }

std::vector<std::pair<int, int>> relabeled_sorted_edges(const MultiGraph& g,
                                                        const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    int u = perm[a], v = perm[b];
    es.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(es.begin(), es.end());
  return es;
}

std::string render_cycle_block(const std::vector<int>& path, const std::vector<int>& perm,
                               GraphVariant variant) {
  const int m = static_cast<int>(path.size());
  std::vector<int> seq(m);
  for (int t = 0; t < m; ++t) seq[t] = perm[path[t]];
  if (variant == GraphVariant::kn) {
    // no marked start: anchor at the least rotation (orientation preserved)
    std::vector<int> best = seq;
    for (int r = 1; r < m; ++r) {
      std::vector<int> cand(m);
      for (int t = 0; t < m; ++t) cand[t] = seq[(t + r) % m];
      if (cand < best) best = cand;
    }
    seq = best;
  }
  std::string block;
  push_int(block, m);
  for (int v : seq) push_int(block, v);
  return block;
}

std::string render(const NkGraph& g, const std::vector<int>& perm, GraphVariant variant,
                   bool sigma, const std::vector<std::vector<int>>& paths) {
  std::string out;
  push_int(out, g.graph.num_vertices);
  push_int(out, g.graph.num_edges());
  for (const auto& [u, v] : relabeled_sorted_edges(g.graph, perm)) {
    push_int(out, u);
    push_int(out, v);
  }
  std::vector<std::string> blocks;
  for (const auto& path : paths) blocks.push_back(render_cycle_block(path, perm, variant));
  if (sigma) std::sort(blocks.begin(), blocks.end());
  for (const std::string& b : blocks) {
    out.push_back('\0');
    out += b;
  }
  return out;
}

// Iso-invariant vertex keys; permutations only permute within equal keys.
std::vector<std::vector<int>> vertex_classes(const NkGraph& g, GraphVariant variant,
                                             bool sigma, bool use_basepoint) {
  const MultiGraph& mg = g.graph;
  const int V = mg.num_vertices;
  std::vector<std::vector<int>> keys(V);
  for (int v = 0; v < V; ++v) {
    std::vector<int>& key = keys[v];
    key.push_back(use_basepoint ? (v == mg.basepoint ? 0 : 1) : 0);
    key.push_back(mg.degree(v));
    int loops = 0;
    std::vector<int> nbr;
    for (const auto& [a, b] : mg.edges) {
      if (a == v && b == v) {
        ++loops;
      } else if (a == v) {
        nbr.push_back(mg.degree(b));
      } else if (b == v) {
        nbr.push_back(mg.degree(a));
      }
    }
    std::sort(nbr.begin(), nbr.end());
    key.push_back(loops);
    key.insert(key.end(), nbr.begin(), nbr.end());
    key.push_back(-1);
    int passes = 0, bases = 0;
    for (std::size_t j = 0; j < g.cycles.size(); ++j) {
      auto path = cycle_vertex_path(mg, g.cycles[j]);
      int on = path && std::find(path->begin(), path->end(), v) != path->end() ? 1 : 0;
      int is_base = variant == GraphVariant::nk && g.cycles[j].base == v ? 1 : 0;
      if (sigma) {
        passes += on;
        bases += is_base;
      } else {
        key.push_back(on);
        key.push_back(is_base);
      }
    }
    if (sigma) {
      key.push_back(passes);
      key.push_back(bases);
    }
  }
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<std::vector<int>> classes;
  for (int v : order) {
    if (classes.empty() || keys[classes.back().front()] != keys[v]) classes.push_back({});
    classes.back().push_back(v);
  }
  return classes;
}

// Calls f(perm) for every class-preserving assignment old vertex -> new id.
void for_each_class_perm(const std::vector<std::vector<int>>& classes, int V,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> perm(V, -1);
  std::vector<int> start(classes.size(), 0);
  int pos = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    start[c] = pos;
    pos += static_cast<int>(classes[c].size());
  }
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      f(perm);
      return;
    }
    std::vector<int> members = classes[c];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t t = 0; t < members.size(); ++t) {
        perm[members[t]] = start[c] + static_cast<int>(t);
      }
      rec(c + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0);
}

struct CanonicalResult {
  std::string cert;
  std::vector<int> perm;
};

CanonicalResult canonicalize(const NkGraph& g, GraphVariant variant, bool sigma) {
  std::vector<std::vector<int>> paths;
  for (const Cycle& c : g.cycles) {
    auto p = cycle_vertex_path(g.graph, c);
    if (!p) throw std::invalid_argument("canonicalize: malformed cycle");
    paths.push_back(*p);
  }
  auto classes = vertex_classes(g, variant, sigma, true);
  CanonicalResult best;
  for_each_class_perm(classes, g.graph.num_vertices, [&](const std::vector<int>& perm) {
    std::string cert = render(g, perm, variant, sigma, paths);
    if (best.cert.empty() || cert < best.cert) {
      best.cert = cert;
      best.perm = perm;
    }
  });
  return best;
}

NkGraph apply_perm(const NkGraph& g, const std::vector<int>& perm, GraphVariant variant,
                   bool sigma) {
  NkGraph out;
  out.graph.num_vertices = g.graph.num_vertices;
  out.graph.basepoint = perm[g.graph.basepoint];
  std::vector<std::pair<std::pair<int, int>, int>> es;
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    auto [a, b] = g.graph.edges[e];
    int u = perm[a], v = perm[b];
    es.push_back({{std::min(u, v), std::max(u, v)}, e});
  }
  std::sort(es.begin(), es.end());
  std::vector<int> edge_map(g.graph.num_edges());
  for (std::size_t t = 0; t < es.size(); ++t) {
    out.graph.edges.push_back(es[t].first);
    edge_map[es[t].second] = static_cast<int>(t);
  }
  for (const Cycle& c : g.cycles) {
    Cycle nc;
    nc.base = perm[c.base];
    for (int e : c.edges) nc.edges.push_back(edge_map[e]);
    if (variant == GraphVariant::kn) {
      // re-anchor at the least rotation of the relabeled vertex sequence
      auto path = cycle_vertex_path(out.graph, nc);
      if (path) {
        const int m = static_cast<int>(path->size());
        int best_r = 0;
        std::vector<int> best_seq = *path;
        for (int r = 1; r < m; ++r) {
          std::vector<int> cand(m);
          for (int t = 0; t < m; ++t) cand[t] = (*path)[(t + r) % m];
          if (cand < best_seq) {
            best_seq = cand;
            best_r = r;
          }
        }
        std::rotate(nc.edges.begin(), nc.edges.begin() + best_r, nc.edges.end());
        nc.base = best_seq.front();
      }
    }
    out.cycles.push_back(std::move(nc));
  }
  if (sigma) {
    std::vector<std::pair<std::string, Cycle>> blocks;
    for (const Cycle& c : out.cycles) {
      auto path = cycle_vertex_path(out.graph, c);
      std::vector<int> id(out.graph.num_vertices);
      std::iota(id.begin(), id.end(), 0);
      blocks.push_back({render_cycle_block(*path, id, variant), c});
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cycles.clear();
    for (auto& [cert, c] : blocks) out.cycles.push_back(std::move(c));
  }
  // Parallel edges are interchangeable, so pin which ids the cycles use:
  // within each parallel class, traversal steps take the smallest ids in
  // cycle-then-position order.  Representatives then depend only on the
  // certificate, not on which isomorphic candidate produced them.
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e = 0; e < out.graph.num_edges(); ++e) parallel[out.graph.edges[e]].push_back(e);
  std::map<int, int> reassign;
  for (auto& [ends, ids] : parallel) {
    std::vector<int> used;
    for (const Cycle& c : out.cycles) {
      for (int e : c.edges) {
        if (out.graph.edges[e] == ends) used.push_back(e);
      }
    }
    for (std::size_t t = 0; t < used.size(); ++t) reassign[used[t]] = ids[t];
  }
  for (Cycle& c : out.cycles) {
    for (int& e : c.edges) {
      auto it = reassign.find(e);
      if (it != reassign.end()) e = it->second;
    }
  }
  return out;
}

}  // namespace

std::string canonical_certificate(const NkGraph& g, GraphVariant variant, bool sigma) {
  return canonicalize(g, variant, sigma).cert;
}

NkGraph canonical_form(const NkGraph& g, GraphVariant variant, bool sigma) {
  CanonicalResult res = canonicalize(g, variant, sigma);
  return apply_perm(g, res.perm, variant, sigma);
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

// Connected bridgeless multigraphs with V vertices, E edges, minimum valence
// 2, and at most max_val2 vertices of valence 2, generated as sorted edge
// lists with first-use vertex numbering and deduplicated up to isomorphism.
std::vector<MultiGraph> underlying_graphs(int V, int E, int max_val2) {
  std::vector<MultiGraph> out;
  std::set<std::string> seen;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(V, 0);

  auto finish = [&](const MultiGraph& g) {
    int val2 = 0;
    for (int v = 0; v < V; ++v) {
      if (deg[v] < 2) return;
      if (deg[v] == 2) ++val2;
    }
    if (val2 > max_val2) return;
    if (!g.connected()) return;
    if (!g.bridge_edges().empty()) return;
    NkGraph plain{g, {}};
    auto classes = vertex_classes(plain, GraphVariant::nk, false, false);
    std::string best;
    for_each_class_perm(classes, V, [&](const std::vector<int>& perm) {
      std::string cert;
      for (const auto& [u, v] : relabeled_sorted_edges(g, perm)) {
        push_int(cert, u);
        push_int(cert, v);
      }
      if (best.empty() || cert < best) best = cert;
    });
    if (seen.insert(best).second) out.push_back(g);
  };

  // Sorted edge lists; a new vertex only ever enters as the next unused id,
  // as the second endpoint of an edge into the already-built part.
  std::function<void(int, int, int)> rec = [&](int used, int lu, int lv) {
    int t = static_cast<int>(edges.size());
    if (t == E) {
      if (used == V) {
        MultiGraph g{V, 0, edges};
        finish(g);
      }
      return;
    }
    if (E - t < V - used) return;  // not enough edges left to reach V vertices
    for (int u = lu; u < used; ++u) {
      // vertices below u can gain no further edges
      bool dead = false;
      for (int w = 0; w < u; ++w) {
        if (deg[w] < 2) {
          dead = true;
          break;
        }
      }
      if (dead) break;
      int vstart = u == lu ? lv : u;
      for (int v = vstart; v < V && v <= used; ++v) {
        edges.push_back({u, v});
        deg[u]++;
        deg[v]++;
        rec(std::max(used, v + 1), u, v);
        deg[u]--;
        deg[v]--;
        edges.pop_back();
      }
    }
  };
  rec(1, 0, 0);
  return out;
}

struct Circle {
  std::vector<int> edges;      // ascending ids
  std::uint32_t edge_mask = 0;
  std::uint32_t vertex_mask = 0;
};

std::vector<Circle> all_circles(const MultiGraph& g) {
  const int E = g.num_edges();
  std::vector<Circle> out;
  for (std::uint32_t mask = 1; mask < (1u << E); ++mask) {
    std::vector<int> ids;
    std::vector<int> dart_count(g.num_vertices, 0);
    for (int e = 0; e < E; ++e) {
      if (!(mask & (1u << e))) continue;
      ids.push_back(e);
      auto [a, b] = g.edges[e];
      dart_count[a] += 1;
      dart_count[b] += 1;
    }
    bool ok = true;
    std::uint32_t vmask = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (dart_count[v] == 0) continue;
      if (dart_count[v] != 2) {
        ok = false;
        break;
      }
      vmask |= 1u << v;
    }
    if (!ok) continue;
    // connected support = a single embedded circle
    UnionFind uf(g.num_vertices);
    for (int e : ids) uf.unite(g.edges[e].first, g.edges[e].second);
    int root = -1;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (!(vmask & (1u << v))) continue;
      if (root < 0) root = uf.find(v);
      if (uf.find(v) != root) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.push_back(Circle{std::move(ids), mask, vmask});
  }
  return out;
}

// The two traversals of a circle from a chosen start vertex.
Cycle circle_cycle(const MultiGraph& g, const Circle& c, int base, bool flip) {
  std::vector<int> at_base;
  for (int e : c.edges) {
    auto [a, b] = g.edges[e];
    if (a == base || b == base) at_base.push_back(e);
  }
  Cycle cyc;
  cyc.base = base;
  if (c.edges.size() == 1) {
    cyc.edges = {c.edges[0]};
    return cyc;
  }
  int first = flip ? at_base.back() : at_base.front();
  std::set<int> unused(c.edges.begin(), c.edges.end());
  int cur = base;
  int e = first;
  for (;;) {
    unused.erase(e);
    cyc.edges.push_back(e);
    auto [a, b] = g.edges[e];
    cur = cur == a ? b : a;
    if (cur == base) break;
    int next = -1;
    for (int cand : unused) {
      auto [x, y] = g.edges[cand];
      if (x == cur || y == cur) {
        next = cand;
        break;
      }
    }
    if (next < 0) throw std::logic_error("circle traversal failed");
    e = next;
  }
  if (!unused.empty()) throw std::logic_error("circle traversal left edges unused");
  return cyc;
}

void decorate(const MultiGraph& base_graph, int n, int k, GraphVariant variant, bool sigma,
              std::map<std::string, NkGraph>& sink) {
  const int V = base_graph.num_vertices;
  std::vector<Circle> circles = all_circles(base_graph);
  std::vector<int> val2;
  for (int v = 0; v < V; ++v) {
    if (base_graph.degree(v) == 2) val2.push_back(v);
  }

  std::vector<int> chosen;
  std::function<void(int, std::uint32_t)> pick = [&](int depth, std::uint32_t used_edges) {
    if (depth == k) {
      // dual-forest and pairwise checks are done by validate below
      for (int bp = 0; bp < V; ++bp) {
        MultiGraph mg = base_graph;
        mg.basepoint = bp;
        if (variant == GraphVariant::kn) {
          bool ok = true;
          for (int v : val2) ok = ok && v == bp;
          if (!ok) continue;
          std::function<void(int, NkGraph&)> orient = [&](int j, NkGraph& acc) {
            if (j == k) {
              if (validate(acc, n, k, variant).empty()) {
                CanonicalResult res = canonicalize(acc, variant, sigma);
                if (!sink.count(res.cert)) {
                  sink.emplace(res.cert, apply_perm(acc, res.perm, variant, sigma));
                }
              }
              return;
            }
            const Circle& c = circles[chosen[j]];
            int anchor = 0;
            while (!(c.vertex_mask & (1u << anchor))) ++anchor;
            for (int flip = 0; flip < (c.edges.size() == 1 ? 1 : 2); ++flip) {
              acc.cycles.push_back(circle_cycle(base_graph, c, anchor, flip));
              orient(j + 1, acc);
              acc.cycles.pop_back();
            }
          };
          NkGraph acc{mg, {}};
          orient(0, acc);
          continue;
        }
        // nk: choose cycle base points covering every valence-2 vertex
        std::function<void(int, NkGraph&)> bases = [&](int j, NkGraph& acc) {
          if (j == k) {
            std::set<int> covered(val2.begin(), val2.end());
            covered.erase(bp);
            for (const Cycle& c : acc.cycles) covered.erase(c.base);
            if (!covered.empty()) return;
            if (validate(acc, n, k, variant).empty()) {
              CanonicalResult res = canonicalize(acc, variant, sigma);
              if (!sink.count(res.cert)) {
                sink.emplace(res.cert, apply_perm(acc, res.perm, variant, sigma));
              }
            }
            return;
          }
          const Circle& c = circles[chosen[j]];
          for (int b = 0; b < V; ++b) {
            if (!(c.vertex_mask & (1u << b))) continue;
            for (int flip = 0; flip < (c.edges.size() == 1 ? 1 : 2); ++flip) {
              acc.cycles.push_back(circle_cycle(base_graph, c, b, flip));
              bases(j + 1, acc);
              acc.cycles.pop_back();
            }
          }
        };
        NkGraph acc{mg, {}};
        bases(0, acc);
      }
      return;
    }
    for (int t = 0; t < static_cast<int>(circles.size()); ++t) {
      const Circle& c = circles[t];
      if (c.edge_mask & used_edges) continue;
      bool compatible = true;
      for (int prev : chosen) {
        std::uint32_t shared = circles[prev].vertex_mask & c.vertex_mask;
        if (shared & (shared - 1)) {  // more than one shared vertex
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      chosen.push_back(t);
      pick(depth + 1, used_edges | c.edge_mask);
      chosen.pop_back();
    }
  };
  pick(0, 0);
}

}  // namespace

EnumeratedComplex enumerate_graphs(int n, int k, GraphVariant variant, bool sigma,
                                   const EnumerationBudget& budget, bool parallel) {
  const int vmax = variant == GraphVariant::nk ? 2 * n + 3 * k - 1 : 2 * n + 2 * k - 1;
  const int emax = vmax - 1 + n + k;
  if (emax > budget.max_edges) {
    throw BudgetExceeded("enumeration at (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ", " + variant_name(variant) + ") needs " + std::to_string(emax) +
                         " edges, budget is " + std::to_string(budget.max_edges));
  }
  const int max_val2 = variant == GraphVariant::nk ? k + 1 : 1;

  std::vector<MultiGraph> all_underlying;
  for (int V = 1; V <= vmax; ++V) {
    int E = V - 1 + n + k;
    if (E < 0) continue;
    std::vector<MultiGraph> batch = underlying_graphs(V, E, max_val2);
    all_underlying.insert(all_underlying.end(), batch.begin(), batch.end());
  }

  std::map<std::string, NkGraph> merged;
  const int count = static_cast<int>(all_underlying.size());
  if (parallel) {
    std::vector<std::map<std::string, NkGraph>> locals;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
      locals.resize(omp_get_num_threads());
#pragma omp for schedule(dynamic)
      for (int t = 0; t < count; ++t) {
        decorate(all_underlying[t], n, k, variant, sigma, locals[omp_get_thread_num()]);
      }
    }
#else
    locals.resize(1);
    for (int t = 0; t < count; ++t) {
      decorate(all_underlying[t], n, k, variant, sigma, locals[0]);
    }
#endif
    for (auto& local : locals) {
      for (auto& [cert, g] : local) merged.emplace(cert, std::move(g));
    }
  } else {
    for (int t = 0; t < count; ++t) {
      decorate(all_underlying[t], n, k, variant, sigma, merged);
    }
  }

  EnumeratedComplex out;
  out.n = n;
  out.k = k;
  out.variant = variant;
  out.sigma = sigma;
  for (auto& [cert, g] : merged) out.graphs.push_back(std::move(g));
  return out;
}

EnumeratedComplex enumerate_graphs_serial(int n, int k, GraphVariant variant, bool sigma,
                                          const EnumerationBudget& budget) {
  return enumerate_graphs(n, k, variant, sigma, budget, false);
}

int quotient_dimension(const EnumeratedComplex& labeled) {
  int best = 0;
  for (const NkGraph& g : labeled.graphs) {
    best = std::max(best, max_admissible_forest_size(g));
  }
  return best;
}

int quotient_dimension_formula(int n, int k, GraphVariant variant) {
  if (variant == GraphVariant::nk) {
    return n >= 1 ? 2 * n + 3 * k - 2 : 2 * k - 1;
  }
  return n >= 1 ? 2 * n + 2 * k - 2 : k - 1;
}

std::vector<CensusRow> census(const EnumeratedComplex& labeled, int n, int k) {
  std::set<std::string> collapsed;
  for (const NkGraph& g : labeled.graphs) {
    for (int e = 0; e < g.graph.num_edges(); ++e) {
      if (!edge_collapsible(g, e)) continue;
      collapsed.insert(canonical_certificate(collapse_edge(g, e), labeled.variant, labeled.sigma));
    }
  }
  std::map<int, CensusRow> rows;
  for (const NkGraph& g : labeled.graphs) {
    if (collapsed.count(canonical_certificate(g, labeled.variant, labeled.sigma))) continue;
    int c = cycle_union_components(g);
    int v = g.graph.num_vertices;
    int e = g.graph.num_edges();
    bool match = v == 2 * n + 2 * k + c - 1 && 2 * e == 3 * v - c - 1;
    auto it = rows.find(c);
    if (it == rows.end()) {
      rows.emplace(c, CensusRow{c, v, e, 1, match});
    } else {
      it->second.count += 1;
      it->second.matches = it->second.matches && match && it->second.v == v && it->second.e == e;
    }
  }
  std::vector<CensusRow> out;
  for (auto& [c, row] : rows) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------
// exchange format
// ---------------------------------------------------------------------------

std::string to_exchange_format(const NkGraph& g, int n, int k) {
  std::ostringstream os;
  os << "nk-graph " << n << " " << k << "\n";
  os << "vertices " << g.graph.num_vertices << "\n";
  os << "basepoint " << g.graph.basepoint << "\n";
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    os << "edge " << e << " " << g.graph.edges[e].first << " " << g.graph.edges[e].second << "\n";
  }
  for (std::size_t j = 0; j < g.cycles.size(); ++j) {
    os << "cycle " << (j + 1) << " base " << g.cycles[j].base << " edges";
    for (int e : g.cycles[j].edges) os << " " << e;
    os << "\n";
  }
  return os.str();
}

NkGraph from_exchange_format(const std::string& text, int* n_out, int* k_out) {
  std::istringstream is(text);
  std::string tok;
  NkGraph g;
  int n = 0, k = 0;
  if (!(is >> tok) || tok != "nk-graph" || !(is >> n >> k)) {
    throw ParseError("expected 'nk-graph n k' header");
  }
  if (!(is >> tok) || tok != "vertices" || !(is >> g.graph.num_vertices)) {
    throw ParseError("expected 'vertices V'");
  }
  if (!(is >> tok) || tok != "basepoint" || !(is >> g.graph.basepoint)) {
    throw ParseError("expected 'basepoint b'");
  }
  while (is >> tok) {
    if (tok == "edge") {
      int id, u, v;
      if (!(is >> id >> u >> v)) throw ParseError("bad edge line");
      if (id != g.graph.num_edges()) throw ParseError("edge ids must be consecutive from 0");
      g.graph.edges.push_back({u, v});
    } else if (tok == "cycle") {
      int j;
      Cycle c;
      if (!(is >> j >> tok) || tok != "base" || !(is >> c.base)) throw ParseError("bad cycle line");
      if (!(is >> tok) || tok != "edges") throw ParseError("bad cycle line");
      if (j != static_cast<int>(g.cycles.size()) + 1) throw ParseError("cycle labels must be consecutive from 1");
      std::string rest;
      std::getline(is, rest);
      std::istringstream rs(rest);
      int e;
      while (rs >> e) c.edges.push_back(e);
      g.cycles.push_back(std::move(c));
    } else {
      throw ParseError("unexpected token: " + tok);
    }
  }
  if (static_cast<int>(g.cycles.size()) != k) throw ParseError("cycle count does not match k");
  if (n_out) *n_out = n;
  if (k_out) *k_out = k;
  return g;
}

}  // namespace fgb
