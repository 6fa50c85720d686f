#include "tropjac/bunch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tropjac/error.hpp"

namespace tropjac {

namespace {

struct Adjacent {
  std::size_t to;
  std::size_t id;
};

using Adjacency = std::vector<std::vector<Adjacent>>;

// Low-link bridge search. Edge ids distinguish parallel edges.
std::vector<bool> find_bridges(const Adjacency& adj, std::size_t edge_count) {
  const std::size_t n = adj.size();
  std::vector<bool> bridge(edge_count, false);
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::size_t timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
    disc[v] = low[v] = ++timer;
    for (const auto& [w, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (disc[w] == 0) {
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridge[id] = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, static_cast<std::size_t>(-1));
  }
  return bridge;
}

// Biconnected components as lists of edge ids.
std::vector<std::vector<std::size_t>> find_blocks(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
    disc[v] = low[v] = ++timer;
    for (const auto& [w, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (disc[w] == 0) {
        stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::size_t> block;
          while (true) {
            const std::size_t top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == id) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(id);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, static_cast<std::size_t>(-1));
  }
  return blocks;
}

}  // namespace

std::vector<EdgeClass> classify_edges(const TropicalCurve& curve) {
  check_structure(curve);
  if (!is_connected(curve)) throw PreconditionError("curve is disconnected");
  Adjacency adj(curve.vertices.size());
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    adj[curve.edges[e].from].push_back({curve.edges[e].to, e});
    adj[curve.edges[e].to].push_back({curve.edges[e].from, e});
  }
  const auto bridge = find_bridges(adj, curve.edges.size());
  std::vector<EdgeClass> out;
  for (std::size_t e = 0; e < curve.edges.size(); ++e) out.push_back(bridge[e] ? EdgeClass::tentacle : EdgeClass::cycle);
  return out;
}

BunchGraph bunch(const TropicalCurve& curve) {
  BunchGraph b;
  b.curve = curve;
  b.edge_class = classify_edges(curve);

  std::vector<std::size_t> parent(curve.vertices.size());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    if (b.edge_class[e] == EdgeClass::tentacle) parent[find(curve.edges[e].from)] = find(curve.edges[e].to);
  }
  std::map<std::size_t, std::size_t> node_id;
  b.node_of_vertex.resize(curve.vertices.size());
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    const auto [it, fresh] = node_id.emplace(find(v), node_id.size());
    b.node_of_vertex[v] = it->second;
  }
  b.node_count = node_id.size();
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    if (b.edge_class[e] == EdgeClass::cycle) {
      b.arcs.push_back({e, b.node_of_vertex[curve.edges[e].from], b.node_of_vertex[curve.edges[e].to]});
    }
  }
  return b;
}

namespace {

BouquetCycle walk_cycle(const TropicalCurve& curve, const std::vector<std::size_t>& edges, std::size_t start) {
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t e : edges) {
    incident[curve.edges[e].from].push_back(e);
    incident[curve.edges[e].to].push_back(e);
  }
  BouquetCycle cycle;
  std::size_t v = start;
  std::size_t came_by = static_cast<std::size_t>(-1);
  do {
    const auto& around = incident.at(v);
    if (around.size() != 2) throw InvariantViolation("bouquet circle is not a simple cycle in the curve");
    const std::size_t e = around[0] == came_by ? around[1] : around[0];
    cycle.vertices.push_back(v);
    cycle.edges.push_back(e);
    v = curve.edges[e].from == v ? curve.edges[e].to : curve.edges[e].from;
    came_by = e;
  } while (v != start);
  if (cycle.edges.size() != edges.size()) throw InvariantViolation("bouquet circle is not a simple cycle in the curve");
  return cycle;
}

}  // namespace

BouquetVerdict bouquet_structure(const BunchGraph& b) {
  BouquetStructure out;
  if (b.arcs.empty()) {
    out.center_node = 0;
    return out;
  }
  Adjacency adj(b.node_count);
  for (std::size_t k = 0; k < b.arcs.size(); ++k) {
    adj[b.arcs[k].from].push_back({b.arcs[k].to, k});
    adj[b.arcs[k].to].push_back({b.arcs[k].from, k});
  }
  const auto blocks = find_blocks(adj);

  std::vector<std::set<std::size_t>> block_nodes;
  for (const auto& block : blocks) {
    std::set<std::size_t> nodes;
    for (std::size_t k : block) {
      nodes.insert(b.arcs[k].from);
      nodes.insert(b.arcs[k].to);
    }
    if (nodes.size() != block.size()) {
      return NotABouquet{"a block of the bunch is not a circle (" + std::to_string(block.size()) + " arcs on " +
                         std::to_string(nodes.size()) + " nodes)"};
    }
    block_nodes.push_back(std::move(nodes));
  }
  if (blocks.size() != b.genus()) throw InvariantViolation("cycle count disagrees with the Betti number");

  const auto& curve = b.curve;
  std::size_t center = 0;
  if (blocks.size() == 1) {
    std::size_t best = curve.edges[b.arcs[blocks[0][0]].edge].from;
    for (std::size_t k : blocks[0]) {
      for (std::size_t v : {curve.edges[b.arcs[k].edge].from, curve.edges[b.arcs[k].edge].to}) {
        if (curve.vertices[v] < curve.vertices[best]) best = v;
      }
    }
    center = b.node_of_vertex[best];
  } else {
    std::set<std::size_t> common = block_nodes[0];
    for (const auto& nodes : block_nodes) {
      std::set<std::size_t> keep;
      std::set_intersection(common.begin(), common.end(), nodes.begin(), nodes.end(), std::inserter(keep, keep.end()));
      common = std::move(keep);
    }
    if (common.empty()) return NotABouquet{"the circles of the bunch have no common center"};
    center = *common.begin();
  }
  out.center_node = center;

  for (const auto& block : blocks) {
    std::vector<std::size_t> edges;
    for (std::size_t k : block) edges.push_back(b.arcs[k].edge);
    std::sort(edges.begin(), edges.end());
    std::size_t start = curve.vertices.size();
    for (std::size_t e : edges) {
      for (std::size_t v : {curve.edges[e].from, curve.edges[e].to}) {
        if (b.node_of_vertex[v] == center) start = v;
      }
    }
    if (start == curve.vertices.size()) throw InvariantViolation("bouquet circle misses the center");
    out.cycles.push_back(walk_cycle(curve, edges, start));
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const BouquetCycle& x, const BouquetCycle& y) { return x.edges < y.edges; });
  return out;
}

}  // namespace tropjac
