#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tropjac/curve.hpp"

namespace tropjac {

enum class EdgeClass { tentacle, cycle };

/// Finite edges only; rays are always contracted and need no label.
/// Throws PreconditionError for a disconnected curve.
std::vector<EdgeClass> classify_edges(const TropicalCurve& curve);

/// Quotient of the curve by all tentacles and rays. Nodes are the connected
/// blobs left after removing cycle edges; arcs are the cycle edges.
struct BunchGraph {
  struct Arc {
    std::size_t edge = 0;
    std::size_t from = 0;  ///< node
    std::size_t to = 0;    ///< node
  };

  TropicalCurve curve;
  std::vector<EdgeClass> edge_class;
  std::vector<std::size_t> node_of_vertex;
  std::size_t node_count = 0;
  std::vector<Arc> arcs;

  /// First Betti number of the quotient.
  std::size_t genus() const { return arcs.size() + 1 - node_count; }
};

BunchGraph bunch(const TropicalCurve& curve);

/// One circle of the bouquet as a simple cycle of the curve. vertices[k]
/// and vertices[k+1] (cyclically) are joined by edges[k]; vertices[0] is
/// the attachment vertex O_i in the center blob.
struct BouquetCycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

struct BouquetStructure {
  std::size_t center_node = 0;
  std::vector<BouquetCycle> cycles;

  std::size_t genus() const { return cycles.size(); }
};

struct NotABouquet {
  std::string reason;
};

using BouquetVerdict = std::variant<BouquetStructure, NotABouquet>;

/// Every block of the quotient must be a circle and, for g >= 2, all
/// circles must pass through one node. For g = 1 the center is the node of
/// the lexicographically smallest cycle vertex.
BouquetVerdict bouquet_structure(const BunchGraph& b);

}  // namespace tropjac
