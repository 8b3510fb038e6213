#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"

namespace hosoya {

/// One bundle of parallel edges between two distinct vertices. A bundle of
/// order m behaves like m indistinguishable parallel edges of which a
/// matching may use at most one.
struct Bond {
  int u = 0;
  int v = 0;
  Int order = 1;

  friend bool operator==(const Bond&, const Bond&) = default;
};

/// Undirected multigraph: a vertex count plus at most one bond record per
/// unordered vertex pair. No self-loops. The empty graph is valid.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  /// Adds a bundle between u and v. Rejects self-loops, ids out of range,
  /// orders below one and duplicate pairs.
  void add_bond(int u, int v, Int order = 1);

  int vertex_count() const { return vertex_count_; }

  /// Bonds sorted by (u, v) with u < v.
  const std::vector<Bond>& bonds() const { return bonds_; }

  /// Order of the bundle between u and v, or 0 if absent.
  Int bond_order(int u, int v) const;

  bool has_bond(int u, int v) const;

  /// Adjacency as (neighbor, order) lists, sorted by neighbor id.
  std::vector<std::vector<std::pair<int, Int>>> adjacency() const;

  /// True when the graph is connected and acyclic once bundles are
  /// collapsed to single edges. The empty graph is not a multitree.
  bool is_multitree() const;

  bool is_connected() const;

  /// Connected components as id-compacted subgraphs, ordered by smallest
  /// original vertex id. Isolated vertices become single-vertex graphs.
  std::vector<Multigraph> components() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Bond> bonds_;
};

inline constexpr int kDefaultMatchingCap = 24;
inline constexpr int kGeneralIsomorphismCap = 12;

/// Number of k-matchings for every k, where choosing a bundle of order m
/// contributes a factor m. counts[0] is always 1. Enumeration is brute
/// force, so graphs above vertex_cap are rejected with SizeLimitError.
std::vector<Int> matching_counts(const Multigraph& g,
                                 int vertex_cap = kDefaultMatchingCap);

/// Hosoya index Z(g): the total number of matchings. Computed by the
/// bundle deletion recurrence Z(G) = Z(G-e) + m*Z(G-{u,v}) with a
/// synchronized process-wide memo keyed on canonical subgraph codes, and
/// multiplied over connected components. Exact at any size.
Int hosoya_index(const Multigraph& g);

/// Removes the whole bundle between u and v. Vertex ids are unchanged.
Multigraph remove_bond(const Multigraph& g, int u, int v);

/// Removes the given vertices and their incident bundles; remaining ids
/// are compacted preserving order.
Multigraph remove_vertices(const Multigraph& g, const std::vector<int>& vs);

/// Canonical encoding of a multitree, rooted at its center. Two multitrees
/// get equal codes iff they are isomorphic as multigraphs. Inputs that are
/// not multitrees are rejected with std::invalid_argument.
std::string canonical_tree_code(const Multigraph& g);

/// Order-preserving vertex bijection test. Multitrees are compared by
/// canonical code; anything else falls back to permutation search, which
/// is capped at kGeneralIsomorphismCap vertices (SizeLimitError beyond).
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

/// The reference path behind is_isomorphic: backtracking permutation
/// search with degree and order pruning. Same vertex cap.
bool isomorphic_by_permutation(const Multigraph& a, const Multigraph& b);

/// Line-oriented text format: `v <count>` first, then `e <u> <v> [m]`
/// lines; `#` starts a comment. Throws ParseError with the line number.
Multigraph parse_edge_list(std::string_view text);
std::string format_edge_list(const Multigraph& g);

/// Graphviz output; a bundle of order m is emitted as m parallel edges,
/// vertices as unlabeled circles.
std::string to_dot(const Multigraph& g);

}  // namespace hosoya
