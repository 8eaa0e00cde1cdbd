#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"

namespace permtest {

/// An S-graph on [n]: label s sends x to sigma_s(x).
///
/// Same data as a PermTuple; this class offers the graph-facing operations.
class SGraph {
 public:
  SGraph() = default;
  explicit SGraph(PermTuple tuple) : tuple_(std::move(tuple)) {}

  std::uint32_t n() const noexcept { return tuple_.n(); }
  std::size_t d() const noexcept { return tuple_.d(); }
  /// Labels are 1-based.
  Point successor(std::uint32_t label, Point x) const { return tuple_.generator(label)(x); }
  Point predecessor(std::uint32_t label, Point x) const { return tuple_.generator(label).preimage(x); }
  const PermTuple& tuple() const noexcept { return tuple_; }

  friend bool operator==(const SGraph&, const SGraph&) = default;

 private:
  PermTuple tuple_;
};

/// Endpoint of the walk along w from x (the rightmost letter is followed first).
Point walk(const SGraph& g, const Word& w, Point x);

/// Connected components of the underlying undirected graph, each sorted,
/// ordered by smallest vertex.
std::vector<std::vector<Point>> components(const SGraph& g);
bool is_connected(const SGraph& g);

/// The S-graph induced on a union of components, with vertices renumbered
/// 1..k in increasing order. Throws ValidationError if `vertices` is not closed.
SGraph induced_subgraph(const SGraph& g, const std::vector<Point>& vertices);

/// Sum over labels of |sA \ A|; `in_set[x-1]` marks membership of x.
std::uint64_t edge_boundary(const SGraph& g, const std::vector<bool>& in_set);

/// Exact Cheeger constant: min over nonempty A with |A| <= n/2 of |boundary(A)| / |A|.
///
/// Scans subsets in Gray-code order. For connected vertex-transitive graphs
/// (checked by building automorphisms) only sets containing vertex 1 are
/// scanned. Throws ValidationError for n < 2 and InfeasibleError when the
/// number of scanned subsets exceeds caps.subsets.
Rational cheeger(const SGraph& g, const Caps& caps = {});

/// Whether label-preserving automorphisms act transitively on a connected graph.
bool is_vertex_transitive(const SGraph& g);

/// A string that is equal for two connected S-graphs exactly when they are isomorphic.
std::string canonical_form(const SGraph& g);

/// Thread-safe memo of Cheeger constants for connected graphs.
///
/// Keys are breadth-first encodings from vertex 1. Equal keys imply isomorphic
/// graphs, so a hit always returns the right value; isomorphic graphs may
/// occupy more than one entry.
class CheegerCache {
 public:
  Rational get(const SGraph& connected_graph, const Caps& caps = {});
  std::size_t size() const;
  std::uint64_t hits() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Rational> values_;
  std::uint64_t hits_ = 0;
};

/// G^pi with sigma'_s = pi^-1 sigma_s pi.
SGraph relabel(const SGraph& g, const Permutation& pi);

/// res_n(G) on [n-1]: s x stays s x unless that is n, in which case it becomes s(s x).
SGraph restrict_last(const SGraph& g);

/// G1 x G2 with (x, y) numbered (x-1) * n2 + y.
SGraph product_graph(const SGraph& g1, const SGraph& g2);
/// Inverse of the product numbering.
std::pair<Point, Point> product_coordinates(Point v, std::uint32_t n2);

/// Edge list, one "u label v" line per edge, label order then vertex order.
std::string edge_list(const SGraph& g, const std::vector<std::string>& label_names);

}  // namespace permtest
