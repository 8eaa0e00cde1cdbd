#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/local_stats.hpp"
#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"
#include "permtest/sgraph.hpp"
#include "permtest/word.hpp"

namespace permtest {

/// A labelled directed edge source --label--> target; labels are 1-based.
struct LabelledEdge {
  Point source = 0;
  std::uint32_t label = 0;
  Point target = 0;
  friend auto operator<=>(const LabelledEdge&, const LabelledEdge&) = default;
};

/// A finite graph whose s-edges form a partial injection.
///
/// The vertex set is exactly the set of edge endpoints, so every vertex
/// touches an edge. Vertex numbers are points of [n] for some ambient n.
class PartialSGraph {
 public:
  explicit PartialSGraph(std::uint32_t d = 0) : d_(d) {}
  /// Throws ValidationError on a label outside 1..d or two edges sharing a tail or a head for one label.
  static PartialSGraph from_edges(std::uint32_t d, const std::vector<LabelledEdge>& edges);

  /// Adds an edge; returns false if it was already present.
  bool add_edge(const LabelledEdge& e);

  std::uint32_t d() const noexcept { return d_; }
  const std::set<Point>& vertices() const noexcept { return vertices_; }
  const std::set<LabelledEdge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_vertex(Point v) const { return vertices_.count(v) != 0; }

  /// Follows one letter from x; empty if the edge is missing.
  std::optional<Point> step(Point x, Letter l) const;
  /// Follows a word (rightmost letter first); empty if the walk leaves the graph.
  std::optional<Point> walk(const Word& w, Point x) const;

  /// Connected components of the underlying undirected graph.
  std::vector<std::vector<Point>> components() const;
  bool is_connected() const { return components().size() <= 1; }
  /// r(H) = |V(H)| minus the number of connected components.
  std::size_t rank() const { return vertices_.size() - components().size(); }

  std::string to_string() const;

  friend bool operator==(const PartialSGraph& a, const PartialSGraph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const PartialSGraph& a, const PartialSGraph& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.edges_ < b.edges_;
  }

 private:
  std::uint32_t d_;
  std::set<Point> vertices_;
  std::set<LabelledEdge> edges_;
  std::vector<std::map<Point, Point>> out_;
  std::vector<std::map<Point, Point>> in_;
};

/// Path data of a partial S-graph seen from one vertex.
struct PathInvariants {
  /// Labels of paths from the base vertex whose vertices are distinct except that the last step may land
  /// on any vertex already visited.
  std::vector<Word> simple_paths;
  /// Reduced words u^-1 v over all pairs of simple paths u, v.
  WordSet base_paths;
  /// Words of base_paths that are closed walks at the base vertex.
  WordSet stabilizer_paths;
};

/// spaths, bp and pstab of H at x. Throws InfeasibleError when a set exceeds caps.path_words.
PathInvariants path_invariants(const PartialSGraph& h, Point x, const Caps& caps = {});

/// Every labelled edge of H is an edge of G (vertex numbers included).
bool includes(const SGraph& g, const PartialSGraph& h);

/// Pr over uniform pi in Sym(n) that H is contained in G^pi, by enumerating Sym(n).
Rational inclusion_probability_exact(const SGraph& g, const PartialSGraph& h, const Caps& caps = {});

/// Closed form for connected H, evaluated at base vertex y0 (default: the smallest vertex):
/// (n - |V(H)|)! / (n - 1)! * N_{G, bp}(pstab).
Rational inclusion_probability(const SGraph& g, const PartialSGraph& h, std::optional<Point> base = std::nullopt,
                               const Caps& caps = {});

/// Leading-term estimate for an H with several components.
struct InclusionEstimate {
  Rational value;
  /// False only when H has no edges, where the probability is exactly 1.
  bool approximate = false;
};
/// n^{-r(H)} * prod_i N_{G, bp(x_i)}(pstab(x_i)) over one base vertex per component.
InclusionEstimate inclusion_probability_general(const SGraph& g, const PartialSGraph& h, const Caps& caps = {});

/// N_{G,P}(F): the fraction of points x whose fragment stab_P(G, x) equals F exactly.
/// `fragment` must be a subset of `words`.
Rational fragment_probability(const SGraph& g, const WordSet& words, const WordSet& fragment);

}  // namespace permtest
