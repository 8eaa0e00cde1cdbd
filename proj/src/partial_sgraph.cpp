#include "permtest/partial_sgraph.hpp"

#include <algorithm>

#include "permtest/errors.hpp"

namespace permtest {

PartialSGraph PartialSGraph::from_edges(std::uint32_t d, const std::vector<LabelledEdge>& edges) {
  PartialSGraph h(d);
  for (const LabelledEdge& e : edges) h.add_edge(e);
  return h;
}

bool PartialSGraph::add_edge(const LabelledEdge& e) {
  if (e.label < 1 || e.label > d_) throw ValidationError("edge label " + std::to_string(e.label) + " outside 1..d");
  if (e.source < 1 || e.target < 1) throw ValidationError("edge endpoints must be positive points");
  if (out_.empty()) {
    out_.resize(d_);
    in_.resize(d_);
  }
  auto& out = out_[e.label - 1];
  auto& in = in_[e.label - 1];
  if (auto it = out.find(e.source); it != out.end()) {
    if (it->second == e.target) return false;
    throw ValidationError("two edges with label " + std::to_string(e.label) + " leave vertex " +
                          std::to_string(e.source));
  }
  if (in.count(e.target) != 0) {
    throw ValidationError("two edges with label " + std::to_string(e.label) + " enter vertex " +
                          std::to_string(e.target));
  }
  out[e.source] = e.target;
  in[e.target] = e.source;
  edges_.insert(e);
  vertices_.insert(e.source);
  vertices_.insert(e.target);
  return true;
}

std::optional<Point> PartialSGraph::step(Point x, Letter l) const {
  if (l.generator < 1 || l.generator > d_ || out_.empty()) return std::nullopt;
  const auto& table = l.positive() ? out_[l.generator - 1] : in_[l.generator - 1];
  auto it = table.find(x);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<Point> PartialSGraph::walk(const Word& w, Point x) const {
  std::optional<Point> at = x;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend() && at; ++it) at = step(*at, *it);
  if (at && w.empty() && !has_vertex(x)) return std::nullopt;
  return at;
}

std::vector<std::vector<Point>> PartialSGraph::components() const {
  std::map<Point, Point> parent;
  for (Point v : vertices_) parent[v] = v;
  auto find = [&](Point v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const LabelledEdge& e : edges_) {
    Point a = find(e.source), b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Point, std::vector<Point>> groups;
  for (Point v : vertices_) groups[find(v)].push_back(v);
  std::vector<std::vector<Point>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::string PartialSGraph::to_string() const {
  std::string out;
  for (const LabelledEdge& e : edges_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.source) + "-" + std::to_string(e.label) + "->" + std::to_string(e.target);
  }
  return "{" + out + "}";
}

PathInvariants path_invariants(const PartialSGraph& h, Point x, const Caps& caps) {
  if (!h.has_vertex(x)) throw ValidationError("base vertex " + std::to_string(x) + " is not in the graph");
  std::vector<Letter> alphabet;
  for (std::uint32_t g = 1; g <= h.d(); ++g) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  PathInvariants inv;
  inv.simple_paths.push_back(Word());
  std::set<Point> visited{x};
  // Letters are collected first-step first; the word reads them right to left.
  std::vector<Letter> steps;
  auto record = [&]() {
    if (inv.simple_paths.size() > caps.path_words) {
      throw InfeasibleError("simple path enumeration exceeds the path-word cap " + std::to_string(caps.path_words));
    }
    std::vector<Letter> letters(steps.rbegin(), steps.rend());
    inv.simple_paths.push_back(Word::from_letters(letters));
  };
  auto dfs = [&](auto&& self, Point at) -> void {
    for (const Letter& l : alphabet) {
      if (!steps.empty() && steps.back() == l.inverse()) continue;
      std::optional<Point> next = h.step(at, l);
      if (!next) continue;
      if (visited.count(*next) != 0) {
        steps.push_back(l);
        record();
        steps.pop_back();
      } else {
        steps.push_back(l);
        visited.insert(*next);
        record();
        self(self, *next);
        visited.erase(*next);
        steps.pop_back();
      }
    }
  };
  dfs(dfs, x);

  const std::size_t k = inv.simple_paths.size();
  if (k * k > caps.path_words) {
    throw InfeasibleError("base path set would hold up to " + std::to_string(k * k) +
                          " words, above the path-word cap " + std::to_string(caps.path_words));
  }
  for (const Word& w_prime : inv.simple_paths) {
    Word left = w_prime.inverse();
    for (const Word& w : inv.simple_paths) inv.base_paths.insert(left * w);
  }
  for (const Word& u : inv.base_paths) {
    std::optional<Point> end = h.walk(u, x);
    if (end && *end == x) inv.stabilizer_paths.insert(u);
  }
  return inv;
}

bool includes(const SGraph& g, const PartialSGraph& h) {
  if (h.d() != g.d()) throw ValidationError("partial graph and graph use different label sets");
  for (const LabelledEdge& e : h.edges()) {
    if (e.source > g.n() || e.target > g.n()) return false;
    if (g.successor(e.label, e.source) != e.target) return false;
  }
  return true;
}

}  // namespace permtest
