#include "permtest/sgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "permtest/errors.hpp"

namespace permtest {

Point walk(const SGraph& g, const Word& w, Point x) { return evaluate_point(w, g.tuple(), x); }

std::vector<std::vector<Point>> components(const SGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> comp(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::vector<Point>> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (comp[start] != std::numeric_limits<std::uint32_t>::max()) continue;
    auto id = static_cast<std::uint32_t>(out.size());
    out.emplace_back();
    std::vector<std::uint32_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v + 1);
      for (const Permutation& p : g.tuple().perms()) {
        for (std::uint32_t u : {p.image_index(v), p.preimage_index(v)}) {
          if (comp[u] == std::numeric_limits<std::uint32_t>::max()) {
            comp[u] = id;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const SGraph& g) { return components(g).size() <= 1; }

SGraph induced_subgraph(const SGraph& g, const std::vector<Point>& vertices) {
  std::vector<Point> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> position(g.n() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > g.n()) throw ValidationError("vertex outside the graph");
    if (position[sorted[i]] != 0) throw ValidationError("repeated vertex in subgraph selection");
    position[sorted[i]] = static_cast<std::uint32_t>(i + 1);
  }
  std::vector<Permutation> perms;
  for (const Permutation& p : g.tuple().perms()) {
    std::vector<Point> images;
    images.reserve(sorted.size());
    for (Point v : sorted) {
      Point u = p(v);
      if (position[u] == 0) throw ValidationError("vertex set is not a union of components");
      images.push_back(position[u]);
    }
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return SGraph(PermTuple(std::move(perms), static_cast<std::uint32_t>(sorted.size())));
}

std::uint64_t edge_boundary(const SGraph& g, const std::vector<bool>& in_set) {
  if (in_set.size() != g.n()) throw ValidationError("membership vector has the wrong length");
  std::uint64_t count = 0;
  for (const Permutation& p : g.tuple().perms()) {
    for (std::uint32_t v = 0; v < g.n(); ++v) count += in_set[v] && !in_set[p.image_index(v)];
  }
  return count;
}

namespace {

std::vector<std::uint32_t> bfs_encoding(const SGraph& g, std::uint32_t root) {
  const std::uint32_t n = g.n();
  const std::size_t d = g.d();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> number(n, kUnseen);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  number[root] = 0;
  order.push_back(root);
  std::vector<std::uint32_t> code;
  code.reserve(n * d);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (std::size_t s = 0; s < d; ++s) {
      std::uint32_t u = g.tuple()[s].image_index(v);
      if (number[u] == kUnseen) {
        number[u] = static_cast<std::uint32_t>(order.size());
        order.push_back(u);
      }
      code.push_back(number[u]);
    }
  }
  return code;
}

struct RootScan {
  std::vector<std::uint32_t> canonical;
  bool transitive = true;
};

RootScan scan_roots(const SGraph& g) {
  RootScan scan;
  for (std::uint32_t r = 0; r < g.n(); ++r) {
    std::vector<std::uint32_t> code = bfs_encoding(g, r);
    if (r == 0) {
      scan.canonical = std::move(code);
      continue;
    }
    if (code != scan.canonical) {
      scan.transitive = false;
      if (code < scan.canonical) scan.canonical = std::move(code);
    }
  }
  return scan;
}

}  // namespace

bool is_vertex_transitive(const SGraph& g) {
  if (!is_connected(g)) return false;
  return scan_roots(g).transitive;
}

std::string canonical_form(const SGraph& g) {
  if (!is_connected(g)) throw ValidationError("canonical form is defined for connected graphs only");
  RootScan scan = scan_roots(g);
  std::string out = std::to_string(g.n()) + ":" + std::to_string(g.d()) + ":";
  for (std::uint32_t v : scan.canonical) out += std::to_string(v) + ",";
  return out;
}

Rational cheeger(const SGraph& g, const Caps& caps) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ValidationError("the Cheeger constant needs at least two vertices");
  if (n > 63) {
    throw InfeasibleError("exact Cheeger constant on " + std::to_string(n) + " vertices exceeds the subset cap");
  }
  const bool pin_first = is_connected(g) && scan_roots(g).transitive;
  const std::uint32_t free_count = pin_first ? n - 1 : n;
  const std::uint64_t scanned = std::uint64_t{1} << free_count;
  if (scanned > caps.subsets) {
    throw InfeasibleError("exact Cheeger constant scans 2^" + std::to_string(free_count) +
                          " subsets, above the subset cap " + std::to_string(caps.subsets));
  }

  const std::size_t d = g.d();
  std::vector<std::uint32_t> succ(d * n), pred(d * n);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::uint32_t v = 0; v < n; ++v) {
      succ[s * n + v] = g.tuple()[s].image_index(v);
      pred[s * n + v] = g.tuple()[s].preimage_index(v);
    }
  }
  // Change in |boundary| when v joins a set whose membership mask excludes v.
  auto delta = [&](std::uint32_t v, std::uint64_t mask) {
    std::int64_t c = 0;
    for (std::size_t s = 0; s < d; ++s) {
      std::uint32_t u = succ[s * n + v];
      std::uint32_t p = pred[s * n + v];
      if (u != v && !((mask >> u) & 1U)) ++c;
      if (p != v && ((mask >> p) & 1U)) --c;
    }
    return c;
  };

  const std::uint32_t half = n / 2;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(half + 1, kInf);
  std::uint64_t mask = 0;
  std::int64_t boundary = 0;
  std::uint32_t size = 0;
  const std::uint32_t offset = pin_first ? 1 : 0;
  if (pin_first) {
    boundary = delta(0, 0);
    mask = 1;
    size = 1;
    best[1] = boundary;
  }
  for (std::uint64_t i = 1; i < scanned; ++i) {
    const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(i)) + offset;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) {
      mask &= ~bit;
      boundary -= delta(v, mask);
      --size;
    } else {
      boundary += delta(v, mask);
      mask |= bit;
      ++size;
    }
    if (size >= 1 && size <= half && boundary < best[size]) best[size] = boundary;
  }

  Rational alpha;
  bool have = false;
  for (std::uint32_t k = 1; k <= half; ++k) {
    if (best[k] == kInf) continue;
    Rational candidate = make_rational(best[k], k);
    if (!have || candidate < alpha) {
      alpha = candidate;
      have = true;
    }
  }
  return alpha;
}

Rational CheegerCache::get(const SGraph& connected_graph, const Caps& caps) {
  if (connected_graph.n() == 0) throw ValidationError("empty graph");
  std::vector<std::uint32_t> code = bfs_encoding(connected_graph, 0);
  if (code.size() != static_cast<std::size_t>(connected_graph.n()) * connected_graph.d()) {
    throw ValidationError("the Cheeger cache accepts connected graphs only");
  }
  std::string key = std::to_string(connected_graph.n()) + ":" + std::to_string(connected_graph.d()) + ":";
  key.append(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(std::uint32_t));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) {
      ++hits_;
      return it->second;
    }
  }
  Rational value = cheeger(connected_graph, caps);
  std::lock_guard<std::mutex> lock(mutex_);
  values_.emplace(key, value);
  return value;
}

std::size_t CheegerCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return values_.size();
}

std::uint64_t CheegerCache::hits() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return hits_;
}

SGraph relabel(const SGraph& g, const Permutation& pi) {
  if (pi.n() != g.n()) throw ValidationError("relabelling permutation has the wrong degree");
  std::vector<Permutation> perms;
  Permutation pi_inv = pi.inverse();
  for (const Permutation& p : g.tuple().perms()) perms.push_back(pi_inv * p * pi);
  return SGraph(PermTuple(std::move(perms), g.n()));
}

SGraph restrict_last(const SGraph& g) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ValidationError("restriction needs n >= 2");
  std::vector<Permutation> perms;
  for (const Permutation& p : g.tuple().perms()) {
    std::vector<Point> images(n - 1);
    for (Point x = 1; x < n; ++x) {
      Point y = p(x);
      images[x - 1] = y == n ? p(y) : y;
    }
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return SGraph(PermTuple(std::move(perms), n - 1));
}

SGraph product_graph(const SGraph& g1, const SGraph& g2) {
  if (g1.d() != g2.d()) throw ValidationError("product of S-graphs with different label sets");
  const std::uint32_t n1 = g1.n(), n2 = g2.n();
  std::vector<Permutation> perms;
  for (std::size_t s = 0; s < g1.d(); ++s) {
    std::vector<Point> images(static_cast<std::size_t>(n1) * n2);
    for (Point x = 1; x <= n1; ++x) {
      for (Point y = 1; y <= n2; ++y) {
        images[(x - 1) * n2 + (y - 1)] = (g1.tuple()[s](x) - 1) * n2 + g2.tuple()[s](y);
      }
    }
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return SGraph(PermTuple(std::move(perms), n1 * n2));
}

std::pair<Point, Point> product_coordinates(Point v, std::uint32_t n2) {
  return {(v - 1) / n2 + 1, (v - 1) % n2 + 1};
}

std::string edge_list(const SGraph& g, const std::vector<std::string>& label_names) {
  if (label_names.size() != g.d()) throw ValidationError("label name count does not match the graph");
  std::string out;
  for (std::size_t s = 0; s < g.d(); ++s) {
    for (Point u = 1; u <= g.n(); ++u) {
      out += std::to_string(u) + " " + label_names[s] + " " + std::to_string(g.tuple()[s](u)) + "\n";
    }
  }
  return out;
}

}  // namespace permtest
