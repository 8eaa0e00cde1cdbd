#include "permtest/presets.hpp"

#include <charconv>
#include <map>

#include "permtest/errors.hpp"

namespace permtest::presets {

namespace {

Word gen(std::uint32_t i, int sign = 1) { return Word::generator(i, sign); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ValidationError("malformed preset parameters in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

EquationSystem comm(std::uint32_t d) {
  if (d < 1) throw ValidationError("comm(d) needs d >= 1");
  std::vector<std::string> names;
  if (d <= 3) {
    const char* short_names[] = {"X", "Y", "Z"};
    for (std::uint32_t i = 0; i < d; ++i) names.emplace_back(short_names[i]);
  } else {
    for (std::uint32_t i = 1; i <= d; ++i) names.push_back("s" + std::to_string(i));
  }
  std::vector<Equation> eqs;
  for (std::uint32_t i = 1; i <= d; ++i) {
    for (std::uint32_t j = i + 1; j <= d; ++j) eqs.push_back({gen(i) * gen(j), gen(j) * gen(i)});
  }
  return EquationSystem(std::move(names), std::move(eqs));
}

EquationSystem baumslag_solitar(int m, int n) {
  if (m == 0 || n == 0) throw ValidationError("bs(m,n) needs nonzero m and n");
  Word x = gen(1), y = gen(2);
  return EquationSystem({"X", "Y"}, {{x * y.power(m), y.power(n) * x}});
}

EquationSystem surface(std::uint32_t genus) {
  if (genus < 1) throw ValidationError("surface(g) needs g >= 1");
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= 2 * genus; ++i) names.push_back("s" + std::to_string(i));
  Word lhs;
  for (std::uint32_t i = 1; i <= genus; ++i) lhs *= commutator(gen(2 * i - 1), gen(2 * i));
  return EquationSystem(std::move(names), {{lhs, Word()}});
}

EquationSystem heisenberg() {
  Word x = gen(1), y = gen(2), z = gen(3);
  return EquationSystem({"X", "Y", "Z"}, {{x * y, y * x * z}, {x * z, z * x}, {y * z, z * y}});
}

EquationSystem special_linear(std::uint32_t m) {
  if (m < 2) throw ValidationError("sl(m) needs m >= 2");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = 1; j <= m; ++j) {
      if (i == j) continue;
      pairs.emplace_back(i, j);
      index[{i, j}] = static_cast<std::uint32_t>(pairs.size());
      names.push_back(m < 10 ? "s" + std::to_string(i) + std::to_string(j)
                             : "s" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  auto s = [&](std::uint32_t i, std::uint32_t j) { return gen(index.at({i, j})); };

  std::vector<Equation> eqs;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (j != k && i != l) eqs.push_back({s(i, j) * s(k, l), s(k, l) * s(i, j)});
    }
  }
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = 1; j <= m; ++j) {
      for (std::uint32_t k = 1; k <= m; ++k) {
        if (i == j || j == k || i == k) continue;
        eqs.push_back({s(i, j) * s(j, k), s(i, k) * s(j, k) * s(i, j)});
      }
    }
  }
  Word w = s(1, 2) * s(2, 1).inverse() * s(1, 2);
  eqs.push_back({w.power(4), Word()});
  return EquationSystem(std::move(names), std::move(eqs));
}

EquationSystem abels(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("abels(p) needs a prime p");
  const int q = static_cast<int>(p);
  Word d2 = gen(1), d3 = gen(2), s12 = gen(3), s13 = gen(4), s23 = gen(5), s24 = gen(6), s34 = gen(7);
  std::vector<Equation> eqs = {
      {d2 * d3, d3 * d2},
      {s12 * s34, s34 * s12},
      {s23 * s12, s12 * s23 * s13},
      {s34 * s23, s23 * s34 * s24},
      {s13 * s12, s12 * s13},
      {s13 * s23, s23 * s13},
      {s24 * s23, s23 * s24},
      {s24 * s34, s34 * s24},
      {s13 * s24, s24 * s13},
      {s12 * d2, d2 * s12.power(q)},
      {s12 * d3, d3 * s12},
      {d2 * s23, s23.power(q) * d2},
      {s23 * d3, d3 * s23.power(q)},
      {s34 * d2, d2 * s34},
      {d3 * s34, s34.power(q) * d3},
  };
  return EquationSystem({"d2", "d3", "s12", "s13", "s23", "s24", "s34"}, std::move(eqs));
}

EquationSystem from_spec(std::string_view spec) {
  std::string_view name = spec;
  std::string_view args;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    args = spec.substr(colon + 1);
  }
  auto need = [&](std::size_t count) {
    std::vector<int> values = parse_ints(args, spec);
    if (values.size() != count) {
      throw ValidationError("preset '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
    }
    return values;
  };
  auto positive = [&](int v) {
    if (v < 1) throw ValidationError("preset parameter must be positive in '" + std::string(spec) + "'");
    return static_cast<std::uint32_t>(v);
  };
  if (name == "comm") return comm(positive(need(1)[0]));
  if (name == "bs") {
    auto v = need(2);
    return baumslag_solitar(v[0], v[1]);
  }
  if (name == "surface") return surface(positive(need(1)[0]));
  if (name == "sl") return special_linear(positive(need(1)[0]));
  if (name == "abels") return abels(positive(need(1)[0]));
  if (name == "heisenberg") {
    if (!args.empty()) throw ValidationError("preset 'heisenberg' takes no parameters");
    return heisenberg();
  }
  throw ValidationError("unknown preset '" + std::string(spec) + "'");
}

std::vector<std::pair<std::string, std::string>> catalogue() {
  return {
      {"comm:d", "pairwise commuting generators (d >= 1)"},
      {"bs:m,n", "Baumslag-Solitar relation X Y^m = Y^n X"},
      {"surface:g", "product of g commutators equals 1"},
      {"heisenberg", "discrete Heisenberg group on X, Y, Z"},
      {"sl:m", "elementary-matrix relations for SL_m over the integers (m >= 2)"},
      {"abels:p", "Abels' group for a prime p"},
  };
}

}  // namespace permtest::presets
