#include "pathpack/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pathpack/errors.hpp"

namespace pathpack {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {
  engine_.discard(16);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = 0;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

int Rng::between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

bool Rng::chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

namespace {

RawNetwork draw(const GenParams& p, Rng& rng) {
  RawNetwork raw;
  std::vector<std::string> names;
  for (int i = 0; i < p.terminals; ++i) names.push_back("t" + std::to_string(i));
  for (int i = 0; i < p.nodes - p.terminals; ++i) names.push_back("x" + std::to_string(i));
  raw.nodes = names;
  raw.terminals.assign(names.begin(), names.begin() + p.terminals);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p.edges; ++i) {
    const int u = rng.between(0, p.nodes - 1);
    int v = rng.between(0, p.nodes - 2);
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  if (p.ensure_eulerian) {
    std::vector<int> degree(static_cast<std::size_t>(p.nodes), 0);
    for (auto [u, v] : edges) {
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
    }
    std::vector<int> odd;
    for (int v = p.terminals; v < p.nodes; ++v) {
      if (degree[static_cast<std::size_t>(v)] % 2) odd.push_back(v);
    }
    for (std::size_t i = odd.size(); i > 1; --i) std::swap(odd[i - 1], odd[rng.below(i)]);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) edges.emplace_back(odd[i], odd[i + 1]);
    if (odd.size() % 2) edges.emplace_back(odd.back(), rng.between(0, p.terminals - 1));
  }
  if (p.double_edges) {
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) edges.push_back(edges[i]);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    raw.edges.push_back({default_edge_id(i, edges.size()),
                         names[static_cast<std::size_t>(edges[i].first)],
                         names[static_cast<std::size_t>(edges[i].second)]});
  }

  const int k = p.terminals;
  std::vector<std::vector<int>> members;
  auto covered = [&](int a, int b) {
    return std::any_of(members.begin(), members.end(), [&](const std::vector<int>& m) {
      return std::count(m.begin(), m.end(), a) && std::count(m.begin(), m.end(), b);
    });
  };
  if (p.ensure_flat || (!p.ensure_simple)) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    }
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
    for (auto [a, b] : pairs) {
      if (!rng.chance(p.clutter_density)) continue;
      if (p.ensure_flat) {
        bool triangle = false;
        for (int c = 0; c < k; ++c) triangle = triangle || (c != a && c != b && covered(a, c) && covered(b, c));
        if (triangle) continue;
      }
      members.push_back({a, b});
    }
  } else {
    // Simple K-clutter: members of size 2 or 3, pairwise meeting in at most
    // one terminal, pairwise-meeting triples through a common terminal.
    const int attempts = k * (k - 1);
    for (int i = 0; i < attempts; ++i) {
      if (!rng.chance(p.clutter_density)) continue;
      const int size = k >= 3 && rng.chance(0.4) ? 3 : 2;
      std::vector<int> all(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) all[static_cast<std::size_t>(j)] = j;
      for (std::size_t j = all.size(); j > 1; --j) std::swap(all[j - 1], all[rng.below(j)]);
      std::vector<int> m(all.begin(), all.begin() + size);
      std::sort(m.begin(), m.end());
      Clutter trial;
      for (const auto& old : members) trial.members.push_back(old);
      trial.members.push_back(m);
      std::sort(trial.members.begin(), trial.members.end());
      trial.members.erase(std::unique(trial.members.begin(), trial.members.end()), trial.members.end());
      if (is_clutter(trial) && is_simple(trial) && satisfies_k_condition(trial)) members = trial.members;
    }
  }
  for (const auto& m : members) {
    std::vector<NodeId> names_m;
    for (int t : m) names_m.push_back(names[static_cast<std::size_t>(t)]);
    raw.clutter.push_back(names_m);
  }
  return raw;
}

}  // namespace

Network generate(const GenParams& p, const SolverLimits& limits) {
  if (p.terminals < 2 || p.nodes < p.terminals || p.edges < 0) {
    throw PreconditionError("generator needs at least two terminals and nodes >= terminals");
  }
  if (p.clutter_density < 0 || p.clutter_density > 1) throw PreconditionError("clutter density must lie in [0, 1]");
  if (p.nodes < 2) throw PreconditionError("generator needs at least two nodes");
  const int attempts = p.ensure_integral ? std::max(1, p.max_retries) : 1;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(p.seed, static_cast<std::uint64_t>(a));
    Network net = Network::from_raw(draw(p, rng));
    if (!p.ensure_integral || integrality(net, limits)) return net;
  }
  throw BoundExceeded("no integral instance after " + std::to_string(attempts) + " attempts (seed " +
                      std::to_string(p.seed) + ")");
}

}  // namespace pathpack
