// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vsc/generate.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "vsc/error.hpp"

namespace vsc {

namespace {

using Rng = std::mt19937_64;

template <typename T>
T Uniform(Rng& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

[[noreturn]] void SpecError(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kSpec, field, field + ": " + what);
}

void CheckWeights(int lo, int hi) {
  if (lo < 1) SpecError("weight_min", "must be >= 1");
  if (hi < lo) SpecError("weight_max", "must be >= weight_min");
}

// k distinct values from 0..n-1, in draw order (partial Fisher-Yates).
std::vector<std::size_t> SampleDistinct(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[Uniform(rng, i, n - 1)]);
  pool.resize(count);
  return pool;
}

// Shrinks the universe to the union of the sets, keeping element order.
Instance Compact(std::size_t n, const std::vector<std::vector<std::size_t>>& sets,
                 const std::vector<std::size_t>& owner, std::vector<Agent> agents,
                 std::vector<std::string> labels = {}) {
  std::vector<std::int64_t> remap(n, -1);
  std::vector<bool> used(n, false);
  for (const auto& s : sets)
    for (std::size_t e : s) used[e] = true;
  std::int64_t next = 0;
  std::vector<std::string> kept_labels;
  for (std::size_t e = 0; e < n; ++e) {
    if (!used[e]) continue;
    remap[e] = next++;
    if (!labels.empty()) kept_labels.push_back(std::move(labels[e]));
  }
  std::vector<std::vector<std::int64_t>> mapped(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (std::size_t e : sets[j]) mapped[j].push_back(remap[e]);
  std::vector<AgentSpec> specs(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    specs[i].name = std::move(agents[i].name);
    specs[i].weight = agents[i].weight;
  }
  for (std::size_t j = 0; j < owner.size(); ++j)
    specs[owner[j]].sets.push_back(static_cast<std::int64_t>(j));
  return make_instance(next, mapped, specs, std::move(kept_labels));
}

std::vector<Agent> DrawAgents(Rng& rng, std::size_t m, int w_min, int w_max) {
  std::vector<Agent> agents(m);
  for (std::size_t i = 0; i < m; ++i) {
    agents[i].name = "a" + std::to_string(i);
    agents[i].weight = Uniform(rng, w_min, w_max);
  }
  return agents;
}

Instance GenerateRandom(const RandomParams& p, std::uint64_t seed) {
  if (p.n == 0) SpecError("n", "must be positive");
  if (p.k == 0) SpecError("k", "must be positive");
  if (p.m == 0) SpecError("m", "must be positive");
  if (p.m > p.k) SpecError("m", "more agents than sets leaves some agent empty");
  if (p.size_min == 0) SpecError("size_min", "must be positive");
  if (p.size_max < p.size_min) SpecError("size_max", "must be >= size_min");
  if (p.size_max > p.n) SpecError("size_max", "must be <= n");
  CheckWeights(p.weight_min, p.weight_max);

  Rng rng(seed);
  std::vector<std::vector<std::size_t>> sets(p.k);
  std::vector<std::size_t> owner(p.k);
  for (std::size_t j = 0; j < p.k; ++j) {
    sets[j] = SampleDistinct(rng, p.n, Uniform(rng, p.size_min, p.size_max));
    owner[j] = j < p.m ? j : Uniform(rng, std::size_t{0}, p.m - 1);
  }
  return Compact(p.n, sets, owner, DrawAgents(rng, p.m, p.weight_min, p.weight_max));
}

using Graph = std::vector<std::vector<std::size_t>>;

bool Connected(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : g[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.size();
}

void AddEdge(Graph& g, std::size_t u, std::size_t v) {
  g[u].push_back(v);
  g[v].push_back(u);
}

Graph ErdosRenyi(Rng& rng, std::size_t nodes, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(nodes);
  for (std::size_t u = 0; u < nodes; ++u)
    for (std::size_t v = u + 1; v < nodes; ++v)
      if (coin(rng)) AddEdge(g, u, v);
  return g;
}

// Barabasi-Albert style growth from a clique of attachment+1 nodes.
Graph PreferentialAttachment(Rng& rng, std::size_t nodes, std::size_t attachment) {
  Graph g(nodes);
  const std::size_t seed_nodes = std::min(nodes, attachment + 1);
  std::vector<std::size_t> endpoints;  // each node repeated by degree
  for (std::size_t u = 0; u < seed_nodes; ++u)
    for (std::size_t v = u + 1; v < seed_nodes; ++v) {
      AddEdge(g, u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  for (std::size_t u = seed_nodes; u < nodes; ++u) {
    std::vector<std::size_t> targets;
    while (targets.size() < std::min(attachment, u)) {
      const std::size_t v = endpoints.empty()
                                ? Uniform(rng, std::size_t{0}, u - 1)
                                : endpoints[Uniform(rng, std::size_t{0}, endpoints.size() - 1)];
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
    }
    for (std::size_t v : targets) {
      AddEdge(g, u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return g;
}

// Shortest path with the lexicographically smallest node sequence.
std::vector<std::size_t> ShortestPath(const Graph& g, std::size_t from, std::size_t to) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kInf);
  std::deque<std::size_t> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g[u])
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  std::vector<std::size_t> path{from};
  std::size_t cur = from;
  while (cur != to) {
    std::size_t next = kInf;
    for (std::size_t v : g[cur])
      if (dist[v] + 1 == dist[cur] && v < next) next = v;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

Instance GenerateDecoy(const DecoyParams& p, std::uint64_t seed) {
  if (p.gadgets == 0) SpecError("gadgets", "must be positive");
  if (p.size_min == 0) SpecError("size_min", "must be positive");
  if (p.size_max < p.size_min) SpecError("size_max", "must be >= size_min");

  Rng rng(seed);
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> owner;
  std::size_t n = 0;
  for (std::size_t t = 0; t < p.gadgets; ++t) {
    const std::size_t x = Uniform(rng, p.size_min, p.size_max);
    const std::size_t w = Uniform(rng, std::size_t{1}, x);
    std::vector<std::size_t> xs(x), ws(w);
    std::iota(xs.begin(), xs.end(), n);
    const std::size_t z = n + x;
    std::iota(ws.begin(), ws.end(), z + 1);
    n = z + 1 + w;

    std::vector<std::size_t> decoy = xs;
    decoy.push_back(z);
    std::vector<std::size_t> target = ws;
    target.insert(target.begin(), z);
    sets.push_back(std::move(decoy));
    owner.push_back(2 * t);
    sets.push_back(std::move(target));
    owner.push_back(2 * t);
    sets.push_back(std::move(xs));
    owner.push_back(2 * t + 1);
  }
  // Scramble element ids so gadgets are not laid out contiguously.
  const auto perm = SampleDistinct(rng, n, n);
  for (auto& s : sets)
    for (auto& e : s) e = perm[e];
  return Compact(n, sets, owner, DrawAgents(rng, 2 * p.gadgets, 1, 1));
}

}  // namespace

GenKind parse_gen_kind(std::string_view name) {
  if (name == "random") return GenKind::kRandom;
  if (name == "traceroute") return GenKind::kTraceroute;
  if (name == "decoy") return GenKind::kDecoy;
  SpecError("kind", "unknown generator kind '" + std::string(name) + "'");
}

GraphModel parse_graph_model(std::string_view name) {
  if (name == "er" || name == "erdos-renyi") return GraphModel::kErdosRenyi;
  if (name == "ba" || name == "preferential") return GraphModel::kPreferentialAttachment;
  SpecError("graph", "unknown graph model '" + std::string(name) + "'");
}

TracerouteInstance generate_traceroute(const TracerouteParams& p, std::uint64_t seed) {
  if (p.nodes < 2) SpecError("nodes", "need at least 2 nodes");
  if (p.m == 0) SpecError("m", "must be positive");
  if (p.m > p.nodes) SpecError("m", "more agents than nodes");
  if (p.destinations == 0) SpecError("destinations", "must be positive");
  if (p.destinations > p.nodes - 1) SpecError("destinations", "more destinations than other nodes");
  if (p.model == GraphModel::kErdosRenyi && !(p.edge_probability > 0.0 && p.edge_probability <= 1.0))
    SpecError("p", "edge probability must be in (0, 1]");
  if (p.model == GraphModel::kPreferentialAttachment && p.attachment == 0)
    SpecError("attachment", "must be positive");
  CheckWeights(p.weight_min, p.weight_max);

  Rng rng(seed);
  Graph g;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > p.max_retries)
      SpecError("p", "no connected graph after " + std::to_string(p.max_retries) + " retries");
    g = p.model == GraphModel::kErdosRenyi ? ErdosRenyi(rng, p.nodes, p.edge_probability)
                                           : PreferentialAttachment(rng, p.nodes, p.attachment);
    if (Connected(g)) break;
  }
  for (auto& nbrs : g) std::sort(nbrs.begin(), nbrs.end());

  TracerouteInstance out;
  out.agent_nodes = SampleDistinct(rng, p.nodes, p.m);
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < p.m; ++i) {
    const std::size_t src = out.agent_nodes[i];
    for (std::size_t d : SampleDistinct(rng, p.nodes - 1, p.destinations)) {
      const std::size_t dst = d >= src ? d + 1 : d;
      out.paths.push_back(ShortestPath(g, src, dst));
      owner.push_back(i);
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (const auto& path : out.paths)
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
      edge_index.emplace(std::minmax(path[s], path[s + 1]), 0);
  std::vector<std::string> labels;
  for (auto& [edge, index] : edge_index) {
    index = out.edges.size();
    out.edges.push_back(edge);
    labels.push_back(std::to_string(edge.first) + "-" + std::to_string(edge.second));
  }
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& path : out.paths) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      s.push_back(edge_index.at(std::minmax(path[i], path[i + 1])));
    sets.push_back(std::move(s));
  }
  out.instance = Compact(out.edges.size(), sets, owner,
                         DrawAgents(rng, p.m, p.weight_min, p.weight_max), std::move(labels));
  out.adjacency = std::move(g);
  return out;
}

Instance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kRandom: return GenerateRandom(spec.random, spec.seed);
    case GenKind::kTraceroute: return generate_traceroute(spec.traceroute, spec.seed).instance;
    case GenKind::kDecoy: return GenerateDecoy(spec.decoy, spec.seed);
  }
  SpecError("kind", "unknown generator kind");
}

Instance hub_instance(std::size_t blocks, std::size_t block_size) {
  if (blocks == 0) SpecError("blocks", "must be positive");
  if (block_size == 0) SpecError("block_size", "must be positive");
  const std::size_t shared = blocks * block_size;
  std::vector<std::vector<std::int64_t>> sets;
  std::vector<AgentSpec> agents(blocks);
  agents[0].name = "hub";
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::int64_t> s(block_size);
    std::iota(s.begin(), s.end(), static_cast<std::int64_t>(b * block_size));
    s.push_back(static_cast<std::int64_t>(shared));
    sets.push_back(std::move(s));
    agents[0].sets.push_back(static_cast<std::int64_t>(b));
  }
  for (std::size_t b = 1; b < blocks; ++b) {
    std::vector<std::int64_t> s(block_size);
    std::iota(s.begin(), s.end(), static_cast<std::int64_t>(b * block_size));
    agents[b].name = "a" + std::to_string(b);
    agents[b].sets.push_back(static_cast<std::int64_t>(sets.size()));
    sets.push_back(std::move(s));
  }
  return make_instance(static_cast<std::int64_t>(shared + 1), sets, agents);
}

GenSpec corpus_spec(GenKind kind, std::uint64_t seed, const CorpusBounds& b) {
  if (b.n_max < 4 || b.k_max < 3 || b.m_max < 1 || b.weight_max < 1)
    SpecError("bounds", "corpus bounds too small (need n_max >= 4, k_max >= 3)");
  Rng rng(seed ^ 0x5bd1e995c0ffee11ULL);
  GenSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  const int w_max = b.unit ? 1 : Uniform(rng, 1, b.weight_max);
  switch (kind) {
    case GenKind::kRandom: {
      auto& r = spec.random;
      r.n = Uniform(rng, std::size_t{4}, b.n_max);
      r.k = Uniform(rng, std::size_t{2}, b.k_max);
      r.m = b.unit ? 1 : Uniform(rng, std::size_t{1}, std::min(b.m_max, r.k));
      r.size_min = 1;
      r.size_max = Uniform(rng, std::size_t{1}, std::max<std::size_t>(1, r.n / 2));
      r.weight_min = 1;
      r.weight_max = w_max;
      break;
    }
    case GenKind::kTraceroute: {
      auto& t = spec.traceroute;
      t.nodes = Uniform(rng, std::size_t{6}, std::size_t{20});
      t.edge_probability = std::uniform_real_distribution<double>(0.15, 0.4)(rng);
      t.m = b.unit ? 1 : Uniform(rng, std::size_t{1}, std::min(b.m_max, t.nodes));
      t.destinations = Uniform(rng, std::size_t{1},
                               std::min(t.nodes - 1, std::max<std::size_t>(1, b.k_max / t.m)));
      t.weight_min = 1;
      t.weight_max = w_max;
      break;
    }
    case GenKind::kDecoy: {
      auto& d = spec.decoy;
      d.gadgets = Uniform(rng, std::size_t{1}, std::max<std::size_t>(1, std::min<std::size_t>(b.k_max / 3, 4)));
      d.size_min = 1;
      d.size_max = Uniform(rng, std::size_t{1}, std::size_t{4});
      break;
    }
  }
  return spec;
}

}  // namespace vsc
