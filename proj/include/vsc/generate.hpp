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

#ifndef VSC_GENERATE_HPP_
#define VSC_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "vsc/instance.hpp"

namespace vsc {

enum class GenKind { kRandom, kTraceroute, kDecoy };
enum class GraphModel { kErdosRenyi, kPreferentialAttachment };

GenKind parse_gen_kind(std::string_view name);
GraphModel parse_graph_model(std::string_view name);

struct RandomParams {
  std::size_t n = 10;
  std::size_t k = 6;
  std::size_t m = 2;
  std::size_t size_min = 1;
  std::size_t size_max = 4;
  int weight_min = 1;
  int weight_max = 2;
};

struct TracerouteParams {
  std::size_t nodes = 20;
  GraphModel model = GraphModel::kErdosRenyi;
  double edge_probability = 0.2;  // Erdos-Renyi p
  std::size_t attachment = 2;     // preferential attachment edges per node
  std::size_t m = 3;              // agents, placed at distinct nodes
  std::size_t destinations = 5;   // per agent, distinct, never the agent's node
  int weight_min = 1;
  int weight_max = 2;
  std::size_t max_retries = 100;  // redraws of a disconnected graph
};

// Disjoint gadgets of two agents with weight 1. In each gadget the first
// agent owns a decoy X+{z} and the set {z}+W, the second agent owns X, with
// |W| <= |X|. One round suffices (second set + X) but the round greedy takes
// the decoy first and needs two.
struct DecoyParams {
  std::size_t gadgets = 2;
  std::size_t size_min = 1;  // |X| range
  std::size_t size_max = 4;
};

struct GenSpec {
  GenKind kind = GenKind::kRandom;
  std::uint64_t seed = 0;
  RandomParams random;
  TracerouteParams traceroute;
  DecoyParams decoy;
};

// Deterministic in spec (including seed). Throws kSpec for unsatisfiable
// parameters and when no connected graph was drawn within max_retries.
Instance generate(const GenSpec& spec);

struct TracerouteInstance {
  Instance instance;
  std::vector<std::vector<std::size_t>> adjacency;        // sorted neighbour lists
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // element -> (u, v), u < v
  std::vector<std::vector<std::size_t>> paths;             // set -> node sequence
  std::vector<std::size_t> agent_nodes;
};

// Traceroute generator keeping the graph and the measured paths. Paths are
// shortest paths with the lexicographically smallest node sequence.
TracerouteInstance generate_traceroute(const TracerouteParams& params, std::uint64_t seed);

// Agent 0 owns `blocks` sets block_j + {shared}; agent j (1..blocks-1) owns
// block_j alone. Ownership-blind greedy hands every block to agent 0
// (objective = blocks) while one round of the round greedy covers all.
Instance hub_instance(std::size_t blocks, std::size_t block_size);

struct CorpusBounds {
  std::size_t n_max = 30;
  std::size_t k_max = 16;
  std::size_t m_max = 4;
  int weight_max = 3;
  bool unit = false;  // m = 1 and weight 1 (plain set cover)
};

// Seed-derived corpus member of the given kind within `bounds`.
GenSpec corpus_spec(GenKind kind, std::uint64_t seed, const CorpusBounds& bounds = {});

}  // namespace vsc

#endif  // VSC_GENERATE_HPP_
