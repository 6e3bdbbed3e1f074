// Copyright 2026 The tourneylab Authors
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

// JSON views of reports. Field names here are part of the file interface.

#pragma once

#include <json.hpp>

#include "tourneylab/partition.hpp"
#include "tourneylab/sampling.hpp"
#include "tourneylab/structure.hpp"

namespace tourneylab {

using Json = nlohmann::ordered_json;

// wall_time is deliberately absent so that replays serialise identically.
inline Json to_json(const EstimateReport& r) {
  return Json{{"p", r.p},
              {"trials", r.trials},
              {"seed", r.master_seed},
              {"successes", r.successes},
              {"estimate", r.point_estimate},
              {"ci_low", r.ci_low},
              {"ci_high", r.ci_high}};
}

inline Json to_json(const VertexSubset& s) { return Json(s.members()); }

inline Json to_json(const Partition& p) {
  return Json{{"A", to_json(p.A)}, {"B", to_json(p.B)}, {"X", to_json(p.X)}};
}

inline Partition partition_from_json(const Json& j, std::size_t n) {
  try {
    return make_partition(n, j.at("A").get<std::vector<Vertex>>(),
                          j.at("B").get<std::vector<Vertex>>(),
                          j.at("X").get<std::vector<Vertex>>());
  } catch (const Json::exception& e) {
    throw BadConfig(std::string("partition JSON: ") + e.what());
  }
}

inline Json to_json(const GoodnessReport& g) {
  return Json{{"eps", g.eps},
              {"size_ok", g.size_ok},
              {"semidegree_ok", g.semidegree_ok},
              {"density_ok", g.density_ok},
              {"e_AB", g.e_AB},
              {"e_BA", g.e_BA},
              {"size_A", g.size_A},
              {"size_B", g.size_B},
              {"min_semidegree_A", g.min_semidegree_A},
              {"min_semidegree_B", g.min_semidegree_B},
              {"good", g.good()}};
}

inline Json to_json(const BadEventFlags& f) {
  return Json{{"b1", f.b1}, {"b2", f.b2}, {"b3", f.b3}, {"b4", f.b4}};
}

inline Json to_json(const BoundSpec& b) {
  return Json{{"n", b.n}, {"t", b.t}, {"p", b.p}, {"bound", b.bound_value}, {"improved", b.improved}};
}

inline Json to_json(const CutResult& c) {
  return Json{{"A", to_json(c.A)},
              {"B", to_json(c.B)},
              {"e_AB", c.e_AB},
              {"density", c.density},
              {"method", to_string(c.method)}};
}

inline Json to_json(const MatchingCover& m) {
  Json edges = Json::array();
  for (const auto& [b, a] : m.matching) edges.push_back(Json::array({b, a}));
  return Json{{"size", m.matching.size()}, {"edges", edges}, {"cover", to_json(m.cover)}};
}

}  // namespace tourneylab
