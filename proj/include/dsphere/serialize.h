// Copyright 2026 The dsphere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dsphere/census.h"
#include "dsphere/curvature.h"
#include "dsphere/geomag.h"
#include "dsphere/loops.h"
#include "dsphere/topology.h"

namespace dsphere {

// Rationals are written as "p/q" strings; graphs use graph_to_json.

nlohmann::json to_json(const ContractionWitness& w);
nlohmann::json to_json(const SphereCertificate& c);
/// Inverse of to_json; throws InputError on malformed input.
ContractionWitness contraction_witness_from_json(const nlohmann::json& j);
SphereCertificate sphere_certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TopologyVerdict& v);
nlohmann::json to_json(const CurvatureSign& s);
nlohmann::json to_json(const CurvatureReport& r);
nlohmann::json to_json(const LoopContraction& c);
nlohmann::json to_json(const Surface& s);
nlohmann::json to_json(const DiameterReport& r);
nlohmann::json to_json(const CensusResult& r);
nlohmann::json to_json(const CensusDossier& d);

/// The host with the surface edges highlighted.
std::string surface_to_dot(const Surface& s, const std::string& name = "surface");

}  // namespace dsphere
