// Copyright 2026 The weylgpd authors
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

#ifndef WEYLGPD_JSON_IO_HPP
#define WEYLGPD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "weylgpd/groebner.hpp"
#include "weylgpd/groupoid.hpp"
#include "weylgpd/sgeom.hpp"

// Stable JSON shapes shared by the CLI and the test harnesses.
//   type descriptor  {"family":"gl","m":2,"n":1} | {"family":"osp","r":5,"n":2}
//                    | {"family":"q","n":3}
//   weight           {"eps":["3","1"],"delta":["-1"]}
//   torus point      {"x":["2","-1/2"],"y":["5"]}
//   ideal            {"ring":{"vars":[...],"mode":"affine"},"generators":[...],
//                     "groebner":{"order":"grevlex","basis":[...]}? }
// Rationals travel as strings to stay exact.

namespace wgd {

using Json = nlohmann::json;

Json supertype_to_json(const SuperType& type);
SuperType supertype_from_json(const Json& j);

Space space_from_string(const std::string& s);

Json point_to_json(const Setting& setting, const Point& p);
Point point_from_json(const Setting& setting, const Json& j);

Json root_to_json(const Setting& setting, const Root& a);
Root root_from_string(const Setting& setting, const std::string& text);

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json ideal_to_json(const IdealPresentation& ideal);
/// `expected_ring`, when given, overrides/validates the payload's ring.
IdealPresentation ideal_from_json(const Json& j, const RingPtr& expected_ring = nullptr);

Json orbit_description_to_json(const Setting& setting, const OrbitDescription& d);
Json witness_to_json(const Setting& setting, const OrbitWitness& w);
Json sclosure_to_json(const Setting& setting, const SClosureResult& r);

}  // namespace wgd

#endif  // WEYLGPD_JSON_IO_HPP
