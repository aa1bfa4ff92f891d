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

#include "weylgpd/ring.hpp"

#include "weylgpd/errors.hpp"

namespace wgd {

RingContext::RingContext(std::vector<std::string> names, RingMode mode)
    : names_(std::move(names)), mode_(mode) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw DomainError("empty variable name");
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw DomainError("duplicate variable name '" + names_[i] + "'");
  }
}

int RingContext::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool RingContext::same_as(const RingContext& other) const {
  return this == &other || (mode_ == other.mode_ && names_ == other.names_);
}

RingPtr make_ring(std::vector<std::string> names, RingMode mode) {
  return std::make_shared<RingContext>(std::move(names), mode);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  return extend_ring(ring, extra, ring->mode());
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, RingMode mode) {
  std::vector<std::string> names = ring->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(std::move(names), mode);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!a || !b || !a->same_as(*b))
    throw RingMismatchError(std::string(where) + ": ring contexts differ");
}

}  // namespace wgd
