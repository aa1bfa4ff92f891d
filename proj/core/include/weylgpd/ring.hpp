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

#ifndef WEYLGPD_RING_HPP
#define WEYLGPD_RING_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace wgd {

enum class RingMode {
  Affine,   // polynomial ring, exponents >= 0
  Laurent,  // Laurent ring, any integer exponents
};

/// Names and mode of a polynomial ring. Immutable after construction;
/// polynomials hold a shared pointer to their ring.
class RingContext {
 public:
  RingContext(std::vector<std::string> names, RingMode mode);

  int arity() const { return static_cast<int>(names_.size()); }
  RingMode mode() const { return mode_; }
  bool laurent() const { return mode_ == RingMode::Laurent; }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  bool same_as(const RingContext& other) const;

 private:
  std::vector<std::string> names_;
  RingMode mode_;
  std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> names, RingMode mode);

/// Ring with extra variables appended (same mode unless overridden).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, RingMode mode);

/// Throws RingMismatchError unless the contexts agree (by pointer or value).
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace wgd

#endif  // WEYLGPD_RING_HPP
