// Copyright 2026 The qotp Authors
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

#ifndef QOTP_DISTRIBUTION_H
#define QOTP_DISTRIBUTION_H

#include <cstdint>
#include <span>
#include <vector>

#include "qotp/bits.h"
#include "qotp/rational.h"
#include "qotp/smallbias.h"

namespace qotp {

/// Probability distribution over 2n-bit Pauli descriptors with exact weights. The support is
/// sorted, duplicate-free, and every weight is strictly positive; weights sum to exactly 1.
class PauliDistribution {
   public:
    /// Takes arbitrary (possibly repeated, possibly zero-weight) entries and canonicalises them.
    explicit PauliDistribution(std::vector<WeightedString> entries);

    /// Uniform over a multiset: each string weighted by its multiplicity / size.
    static PauliDistribution uniform_over(std::span<const BitString> members);
    /// Same, for members packed as integers of `length` bits.
    static PauliDistribution uniform_over_packed(std::span<const uint64_t> members, int length);
    static PauliDistribution point_mass(const BitString &w);
    /// Uniform over all of {0,1}^(2n).
    static PauliDistribution full(int n);

    int n() const { return int(length_ / 2); }
    size_t length() const { return length_; }
    size_t support_size() const { return entries_.size(); }
    std::span<const WeightedString> entries() const { return entries_; }

   private:
    size_t length_ = 0;
    std::vector<WeightedString> entries_;
};

}  // namespace qotp

#endif
