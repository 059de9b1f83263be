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

#include "qotp/distribution.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qotp {

PauliDistribution::PauliDistribution(std::vector<WeightedString> entries) {
    if (entries.empty()) {
        throw std::invalid_argument("distribution must be nonempty");
    }
    length_ = entries[0].bits.size();
    if (length_ == 0 || length_ % 2) {
        throw std::invalid_argument("Pauli descriptors must have a positive even length");
    }
    std::map<BitString, Rational> merged;
    Rational total(0);
    for (auto &e : entries) {
        if (e.bits.size() != length_) {
            throw std::invalid_argument("distribution strings have different lengths");
        }
        if (e.weight < Rational(0)) {
            throw std::invalid_argument("distribution weights must be non-negative");
        }
        total += e.weight;
        if (e.weight == Rational(0)) continue;
        auto [it, inserted] = merged.try_emplace(std::move(e.bits), e.weight);
        if (!inserted) it->second += e.weight;
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("distribution weights sum to " + total.str() + ", not 1");
    }
    entries_.reserve(merged.size());
    for (auto &[bits, weight] : merged) entries_.push_back({bits, weight});
}

PauliDistribution PauliDistribution::uniform_over(std::span<const BitString> members) {
    std::vector<WeightedString> entries;
    entries.reserve(members.size());
    int64_t size = int64_t(members.size());
    for (const auto &m : members) entries.push_back({m, Rational(1, size)});
    return PauliDistribution(std::move(entries));
}

PauliDistribution PauliDistribution::uniform_over_packed(std::span<const uint64_t> members, int length) {
    if (members.empty()) {
        throw std::invalid_argument("distribution must be nonempty");
    }
    std::vector<uint64_t> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<WeightedString> entries;
    int64_t size = int64_t(sorted.size());
    for (size_t k = 0; k < sorted.size();) {
        size_t end = k;
        while (end < sorted.size() && sorted[end] == sorted[k]) end++;
        entries.push_back({BitString::from_u64(sorted[k], size_t(length)), Rational(int64_t(end - k), size)});
        k = end;
    }
    return PauliDistribution(std::move(entries));
}

PauliDistribution PauliDistribution::point_mass(const BitString &w) { return PauliDistribution({{w, Rational(1)}}); }

PauliDistribution PauliDistribution::full(int n) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("full Pauli distribution limited to 1 <= n <= 12");
    }
    uint64_t count = uint64_t{1} << (2 * n);
    std::vector<uint64_t> all(count);
    for (uint64_t w = 0; w < count; w++) all[w] = w;
    return uniform_over_packed(all, 2 * n);
}

}  // namespace qotp
