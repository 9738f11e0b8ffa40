// Copyright 2026-present hfsoft authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hfsoft/errors.hpp"

namespace hfsoft {

/// A membership degree in [0, 1].
using Degree = double;

/// Absolute tolerance used everywhere two degrees are compared.
inline constexpr Degree kDegreeEps = 1e-9;

inline bool degree_equal(Degree a, Degree b) {
    return (a > b ? a - b : b - a) <= kDegreeEps;
}

/// Selects between the two union/intersection semantics supported by the
/// library.
///
/// Set:    all pairwise max (resp. min) values, collected as a set.
/// Sorted: both operands viewed as ascending lists; the shorter one is
///         padded by repeating its maximum at the tail (minimum at the
///         front for intersections) and the lists are combined
///         position-wise.
///
/// The two modes genuinely disagree, e.g.
///   {0.1,0.2,0.9} u {0.2,0.4,0.6} = {0.2,0.4,0.6,0.9}  (Set)
///                                 = {0.2,0.4,0.9}      (Sorted)
/// Sorted is the default throughout.
enum class UnionMode {
    Sorted,
    Set,
};

/// A hesitant fuzzy element: a non-empty finite set of distinct degrees,
/// kept strictly ascending. The null element is exactly {0}.
class Hfe {
public:
    /// Constructs the null element {0}.
    Hfe() : degrees_{0.0} {}

    /// Canonicalizes an arbitrary value list: sorts ascending and collapses
    /// values within kDegreeEps of each other. Values may exceed [0, 1] by
    /// at most kDegreeEps and are clamped.
    static Hfe from_values(std::vector<Degree> values);

    const std::vector<Degree>& degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }

    Degree lower() const noexcept { return degrees_.front(); }
    Degree upper() const noexcept { return degrees_.back(); }

    bool is_null() const noexcept {
        return degrees_.size() == 1 && degrees_.front() <= kDegreeEps;
    }

    friend bool operator==(const Hfe& a, const Hfe& b);
    friend bool operator!=(const Hfe& a, const Hfe& b) { return !(a == b); }

private:
    explicit Hfe(std::vector<Degree> canonical) : degrees_(std::move(canonical)) {}

    std::vector<Degree> degrees_;
};

/// (lower, upper) bound of the element.
std::pair<Degree, Degree> bounds(const Hfe& a);

/// {1 - g : g in a}.
Hfe complement(const Hfe& a);

Hfe hfe_union(const Hfe& a, const Hfe& b, UnionMode mode);
Hfe hfe_intersection(const Hfe& a, const Hfe& b, UnionMode mode);

/// Left fold of hfe_union over the items in the given order; the empty
/// fold yields the null element.
Hfe hfe_union_n(std::span<const Hfe> items, UnionMode mode);

}  // namespace hfsoft
