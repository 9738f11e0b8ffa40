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

#include "hfsoft/hfe.hpp"

#include <algorithm>
#include <cmath>

namespace hfsoft {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyHfe: return "EmptyHfe";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::EmptyUniverse: return "EmptyUniverse";
        case ErrorCode::EmptyAttributeSet: return "EmptyAttributeSet";
        case ErrorCode::UnknownAttribute: return "UnknownAttribute";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::MissingRow: return "MissingRow";
        case ErrorCode::MissingElement: return "MissingElement";
        case ErrorCode::NonTotalMap: return "NonTotalMap";
        case ErrorCode::ClassMismatch: return "ClassMismatch";
        case ErrorCode::NotBijective: return "NotBijective";
        case ErrorCode::NotManyOne: return "NotManyOne";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::NameNotFound: return "NameNotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

Hfe Hfe::from_values(std::vector<Degree> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyHfe, "an HFE needs at least one degree");
    }
    for (Degree& v : values) {
        if (v < -kDegreeEps || v > 1.0 + kDegreeEps) {
            throw Error(ErrorCode::DegreeOutOfRange,
                        "degree " + std::to_string(v) + " lies outside [0, 1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    std::sort(values.begin(), values.end());
    std::vector<Degree> canonical;
    canonical.reserve(values.size());
    for (Degree v : values) {
        if (canonical.empty() || v - canonical.back() > kDegreeEps) {
            canonical.push_back(v);
        }
    }
    return Hfe(std::move(canonical));
}

bool operator==(const Hfe& a, const Hfe& b) {
    if (a.degrees_.size() != b.degrees_.size()) return false;
    for (std::size_t i = 0; i < a.degrees_.size(); ++i) {
        if (!degree_equal(a.degrees_[i], b.degrees_[i])) return false;
    }
    return true;
}

std::pair<Degree, Degree> bounds(const Hfe& a) {
    return {a.lower(), a.upper()};
}

Hfe complement(const Hfe& a) {
    std::vector<Degree> values;
    values.reserve(a.size());
    for (Degree v : a.degrees()) values.push_back(1.0 - v);
    return Hfe::from_values(std::move(values));
}

namespace {

// The padded ascending view used by Sorted mode: the shorter list repeats
// its maximum at the tail for unions and its minimum at the front for
// intersections. Padding is transient; results are re-canonicalized.
Degree padded_tail(const std::vector<Degree>& v, std::size_t i) {
    return i < v.size() ? v[i] : v.back();
}

Degree padded_front(const std::vector<Degree>& v, std::size_t i, std::size_t n) {
    const std::size_t shift = n - v.size();
    return i < shift ? v.front() : v[i - shift];
}

}  // namespace

Hfe hfe_union(const Hfe& a, const Hfe& b, UnionMode mode) {
    const auto& da = a.degrees();
    const auto& db = b.degrees();
    std::vector<Degree> values;
    if (mode == UnionMode::Set) {
        values.reserve(da.size() * db.size());
        for (Degree x : da) {
            for (Degree y : db) values.push_back(std::max(x, y));
        }
    } else {
        const std::size_t n = std::max(da.size(), db.size());
        values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            values.push_back(std::max(padded_tail(da, i), padded_tail(db, i)));
        }
    }
    return Hfe::from_values(std::move(values));
}

Hfe hfe_intersection(const Hfe& a, const Hfe& b, UnionMode mode) {
    const auto& da = a.degrees();
    const auto& db = b.degrees();
    std::vector<Degree> values;
    if (mode == UnionMode::Set) {
        values.reserve(da.size() * db.size());
        for (Degree x : da) {
            for (Degree y : db) values.push_back(std::min(x, y));
        }
    } else {
        const std::size_t n = std::max(da.size(), db.size());
        values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            values.push_back(std::min(padded_front(da, i, n), padded_front(db, i, n)));
        }
    }
    return Hfe::from_values(std::move(values));
}

Hfe hfe_union_n(std::span<const Hfe> items, UnionMode mode) {
    if (items.empty()) return Hfe{};
    Hfe acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) {
        acc = hfe_union(acc, items[i], mode);
    }
    return acc;
}

}  // namespace hfsoft
