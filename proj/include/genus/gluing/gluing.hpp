/*
   Copyright 2026 The genuscenter Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENUS_GLUING_GLUING_HPP
#define GENUS_GLUING_GLUING_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace genus::gluing {

/// Fixed-point-free involution of {1, ..., 2n}.
class Gluing {
public:
    Gluing() = default;
    /// Throws InvalidArgument unless the pairs partition {1..2n}.
    static Gluing from_pairs(int n, const std::vector<std::pair<int, int>> &pairs);

    int n() const { return static_cast<int>(image_.size()) / 2; }
    /// sigma(i) for 1 <= i <= 2n.
    int operator()(int i) const;
    /// Pairs (low, high) ordered by low.
    std::vector<std::pair<int, int>> pairs() const;
    /// Cycle notation such as "(1 3)(2 4)"; "()" for the empty gluing.
    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const Gluing &a, const Gluing &b) { return a.image_ == b.image_; }
    friend bool operator<(const Gluing &a, const Gluing &b) { return a.image_ < b.image_; }

private:
    std::vector<int> image_;  // image_[i-1] = sigma(i)
};

/// Cycle notation, whitespace insensitive. "(13)(24)" reads two-digit cycles as
/// digit pairs. Throws ParseError on fixed points or non-involutions.
Gluing parse_gluing(const std::string &text);
Gluing gluing_from_json(const nlohmann::json &j);

/// All fixed-point-free involutions of S_2n, lexicographic in images.
std::vector<Gluing> enumerate_adm(int n);

struct OrbitInfo {
    int low = 0, high = 0;
    bool operator==(const OrbitInfo &o) const { return low == o.low && high == o.high; }
};

/// Orbit of i. Throws InvalidArgument when i is out of range.
OrbitInfo orbit_info(const Gluing &s, int i);
/// The n orbits ordered by their low element.
std::vector<OrbitInfo> orbits(const Gluing &s);

/// Relative position of two distinct orbits once ordered by low element:
/// 1 disjoint, 2 interleaved, 3 nested. Throws InvalidArgument on equal orbits.
int comm_case(const Gluing &s, const OrbitInfo &a, const OrbitInfo &b);

/// Standard presentation of the genus g surface with k punctures.
/// (0, 1) gives the empty gluing (the disk).
Gluing sigma_gk(int g, int k);

struct SurfaceType {
    int genus = 0, punctures = 1, euler = 1;
    bool operator==(const SurfaceType &o) const {
        return genus == o.genus && punctures == o.punctures && euler == o.euler;
    }
};

/// Cell model: one polygon whose sides alternate between legs and gaps, legs
/// identified in pairs by sigma with reversed direction. chi = V - E + F,
/// punctures = circles formed by gap sides.
SurfaceType surface_type(const Gluing &s);
/// Same classification from the boundary permutation i -> sigma(i + 1) and
/// chi = 1 - n.
SurfaceType surface_type_by_permutation(const Gluing &s);

}  // namespace genus::gluing

#endif
