// Copyright 2025-2026 The compatrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Plain 3-vector arithmetic for Bloch-space geometry.
 */

#pragma once

#include <array>
#include <cmath>

namespace compatrad {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 &operator+=(const Vec3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
};

constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

constexpr double dot(const Vec3 &a, const Vec3 &b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3 &v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Lexicographic order on (x, y, z); used for deterministic tie-breaking.
constexpr bool lex_less(const Vec3 &a, const Vec3 &b) {
    if (a.x != b.x)
        return a.x < b.x;
    if (a.y != b.y)
        return a.y < b.y;
    return a.z < b.z;
}

/// Any unit vector orthogonal to v (v need not be normalized, only nonzero).
inline Vec3 any_orthogonal(const Vec3 &v) {
    const Vec3 pick = std::abs(v.x) < 0.9 * norm(v) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return normalized(cross(v, pick));
}

} // namespace compatrad
