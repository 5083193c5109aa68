#pragma once

#include <cmath>
#include <cstdint>

namespace assistbench {

// Positions live on a 2-D cell grid; the z component is kept so agent and
// object poses serialize as 3-vectors.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct GridPos {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPos& a, const GridPos& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const GridPos& a, const GridPos& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline GridPos to_grid(const Vec3& v) {
    return GridPos{static_cast<int>(std::lround(v.x)), static_cast<int>(std::lround(v.y))};
}

inline Vec3 to_vec(const GridPos& p) { return Vec3{static_cast<double>(p.x), static_cast<double>(p.y), 0.0}; }

}  // namespace assistbench
