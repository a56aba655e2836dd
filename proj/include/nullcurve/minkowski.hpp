#pragma once

#include <cmath>
#include <ostream>

namespace nullcurve {

/// Point or vector of the Minkowski 3-space, metric signature (+, +, -).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double a) { x *= a; y *= a; z *= a; return *this; }
};

inline Vec3 operator+(Vec3 u, const Vec3& v) { return u += v; }
inline Vec3 operator-(Vec3 u, const Vec3& v) { return u -= v; }
inline Vec3 operator-(const Vec3& u) { return {-u.x, -u.y, -u.z}; }
inline Vec3 operator*(double a, Vec3 u) { return u *= a; }
inline Vec3 operator*(Vec3 u, double a) { return u *= a; }
inline Vec3 operator/(Vec3 u, double a) { return u *= (1.0 / a); }
inline bool operator==(const Vec3& u, const Vec3& v) { return u.x == v.x && u.y == v.y && u.z == v.z; }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Indefinite inner product g(u, v) = u.x v.x + u.y v.y - u.z v.z.
inline double mink_inner(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

inline double euclid_norm2(const Vec3& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }
inline double euclid_norm(const Vec3& v) { return std::sqrt(euclid_norm2(v)); }
inline double euclid_dist(const Vec3& u, const Vec3& v) { return euclid_norm(u - v); }
inline double sup_norm(const Vec3& v) {
    return std::max(std::abs(v.x), std::max(std::abs(v.y), std::abs(v.z)));
}

enum class CausalClass { Zero, Null, Spacelike, Timelike };

/// Classify v by the sign of g(v, v), with a tolerance band around zero for
/// "null". The zero vector is reported separately.
inline CausalClass causal_class(const Vec3& v, double tol = 1e-9) {
    if (euclid_norm(v) <= tol) return CausalClass::Zero;
    const double q = mink_inner(v, v);
    if (std::abs(q) <= tol) return CausalClass::Null;
    return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

inline const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Zero: return "zero";
        case CausalClass::Null: return "null";
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
    }
    return "unknown";
}

/// Determinant of the 3x3 matrix with rows u, v, w.
inline double det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    return u.x * (v.y * w.z - v.z * w.y)
         - u.y * (v.x * w.z - v.z * w.x)
         + u.z * (v.x * w.y - v.y * w.x);
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

} // namespace nullcurve
