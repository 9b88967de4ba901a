#include "clifford/quaternion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clifford {

Quaternion operator+(const Quaternion& g, const Quaternion& h) {
    return {g.w + h.w, g.x + h.x, g.y + h.y, g.z + h.z};
}

Quaternion operator-(const Quaternion& g, const Quaternion& h) {
    return {g.w - h.w, g.x - h.x, g.y - h.y, g.z - h.z};
}

Quaternion operator-(const Quaternion& h) { return {-h.w, -h.x, -h.y, -h.z}; }

Quaternion operator*(const Quaternion& g, const Quaternion& h) {
    return {
        g.w * h.w - g.x * h.x - g.y * h.y - g.z * h.z,
        g.w * h.x + g.x * h.w + g.y * h.z - g.z * h.y,
        g.w * h.y - g.x * h.z + g.y * h.w + g.z * h.x,
        g.w * h.z + g.x * h.y - g.y * h.x + g.z * h.w,
    };
}

Quaternion operator*(double s, const Quaternion& h) {
    return {s * h.w, s * h.x, s * h.y, s * h.z};
}

Quaternion conj(const Quaternion& h) { return {h.w, -h.x, -h.y, -h.z}; }

double norm_squared(const Quaternion& h) {
    return h.w * h.w + h.x * h.x + h.y * h.y + h.z * h.z;
}

double norm(const Quaternion& h) { return std::sqrt(norm_squared(h)); }

std::optional<Quaternion> inverse(const Quaternion& h) {
    const double n2 = norm_squared(h);
    if (n2 == 0.0) return std::nullopt;
    return (1.0 / n2) * conj(h);
}

bool approx_equal(const Quaternion& g, const Quaternion& h, double tol) {
    return std::abs(g.w - h.w) <= tol && std::abs(g.x - h.x) <= tol &&
           std::abs(g.y - h.y) <= tol && std::abs(g.z - h.z) <= tol;
}

namespace {

double fold_angle(double a) {
    constexpr double pi = std::numbers::pi;
    double r = std::remainder(a, 2.0 * pi);  // lands in [-pi, pi]
    if (r <= -pi) r = pi;
    return r;
}

}  // namespace

AxisAngle::AxisAngle(double angle, const Vec3& axis) : angle_(fold_angle(angle)), axis_(axis) {
    const double len =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(len - 1.0) > kAxisTolerance)
        throw std::invalid_argument("AxisAngle: axis must be a unit vector");
}

Quaternion quat_exp(const AxisAngle& aa) {
    const double c = std::cos(aa.angle());
    const double s = std::sin(aa.angle());
    const Vec3& w = aa.axis();
    return {c, s * w[0], s * w[1], s * w[2]};
}

Vec3 quat_rotate(const Quaternion& h, const Vec3& x) {
    if (std::abs(norm(h) - 1.0) > 1e-9)
        throw std::invalid_argument("quat_rotate: rotor must be unit norm");
    const Quaternion p{0.0, x[0], x[1], x[2]};
    const Quaternion r = h * p * conj(h);
    return {r.x, r.y, r.z};
}

}  // namespace clifford
