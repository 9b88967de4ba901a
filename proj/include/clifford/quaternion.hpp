#pragma once

#include <array>
#include <optional>

namespace clifford {

using Vec3 = std::array<double, 3>;

/// Quaternion w + x*i + y*j + z*k with the usual relations
/// i^2 = j^2 = k^2 = ijk = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& g, const Quaternion& h);
Quaternion operator-(const Quaternion& g, const Quaternion& h);
Quaternion operator-(const Quaternion& h);
Quaternion operator*(const Quaternion& g, const Quaternion& h);
Quaternion operator*(double s, const Quaternion& h);

Quaternion conj(const Quaternion& h);
double norm_squared(const Quaternion& h);
double norm(const Quaternion& h);

/// conj(h)/|h|^2; absent for h = 0.
std::optional<Quaternion> inverse(const Quaternion& h);

bool approx_equal(const Quaternion& g, const Quaternion& h, double tol);

/// Rotation parameters: angle in (-pi, pi], unit axis. The constructor
/// folds the angle into the branch and rejects non-unit axes.
class AxisAngle {
  public:
    AxisAngle(double angle, const Vec3& axis);

    double angle() const noexcept { return angle_; }
    const Vec3& axis() const noexcept { return axis_; }

    static constexpr double kAxisTolerance = 1e-12;

  private:
    double angle_;
    Vec3 axis_;
};

/// e^(a*phi(w)) = cos a + (w1 i + w2 j + w3 k) sin a; always unit norm.
Quaternion quat_exp(const AxisAngle& aa);

/// Image of x under x -> h phi(x) conj(h): rotation by twice the angle of h
/// about its axis. Requires |h| = 1 within 1e-9.
Vec3 quat_rotate(const Quaternion& h, const Vec3& x);

}  // namespace clifford
