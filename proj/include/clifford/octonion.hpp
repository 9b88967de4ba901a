#pragma once

#include <array>
#include <optional>

#include "clifford/quaternion.hpp"

namespace clifford {

/// Octonion as a Cayley-Dickson pair of quaternions. Basis:
/// (1,0),(i,0),(j,0),(k,0),(0,1),(0,i),(0,j),(0,k).
struct Octonion {
    Quaternion a;
    Quaternion b;

    static Octonion from_quaternion(const Quaternion& q) { return {q, {}}; }

    /// Coordinates in the basis order above.
    std::array<double, 8> coords() const {
        return {a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z};
    }

    friend bool operator==(const Octonion&, const Octonion&) = default;
};

Octonion operator+(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x);
Octonion operator*(double s, const Octonion& x);

/// Cayley-Dickson product:
/// (h0,h1)(h2,h3) = (h0 h2 - h3 conj(h1), conj(h0) h3 + h2 h1).
/// Non-associative; the norm is multiplicative.
Octonion operator*(const Octonion& x, const Octonion& y);

/// Negates all seven imaginary coordinates: (conj(a), -b).
Octonion conj(const Octonion& x);
double norm_squared(const Octonion& x);
double norm(const Octonion& x);

/// conj(x)/|x|^2; absent for x = 0.
std::optional<Octonion> inverse(const Octonion& x);

bool approx_equal(const Octonion& x, const Octonion& y, double tol);

}  // namespace clifford
