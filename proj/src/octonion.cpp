#include "clifford/octonion.hpp"

#include <cmath>

namespace clifford {

Octonion operator+(const Octonion& x, const Octonion& y) { return {x.a + y.a, x.b + y.b}; }

Octonion operator-(const Octonion& x, const Octonion& y) { return {x.a - y.a, x.b - y.b}; }

Octonion operator-(const Octonion& x) { return {-x.a, -x.b}; }

Octonion operator*(double s, const Octonion& x) { return {s * x.a, s * x.b}; }

Octonion operator*(const Octonion& x, const Octonion& y) {
    return {x.a * y.a - y.b * conj(x.b), conj(x.a) * y.b + y.a * x.b};
}

Octonion conj(const Octonion& x) { return {conj(x.a), -x.b}; }

double norm_squared(const Octonion& x) { return norm_squared(x.a) + norm_squared(x.b); }

double norm(const Octonion& x) { return std::sqrt(norm_squared(x)); }

std::optional<Octonion> inverse(const Octonion& x) {
    const double n2 = norm_squared(x);
    if (n2 == 0.0) return std::nullopt;
    return (1.0 / n2) * conj(x);
}

bool approx_equal(const Octonion& x, const Octonion& y, double tol) {
    return approx_equal(x.a, y.a, tol) && approx_equal(x.b, y.b, tol);
}

}  // namespace clifford
