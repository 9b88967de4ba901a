// Independent reference implementations used only to cross-check the
// library: the step-by-step blade product recursion, subset-enumeration
// orderings, inversion-count parity, and the Rodrigues rotation formula.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "clifford/blades.hpp"
#include "clifford/multivector.hpp"
#include "clifford/quaternion.hpp"

namespace oracles {

struct SignedMask {
    int sign;
    std::uint32_t mask;
};

// e_I * e_j for a single generator j, peeling the largest factor of I.
inline SignedMask recursion_blade_times_gen(std::uint32_t I, int j,
                                            const clifford::Signature& sig) {
    if (I == 0) return {+1, 1u << j};
    const int i = std::bit_width(I) - 1;  // largest factor
    const std::uint32_t rest = I & ~(1u << i);
    if (i < j) return {+1, I | (1u << j)};            // ascending concatenation
    if (i == j) {                                      // repeated generator
        return {sig.metric(j), rest};
    }
    const SignedMask s = recursion_blade_times_gen(rest, j, sig);  // swap, then
    return {-s.sign, s.mask | (1u << i)};                          // re-append e_i
}

// e_I * e_J by peeling the largest element of J, i.e. applying the
// generators of J left-to-right in ascending order.
inline SignedMask recursion_blade_product(std::uint32_t a, std::uint32_t b,
                                          const clifford::Signature& sig) {
    SignedMask acc{+1, a};
    for (std::uint32_t rem = b; rem != 0; rem &= rem - 1) {
        const int j = std::countr_zero(rem);
        const SignedMask step = recursion_blade_times_gen(acc.mask, j, sig);
        acc = {acc.sign * step.sign, step.mask};
    }
    return acc;
}

// Grade-lex order by explicit subset enumeration: materialize every subset
// as an ascending tuple and sort by (size, lexicographic tuple).
inline std::vector<std::uint32_t> subset_sorted_masks(int n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::vector<int>> tuples(size);
    for (std::size_t m = 0; m < size; ++m)
        tuples[m] = clifford::blade_elements(static_cast<std::uint32_t>(m));
    std::vector<std::uint32_t> masks(size);
    for (std::size_t m = 0; m < size; ++m) masks[m] = static_cast<std::uint32_t>(m);
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (tuples[a].size() != tuples[b].size()) return tuples[a].size() < tuples[b].size();
        return std::lexicographical_compare(tuples[a].begin(), tuples[a].end(),
                                            tuples[b].begin(), tuples[b].end());
    });
    return masks;
}

// Permutation sign by counting inversions; quadratic, for small inputs.
inline int inversion_parity(std::span<const std::uint32_t> perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? +1 : -1;
}

inline clifford::Vec3 cross(const clifford::Vec3& a, const clifford::Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const clifford::Vec3& a, const clifford::Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Rotation of v by angle theta about the unit axis w.
inline clifford::Vec3 rodrigues(const clifford::Vec3& v, const clifford::Vec3& w,
                                double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const clifford::Vec3 wxv = cross(w, v);
    const double wv = dot(w, v);
    clifford::Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = v[i] * c + wxv[i] * s + w[i] * wv * (1.0 - c);
    return out;
}

// Random multivector with small integer coefficients (exact in doubles).
inline clifford::Multivector random_int_multivector(std::mt19937& rng,
                                                    const clifford::Signature& sig,
                                                    clifford::OrderingKind kind,
                                                    int magnitude = 4) {
    std::uniform_int_distribution<int> dist(-magnitude, magnitude);
    std::vector<clifford::Multivector::Scalar> coeffs(std::size_t{1} << sig.dimension());
    for (auto& c : coeffs) c = {static_cast<double>(dist(rng)), 0.0};
    return clifford::Multivector(sig, clifford::Field::real, kind, std::move(coeffs));
}

inline clifford::Multivector random_int_complex_multivector(std::mt19937& rng,
                                                            const clifford::Signature& sig,
                                                            clifford::OrderingKind kind,
                                                            int magnitude = 4) {
    std::uniform_int_distribution<int> dist(-magnitude, magnitude);
    std::vector<clifford::Multivector::Scalar> coeffs(std::size_t{1} << sig.dimension());
    for (auto& c : coeffs)
        c = {static_cast<double>(dist(rng)), static_cast<double>(dist(rng))};
    return clifford::Multivector(sig, clifford::Field::complex, kind, std::move(coeffs));
}

// Random 1-vector with dyadic rational components m/8 (exact in doubles).
inline clifford::Multivector random_dyadic_vector(std::mt19937& rng,
                                                  const clifford::Signature& sig,
                                                  clifford::OrderingKind kind) {
    std::uniform_int_distribution<int> dist(-16, 16);
    std::vector<double> v(static_cast<std::size_t>(sig.dimension()));
    for (auto& c : v) c = dist(rng) / 8.0;
    return clifford::embed_vector(v, sig, kind);
}

}  // namespace oracles
