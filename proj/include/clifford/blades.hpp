#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace clifford {

/// Metric signature (p,q): the first p generators square to +1, the
/// remaining q square to -1. Rejects the empty generator set.
class Signature {
  public:
    Signature(int p, int q);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int dimension() const noexcept { return p_ + q_; }

    /// Metric sign of generator i, in {-1,+1}.
    int metric(int i) const;

    /// The full metric vector (eta_0, ..., eta_{n-1}).
    std::vector<int> eta() const;

    friend bool operator==(const Signature&, const Signature&) = default;

  private:
    int p_;
    int q_;
};

inline Signature make_signature(int p, int q) { return Signature(p, q); }

/// A basis blade: bit i of `mask` is set iff generator i is a factor.
struct Blade {
    std::uint32_t mask = 0;
    int n = 0;
};

struct SignedBlade {
    int sign = 1;  // in {-1,+1}; the blade product never vanishes
    Blade blade;

    friend bool operator==(const SignedBlade& a, const SignedBlade& b) {
        return a.sign == b.sign && a.blade.mask == b.blade.mask && a.blade.n == b.blade.n;
    }
};

/// Number of generators in the blade.
int grade(std::uint32_t mask) noexcept;

/// Decode index j into the set of generator indices it selects.
std::vector<int> blade_elements(std::uint32_t mask);

/// Bounds-checked decode: rejects masks outside [0, 2^n).
std::vector<int> blade_elements(std::uint32_t mask, int n);

/// Inverse codec: build the mask from generator indices (each in [0,n)).
std::uint32_t mask_from_elements(std::span<const int> elements, int n);

enum class OrderingKind { binary, grade_lex };

/// A basis ordering: permutation[k] is the blade mask stored at position k.
struct OrderingConvention {
    OrderingKind kind = OrderingKind::binary;
    std::vector<std::uint32_t> permutation;  // bijection on [0, 2^n)
};

/// Identity ordering (positions are blade masks).
OrderingConvention binary_ordering(int n);

/// Blades by ascending grade, ties by lexicographic order of the ascending
/// element tuple ({0,1} < {0,2} < {0,3} < {1,2} < ...). This is the ordering
/// used by every table this library emits.
OrderingConvention grade_lex_permutation(int n);

/// Invert a permutation given as position -> value.
std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> perm);

/// Sign of a permutation via cycle decomposition.
int permutation_parity(std::span<const std::uint32_t> perm);

/// Orientation of the basis sort that orders blades by grade, ties by
/// ascending index word. -1 exactly when the sort is an odd permutation.
int permutation_orientation(int n);

/// Signed product of two basis blades under the given signature.
/// Result mask is a XOR b; the sign combines the anticommutation reorder
/// parity with the metric signs of repeated generators.
SignedBlade blade_product(const Blade& a, const Blade& b, const Signature& sig);

/// Sign-only core of blade_product; exact integer arithmetic.
int product_sign(std::uint32_t a, std::uint32_t b, const Signature& sig) noexcept;

/// The unsigned shadow of the blade product: i XOR j. Forms a group
/// isomorphic to Z_2^n.
std::uint32_t star(std::uint32_t i, std::uint32_t j, int n);

}  // namespace clifford
