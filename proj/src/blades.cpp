#include "clifford/blades.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace clifford {

namespace {

void check_dimension(int n) {
    if (n < 1) throw std::invalid_argument("generator count must be at least 1");
    if (n > 26) throw std::invalid_argument("generator count too large: " + std::to_string(n));
}

std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Tuple-lexicographic comparison of equal-grade blades: the shared low bits
// cancel in a^b, and whichever blade contains the lowest differing element
// comes first.
bool tuple_less(std::uint32_t a, std::uint32_t b) noexcept {
    const std::uint32_t d = a ^ b;
    if (d == 0) return false;
    const std::uint32_t lowest_diff = d & (~d + 1u);
    return (a & lowest_diff) != 0;
}

}  // namespace

Signature::Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
    check_dimension(p + q);
}

int Signature::metric(int i) const {
    if (i < 0 || i >= dimension()) throw std::out_of_range("generator index out of range");
    return i < p_ ? +1 : -1;
}

std::vector<int> Signature::eta() const {
    std::vector<int> out(static_cast<std::size_t>(dimension()));
    for (int i = 0; i < dimension(); ++i) out[static_cast<std::size_t>(i)] = metric(i);
    return out;
}

int grade(std::uint32_t mask) noexcept { return std::popcount(mask); }

std::vector<int> blade_elements(std::uint32_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> blade_elements(std::uint32_t mask, int n) {
    check_dimension(n);
    if ((mask & ~full_mask(n)) != 0) throw std::out_of_range("blade index out of range");
    return blade_elements(mask);
}

std::uint32_t mask_from_elements(std::span<const int> elements, int n) {
    check_dimension(n);
    std::uint32_t mask = 0;
    for (int e : elements) {
        if (e < 0 || e >= n) throw std::out_of_range("generator index out of range");
        mask |= 1u << e;
    }
    return mask;
}

OrderingConvention binary_ordering(int n) {
    check_dimension(n);
    OrderingConvention conv;
    conv.kind = OrderingKind::binary;
    conv.permutation.resize(std::size_t{1} << n);
    for (std::size_t k = 0; k < conv.permutation.size(); ++k)
        conv.permutation[k] = static_cast<std::uint32_t>(k);
    return conv;
}

OrderingConvention grade_lex_permutation(int n) {
    check_dimension(n);
    OrderingConvention conv;
    conv.kind = OrderingKind::grade_lex;
    conv.permutation.resize(std::size_t{1} << n);
    for (std::size_t k = 0; k < conv.permutation.size(); ++k)
        conv.permutation[k] = static_cast<std::uint32_t>(k);
    std::sort(conv.permutation.begin(), conv.permutation.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  const int ga = std::popcount(a);
                  const int gb = std::popcount(b);
                  if (ga != gb) return ga < gb;
                  return tuple_less(a, b);
              });
    return conv;
}

std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> perm) {
    std::vector<std::uint32_t> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        inv[perm[k]] = static_cast<std::uint32_t>(k);
    return inv;
}

int permutation_parity(std::span<const std::uint32_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
        }
    }
    return ((perm.size() - cycles) % 2 == 0) ? +1 : -1;
}

int permutation_orientation(int n) {
    check_dimension(n);
    std::vector<std::uint32_t> perm(std::size_t{1} << n);
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<std::uint32_t>(k);
    std::sort(perm.begin(), perm.end(), [](std::uint32_t a, std::uint32_t b) {
        const int ga = std::popcount(a);
        const int gb = std::popcount(b);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    return permutation_parity(perm);
}

int product_sign(std::uint32_t a, std::uint32_t b, const Signature& sig) noexcept {
    // Reorder parity: one swap per pair (i in a, j in b) with i > j.
    int swaps = 0;
    for (std::uint32_t t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    int sign = (swaps & 1) ? -1 : +1;
    // Metric signs of the repeated generators.
    for (std::uint32_t rep = a & b; rep != 0; rep &= rep - 1)
        sign *= sig.metric(std::countr_zero(rep));
    return sign;
}

SignedBlade blade_product(const Blade& a, const Blade& b, const Signature& sig) {
    if (a.n != b.n || a.n != sig.dimension())
        throw std::invalid_argument("blade_product: dimension mismatch");
    const std::uint32_t full = full_mask(a.n);
    if ((a.mask & ~full) != 0 || (b.mask & ~full) != 0)
        throw std::out_of_range("blade mask out of range");
    return SignedBlade{product_sign(a.mask, b.mask, sig), Blade{a.mask ^ b.mask, a.n}};
}

std::uint32_t star(std::uint32_t i, std::uint32_t j, int n) {
    check_dimension(n);
    const std::uint32_t full = full_mask(n);
    if ((i & ~full) != 0 || (j & ~full) != 0)
        throw std::out_of_range("star: index out of range");
    return i ^ j;
}

}  // namespace clifford
