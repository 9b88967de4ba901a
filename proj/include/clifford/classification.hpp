#pragma once

#include <cstdint>

namespace clifford {

enum class AlgebraBase { real, complex, quaternion };

/// Isomorphism type of a real Clifford algebra: base^{size x size},
/// optionally wrapped in the block-diagonal double.
struct AlgebraDescriptor {
    AlgebraBase base = AlgebraBase::real;
    int size = 1;         // matrix dimension m
    bool doubled = false; // diag_2 wrapper; only occurs for real/quaternion bases

    friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// The eight-fold periodic classification: selects by the parity of n = p+q
/// and (p-q) mod 8. Total for every p+q >= 1; rejects p+q = 0.
AlgebraDescriptor classify(int p, int q);

/// (1, 2 or 4 by base) * size^2, doubled again when wrapped; always 2^(p+q).
std::int64_t descriptor_real_dimension(const AlgebraDescriptor& d);

const char* base_name(AlgebraBase base) noexcept;

}  // namespace clifford
