#include "clifford/classification.hpp"

#include <stdexcept>

namespace clifford {

AlgebraDescriptor classify(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
    const int n = p + q;
    if (n < 1) throw std::invalid_argument("classify: empty generator set");
    const int d = ((p - q) % 8 + 8) % 8;  // nonnegative remainder

    if (n % 2 == 0) {
        if (d == 0 || d == 2) return {AlgebraBase::real, 1 << (n / 2), false};
        return {AlgebraBase::quaternion, 1 << ((n - 2) / 2), false};  // d in {4,6}
    }
    if (d == 1) return {AlgebraBase::real, 1 << ((n - 1) / 2), true};
    if (d == 3 || d == 7) return {AlgebraBase::complex, 1 << ((n - 1) / 2), false};
    return {AlgebraBase::quaternion, 1 << ((n - 3) / 2), true};  // d == 5
}

std::int64_t descriptor_real_dimension(const AlgebraDescriptor& d) {
    std::int64_t base = 1;
    switch (d.base) {
        case AlgebraBase::real: base = 1; break;
        case AlgebraBase::complex: base = 2; break;
        case AlgebraBase::quaternion: base = 4; break;
    }
    const std::int64_t m = d.size;
    return base * m * m * (d.doubled ? 2 : 1);
}

const char* base_name(AlgebraBase base) noexcept {
    switch (base) {
        case AlgebraBase::real: return "R";
        case AlgebraBase::complex: return "C";
        case AlgebraBase::quaternion: return "H";
    }
    return "?";
}

}  // namespace clifford
