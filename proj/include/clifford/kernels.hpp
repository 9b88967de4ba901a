#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "clifford/blades.hpp"

namespace clifford::kernels {

/// Precomputed sign table for the dense geometric product over real
/// coefficients. For output slot k the contribution of input slot i is
/// sign(i, i^k) * x[i] * y[i^k]; the table stores the negative-sign bits,
/// one nibble byte per 4-lane block so SIMD kernels can index it directly.
///
/// Valid for 2 <= n <= 8 (size is then a multiple of 4 and the table stays
/// at most 16 KiB). Larger or complex products take the generic path in
/// multivector.cpp.
class DensePlan {
  public:
    explicit DensePlan(const Signature& sig);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t blocks() const noexcept { return size_ / 4; }

    /// Byte m of row k: bit t set iff sign(4m+t, (4m+t)^k) is negative.
    const std::uint8_t* row(std::size_t k) const noexcept {
        return neg_.data() + k * blocks();
    }

    static constexpr int kMinN = 2;
    static constexpr int kMaxN = 8;

  private:
    int n_;
    std::size_t size_;
    std::vector<std::uint8_t> neg_;
};

/// Shared, thread-safe plan cache keyed by (p,q).
std::shared_ptr<const DensePlan> dense_plan(const Signature& sig);

using ProductFn = void (*)(const DensePlan&, const double*, const double*, double*);

/// Reference kernel: strict left-to-right accumulation per output slot.
void product_scalar(const DensePlan& plan, const double* x, const double* y,
                    double* z) noexcept;

/// AVX2 variant; callable only when avx2_kernel_built() and avx2_available().
void product_avx2(const DensePlan& plan, const double* x, const double* y,
                  double* z) noexcept;

bool avx2_kernel_built() noexcept;
bool avx2_available() noexcept;

/// Best kernel for this machine, decided once at runtime.
ProductFn select_product_fn() noexcept;
const char* product_backend_name() noexcept;

}  // namespace clifford::kernels
