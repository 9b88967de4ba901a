#include "clifford/kernels.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace clifford::kernels {

DensePlan::DensePlan(const Signature& sig) : n_(sig.dimension()), size_(std::size_t{1} << n_) {
    if (n_ < kMinN || n_ > kMaxN)
        throw std::invalid_argument("DensePlan: dimension outside [2,8]");
    neg_.assign(size_ * blocks(), 0u);
    for (std::size_t k = 0; k < size_; ++k) {
        std::uint8_t* row = neg_.data() + k * blocks();
        for (std::size_t i = 0; i < size_; ++i) {
            const auto a = static_cast<std::uint32_t>(i);
            const auto b = static_cast<std::uint32_t>(i ^ k);
            if (product_sign(a, b, sig) < 0) row[i / 4] |= static_cast<std::uint8_t>(1u << (i % 4));
        }
    }
}

std::shared_ptr<const DensePlan> dense_plan(const Signature& sig) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const DensePlan>> cache;
    const std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{sig.p(), sig.q()}];
    if (!slot) slot = std::make_shared<const DensePlan>(sig);
    return slot;
}

void product_scalar(const DensePlan& plan, const double* x, const double* y,
                    double* z) noexcept {
    const std::size_t size = plan.size();
    const std::size_t blocks = plan.blocks();
    for (std::size_t k = 0; k < size; ++k) {
        const std::uint8_t* neg = plan.row(k);
        double acc = 0.0;
        for (std::size_t m = 0; m < blocks; ++m) {
            const std::uint8_t nib = neg[m];
            for (std::size_t t = 0; t < 4; ++t) {
                const std::size_t i = 4 * m + t;
                const double term = x[i] * y[i ^ k];
                acc += ((nib >> t) & 1u) ? -term : term;
            }
        }
        z[k] = acc;
    }
}

#if !defined(CLIFFORD_BUILD_AVX2)
// Fallback so the symbol always links; select_product_fn never picks it.
void product_avx2(const DensePlan& plan, const double* x, const double* y,
                  double* z) noexcept {
    product_scalar(plan, x, y, z);
}
bool avx2_kernel_built() noexcept { return false; }
#else
bool avx2_kernel_built() noexcept { return true; }
#endif

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

ProductFn select_product_fn() noexcept {
    if (avx2_kernel_built() && avx2_available()) return &product_avx2;
    return &product_scalar;
}

const char* product_backend_name() noexcept {
    return (avx2_kernel_built() && avx2_available()) ? "avx2" : "scalar";
}

}  // namespace clifford::kernels
