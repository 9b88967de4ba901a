#include "clifford/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "clifford/kernels.hpp"

namespace clifford {

namespace {

const std::vector<std::uint32_t>& cached_glex_perm(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint32_t>> cache;
    const std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (slot.empty()) slot = grade_lex_permutation(n).permutation;
    return slot;
}

const std::vector<std::uint32_t>& cached_glex_inverse(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint32_t>> cache;
    const std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (slot.empty()) slot = invert_permutation(cached_glex_perm(n));
    return slot;
}

bool exactly_zero(const Multivector::Scalar& s) noexcept {
    return s.real() == 0.0 && s.imag() == 0.0;
}

}  // namespace

Multivector::Multivector(Signature sig, Field field, OrderingKind convention,
                         std::vector<Scalar> coeffs)
    : sig_(sig), field_(field), convention_(convention), coeffs_(std::move(coeffs)) {
    const std::size_t want = std::size_t{1} << sig_.dimension();
    if (coeffs_.size() != want)
        throw std::invalid_argument("multivector needs exactly 2^(p+q) coefficients");
    if (field_ == Field::real) {
        for (const Scalar& c : coeffs_)
            if (c.imag() != 0.0)
                throw std::invalid_argument("real multivector with nonzero imaginary part");
    }
}

Multivector Multivector::zero(const Signature& sig, Field field, OrderingKind convention) {
    return Multivector(sig, field, convention,
                       std::vector<Scalar>(std::size_t{1} << sig.dimension()));
}

Multivector Multivector::basis(const Signature& sig, Field field, OrderingKind convention,
                               std::size_t index, Scalar value) {
    Multivector out = zero(sig, field, convention);
    out.set_coeff(index, value);
    return out;
}

Multivector::Scalar Multivector::coeff(std::size_t index) const {
    if (index >= coeffs_.size()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[index];
}

void Multivector::set_coeff(std::size_t index, Scalar value) {
    if (index >= coeffs_.size()) throw std::out_of_range("coefficient index out of range");
    if (field_ == Field::real && value.imag() != 0.0)
        throw std::invalid_argument("real multivector with nonzero imaginary part");
    coeffs_[index] = value;
}

const std::vector<std::uint32_t>& Multivector::glex_perm() const {
    return cached_glex_perm(dimension());
}

Multivector::Scalar Multivector::coeff_by_mask(std::uint32_t mask) const {
    if (mask >= coeffs_.size()) throw std::out_of_range("blade mask out of range");
    if (convention_ == OrderingKind::binary) return coeffs_[mask];
    return coeffs_[cached_glex_inverse(dimension())[mask]];
}

int Multivector::grade_at(std::size_t index) const {
    if (index >= coeffs_.size()) throw std::out_of_range("coefficient index out of range");
    const std::uint32_t mask = convention_ == OrderingKind::binary
                                   ? static_cast<std::uint32_t>(index)
                                   : glex_perm()[index];
    return grade(mask);
}

bool Multivector::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), exactly_zero);
}

void Multivector::require_compatible(const Multivector& other) const {
    if (!(sig_ == other.sig_))
        throw std::invalid_argument("multivector signature mismatch");
    if (field_ != other.field_)
        throw std::invalid_argument("multivector field mismatch");
    if (convention_ != other.convention_)
        throw std::invalid_argument("multivector convention mismatch");
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    a.require_compatible(b);
    Multivector out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    a.require_compatible(b);
    Multivector out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
}

Multivector Multivector::scaled(Scalar s) const {
    if (field_ == Field::real && s.imag() != 0.0)
        throw std::invalid_argument("complex scale of a real multivector");
    Multivector out = *this;
    for (Scalar& c : out.coeffs_) c *= s;
    return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.field_ == b.field_ && a.convention_ == b.convention_ &&
           a.coeffs_ == b.coeffs_;
}

bool Multivector::approx_equal(const Multivector& other, double tol) const {
    if (!(sig_ == other.sig_) || field_ != other.field_ || convention_ != other.convention_)
        return false;
    double scale = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        scale = std::max({scale, std::abs(coeffs_[i]), std::abs(other.coeffs_[i])});
    if (scale == 0.0) return true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (std::abs(coeffs_[i] - other.coeffs_[i]) > tol * scale) return false;
    return true;
}

namespace {

// Generic path: double loop over nonzero coefficients in binary order.
void product_reference(const Signature& sig, std::span<const Multivector::Scalar> x,
                       std::span<const Multivector::Scalar> y,
                       std::span<Multivector::Scalar> z) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (exactly_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (exactly_zero(y[j])) continue;
            const int s = product_sign(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j), sig);
            z[i ^ j] += static_cast<double>(s) * x[i] * y[j];
        }
    }
}

}  // namespace

Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
    x.require_compatible(y);
    const Signature& sig = x.signature();
    const int n = sig.dimension();
    const std::size_t size = x.size();

    // Work in binary order; the convention permutation is presentation only.
    const bool glex = x.convention() == OrderingKind::grade_lex;
    std::vector<Multivector::Scalar> xb(size), yb(size), zb(size);
    if (glex) {
        const auto& perm = cached_glex_perm(n);
        for (std::size_t k = 0; k < size; ++k) {
            xb[perm[k]] = x.coeffs()[k];
            yb[perm[k]] = y.coeffs()[k];
        }
    } else {
        std::copy(x.coeffs().begin(), x.coeffs().end(), xb.begin());
        std::copy(y.coeffs().begin(), y.coeffs().end(), yb.begin());
    }

    if (x.field() == Field::real && n >= kernels::DensePlan::kMinN &&
        n <= kernels::DensePlan::kMaxN) {
        const auto plan = kernels::dense_plan(sig);
        std::vector<double> xr(size), yr(size), zr(size);
        for (std::size_t i = 0; i < size; ++i) {
            xr[i] = xb[i].real();
            yr[i] = yb[i].real();
        }
        kernels::select_product_fn()(*plan, xr.data(), yr.data(), zr.data());
        for (std::size_t i = 0; i < size; ++i) zb[i] = Multivector::Scalar{zr[i], 0.0};
    } else {
        product_reference(sig, xb, yb, zb);
    }

    std::vector<Multivector::Scalar> out(size);
    if (glex) {
        const auto& perm = cached_glex_perm(n);
        for (std::size_t k = 0; k < size; ++k) out[k] = zb[perm[k]];
    } else {
        out = std::move(zb);
    }
    return Multivector(sig, x.field(), x.convention(), std::move(out));
}

Multivector grade_project(const Multivector& x, int k) {
    if (k < 0 || k > x.dimension()) throw std::out_of_range("grade out of range");
    Multivector out = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.grade_at(i) != k) out.set_coeff(i, {});
    return out;
}

namespace {

Multivector embed_impl(std::span<const Multivector::Scalar> v, const Signature& sig,
                       Field field, OrderingKind convention) {
    if (static_cast<int>(v.size()) != sig.dimension())
        throw std::invalid_argument("embed_vector: need exactly n components");
    Multivector out = Multivector::zero(sig, field, convention);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const std::uint32_t mask = 1u << j;
        if (convention == OrderingKind::binary) {
            out.set_coeff(mask, v[j]);
        } else {
            // Singleton blades occupy positions 1..n in grade-lex order.
            out.set_coeff(j + 1, v[j]);
        }
    }
    return out;
}

}  // namespace

Multivector embed_vector(std::span<const double> v, const Signature& sig,
                         OrderingKind convention) {
    std::vector<Multivector::Scalar> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Multivector::Scalar{v[i], 0.0};
    return embed_impl(c, sig, Field::real, convention);
}

Multivector embed_vector(std::span<const std::complex<double>> v, const Signature& sig,
                         OrderingKind convention) {
    return embed_impl(v, sig, Field::complex, convention);
}

Polarization polarize(const Multivector& x, const Multivector& y) {
    x.require_compatible(y);
    const int n = x.dimension();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.grade_at(i) == 1) continue;
        if (!exactly_zero(x.coeff(i)) || !exactly_zero(y.coeff(i)))
            throw std::invalid_argument("polarize: inputs must be 1-vectors");
    }

    Multivector sym = Multivector::zero(x.signature(), x.field(), x.convention());
    Multivector anti = sym;

    Multivector::Scalar scalar{};
    for (int i = 1; i <= n; ++i) {
        const std::uint32_t mi = 1u << (i - 1);
        scalar += x.coeff_by_mask(mi) * static_cast<double>(x.signature().metric(i - 1)) *
                  y.coeff_by_mask(mi);
    }
    sym.set_coeff(0, scalar);  // position 0 is the empty blade in both conventions

    const auto& inv = cached_glex_inverse(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::uint32_t mi = 1u << (i - 1);
            const std::uint32_t mj = 1u << (j - 1);
            const Multivector::Scalar c =
                x.coeff_by_mask(mi) * y.coeff_by_mask(mj) - x.coeff_by_mask(mj) * y.coeff_by_mask(mi);
            const std::uint32_t mask = mi | mj;
            const std::size_t pos =
                x.convention() == OrderingKind::binary ? mask : inv[mask];
            anti.set_coeff(pos, c);
        }
    }
    return Polarization{std::move(sym), std::move(anti)};
}

Multivector reindex(const Multivector& x, OrderingKind target) {
    if (x.convention() == target) return x;
    const auto& perm = cached_glex_perm(x.dimension());
    std::vector<Multivector::Scalar> out(x.size());
    if (target == OrderingKind::grade_lex) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.coeffs()[perm[k]];
    } else {
        for (std::size_t k = 0; k < out.size(); ++k) out[perm[k]] = x.coeffs()[k];
    }
    return Multivector(x.signature(), x.field(), target, std::move(out));
}

ProductTable product_table(const Signature& sig, OrderingKind kind, int max_n) {
    const int n = sig.dimension();
    if (n > max_n) throw std::invalid_argument("product_table: dimension over cap");
    const std::size_t size = std::size_t{1} << n;

    std::vector<std::uint32_t> perm(size), inv(size);
    if (kind == OrderingKind::grade_lex) {
        perm = grade_lex_permutation(n).permutation;
        inv = invert_permutation(perm);
    } else {
        for (std::size_t k = 0; k < size; ++k) perm[k] = inv[k] = static_cast<std::uint32_t>(k);
    }

    ProductTable table{sig, kind, size, {}};
    table.entries.resize(size * size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const std::uint32_t a = perm[i];
            const std::uint32_t b = perm[j];
            table.entries[i * size + j] =
                TableEntry{product_sign(a, b, sig), inv[a ^ b]};
        }
    }
    return table;
}

}  // namespace clifford
