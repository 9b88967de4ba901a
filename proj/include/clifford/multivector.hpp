#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "clifford/blades.hpp"

namespace clifford {

enum class Field { real, complex };

/// Dense Clifford algebra element: 2^n coefficients over R or C, tagged
/// with the basis ordering its positions refer to. Arithmetic requires
/// matching signature, field and convention on both operands.
class Multivector {
  public:
    using Scalar = std::complex<double>;

    Multivector(Signature sig, Field field, OrderingKind convention,
                std::vector<Scalar> coeffs);

    static Multivector zero(const Signature& sig, Field field, OrderingKind convention);

    /// Basis element at coefficient position `index` of the given convention.
    static Multivector basis(const Signature& sig, Field field, OrderingKind convention,
                             std::size_t index, Scalar value = Scalar{1.0, 0.0});

    const Signature& signature() const noexcept { return sig_; }
    Field field() const noexcept { return field_; }
    OrderingKind convention() const noexcept { return convention_; }
    int dimension() const noexcept { return sig_.dimension(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Scalar coeff(std::size_t index) const;
    void set_coeff(std::size_t index, Scalar value);

    /// Coefficient of the blade with the given mask, whatever the convention.
    Scalar coeff_by_mask(std::uint32_t mask) const;

    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    /// Grade of the blade stored at coefficient position `index`.
    int grade_at(std::size_t index) const;

    bool is_zero() const noexcept;

    friend Multivector operator+(const Multivector& a, const Multivector& b);
    friend Multivector operator-(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Multivector& a, const Multivector& b);
    Multivector scaled(Scalar s) const;

    friend bool operator==(const Multivector& a, const Multivector& b);
    bool approx_equal(const Multivector& other, double tol) const;

    /// Throws unless signature, field and convention all match.
    void require_compatible(const Multivector& other) const;

  private:
    Signature sig_;
    Field field_;
    OrderingKind convention_;
    std::vector<Scalar> coeffs_;

    const std::vector<std::uint32_t>& glex_perm() const;
};

/// Bilinear extension of the blade product; exact for exact scalar inputs.
Multivector geometric_product(const Multivector& x, const Multivector& y);

/// Keep only the coefficients whose blade has the given grade.
Multivector grade_project(const Multivector& x, int k);

/// Place v_j on the blade {j-1}: the canonical copy of K^n inside the algebra.
Multivector embed_vector(std::span<const double> v, const Signature& sig,
                         OrderingKind convention);
Multivector embed_vector(std::span<const std::complex<double>> v, const Signature& sig,
                         OrderingKind convention);

struct Polarization {
    Multivector symmetric;       // (1/2)(xy + yx): scalar part
    Multivector antisymmetric;   // (1/2)(xy - yx): bivector part
};

/// Split the product of two 1-vectors into its scalar and bivector parts.
/// Throws if either input has support outside grade 1.
Polarization polarize(const Multivector& x, const Multivector& y);

/// Re-express the coefficients in another basis ordering. An involution
/// between the two conventions; products commute with it.
Multivector reindex(const Multivector& x, OrderingKind target);

struct TableEntry {
    int sign = 1;            // carried separately so "-0" stays representable
    std::uint32_t index = 0;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct ProductTable {
    Signature sig;
    OrderingKind kind = OrderingKind::grade_lex;
    std::size_t size = 0;    // 2^n
    std::vector<TableEntry> entries;  // row-major

    const TableEntry& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// Full signed multiplication table of the basis, in the requested ordering.
ProductTable product_table(const Signature& sig, OrderingKind kind, int max_n = 8);

}  // namespace clifford
