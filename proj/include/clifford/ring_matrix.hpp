#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "clifford/quaternion.hpp"

namespace clifford {

enum class RingTag { real, complex, quaternion, complex_quaternion };

/// Real coordinates per entry of each ring.
int ring_real_dim(RingTag tag) noexcept;
const char* ring_name(RingTag tag) noexcept;

/// Element of the complexification of H: a + b*i with a, b quaternions and
/// i a central square root of -1 commuting with everything. The smaller
/// rings embed as the obvious subsets; a RingMatrix tags which one applies.
struct CQuat {
    Quaternion a;
    Quaternion b;

    static CQuat from_real(double r) { return {{r, 0, 0, 0}, {}}; }
    static CQuat from_complex(std::complex<double> c) { return {{c.real(), 0, 0, 0}, {c.imag(), 0, 0, 0}}; }
    static CQuat from_quaternion(const Quaternion& q) { return {q, {}}; }
    static CQuat i() { return {{}, {1, 0, 0, 0}}; }

    bool is_zero() const { return *this == CQuat{}; }
    bool in_ring(RingTag tag) const;

    friend bool operator==(const CQuat&, const CQuat&) = default;
};

CQuat operator+(const CQuat& x, const CQuat& y);
CQuat operator-(const CQuat& x, const CQuat& y);
CQuat operator-(const CQuat& x);
// (a + b i)(c + d i) = (ac - bd) + (ad + bc) i
CQuat operator*(const CQuat& x, const CQuat& y);

/// Dense matrix over one of the four scalar rings. Entry order is
/// preserved in products (quaternion entries do not commute).
class RingMatrix {
  public:
    RingMatrix(RingTag ring, int rows, int cols);  // zero-filled

    static RingMatrix identity(RingTag ring, int n);
    static RingMatrix from_real(int rows, int cols, std::initializer_list<double> entries);
    static RingMatrix from_complex(int rows, int cols,
                                   std::initializer_list<std::complex<double>> entries);
    static RingMatrix from_quaternion(int rows, int cols,
                                      std::initializer_list<Quaternion> entries);
    static RingMatrix from_cquat(int rows, int cols, std::initializer_list<CQuat> entries);

    RingTag ring() const noexcept { return ring_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    const CQuat& at(int r, int c) const;
    void set(int r, int c, const CQuat& value);  // validates ring membership

    friend RingMatrix operator+(const RingMatrix& x, const RingMatrix& y);
    friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y);
    RingMatrix negated() const;

    /// Left scalar multiple s*M; the scalar must keep entries in the ring.
    RingMatrix scaled(const CQuat& s) const;

    bool is_zero() const;
    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;
    bool approx_equal(const RingMatrix& other, double tol) const;

    /// Real dimension of the ambient matrix space rows*cols*dim(ring).
    int ambient_real_dim() const;

  private:
    RingTag ring_;
    int rows_;
    int cols_;
    std::vector<CQuat> entries_;

    std::size_t index(int r, int c) const;
};

/// Fixed-order real coordinates of all entries; linear and injective.
std::vector<double> flatten_real(const RingMatrix& m);

/// Rank by Gaussian elimination with partial pivoting; pivots below `tol`
/// count as zero. Empty input has rank 0.
int real_rank(const std::vector<std::vector<double>>& vectors, double tol = 1e-9);

/// Pair destined for a block-diagonal embedding; shapes and ring must match.
struct Diag2Pair {
    RingMatrix a;
    RingMatrix b;
};

/// Block-diagonal [[A,0],[0,B]].
RingMatrix diag2_embed(const Diag2Pair& pair);

/// Matrix image of a quaternion in C^{2x2}: additive and multiplicative.
RingMatrix phi0_embed(const Quaternion& h);

/// Matrix image of a quaternion in R^{4x4}: additive and multiplicative.
RingMatrix phi1_embed(const Quaternion& h);

}  // namespace clifford
