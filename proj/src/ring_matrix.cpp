#include "clifford/ring_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clifford {

int ring_real_dim(RingTag tag) noexcept {
    switch (tag) {
        case RingTag::real: return 1;
        case RingTag::complex: return 2;
        case RingTag::quaternion: return 4;
        case RingTag::complex_quaternion: return 8;
    }
    return 0;
}

const char* ring_name(RingTag tag) noexcept {
    switch (tag) {
        case RingTag::real: return "R";
        case RingTag::complex: return "C";
        case RingTag::quaternion: return "H";
        case RingTag::complex_quaternion: return "CxH";
    }
    return "?";
}

bool CQuat::in_ring(RingTag tag) const {
    switch (tag) {
        case RingTag::real:
            return a.x == 0 && a.y == 0 && a.z == 0 && b == Quaternion{};
        case RingTag::complex:
            return a.x == 0 && a.y == 0 && a.z == 0 && b.x == 0 && b.y == 0 && b.z == 0;
        case RingTag::quaternion:
            return b == Quaternion{};
        case RingTag::complex_quaternion:
            return true;
    }
    return false;
}

CQuat operator+(const CQuat& x, const CQuat& y) { return {x.a + y.a, x.b + y.b}; }

CQuat operator-(const CQuat& x, const CQuat& y) { return {x.a - y.a, x.b - y.b}; }

CQuat operator-(const CQuat& x) { return {-x.a, -x.b}; }

CQuat operator*(const CQuat& x, const CQuat& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

RingMatrix::RingMatrix(RingTag ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix shape must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

std::size_t RingMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

const CQuat& RingMatrix::at(int r, int c) const { return entries_[index(r, c)]; }

void RingMatrix::set(int r, int c, const CQuat& value) {
    if (!value.in_ring(ring_))
        throw std::invalid_argument("entry does not belong to the matrix ring");
    entries_[index(r, c)] = value;
}

RingMatrix RingMatrix::identity(RingTag ring, int n) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, CQuat::from_real(1.0));
    return m;
}

namespace {

template <typename T, typename F>
RingMatrix build(RingTag tag, int rows, int cols, std::initializer_list<T> entries, F&& lift) {
    if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != entries.size())
        throw std::invalid_argument("entry count does not match matrix shape");
    RingMatrix m(tag, rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, lift(*it++));
    return m;
}

}  // namespace

RingMatrix RingMatrix::from_real(int rows, int cols, std::initializer_list<double> entries) {
    return build(RingTag::real, rows, cols, entries, [](double v) { return CQuat::from_real(v); });
}

RingMatrix RingMatrix::from_complex(int rows, int cols,
                                    std::initializer_list<std::complex<double>> entries) {
    return build(RingTag::complex, rows, cols, entries,
                 [](std::complex<double> v) { return CQuat::from_complex(v); });
}

RingMatrix RingMatrix::from_quaternion(int rows, int cols,
                                       std::initializer_list<Quaternion> entries) {
    return build(RingTag::quaternion, rows, cols, entries,
                 [](const Quaternion& v) { return CQuat::from_quaternion(v); });
}

RingMatrix RingMatrix::from_cquat(int rows, int cols, std::initializer_list<CQuat> entries) {
    return build(RingTag::complex_quaternion, rows, cols, entries,
                 [](const CQuat& v) { return v; });
}

RingMatrix operator+(const RingMatrix& x, const RingMatrix& y) {
    if (x.ring_ != y.ring_ || x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix add: shape or ring mismatch");
    RingMatrix out = x;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = out.entries_[i] + y.entries_[i];
    return out;
}

RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
    if (x.ring_ != y.ring_ || x.cols_ != y.rows_)
        throw std::invalid_argument("matrix mul: shape or ring mismatch");
    RingMatrix out(x.ring_, x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r) {
        for (int c = 0; c < y.cols_; ++c) {
            CQuat acc{};
            for (int t = 0; t < x.cols_; ++t) acc = acc + x.at(r, t) * y.at(t, c);
            out.entries_[out.index(r, c)] = acc;
        }
    }
    return out;
}

RingMatrix RingMatrix::negated() const {
    RingMatrix out = *this;
    for (CQuat& e : out.entries_) e = -e;
    return out;
}

RingMatrix RingMatrix::scaled(const CQuat& s) const {
    RingMatrix out(ring_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, s * at(r, c));
    return out;
}

bool RingMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const CQuat& e) { return e.is_zero(); });
}

bool RingMatrix::approx_equal(const RingMatrix& other, double tol) const {
    if (ring_ != other.ring_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!clifford::approx_equal(entries_[i].a, other.entries_[i].a, tol) ||
            !clifford::approx_equal(entries_[i].b, other.entries_[i].b, tol))
            return false;
    }
    return true;
}

int RingMatrix::ambient_real_dim() const { return rows_ * cols_ * ring_real_dim(ring_); }

std::vector<double> flatten_real(const RingMatrix& m) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m.ambient_real_dim()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const CQuat& e = m.at(r, c);
            switch (m.ring()) {
                case RingTag::real:
                    out.push_back(e.a.w);
                    break;
                case RingTag::complex:
                    out.push_back(e.a.w);
                    out.push_back(e.b.w);
                    break;
                case RingTag::quaternion:
                    out.insert(out.end(), {e.a.w, e.a.x, e.a.y, e.a.z});
                    break;
                case RingTag::complex_quaternion:
                    out.insert(out.end(), {e.a.w, e.a.x, e.a.y, e.a.z, e.b.w, e.b.x, e.b.y, e.b.z});
                    break;
            }
        }
    }
    return out;
}

int real_rank(const std::vector<std::vector<double>>& vectors, double tol) {
    if (vectors.empty()) return 0;
    const std::size_t ncol = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != ncol) throw std::invalid_argument("real_rank: ragged input");

    std::vector<std::vector<double>> rows = vectors;
    int rank = 0;
    for (std::size_t c = 0; c < ncol && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        for (std::size_t r = pivot + 1; r < rows.size(); ++r)
            if (std::abs(rows[r][c]) > std::abs(rows[pivot][c])) pivot = r;
        if (std::abs(rows[pivot][c]) <= tol) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            const double f = rows[r][c] / prow[c];
            if (f == 0.0) continue;
            for (std::size_t cc = c; cc < ncol; ++cc) rows[r][cc] -= f * prow[cc];
        }
        ++rank;
    }
    return rank;
}

RingMatrix diag2_embed(const Diag2Pair& pair) {
    if (pair.a.ring() != pair.b.ring() || pair.a.rows() != pair.b.rows() ||
        pair.a.cols() != pair.b.cols() || pair.a.rows() != pair.a.cols())
        throw std::invalid_argument("diag2_embed: square matrices of equal shape required");
    const int m = pair.a.rows();
    RingMatrix out(pair.a.ring(), 2 * m, 2 * m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            out.set(r, c, pair.a.at(r, c));
            out.set(m + r, m + c, pair.b.at(r, c));
        }
    }
    return out;
}

RingMatrix phi0_embed(const Quaternion& h) {
    using cd = std::complex<double>;
    return RingMatrix::from_complex(2, 2,
                                    {cd{h.w, h.x}, cd{h.y, h.z},
                                     cd{-h.y, h.z}, cd{h.w, -h.x}});
}

RingMatrix phi1_embed(const Quaternion& h) {
    return RingMatrix::from_real(4, 4,
                                 {h.w, -h.x, h.z, -h.y,
                                  h.x, h.w, -h.y, -h.z,
                                  -h.z, h.y, h.w, -h.x,
                                  h.y, h.z, h.x, h.w});
}

}  // namespace clifford
