#include "clifford/representations.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace clifford {

namespace {

using cd = std::complex<double>;

RingMatrix pauli_sigma(int j) {
    const cd o{0, 0}, l{1, 0}, i{0, 1};
    switch (j) {
        case 0: return RingMatrix::from_complex(2, 2, {l, o, o, l});
        case 1: return RingMatrix::from_complex(2, 2, {o, l, l, o});
        case 2: return RingMatrix::from_complex(2, 2, {o, -i, i, o});
        case 3: return RingMatrix::from_complex(2, 2, {l, o, o, -l});
    }
    throw std::invalid_argument("pauli index");
}

RingMatrix majorana_a(int j) {
    switch (j) {
        case 1:
            return RingMatrix::from_real(4, 4,
                                         {1, 0, 0, 0,
                                          0, 1, 0, 0,
                                          0, 0, -1, 0,
                                          0, 0, 0, -1});
        case 2:
            return RingMatrix::from_real(4, 4,
                                         {0, 0, 1, 0,
                                          0, 0, 0, 1,
                                          1, 0, 0, 0,
                                          0, 1, 0, 0});
        case 3:
            return RingMatrix::from_real(4, 4,
                                         {0, 0, 0, 1,
                                          0, 0, -1, 0,
                                          0, -1, 0, 0,
                                          1, 0, 0, 0});
        case 4:
            return RingMatrix::from_real(4, 4,
                                         {0, 0, 0, 1,
                                          0, 0, 1, 0,
                                          0, -1, 0, 0,
                                          -1, 0, 0, 0});
    }
    throw std::invalid_argument("majorana index");
}

RingMatrix dirac_b(int j) {
    const cd o{0, 0}, l{1, 0}, i{0, 1};
    switch (j) {
        case 1:
            return RingMatrix::from_complex(4, 4,
                                            {o, o, o, l,
                                             o, o, l, o,
                                             o, l, o, o,
                                             l, o, o, o});
        case 2:
            return RingMatrix::from_complex(4, 4,
                                            {o, o, o, -i,
                                             o, o, i, o,
                                             o, -i, o, o,
                                             i, o, o, o});
        case 3:
            return RingMatrix::from_complex(4, 4,
                                            {o, o, l, o,
                                             o, o, o, -l,
                                             l, o, o, o,
                                             o, -l, o, o});
        case 4:
            return RingMatrix::from_complex(4, 4,
                                            {o, o, l, o,
                                             o, o, o, l,
                                             -l, o, o, o,
                                             o, -l, o, o});
    }
    throw std::invalid_argument("dirac index");
}

RingMatrix majorana_a1_complex() {
    const cd o{0, 0}, l{1, 0};
    return RingMatrix::from_complex(4, 4,
                                    {l, o, o, o,
                                     o, l, o, o,
                                     o, o, -l, o,
                                     o, o, o, -l});
}

RingMatrix quat_hat(const Quaternion& u) {
    const Quaternion z{};
    return RingMatrix::from_quaternion(2, 2, {z, u, u, z});
}

RingMatrix quat_l() {
    return RingMatrix::from_quaternion(2, 2,
                                       {Quaternion::one(), {}, {}, -Quaternion::one()});
}

// C_j over the complexification of H: off-diagonal +/- i*u with i central.
RingMatrix cquat_c(const Quaternion& u) {
    const CQuat z{};
    const CQuat iu{{}, u};
    return RingMatrix::from_cquat(2, 2, {z, -iu, iu, z});
}

RingMatrix cquat_c0() {
    const CQuat z{};
    const CQuat l = CQuat::from_real(1.0);
    return RingMatrix::from_cquat(2, 2, {z, l, l, z});
}

RingMatrix cquat_l() {
    const CQuat z{};
    const CQuat l = CQuat::from_real(1.0);
    return RingMatrix::from_cquat(2, 2, {l, z, z, -l});
}

// D_0 = [[0,s0],[s0,0]], D_j = [[0,-sj],[sj,0]] as 4x4 complex blocks.
RingMatrix dirac_block_d(int j) {
    const RingMatrix s = pauli_sigma(j);
    RingMatrix out(RingTag::complex, 4, 4);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const CQuat e = s.at(r, c);
            out.set(r, 2 + c, j == 0 ? e : -e);
            out.set(2 + r, c, e);
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "pauli", "majorana", "dirac", "psi41", "quat13",
        "c23",   "d13",      "phi0_quat", "phi1_quat"};
    return names;
}

Representation builtin(const std::string& name) {
    if (name == "pauli")
        return {name, Signature(3, 0), RingTag::complex, 2,
                {pauli_sigma(1), pauli_sigma(2), pauli_sigma(3)}};
    if (name == "majorana")
        return {name, Signature(3, 1), RingTag::real, 4,
                {majorana_a(1), majorana_a(2), majorana_a(3), majorana_a(4)}};
    if (name == "dirac")
        return {name, Signature(3, 1), RingTag::complex, 4,
                {dirac_b(1), dirac_b(2), dirac_b(3), dirac_b(4)}};
    if (name == "psi41")
        return {name, Signature(4, 1), RingTag::complex, 4,
                {dirac_b(1), dirac_b(2), dirac_b(3), majorana_a1_complex(), dirac_b(4)}};
    if (name == "quat13")
        return {name, Signature(1, 3), RingTag::quaternion, 2,
                {quat_hat(Quaternion::i()), quat_hat(Quaternion::j()),
                 quat_hat(Quaternion::k()), quat_l()}};
    if (name == "c23")
        return {name, Signature(2, 3), RingTag::complex_quaternion, 2,
                {cquat_c0(), cquat_c(Quaternion::i()), cquat_c(Quaternion::j()),
                 cquat_c(Quaternion::k()), cquat_l()}};
    if (name == "d13")
        return {name, Signature(1, 3), RingTag::complex, 4,
                {dirac_block_d(0), dirac_block_d(1), dirac_block_d(2), dirac_block_d(3)}};
    if (name == "phi0_quat")
        return {name, Signature(0, 2), RingTag::complex, 2,
                {phi0_embed(Quaternion::i()), phi0_embed(Quaternion::j())}};
    if (name == "phi1_quat")
        return {name, Signature(0, 2), RingTag::real, 4,
                {phi1_embed(Quaternion::i()), phi1_embed(Quaternion::j())}};
    throw std::invalid_argument("unknown representation: " + name);
}

std::vector<RingMatrix> extend_to_blades(const Representation& rep) {
    const int n = static_cast<int>(rep.generators.size());
    std::vector<RingMatrix> images;
    images.reserve(std::size_t{1} << n);
    images.push_back(RingMatrix::identity(rep.ring, rep.dim));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        // Left-multiplying by the lowest generator keeps factors ascending.
        const int low = std::countr_zero(mask);
        images.push_back(rep.generators[static_cast<std::size_t>(low)] *
                         images[mask & (mask - 1)]);
    }
    return images;
}

VerificationReport verify(const Representation& rep) {
    VerificationReport report;
    report.name = rep.name;
    report.claimed_sig = rep.claimed_sig;
    report.ring = rep.ring;
    report.matrix_dim = rep.dim;

    const int n = static_cast<int>(rep.generators.size());
    const RingMatrix id = RingMatrix::identity(rep.ring, rep.dim);

    report.squares_ok = true;
    for (const RingMatrix& g : rep.generators) {
        const RingMatrix g2 = g * g;
        if (g2 == id) {
            report.realized_squares.push_back(+1);
        } else if (g2 == id.negated()) {
            report.realized_squares.push_back(-1);
        } else {
            report.realized_squares.push_back(0);
            report.squares_ok = false;
        }
    }

    report.anticommute_ok = true;
    for (int a = 0; a < n && report.anticommute_ok; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!(rep.generators[a] * rep.generators[b] +
                  rep.generators[b] * rep.generators[a])
                     .is_zero()) {
                report.anticommute_ok = false;
                break;
            }

    const std::vector<int> eta = rep.claimed_sig.eta();
    if (report.squares_ok && static_cast<int>(eta.size()) == n) {
        if (report.realized_squares == eta) {
            report.match = SignatureMatch::exact;
        } else if (std::count(report.realized_squares.begin(), report.realized_squares.end(), +1) ==
                   std::count(eta.begin(), eta.end(), +1)) {
            report.match = SignatureMatch::up_to_permutation;
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (int slot = 0; slot < n; ++slot) {
                for (int g = 0; g < n; ++g) {
                    if (!used[static_cast<std::size_t>(g)] &&
                        report.realized_squares[static_cast<std::size_t>(g)] ==
                            eta[static_cast<std::size_t>(slot)]) {
                        report.permutation.push_back(g);
                        used[static_cast<std::size_t>(g)] = true;
                        break;
                    }
                }
            }
        } else {
            report.match = SignatureMatch::mismatch;
        }
    } else {
        report.match = SignatureMatch::mismatch;
    }

    const std::vector<RingMatrix> blades = extend_to_blades(rep);
    std::vector<std::vector<double>> flat;
    flat.reserve(blades.size());
    for (const RingMatrix& m : blades) flat.push_back(flatten_real(m));
    report.blade_image_rank = real_rank(flat);
    report.ambient_real_dim = id.ambient_real_dim();

    const int full = 1 << n;
    if (!report.squares_ok || !report.anticommute_ok || report.blade_image_rank != full) {
        report.verdict = Verdict::failure;
    } else if (report.blade_image_rank == report.ambient_real_dim) {
        report.verdict = Verdict::isomorphism;
    } else {
        report.verdict = Verdict::monomorphism;
    }
    return report;
}

IdentityReport check_identity_products() {
    IdentityReport out;

    const Representation dirac = builtin("dirac");
    const RingMatrix prod_b = dirac.generators[0] * dirac.generators[1] *
                              dirac.generators[2] * dirac.generators[3];
    out.majorana_time_identity =
        prod_b.scaled(CQuat::from_complex(cd{0, 1})) == majorana_a1_complex();

    const Representation c23 = builtin("c23");
    const RingMatrix prod_c =
        c23.generators[0] * c23.generators[1] * c23.generators[2] * c23.generators[3];
    out.quaternionic_l_identity = prod_c.scaled(CQuat::i()) == cquat_l();

    std::vector<std::vector<double>> flat;
    for (const RingMatrix& m : extend_to_blades(dirac)) flat.push_back(flatten_real(m));
    out.dirac_blade_rank = real_rank(flat);
    flat.push_back(flatten_real(
        RingMatrix::identity(RingTag::complex, 4).scaled(CQuat::from_complex(cd{0, 1}))));
    out.dirac_rank_with_i = real_rank(flat);
    out.i_in_dirac_span = out.dirac_rank_with_i == out.dirac_blade_rank;
    return out;
}

PauliSubalgebraReport pauli_quaternion_subalgebra() {
    PauliSubalgebraReport out;
    const CQuat ic = CQuat::from_complex(cd{0, 1});
    const std::array<RingMatrix, 4> basis = {
        pauli_sigma(0),
        pauli_sigma(1).scaled(ic),
        pauli_sigma(2).scaled(ic),
        pauli_sigma(3).scaled(ic),
    };

    // Closure: every pairwise product is +/- a basis element.
    out.closed = true;
    for (const RingMatrix& x : basis) {
        for (const RingMatrix& y : basis) {
            const RingMatrix p = x * y;
            const bool hit = std::any_of(basis.begin(), basis.end(), [&](const RingMatrix& b) {
                return p == b || p == b.negated();
            });
            if (!hit) out.closed = false;
        }
    }

    std::vector<std::vector<double>> flat;
    for (const RingMatrix& m : basis) flat.push_back(flatten_real(m));
    out.real_rank = clifford::real_rank(flat);

    // Quaternion basis relations indexed 1=i, 2=j, 3=k.
    struct Relation { int lhs_a, lhs_b, rhs; int sign; };
    static constexpr Relation kRelations[] = {
        {1, 2, 3, +1}, {2, 3, 1, +1}, {3, 1, 2, +1},
        {2, 1, 3, -1}, {3, 2, 1, -1}, {1, 3, 2, -1},
        {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
    };

    for (int bits = 0; bits < 8; ++bits) {
        QuaternionCorrespondence corr;
        corr.signs = {bits & 1 ? -1 : 1, bits & 2 ? -1 : 1, bits & 4 ? -1 : 1};
        const std::array<RingMatrix, 4> image = {
            basis[0],
            corr.signs[0] < 0 ? basis[1].negated() : basis[1],
            corr.signs[1] < 0 ? basis[2].negated() : basis[2],
            corr.signs[2] < 0 ? basis[3].negated() : basis[3],
        };
        corr.multiplicative = true;
        for (const Relation& rel : kRelations) {
            const RingMatrix lhs = image[static_cast<std::size_t>(rel.lhs_a)] *
                                   image[static_cast<std::size_t>(rel.lhs_b)];
            const RingMatrix rhs = rel.sign < 0
                                       ? image[static_cast<std::size_t>(rel.rhs)].negated()
                                       : image[static_cast<std::size_t>(rel.rhs)];
            if (!(lhs == rhs)) {
                corr.multiplicative = false;
                break;
            }
        }
        out.variants.push_back(corr);
    }
    return out;
}

}  // namespace clifford
