#pragma once

#include <array>
#include <string>
#include <vector>

#include "clifford/blades.hpp"
#include "clifford/ring_matrix.hpp"

namespace clifford {

/// A named set of generator matrices claiming to realize Cl(p,q).
struct Representation {
    std::string name;
    Signature claimed_sig;
    RingTag ring;
    int dim = 0;  // matrix size
    std::vector<RingMatrix> generators;
};

/// Catalog of the built-in generator sets. Throws on unknown names.
Representation builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Images of all 2^n blades: image of {i1 < ... < ik} is the ordered
/// product of generator images; the empty blade maps to the identity.
std::vector<RingMatrix> extend_to_blades(const Representation& rep);

enum class SignatureMatch { exact, up_to_permutation, mismatch };
enum class Verdict { monomorphism, isomorphism, failure };

struct VerificationReport {
    std::string name;
    Signature claimed_sig{1, 0};
    RingTag ring = RingTag::real;
    int matrix_dim = 0;

    bool squares_ok = false;           // every generator squares to +/- identity
    std::vector<int> realized_squares; // the +/-1 signs, generator order
    bool anticommute_ok = false;
    SignatureMatch match = SignatureMatch::mismatch;
    std::vector<int> permutation;      // claimed slot -> generator index (when permuted)

    int blade_image_rank = 0;
    int ambient_real_dim = 0;
    Verdict verdict = Verdict::failure;
};

/// Checks generator squares, pairwise anticommutation, realized-vs-claimed
/// signature, and the real rank of the blade images. Failures are reported,
/// never thrown.
VerificationReport verify(const Representation& rep);

struct IdentityReport {
    bool majorana_time_identity = false;   // A1 equals i B1 B2 B3 B4
    bool quaternionic_l_identity = false;  // L equals i C0 C1 C2 C3
    int dirac_blade_rank = 0;
    int dirac_rank_with_i = 0;             // rank after adjoining i*identity
    bool i_in_dirac_span = true;
};

/// Verifies the two cross-representation matrix identities exactly, and
/// that i*identity lies outside the real span of the Dirac blade images.
IdentityReport check_identity_products();

struct QuaternionCorrespondence {
    std::array<int, 3> signs{1, 1, 1};  // images i -> s0*i*sigma1, j -> s1*i*sigma2, k -> s2*i*sigma3
    bool multiplicative = false;
};

struct PauliSubalgebraReport {
    bool closed = false;            // products of basis elements stay in the span
    int real_rank = 0;              // of {sigma0, i*sigma1, i*sigma2, i*sigma3}
    std::vector<QuaternionCorrespondence> variants;  // all 8 sign choices
};

/// Examines the span of {sigma0, i*sigma1, i*sigma2, i*sigma3} and reports
/// which sign-adjusted unit correspondences give a quaternion isomorphism.
PauliSubalgebraReport pauli_quaternion_subalgebra();

}  // namespace clifford
