#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "clifford/quaternion.hpp"
#include "clifford/ring_matrix.hpp"
#include "oracles.hpp"

using namespace clifford;

namespace {

Quaternion random_int_quat(std::mt19937& rng, int mag = 5) {
    std::uniform_int_distribution<int> d(-mag, mag);
    return {double(d(rng)), double(d(rng)), double(d(rng)), double(d(rng))};
}

Quaternion random_real_quat(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("unit relations") {
    const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == -k);
    CHECK(i * k == -j);
    CHECK(k * j == -i);
    CHECK(i * i == -Quaternion::one());
    CHECK(j * j == -Quaternion::one());
    CHECK(k * k == -Quaternion::one());
    CHECK(i * j * k == -Quaternion::one());

    std::mt19937 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const auto h = random_int_quat(rng);
        CHECK(Quaternion::one() * h == h);
        CHECK(h * Quaternion::one() == h);
    }
}

TEST_CASE("conjugate, norm and inverse") {
    const Quaternion h{1, 1, 1, 1};
    CHECK(conj(h) == Quaternion{1, -1, -1, -1});
    CHECK(norm(h) == 2.0);

    const Quaternion g{1, 1, 0, 0};
    const auto gi = inverse(g);
    REQUIRE(gi.has_value());
    CHECK(*gi == Quaternion{0.5, -0.5, 0, 0});
    CHECK(g * *gi == Quaternion::one());

    CHECK(!inverse(Quaternion{}).has_value());
}

TEST_CASE("conjugation is an anti-automorphism") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const auto g = random_int_quat(rng);
        const auto h = random_int_quat(rng);
        CHECK(conj(g * h) == conj(h) * conj(g));
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(8);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto g = random_real_quat(rng);
        const auto h = random_real_quat(rng);
        CHECK(norm(g * h) == doctest::Approx(norm(g) * norm(h)).epsilon(1e-10));
    }
}

TEST_CASE("axis-angle exponential") {
    constexpr double pi = std::numbers::pi;
    const Vec3 z{0, 0, 1};
    CHECK(approx_equal(quat_exp(AxisAngle(pi / 2, z)), Quaternion::k(), 1e-15));
    CHECK(approx_equal(quat_exp(AxisAngle(0.0, {1, 0, 0})), Quaternion::one(), 1e-15));
    const auto h = quat_exp(AxisAngle(pi / 3, {1, 0, 0}));
    CHECK(approx_equal(h, Quaternion{0.5, std::sqrt(3.0) / 2, 0, 0}, 1e-15));

    CHECK_THROWS_AS(AxisAngle(1.0, {1, 1, 0}), std::invalid_argument);

    // angles reduce into (-pi, pi]
    const auto folded = AxisAngle(2 * pi + pi / 4, z);
    CHECK(folded.angle() == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(AxisAngle(pi, z).angle() == doctest::Approx(pi));
    CHECK(AxisAngle(-pi, z).angle() == doctest::Approx(pi));  // branch is (-pi, pi]
    CHECK(quat_exp(folded).w == doctest::Approx(std::cos(pi / 4)));
}

TEST_CASE("rotation action") {
    constexpr double pi = std::numbers::pi;
    const auto h = quat_exp(AxisAngle(pi / 4, {0, 0, 1}));
    const Vec3 x{1, 0, 0};
    const Vec3 rotated = quat_rotate(h, x);
    CHECK(rotated[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rotated[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rotated[2] == doctest::Approx(0.0).epsilon(1e-12));

    // identity rotor
    const Vec3 v{0.3, -0.7, 0.2};
    const Vec3 same = quat_rotate(Quaternion::one(), v);
    for (int c = 0; c < 3; ++c) CHECK(same[c] == v[c]);

    CHECK_THROWS_AS(quat_rotate(Quaternion{2, 0, 0, 0}, v), std::invalid_argument);
}

TEST_CASE("rotation matches the rodrigues oracle; h and -h act identically") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    for (int rep = 0; rep < 1000; ++rep) {
        Vec3 w{comp(rng), comp(rng), comp(rng)};
        const double len = std::sqrt(oracles::dot(w, w));
        if (len < 1e-3) continue;
        for (auto& c : w) c /= len;
        const double a = angle(rng);
        const Vec3 x{comp(rng), comp(rng), comp(rng)};

        const auto h = quat_exp(AxisAngle(a, w));
        const Vec3 got = quat_rotate(h, x);
        const Vec3 want = oracles::rodrigues(x, w, 2.0 * a);  // rotation angle doubles
        for (int c = 0; c < 3; ++c)
            REQUIRE(got[c] == doctest::Approx(want[c]).epsilon(1e-12));

        const Vec3 via_neg = quat_rotate(-1.0 * h, x);
        for (int c = 0; c < 3; ++c) REQUIRE(via_neg[c] == got[c]);

        // norm preserved
        REQUIRE(oracles::dot(got, got) == doctest::Approx(oracles::dot(x, x)).epsilon(1e-12));
    }
}

TEST_CASE("rotation preserves orientation") {
    // determinant of the induced linear map is +1
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        Vec3 w{comp(rng), comp(rng), comp(rng)};
        const double len = std::sqrt(oracles::dot(w, w));
        if (len < 1e-3) continue;
        for (auto& c : w) c /= len;
        const auto h = quat_exp(AxisAngle(comp(rng) * 3.0, w));
        const Vec3 c0 = quat_rotate(h, {1, 0, 0});
        const Vec3 c1 = quat_rotate(h, {0, 1, 0});
        const Vec3 c2 = quat_rotate(h, {0, 0, 1});
        const double det = oracles::dot(c0, oracles::cross(c1, c2));
        REQUIRE(det == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("matrix embeddings") {
    using cd = std::complex<double>;
    CHECK(phi0_embed(Quaternion::one()) == RingMatrix::identity(RingTag::complex, 2));
    CHECK(phi0_embed(Quaternion::i()) ==
          RingMatrix::from_complex(2, 2, {cd{0, 1}, cd{0, 0}, cd{0, 0}, cd{0, -1}}));
    CHECK(phi1_embed(Quaternion::one()) == RingMatrix::identity(RingTag::real, 4));
    CHECK(phi1_embed(Quaternion::i()) ==
          RingMatrix::from_real(4, 4,
                                {0, -1, 0, 0,
                                 1, 0, 0, 0,
                                 0, 0, 0, -1,
                                 0, 0, 1, 0}));

    std::mt19937 rng(44);
    for (int rep = 0; rep < 100; ++rep) {
        const auto g = random_int_quat(rng);
        const auto h = random_int_quat(rng);
        CHECK(phi0_embed(g * h) == phi0_embed(g) * phi0_embed(h));
        CHECK(phi1_embed(g * h) == phi1_embed(g) * phi1_embed(h));
        CHECK(phi0_embed(g + h) == phi0_embed(g) + phi0_embed(h));
        CHECK(phi1_embed(g + h) == phi1_embed(g) + phi1_embed(h));
    }

    // det(phi0(h)) = |h|^2, expanded symbolically:
    // (w+xi)(w-xi) - (y+zi)(-y+zi) = w^2+x^2+y^2+z^2
    for (int rep = 0; rep < 50; ++rep) {
        const auto h = random_int_quat(rng);
        const auto m = phi0_embed(h);
        const cd a{m.at(0, 0).a.w, m.at(0, 0).b.w};
        const cd b{m.at(0, 1).a.w, m.at(0, 1).b.w};
        const cd c{m.at(1, 0).a.w, m.at(1, 0).b.w};
        const cd d{m.at(1, 1).a.w, m.at(1, 1).b.w};
        const cd det = a * d - b * c;
        CHECK(det.real() == norm_squared(h));
        CHECK(det.imag() == 0.0);
    }

    // injectivity: only 0 maps to 0
    CHECK(phi0_embed(Quaternion{}).is_zero());
    CHECK(!phi0_embed(Quaternion{0, 0, 1e-12, 0}).is_zero());
    CHECK(!phi1_embed(Quaternion{0, 0, 0, 1e-12}).is_zero());
}
