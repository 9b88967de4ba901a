#include <doctest.h>

#include <random>

#include "clifford/ring_matrix.hpp"

using namespace clifford;

namespace {

CQuat random_cquat(std::mt19937& rng, int mag = 3) {
    std::uniform_int_distribution<int> d(-mag, mag);
    auto q = [&] {
        return Quaternion{double(d(rng)), double(d(rng)), double(d(rng)), double(d(rng))};
    };
    return {q(), q()};
}

RingMatrix random_matrix(std::mt19937& rng, RingTag tag, int n) {
    RingMatrix m(tag, n, n);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            CQuat e{};
            switch (tag) {
                case RingTag::real: e = CQuat::from_real(d(rng)); break;
                case RingTag::complex:
                    e = CQuat::from_complex({double(d(rng)), double(d(rng))});
                    break;
                case RingTag::quaternion:
                    e = CQuat::from_quaternion({double(d(rng)), double(d(rng)),
                                                double(d(rng)), double(d(rng))});
                    break;
                case RingTag::complex_quaternion: e = random_cquat(rng); break;
            }
            m.set(r, c, e);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("ring tags and entry membership") {
    CHECK(ring_real_dim(RingTag::real) == 1);
    CHECK(ring_real_dim(RingTag::complex) == 2);
    CHECK(ring_real_dim(RingTag::quaternion) == 4);
    CHECK(ring_real_dim(RingTag::complex_quaternion) == 8);

    RingMatrix m(RingTag::real, 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, CQuat::from_complex({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(m.set(0, 0, CQuat::from_quaternion(Quaternion::j())),
                    std::invalid_argument);
    CHECK_NOTHROW(m.set(0, 0, CQuat::from_real(2.0)));
}

TEST_CASE("identity is neutral over every ring") {
    std::mt19937 rng(10);
    for (const RingTag tag : {RingTag::real, RingTag::complex, RingTag::quaternion,
                              RingTag::complex_quaternion}) {
        const auto m = random_matrix(rng, tag, 3);
        const auto id = RingMatrix::identity(tag, 3);
        CHECK(id * m == m);
        CHECK(m * id == m);
    }
}

TEST_CASE("1x1 quaternion product keeps order") {
    const auto mi = RingMatrix::from_quaternion(1, 1, {Quaternion::i()});
    const auto mj = RingMatrix::from_quaternion(1, 1, {Quaternion::j()});
    const auto mk = RingMatrix::from_quaternion(1, 1, {Quaternion::k()});
    CHECK(mi * mj == mk);
    CHECK(mj * mi == mk.negated());
}

TEST_CASE("the off-diagonal i-hat matrix squares to -I") {
    const Quaternion z{};
    const auto ih = RingMatrix::from_quaternion(2, 2, {z, Quaternion::i(), Quaternion::i(), z});
    CHECK(ih * ih == RingMatrix::identity(RingTag::quaternion, 2).negated());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20);
    for (const RingTag tag : {RingTag::real, RingTag::complex, RingTag::quaternion,
                              RingTag::complex_quaternion}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_matrix(rng, tag, 2);
            const auto b = random_matrix(rng, tag, 2);
            const auto c = random_matrix(rng, tag, 2);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
        }
    }
}

TEST_CASE("the central unit of the complexification commutes") {
    std::mt19937 rng(30);
    const CQuat i = CQuat::i();
    for (int rep = 0; rep < 1000; ++rep) {
        const CQuat x = random_cquat(rng);
        CHECK(i * x == x * i);
    }
    CHECK(i * i == -CQuat::from_real(1.0));
}

TEST_CASE("shape and ring mismatches are rejected") {
    const auto r22 = RingMatrix::identity(RingTag::real, 2);
    const auto c22 = RingMatrix::identity(RingTag::complex, 2);
    const auto r33 = RingMatrix::identity(RingTag::real, 3);
    CHECK_THROWS_AS(r22 + c22, std::invalid_argument);
    CHECK_THROWS_AS(r22 * c22, std::invalid_argument);
    CHECK_THROWS_AS(r22 + r33, std::invalid_argument);
    CHECK_THROWS_AS(r22 * r33, std::invalid_argument);
}

TEST_CASE("flatten_real dimensions and linearity") {
    const auto c = RingMatrix::identity(RingTag::complex, 2);
    const auto flat = flatten_real(c);
    REQUIRE(flat.size() == 8);
    // ones exactly at the two diagonal real slots
    CHECK(flat == std::vector<double>{1, 0, 0, 0, 0, 0, 1, 0});

    CHECK(flatten_real(RingMatrix(RingTag::complex, 4, 4)).size() == 32);
    CHECK(flatten_real(RingMatrix(RingTag::quaternion, 2, 2)).size() == 16);

    std::mt19937 rng(40);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_matrix(rng, RingTag::complex_quaternion, 2);
        const auto b = random_matrix(rng, RingTag::complex_quaternion, 2);
        const auto fa = flatten_real(a);
        const auto fb = flatten_real(b);
        const auto fsum = flatten_real(a + b);
        for (std::size_t t = 0; t < fa.size(); ++t) REQUIRE(fsum[t] == fa[t] + fb[t]);
    }
}

TEST_CASE("real_rank") {
    CHECK(real_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(real_rank({{1, 0}, {2, 0}}) == 1);
    CHECK(real_rank({}) == 0);
    CHECK(real_rank({{0, 0, 0}}) == 0);
    CHECK(real_rank({{1e-12, 0}, {0, 1}}) == 1);  // below the pivot threshold

    // k independent random vectors have rank k
    std::mt19937 rng(50);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<std::vector<double>> vecs(6, std::vector<double>(9));
        for (auto& v : vecs)
            for (auto& x : v) x = d(rng);
        CHECK(real_rank(vecs) == 6);
    }
}

TEST_CASE("diag2 block embedding") {
    const auto a = RingMatrix::from_real(1, 1, {3.0});
    const auto b = RingMatrix::from_real(1, 1, {5.0});
    const auto d = diag2_embed({a, b});
    CHECK(d == RingMatrix::from_real(2, 2, {3, 0, 0, 5}));
    CHECK(d.ambient_real_dim() == 4);

    std::mt19937 rng(60);
    for (int rep = 0; rep < 20; ++rep) {
        const auto x1 = random_matrix(rng, RingTag::quaternion, 2);
        const auto x2 = random_matrix(rng, RingTag::quaternion, 2);
        const auto y1 = random_matrix(rng, RingTag::quaternion, 2);
        const auto y2 = random_matrix(rng, RingTag::quaternion, 2);
        CHECK(diag2_embed({x1, x2}) * diag2_embed({y1, y2}) ==
              diag2_embed({x1 * y1, x2 * y2}));
    }

    CHECK_THROWS_AS(diag2_embed({RingMatrix::identity(RingTag::real, 2),
                                 RingMatrix::identity(RingTag::real, 3)}),
                    std::invalid_argument);
}
