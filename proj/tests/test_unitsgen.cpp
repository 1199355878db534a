#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "fuchscode/errors.hpp"
#include "fuchscode/fuchsian.hpp"
#include "fuchscode/unitsgen.hpp"

using namespace fxc;

namespace {

std::string tuple_key(const QuaternionTuple& t) {
    return t.x.str() + "," + t.y.str() + "," + t.z.str() + "," + t.t.str();
}

// Slow residue count of (a/p) for odd primes.
int legendre_by_squares(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long s = 1; s < p; ++s)
        if ((s * s) % p == r) return 1;
    return -1;
}

} // namespace

TEST_SUITE("unitsgen") {

TEST_CASE("fundamental Pell units") {
    struct Row {
        long p;
        long x, y;
    };
    // Two of the commonly quoted values are wrong; the continued-fraction
    // computation is the authority here.
    const Row rows[] = {{3, 2, 1},      {7, 8, 3},     {11, 10, 3},  {19, 170, 39},
                        {23, 24, 5},    {31, 1520, 273}, {43, 3482, 531}, {47, 48, 7}};
    for (const Row& r : rows) {
        PellSolution u = fundamental_unit(r.p);
        CHECK(u.x == r.x);
        CHECK(u.y == r.y);
        CHECK(u.x * u.x - r.p * u.y * u.y == 1);
    }
    // The misquoted pairs do not even solve the equation.
    CHECK(BigInt(24) * 24 - 23 * BigInt(2) * 2 != 1);
    CHECK(BigInt(1520) * 1520 - 31 * BigInt(237) * 237 != 1);

    CHECK_THROWS_AS(fundamental_unit(4), DomainError);  // composite
    CHECK_THROWS_AS(fundamental_unit(5), DomainError);  // 1 mod 4
    CHECK_THROWS_AS(fundamental_unit(10007), DomainError);
}

TEST_CASE("unit parametrization reference values") {
    struct Cell {
        long p, m, k1, k2;
        long x, y, z, t;
    };
    const Cell cells[] = {
        {3, 1, 0, 1, 2, 0, 3, 2},        {3, 2, 0, 1, 7, 0, 12, 8},
        {3, 2, 1, 1, 14, 7, 12, 8},      {7, 1, 0, 1, 8, 0, 63, 24},
        {7, 2, 0, 1, 127, 0, 1008, 384}, {7, 2, 1, 1, 1016, 381, 1008, 384},
        {11, 1, 0, 1, 10, 0, 99, 30},    {11, 2, 0, 1, 199, 0, 1980, 600},
        {11, 2, 1, 1, 1990, 597, 1980, 600},
    };
    for (const Cell& c : cells) {
        QuaternionTuple t = phi_p(c.p, c.m, c.k1, c.k2);
        CHECK(t.x == c.x);
        CHECK(t.y == c.y);
        CHECK(t.z == c.z);
        CHECK(t.t == c.t);
    }
    CHECK_THROWS_AS(phi_p(3, 0, 0, 1), DomainError);
    CHECK_THROWS_AS(phi_p(3, -1, 0, 1), DomainError);
    CHECK_THROWS_AS(phi_p(3, 1, -1, 1), DomainError);
    CHECK_THROWS_AS(phi_p(15, 1, 0, 1), DomainError); // composite p
}

TEST_CASE("parametrized elements are norm-1 units, distinct per triple") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> um(1, 3), uk(0, 4);
    for (long p : {3L, 7L, 11L, 19L, 43L, 47L}) {
        std::set<std::string> seen;
        for (int trial = 0; trial < 36; ++trial) {
            long m = um(rng), k1 = uk(rng), k2 = uk(rng);
            QuaternionTuple t = phi_p(p, m, k1, k2);
            CHECK(quaternion_norm(static_cast<int>(p), -1, t) == 1);
            seen.insert(std::to_string(m) + ":" + std::to_string(k1) + ":" +
                        std::to_string(k2) + "=" + tuple_key(t));
        }
        std::set<std::string> keys;
        for (const std::string& s : seen) keys.insert(s.substr(s.find('=') + 1));
        CHECK(keys.size() == seen.size());
    }
}

TEST_CASE("the matrix embedding is a ring homomorphism") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> um(1, 2), uk(0, 3);
    for (long p : {3L, 7L, 11L}) {
        int a = static_cast<int>(p);
        for (int trial = 0; trial < 20; ++trial) {
            QuaternionTuple u = phi_p(p, um(rng), uk(rng), uk(rng));
            QuaternionTuple v = phi_p(p, um(rng), uk(rng), uk(rng));
            QuadMatrix lhs = tuple_to_matrix(a, -1, quaternion_mul(a, -1, u, v));
            QuadMatrix rhs = mat_mul(tuple_to_matrix(a, -1, u), tuple_to_matrix(a, -1, v));
            CHECK(mat_eq_mod_sign(lhs, rhs));
            CHECK(lhs.at(0, 0) == rhs.at(0, 0));
        }
        QuaternionTuple w = phi_p(p, 2, 1, 1);
        CHECK(mat_eq_mod_sign(tuple_to_matrix(a, -1, quaternion_pow(a, -1, w, 3)),
                              mat_mul(tuple_to_matrix(a, -1, w),
                                      mat_mul(tuple_to_matrix(a, -1, w),
                                              tuple_to_matrix(a, -1, w)))));
    }
    // Norm != 1 has no unit matrix.
    CHECK_THROWS_AS(tuple_to_matrix(3, -1, {2, 0, 0, 0}), DomainError);
}

TEST_CASE("group membership test for the halved-matrix form") {
    const Group& g6 = catalog(6);
    for (const QuadMatrix& m : g6.generators) CHECK(in_gamma_2p(m, 3));
    CHECK(in_gamma_2p(QuadMatrix::identity(3), 3));

    // diag(2 + sqrt 3, 2 - sqrt 3).
    QuadMatrix diag(QuadHalfInt::from_quad_int(2, 1, 3), QuadHalfInt::from_int(0, 3),
                    QuadHalfInt::from_int(0, 3), QuadHalfInt::from_quad_int(2, -1, 3));
    CHECK(in_gamma_2p(diag, 3));

    for (long p : {3L, 7L, 11L})
        CHECK(in_gamma_2p(tuple_to_matrix(static_cast<int>(p), -1, phi_p(p, 2, 1, 1)), p));

    // Wrong base field.
    CHECK(!in_gamma_2p(QuadMatrix::identity(2), 3));
    // alpha and beta of different parity: alpha = 1, beta = (1 + sqrt 3)/2.
    QuadHalfInt half(1, 1, 3);
    QuadMatrix mixed(QuadHalfInt::from_int(1, 3), half, -quad_conj(half),
                     QuadHalfInt::from_int(1, 3));
    CHECK(!in_gamma_2p(mixed, 3));
    // Right shape, determinant 4.
    QuadMatrix scaled(QuadHalfInt::from_int(2, 3), QuadHalfInt::from_int(0, 3),
                      QuadHalfInt::from_int(0, 3), QuadHalfInt::from_int(2, 3));
    CHECK(!in_gamma_2p(scaled, 3));
    // Broken conjugate-transpose structure.
    QuadMatrix askew(QuadHalfInt::from_quad_int(2, 1, 3), QuadHalfInt::from_int(0, 3),
                     QuadHalfInt::from_int(0, 3), QuadHalfInt::from_quad_int(2, 1, 3));
    CHECK(!in_gamma_2p(askew, 3));
}

TEST_CASE("quadratic symbols") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 23L, 47L}) {
        for (long a = -6; a < p + 3; ++a)
            CHECK(legendre(BigInt(a), p) == legendre_by_squares(a, p));
    }
    // Kronecker rules at 2.
    CHECK(legendre(BigInt(12), 2) == 0);
    CHECK(legendre(BigInt(7), 2) == 1);
    CHECK(legendre(BigInt(17), 2) == 1);
    CHECK(legendre(BigInt(3), 2) == -1);
    CHECK(legendre(BigInt(-3), 2) == -1);
}

TEST_CASE("field embedding criterion") {
    CHECK(embeds(3, 2, 3));
    CHECK(embeds(11, 2, 3));

    // Some q < 200 admissible for the (2, 3) pair exists, and every
    // admissible q has a nonresidue (or ramified) symbol at both primes.
    int found = 0;
    for (long q = 3; q < 200; q += 4) { // q = 3 mod 4
        if (!embeds(q, 2, 3)) continue;
        ++found;
        CHECK(legendre(BigInt(4 * q), 2) != 1);
        CHECK(legendre(BigInt(4 * q), 3) != 1);
    }
    CHECK(found > 0);
    CHECK(!embeds(13, 2, 3)); // 52 is a square mod 3
}

TEST_CASE("Pell-driven unit family psi") {
    PellSolution u3{2, 1};
    std::array<BigInt, 3> pure3 = {1, 0, 0};

    CHECK(psi_q(3, -1, 3, u3, pure3, 0).is_identity());
    QuadMatrix m1 = psi_q(3, -1, 3, u3, pure3, 1);
    CHECK(m1.at(0, 0) == QuadHalfInt::from_quad_int(2, 1, 3));
    CHECK(m1.at(1, 1) == QuadHalfInt::from_quad_int(2, -1, 3));
    CHECK(m1.at(0, 1) == QuadHalfInt::from_int(0, 3));

    std::set<std::string> keys;
    for (long m = 0; m <= 6; ++m) {
        QuadMatrix mm = psi_q(3, -1, 3, u3, pure3, m);
        CHECK(mat_det(mm) == QuadHalfInt::from_int(1, 3));
        keys.insert(canonical_sign_key(mm));
    }
    CHECK(keys.size() == 7);

    // Different q gives a different cyclic family (apart from the identity).
    PellSolution u11{10, 3};
    std::array<BigInt, 3> pure11 = {2, 1, 0}; // 3*4 - 1 = 11
    std::set<std::string> keys11;
    for (long m = 1; m <= 4; ++m)
        keys11.insert(canonical_sign_key(psi_q(3, -1, 11, u11, pure11, m)));
    for (const std::string& k : keys11) CHECK(keys.count(k) == 0);

    // Bad Pell pair and bad pure part are rejected.
    CHECK_THROWS_AS(psi_q(3, -1, 3, PellSolution{3, 1}, pure3, 1), DomainError);
    CHECK_THROWS_AS(psi_q(3, -1, 3, u3, {1, 1, 0}, 1), DomainError);
}

TEST_CASE("triple codec round trip") {
    const long ps[] = {3, 7, 11};
    for (long p : ps) {
        for (long m : {1L, 2L}) {
            for (long k1 : {0L, 1L}) {
                for (long k2 : {1L, 2L}) {
                    QuaternionTuple t = phi_p(p, m, k1, k2);

                    auto [sign, mat] = triple_encode({m, k1, k2}, p);
                    CHECK(sign == +1);
                    CHECK(mat.at(0, 0) ==
                          tuple_to_matrix(static_cast<int>(p), -1, t).at(0, 0));

                    ParamTriple back = triple_decode(+1, t, p);
                    CHECK(back.m == m);
                    CHECK(back.k1 == k1);
                    CHECK(back.k2 == k2);

                    auto [nsign, nmat] = triple_encode({-m, k1, k2}, p);
                    CHECK(nsign == -1);
                    CHECK(mat_eq_mod_sign(nmat, mat));
                    ParamTriple nback = triple_decode(-1, t, p);
                    CHECK(nback.m == -m);
                    CHECK(nback.k1 == k1);
                    CHECK(nback.k2 == k2);
                }
            }
        }
    }
    CHECK_THROWS_AS(triple_encode({0, 0, 1}, 3), DomainError);
    CHECK_THROWS_AS(triple_decode(+1, {3, 0, 0, 0}, 3), NotInImageError);
    // A unit of the wrong shape (diagonal embedding of eps itself).
    CHECK_THROWS_AS(triple_decode(+1, {2, 1, 0, 0}, 3), NotInImageError);
}

TEST_CASE("round trip through the exact matrix layer") {
    for (long p : {3L, 7L, 11L}) {
        QuaternionTuple t = phi_p(p, 2, 1, 1);
        QuadMatrix m = tuple_to_matrix(static_cast<int>(p), -1, t);
        // The embedding is faithful: entries recover the quaternion.
        QuadHalfInt al = m.at(0, 0), be = m.at(0, 1);
        CHECK(al.u() == 2 * t.x);
        CHECK(al.v() == 2 * t.y);
        CHECK(be.u() == 2 * t.z);
        CHECK(be.v() == 2 * t.t);
    }
}

} // TEST_SUITE
