#include <doctest.h>

#include <cmath>
#include <set>

#include "fuchscode/codebook.hpp"
#include "fuchscode/errors.hpp"
#include "fuchscode/fuchsian.hpp"

using namespace fxc;

namespace {

const double kR3 = std::sqrt(3.0);

// Closed forms of the depth <= 2 orbit points for the discriminant-6 group.
const Complex kG1InvTau{5.0 / 7.0 * (3.0 - 2.0 * kR3), 4.0 / 7.0 * (2.0 - kR3)};
const Complex kG1Tau{(96.0 - 131.0 * kR3) / 193.0, 4.0 / 193.0 * (14.0 + kR3)};
const Complex kG1InvG3Tau{5.0 / 13.0 * (3.0 - 2.0 * kR3), 4.0 / 13.0 * (2.0 - kR3)};
const Complex kG3Tau{0.0, 2.0};

Complex mirror(Complex z) { return {-z.real(), z.imag()}; }

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

// The plus-sign points of the packaged 16-point code, in construction order.
std::array<Complex, 8> packaged_d6_points() {
    return {catalog(6).tau, kG1InvTau,    mirror(kG1InvTau), kG3Tau,
            kG1Tau,        mirror(kG1Tau), kG1InvG3Tau,      mirror(kG1InvG3Tau)};
}

// Independent border-distance oracle: every side circle is mapped through
// the codeword's element by fitting the circle (or vertical line) through
// three transported boundary points, never through circle_image.
double oracle_border_sq(const Codebook& c, const Group& g) {
    double best = std::numeric_limits<double>::infinity();
    for (const Codeword& w : c.words) {
        if (w.sign < 0) continue;
        best = std::min(best, w.point.imag());
        for (const Side& s : g.sides) {
            Complex m1, m2, m3;
            int k = 0;
            for (double t : {0.4, 1.9, 3.1}) {
                Complex p{s.center + s.radius * std::cos(t), s.radius * std::sin(t)};
                (k == 0 ? m1 : k == 1 ? m2 : m3) = mobius(*w.element, p);
                ++k;
            }
            double cross = (m2.real() - m1.real()) * (m3.imag() - m1.imag()) -
                           (m2.imag() - m1.imag()) * (m3.real() - m1.real());
            double d;
            if (std::abs(cross) < 1e-9 * std::abs(m3 - m1) * std::abs(m2 - m1)) {
                d = std::abs(w.point.real() - m1.real());
            } else {
                double den = 2.0 * (m1.real() * (m2.imag() - m3.imag()) +
                                    m2.real() * (m3.imag() - m1.imag()) +
                                    m3.real() * (m1.imag() - m2.imag()));
                double ux = (std::norm(m1) * (m2.imag() - m3.imag()) +
                             std::norm(m2) * (m3.imag() - m1.imag()) +
                             std::norm(m3) * (m1.imag() - m2.imag())) / den;
                double uy = (std::norm(m1) * (m3.real() - m2.real()) +
                             std::norm(m2) * (m1.real() - m3.real()) +
                             std::norm(m3) * (m2.real() - m1.real())) / den;
                double r = std::hypot(m1.real() - ux, m1.imag() - uy);
                d = std::abs(std::abs(w.point - Complex(ux, uy)) - r);
            }
            best = std::min(best, d);
        }
    }
    return best * best;
}

} // namespace

TEST_SUITE("codebook") {

TEST_CASE("packaged discriminant-6 codes hit the closed-form points") {
    const Group& g = catalog(6);
    std::array<Complex, 8> pts = packaged_d6_points();
    std::array<int, 8> depths = {0, 1, 1, 1, 1, 1, 2, 2};
    for (std::size_t q : {std::size_t{4}, std::size_t{8}, std::size_t{16}}) {
        Codebook c = nuf_codebook(g, q);
        REQUIRE(c.size() == q);
        CHECK(c.discriminant == 6);
        for (std::size_t j = 0; j < q / 2; ++j) {
            const Codeword& plus = c.words[2 * j];
            const Codeword& minus = c.words[2 * j + 1];
            CHECK(close(plus.point, pts[j], 1e-12));
            CHECK(close(minus.point, -pts[j], 1e-12));
            CHECK(plus.sign == +1);
            CHECK(minus.sign == -1);
            CHECK(plus.depth == depths[j]);
            CHECK(minus.depth == depths[j]);
            CHECK(plus.label == minus.label);
            CHECK(plus.index == static_cast<int>(2 * j));
            // SoA caches mirror the word list.
            CHECK(c.xs[2 * j] == plus.point.real());
            CHECK(c.ys[2 * j + 1] == minus.point.imag());
        }
    }
    CHECK(nuf_codebook(g, 4).code_depth == 1);
    CHECK(nuf_codebook(g, 8).code_depth == 1);
    CHECK(nuf_codebook(g, 16).code_depth == 2);

    Codebook c16 = nuf_codebook(g, 16);
    CHECK(c16.words[0].label == "Id");
    CHECK(c16.words[2].label == "g1^-1");
    CHECK(c16.words[12].label == "g1^-1*g3");
    CHECK(c16.words[14].label == "g2^-1*g3");
}

TEST_CASE("packaged depths for the other discriminants") {
    CHECK(nuf_codebook(catalog(10), 4).code_depth == 1);
    CHECK(nuf_codebook(catalog(10), 8).code_depth == 1);
    CHECK(nuf_codebook(catalog(10), 16).code_depth == 2);
    CHECK(nuf_codebook(catalog(15), 4).code_depth == 1);
    CHECK(nuf_codebook(catalog(15), 8).code_depth == 1);
    CHECK(nuf_codebook(catalog(15), 16).code_depth == 1);
}

TEST_CASE("power and distance figures of the 4-point code") {
    const Group& g = catalog(6);
    Codebook c = nuf_codebook(g, 4);

    // |g1^-1 tau|^2 = (637 - 364 sqrt 3)/49, so 4 P_av = 1/2 + 2 |g1^-1 tau|^2.
    double pav_exact = (0.5 + 2.0 * (637.0 - 364.0 * kR3) / 49.0) / 4.0;
    CHECK(power_average(c) == doctest::Approx(pav_exact).epsilon(1e-12));
    CHECK(power_average(c) == doctest::Approx(0.1916684).epsilon(1e-6));

    double d2_exact = (2373.0 - 1344.0 * kR3) / 196.0;
    CHECK(min_sq_distance(c) == doctest::Approx(d2_exact).epsilon(1e-12));
    CHECK(min_sq_distance(c) == doctest::Approx(0.2302230).epsilon(1e-6));

    CHECK(delta_ml(c) == doctest::Approx(1.2011).epsilon(1e-3));
    CHECK(delta_ml(c) == doctest::Approx(1.201153).epsilon(1e-5));
}

TEST_CASE("power average of the 16-point code matches the closed forms") {
    Codebook c = nuf_codebook(catalog(6), 16);
    std::array<Complex, 8> pts = packaged_d6_points();
    double sum = 0.0;
    for (Complex p : pts) sum += 2.0 * std::norm(p);
    CHECK(power_average(c) == doctest::Approx(sum / 16.0).epsilon(1e-12));
    CHECK(power_average(c) == doctest::Approx(0.7158262).epsilon(1e-6));
}

TEST_CASE("border distances agree with a transported-circle oracle") {
    const Group& g = catalog(6);

    Codebook tile = build_code(g, {{"Id", QuadMatrix::identity(g.alg_a)}}, g.tau);
    CHECK(min_sq_border_distance(tile, g) == doctest::Approx(0.0101477).epsilon(1e-6));

    for (std::size_t q : {std::size_t{4}, std::size_t{8}, std::size_t{16}}) {
        Codebook c = nuf_codebook(g, q);
        double bd2 = min_sq_border_distance(c, g);
        CHECK(bd2 == doctest::Approx(oracle_border_sq(c, g)).epsilon(1e-9));
        CHECK(bd2 <= min_sq_distance(c) / 4.0);
        CHECK(delta_pra(c, g) == doctest::Approx(bd2 / power_average(c)).epsilon(1e-12));
    }
}

TEST_CASE("construction rejects bad centers, collisions, and bad sizes") {
    const Group& g = catalog(6);
    const QuadMatrix id = QuadMatrix::identity(g.alg_a);

    CHECK_THROWS_AS(build_code(g, {}, g.tau), DomainError);
    CHECK_THROWS_AS(build_code(g, {{"Id", id}}, Complex(0.0, 3.0)), CenterNotInteriorError);
    // tau = i sits on the unit-circle side.
    CHECK_THROWS_AS(build_code(g, {{"Id", id}}, Complex(0.0, 1.0)), CenterNotInteriorError);

    // g1^3 = -Id places a second codeword on top of tau.
    const QuadMatrix& g1 = g.generators[0];
    QuadMatrix g1cubed = mat_mul(g1, mat_mul(g1, g1));
    CHECK_THROWS_AS(build_code(g, {{"Id", id}, {"g1^3", g1cubed}}, g.tau),
                    DuplicatePointError);

    CHECK_THROWS_AS(nuf_codebook(g, 5), DomainError);
    CHECK_THROWS_AS(nuf_codebook(g, 0), DomainError);
    CHECK_THROWS_AS(qam_codebook(0), DomainError);
}

TEST_CASE("center override and non-packaged sizes use the BFS selection") {
    const Group& g = catalog(6);

    std::vector<GroupElement> s = choose_S(g, 8);
    REQUIRE(s.size() == 8);
    CHECK(s[0].word.empty());
    CHECK(s[0].depth == 0);
    CHECK(element_label(g, s[0]) == "Id");
    std::set<std::string> keys;
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].depth <= 2);
        if (i > 0) CHECK(s[i - 1].depth <= s[i].depth);
        keys.insert(canonical_sign_key(s[i].m));
    }
    CHECK(keys.size() == 8);
    CHECK_THROWS_AS(choose_S(g, 0), DomainError);

    Codebook c6 = nuf_codebook(g, 6);
    CHECK(c6.size() == 6);
    CHECK(c6.words[0].label == "Id");
    CHECK(c6.code_depth == 1);

    // An off-center tau goes through the same selection even at q = 4.
    Complex tau2{0.05, 0.62};
    Codebook offc = nuf_codebook(g, 4, tau2);
    CHECK(close(offc.words[0].point, tau2, 0.0));
    CHECK(offc.tau == tau2);
}

TEST_CASE("square grid constellation") {
    Codebook c = qam_codebook(2);
    REQUIRE(c.size() == 16);
    CHECK(c.discriminant == 0);
    CHECK(c.code_depth == 0);
    CHECK(power_average(c) == 10.0);
    CHECK(min_sq_distance(c) == 4.0);
    CHECK(delta_ml(c) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(c.words[0].point == Complex(-3.0, -3.0));
    CHECK(c.words[0].label == "-3-3i");
    CHECK(c.words[6].label == "-1+1i");
    CHECK(c.words[15].point == Complex(3.0, 3.0));
    for (const Codeword& w : c.words) {
        CHECK(w.sign == +1);
        CHECK(!w.element);
        CHECK(std::abs(static_cast<int>(w.point.real())) % 2 == 1);
    }

    Codebook q4 = qam_codebook(1);
    CHECK(q4.size() == 4);
    CHECK(delta_ml(q4) == 2.0);
    CHECK(power_average(q4) == 2.0);

    // Border distances are a group-code notion.
    CHECK_THROWS_AS(min_sq_border_distance(c, catalog(6)), DomainError);
}

} // TEST_SUITE

