#include <doctest.h>

#include <random>

#include "ccr/weyl_core.hpp"

using namespace ccr;
using Cplx = std::complex<double>;

namespace {

WeylElement random_element(std::mt19937_64& eng, std::size_t dim, int max_terms) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    WeylElement x(dim);
    const int n = terms(eng);
    for (int t = 0; t < n; ++t) {
        RatVector s(dim);
        for (auto& e : s) {
            e = Rational(num(eng), den(eng));
            e.canonicalize();
        }
        x.add_term(s, {gauss(eng), gauss(eng)});
    }
    return x;
}

}  // namespace

TEST_CASE("generator product carries the half-angle phase") {
    const BilinearForm form = BilinearForm::canonical(1);
    const DarbouxBasis basis = darboux_basis(form);
    const auto p = WeylElement::generator(basis.p[0]);
    const auto q = WeylElement::generator(basis.q[0]);
    const WeylElement prod = weyl_mul(form, p, q);
    REQUIRE(prod.terms().size() == 1);
    const auto& [support, coeff] = *prod.terms().begin();
    CHECK(support == add(basis.p[0], basis.q[0]));
    CHECK(std::abs(coeff - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("delta_0 is the unit") {
    const BilinearForm form = BilinearForm::canonical(2);
    std::mt19937_64 eng(3);
    const WeylElement x = random_element(eng, 4, 4);
    CHECK(coeff_distance(weyl_mul(form, WeylElement::identity(4), x), x) == 0.0);
    CHECK(coeff_distance(weyl_mul(form, x, WeylElement::identity(4)), x) == 0.0);
}

TEST_CASE("associativity holds on generators via the cocycle identity") {
    const BilinearForm form = BilinearForm::canonical(2);
    std::mt19937_64 eng(17);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        RatVector f(4), g(4), h(4);
        for (std::size_t i = 0; i < 4; ++i) {
            f[i] = num(eng);
            g[i] = num(eng);
            h[i] = num(eng);
        }
        // Expand both orders by hand on generators.
        const Cplx left = cocycle_sigma(form, f, g) * cocycle_sigma(form, add(f, g), h);
        const Cplx right = cocycle_sigma(form, g, h) * cocycle_sigma(form, f, add(g, h));
        CHECK(std::abs(left - right) < 1e-13);

        const auto df = WeylElement::generator(f);
        const auto dg = WeylElement::generator(g);
        const auto dh = WeylElement::generator(h);
        const auto ab_c = weyl_mul(form, weyl_mul(form, df, dg), dh);
        const auto a_bc = weyl_mul(form, df, weyl_mul(form, dg, dh));
        CHECK(coeff_distance(ab_c, a_bc) < 1e-13);
    }
}

TEST_CASE("associativity on random elements") {
    const BilinearForm form = BilinearForm::canonical(2);
    std::mt19937_64 eng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const WeylElement x = random_element(eng, 4, 3);
        const WeylElement y = random_element(eng, 4, 3);
        const WeylElement z = random_element(eng, 4, 3);
        const auto lhs = weyl_mul(form, weyl_mul(form, x, y), z);
        const auto rhs = weyl_mul(form, x, weyl_mul(form, y, z));
        CHECK(coeff_distance(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("star flips the support and conjugates") {
    const BilinearForm form = BilinearForm::canonical(1);
    const RatVector f = rat_vector({1, 2});
    const auto df = WeylElement::generator(f, {0.0, 2.0});
    const WeylElement star = weyl_star(df);
    REQUIRE(star.terms().size() == 1);
    CHECK(star.terms().begin()->first == negate(f));
    CHECK(star.terms().begin()->second == Cplx(0.0, -2.0));
    CHECK(coeff_distance(weyl_star(star), df) == 0.0);

    // star of a scaled unit just conjugates the coefficient
    const auto unit = WeylElement::generator(RatVector(2, Rational(0)), {3.0, -4.0});
    const WeylElement unit_star = weyl_star(unit);
    REQUIRE(unit_star.terms().size() == 1);
    CHECK(unit_star.terms().begin()->second == Cplx(3.0, 4.0));
}

TEST_CASE("star is anti-multiplicative") {
    const BilinearForm form = BilinearForm::canonical(2);
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const WeylElement x = random_element(eng, 4, 3);
        const WeylElement y = random_element(eng, 4, 3);
        const auto lhs = weyl_star(weyl_mul(form, x, y));
        const auto rhs = weyl_mul(form, weyl_star(y), weyl_star(x));
        CHECK(coeff_distance(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("generators are unitary") {
    const BilinearForm form = BilinearForm::canonical(2);
    std::mt19937_64 eng(37);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RatVector f(4);
        for (auto& e : f) e = num(eng);
        const auto df = WeylElement::generator(f);
        const auto prod = weyl_mul(form, weyl_star(df), df);
        CHECK(coeff_distance(prod, WeylElement::identity(4)) < 1e-15);
    }
}

TEST_CASE("mode support reads Darboux components") {
    const BilinearForm form = BilinearForm::canonical(3);
    const DarbouxBasis basis = darboux_basis(form);

    const auto d_p2 = WeylElement::generator(basis.p[1]);
    CHECK(mode_support(form, basis, d_p2) == std::set<std::size_t>{1});

    const auto d_mixed = WeylElement::generator(add(basis.p[0], basis.q[2]));
    CHECK(mode_support(form, basis, d_mixed) == std::set<std::size_t>{0, 2});

    CHECK(mode_support(form, basis, WeylElement::identity(6)).empty());
}

TEST_CASE("commutation across disjoint modes") {
    const BilinearForm form = BilinearForm::canonical(3);
    const DarbouxBasis basis = darboux_basis(form);
    std::mt19937_64 eng(41);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        // x supported in modes {0,1}, y in mode {2}: the pairing vanishes, so
        // the elements commute with phase exactly one.
        RatVector sx(6, Rational(0)), sy(6, Rational(0));
        for (std::size_t i = 0; i < 4; ++i) sx[i] = num(eng);
        for (std::size_t i = 4; i < 6; ++i) sy[i] = num(eng);
        const auto x = WeylElement::generator(sx);
        const auto y = WeylElement::generator(sy);
        CHECK(form.eval(sx, sy) == 0);
        CHECK(coeff_distance(weyl_mul(form, x, y), weyl_mul(form, y, x)) == 0.0);
    }
}

TEST_CASE("canonical form drops cancelled terms") {
    const BilinearForm form = BilinearForm::canonical(1);
    const auto x = WeylElement::generator(rat_vector({1, 1}), 2.0);
    const WeylElement diff = x - x;
    CHECK(diff.empty());
}
