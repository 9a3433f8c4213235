#include <doctest.h>

#include "ccr/decompose.hpp"
#include "ccr/finite_weyl.hpp"
#include "ccr/representation.hpp"

using namespace ccr;

TEST_CASE("clock and shift satisfy the braiding") {
    for (int d : {2, 3, 4, 5}) {
        FiniteWeylSystem sys(d);
        CHECK((sys.clock * sys.shift - sys.omega * sys.shift * sys.clock).cwiseAbs().maxCoeff() <
              1e-14);
        Mat clock_pow = Mat::Identity(d, d);
        Mat shift_pow = Mat::Identity(d, d);
        for (int k = 0; k < d; ++k) {
            clock_pow = clock_pow * sys.clock;
            shift_pow = shift_pow * sys.shift;
        }
        CHECK((clock_pow - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((shift_pow - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("W(0,0) is the identity") {
    for (int d : {2, 3, 7}) {
        FiniteWeylSystem sys(d);
        CHECK((weyl_matrix(sys, 0, 0) - Mat::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("d=2 generators anticommute and match the involutions") {
    FiniteWeylSystem sys(2);
    const Mat a = weyl_matrix(sys, 1, 0);
    const Mat b = weyl_matrix(sys, 0, 1);
    CHECK((a - sys.clock).cwiseAbs().maxCoeff() == 0.0);
    CHECK((b - sys.shift).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a * b + b * a).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("d=3 product against a by-hand multiplication") {
    FiniteWeylSystem sys(3);
    const Mat lhs = weyl_matrix(sys, 1, 0) * weyl_matrix(sys, 0, 1);
    const Mat rhs = sys.tau * weyl_matrix(sys, 1, 1);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);

    // Direct 3x3 product of clock and shift, no phase conventions involved.
    Mat direct = sys.clock * sys.shift;
    CHECK((lhs - direct).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("composition law over integer labels, all pairs") {
    for (int d : {2, 3, 5}) {
        FiniteWeylSystem sys(d);
        double worst = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int a2 = 0; a2 < d; ++a2)
                    for (int b2 = 0; b2 < d; ++b2) {
                        const Mat lhs = weyl_matrix(sys, a, b) * weyl_matrix(sys, a2, b2);
                        const Mat rhs =
                            sigma_d(sys, a, b, a2, b2) * weyl_matrix(sys, a + a2, b + b2);
                        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
                    }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("label periodicity picks up the documented sign") {
    FiniteWeylSystem sys(2);
    CHECK((weyl_matrix(sys, 3, 1) + weyl_matrix(sys, 1, 1)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((weyl_matrix(sys, 2, 0) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("sigma_d satisfies the cocycle identity over integer labels") {
    for (int d : {2, 3, 4}) {
        FiniteWeylSystem sys(d);
        double worst = 0.0;
        for (long a = 0; a < d; ++a)
            for (long b = 0; b < d; ++b)
                for (long c = 0; c < d; ++c)
                    for (long e = 0; e < d; ++e) {
                        // x=(a,b), y=(b,c), z=(c,e) ranges over enough triples.
                        const Cplx lhs =
                            sigma_d(sys, a, b, b, c) * sigma_d(sys, a + b, b + c, c, e);
                        const Cplx rhs =
                            sigma_d(sys, a, b, b + c, c + e) * sigma_d(sys, b, c, c, e);
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
        CHECK(worst < 1e-13);
    }
}

TEST_CASE("generators are unitary") {
    for (int d : {2, 3, 5, 7}) {
        FiniteWeylSystem sys(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Mat w = weyl_matrix(sys, a, b);
                CHECK((w * w.adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
            }
    }
}

TEST_CASE("the labelled matrices span the full matrix algebra") {
    CHECK(span_dimension(FiniteWeylSystem(2)) == 4);
    CHECK(span_dimension(FiniteWeylSystem(3)) == 9);
    CHECK(span_dimension(FiniteWeylSystem(5)) == 25);
}

TEST_CASE("standard representation is irreducible, doubled copy is not") {
    for (int d : {2, 3}) {
        FiniteWeylSystem sys(d);
        const auto rep = standard_irrep(sys);
        CHECK(rep.dim() == d);
        CHECK(commutant(rep.generators()).size() == 1);

        const auto doubled = ModeRepresentation::standard(ModeModel{{d}, 0}, 1, 2);
        CHECK(commutant(doubled.generators()).size() == 4);
    }
}
