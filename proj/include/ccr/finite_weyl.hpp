#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ccr {

using Mat = Eigen::MatrixXcd;

// Discrete Weyl system on Z_d x Z_d.  tau = e^{i pi/d} is a primitive 2d-th
// root, so the half-angle phases below are well defined for even d too.
struct FiniteWeylSystem {
    int d;
    std::complex<double> tau;   // e^{i pi / d}
    std::complex<double> omega; // tau^2
    Mat clock;                  // diag(omega^k)
    Mat shift;                  // |k> -> |k+1 mod d>

    explicit FiniteWeylSystem(int modulus);
};

// W(a,b) = tau^{-ab} clock^a shift^b, defined for ALL integer labels; the
// matrix powers reduce mod d, the phase does not.  With this convention
//   W(a,b) W(a',b') = sigma_d((a,b),(a',b')) W(a+a', b+b')
// holds exactly over integer label addition.  Label periodicity is
// W(a+d, b) = (-1)^b W(a,b) and W(a, b+d) = (-1)^a W(a,b).
Mat weyl_matrix(const FiniteWeylSystem& sys, long a, long b);

// sigma_d((a,b),(a',b')) = tau^{a b' - b a'}.
std::complex<double> sigma_d(const FiniteWeylSystem& sys, long a, long b, long a2, long b2);

// Rank of {W(a,b) : 0 <= a,b < d} as vectors in d^2 dimensions; equals d^2
// (the twisted group algebra is the full matrix algebra).
int span_dimension(const FiniteWeylSystem& sys);

}  // namespace ccr
