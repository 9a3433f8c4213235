#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ccr {

// Bosonic ladder truncated at N levels: a|k> = sqrt(k)|k-1>.  The commutator
// [a, a*] = 1 holds on the first N-1 basis vectors; the last row/column is
// where the truncation shows.
struct FockTruncation {
    int cutoff;
    Eigen::MatrixXcd annihilation;

    explicit FockTruncation(int n);
};

// Diagonal projection onto the first n basis vectors of an N-level space.
Eigen::MatrixXcd fock_projection(int cutoff, int n);

// D(z) = exp(z a* - conj(z) a); unitary up to truncation error, D(0) = 1
// exactly.  One complex mode z is identified with the symplectic pair so that
// B(z,w) = 2 Im(z conj(w)), which makes the composition phase equal
// e^{i B(z,w)/2} = e^{i Im(z conj(w))}.
Eigen::MatrixXcd displacement(std::complex<double> z, const FockTruncation& trunc);

std::complex<double> displacement_sigma(std::complex<double> z, std::complex<double> w);

// Operator norm of E_{N/2} (D(z)D(w) - sigma(z,w) D(z+w)) E_{N/2}; the
// compression window keeps the always-wrong top of the ladder out of the
// measurement.
double relation_error(std::complex<double> z, std::complex<double> w,
                      const FockTruncation& trunc);

double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace ccr
