#include "ccr/fock.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace ccr {

FockTruncation::FockTruncation(int n) : cutoff(n) {
    if (n < 2) throw std::invalid_argument("cutoff must be >= 2");
    annihilation = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) annihilation(k - 1, k) = std::sqrt(static_cast<double>(k));
}

Eigen::MatrixXcd fock_projection(int cutoff, int n) {
    if (n < 0 || n > cutoff) throw std::out_of_range("projection rank out of range");
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int k = 0; k < n; ++k) e(k, k) = 1.0;
    return e;
}

Eigen::MatrixXcd displacement(std::complex<double> z, const FockTruncation& trunc) {
    const int n = trunc.cutoff;
    if (z == 0.0) return Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd gen = z * trunc.annihilation.adjoint() - std::conj(z) * trunc.annihilation;
    return gen.exp();
}

std::complex<double> displacement_sigma(std::complex<double> z, std::complex<double> w) {
    return std::polar(1.0, std::imag(z * std::conj(w)));
}

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

double relation_error(std::complex<double> z, std::complex<double> w,
                      const FockTruncation& trunc) {
    const Eigen::MatrixXcd lhs = displacement(z, trunc) * displacement(w, trunc);
    const Eigen::MatrixXcd rhs = displacement_sigma(z, w) * displacement(z + w, trunc);
    const Eigen::MatrixXcd window = fock_projection(trunc.cutoff, trunc.cutoff / 2);
    return operator_norm(window * (lhs - rhs) * window);
}

}  // namespace ccr
