#include "ccr/finite_weyl.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccr {

namespace {

// tau^e with the exponent reduced mod 2d exactly in integer arithmetic.
std::complex<double> tau_power(int d, long e) {
    const long period = 2L * d;
    long r = e % period;
    if (r < 0) r += period;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

long mod(long x, long d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

}  // namespace

FiniteWeylSystem::FiniteWeylSystem(int modulus) : d(modulus) {
    if (d < 2) throw std::invalid_argument("modulus must be >= 2");
    tau = tau_power(d, 1);
    omega = tau_power(d, 2);
    clock = Mat::Zero(d, d);
    shift = Mat::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        clock(k, k) = tau_power(d, 2L * k);
        shift((k + 1) % d, k) = 1.0;
    }
}

Mat weyl_matrix(const FiniteWeylSystem& sys, long a, long b) {
    const int d = sys.d;
    Mat w = Mat::Zero(d, d);
    // clock^a shift^b sends |k> to omega^{a(k+b)} |k+b>.
    for (long k = 0; k < d; ++k) {
        const long row = mod(k + b, d);
        w(row, k) = tau_power(d, 2L * a * row - a * b);
    }
    return w;
}

std::complex<double> sigma_d(const FiniteWeylSystem& sys, long a, long b, long a2, long b2) {
    return tau_power(sys.d, a * b2 - b * a2);
}

int span_dimension(const FiniteWeylSystem& sys) {
    const int d = sys.d;
    Eigen::MatrixXcd flat(d * d, d * d);
    int col = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat w = weyl_matrix(sys, a, b);
            flat.col(col++) = Eigen::Map<Eigen::VectorXcd>(w.data(), d * d);
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flat);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-9 * s(0)) ++rank;
    return rank;
}

}  // namespace ccr
