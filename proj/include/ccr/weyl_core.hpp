#pragma once

#include <complex>
#include <map>
#include <set>

#include "ccr/symplectic.hpp"

namespace ccr {

// Finitely supported complex combination of the generators delta_s, s in Q^d.
// Canonical form never stores a coefficient equal to zero.
class WeylElement {
public:
    using Coeff = std::complex<double>;
    using Terms = std::map<RatVector, Coeff>;

    explicit WeylElement(std::size_t dim) : dim_(dim) {}

    static WeylElement generator(RatVector s, Coeff c = 1.0);
    static WeylElement identity(std::size_t dim);  // delta_0

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const RatVector& s, Coeff c);

    WeylElement operator+(const WeylElement& other) const;
    WeylElement operator-(const WeylElement& other) const;
    WeylElement scaled(Coeff c) const;

private:
    std::size_t dim_;
    Terms terms_;
};

// Bilinear extension of delta_f delta_g = sigma(f,g) delta_{f+g}.
WeylElement weyl_mul(const BilinearForm& form, const WeylElement& x, const WeylElement& y);

// Conjugate-linear extension of delta_f -> delta_{-f}.
WeylElement weyl_star(const WeylElement& x);

// Modes (0-based) in which some support vector has a nonzero Darboux
// component.  Components are read off exactly: a_j = B(s, q_j), b_j = B(p_j, s).
std::set<std::size_t> mode_support(const BilinearForm& form, const DarbouxBasis& basis,
                                   const WeylElement& x);

// Largest coefficient difference between two elements, for tolerance checks.
double coeff_distance(const WeylElement& x, const WeylElement& y);

}  // namespace ccr
