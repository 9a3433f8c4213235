#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ccr/errors.hpp"
#include "ccr/rational.hpp"

namespace ccr {

// Nondegenerate antisymmetric bilinear form on Q^{2n}, exact entries.
class BilinearForm {
public:
    BilinearForm(std::size_t dim, RatMatrix entries);

    // Block-diagonal copies of [[0,1],[-1,0]]; coordinates pair up as
    // (p_1,q_1,p_2,q_2,...).
    static BilinearForm canonical(std::size_t pairs);

    std::size_t dim() const { return dim_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const RatMatrix& entries() const { return entries_; }

    Rational eval(const RatVector& v, const RatVector& w) const;

private:
    std::size_t dim_;
    RatMatrix entries_;
};

// Basis {p_i, q_i} with eval(p_i,q_j) = delta_ij and all other pairings zero.
struct DarbouxBasis {
    std::vector<RatVector> p;
    std::vector<RatVector> q;

    std::size_t pairs() const { return p.size(); }
};

// I with I p_n = q_n, I q_n = -p_n.  The positive symmetric form is
// (v,w) = B(v, Iw) and the hermitian form is <v,w> = (v,w) + i B(v,w).
struct ComplexStructure {
    RatMatrix matrix;

    RatVector apply(const RatVector& v) const;
};

// Inductive construction: pick the minimal basis vector outside the current
// span, make it B-orthogonal to everything chosen so far, then pair it with
// the minimal e_l it still couples to, rescaled so the pairing is 1.
DarbouxBasis darboux_basis(const BilinearForm& form);

ComplexStructure complex_structure(const BilinearForm& form, const DarbouxBasis& basis);

Rational symmetric_form(const BilinearForm& form, const ComplexStructure& I,
                        const RatVector& v, const RatVector& w);

std::complex<double> hermitian_form(const BilinearForm& form, const ComplexStructure& I,
                                    const RatVector& v, const RatVector& w);

// sigma(v,w) = e^{i B(v,w)/2}, unit modulus.
std::complex<double> cocycle_sigma(const BilinearForm& form, const RatVector& v,
                                   const RatVector& w);

// Exact rational helpers shared by the modules that manipulate coordinates.
namespace ratlin {

// Rank of a set of row vectors, exact.
std::size_t rank(const std::vector<RatVector>& rows);

// True if v lies in the span of the rows.
bool in_span(const std::vector<RatVector>& rows, const RatVector& v);

// Solve M x = v for square exact M; throws DegenerateForm if singular.
RatVector solve(const RatMatrix& m, const RatVector& v);

RatMatrix inverse(const RatMatrix& m);

Rational determinant(RatMatrix m);

}  // namespace ratlin

}  // namespace ccr
