#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "ccr/errors.hpp"
#include "ccr/sequence.hpp"

namespace ccr {

using Mat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

Mat kron(const Mat& a, const Mat& b);

// Per-mode Hilbert dimensions together with the nested approximate-identity
// projections E_n = diag(1,...,1,0,...,0).  Finitely many dimensions are
// explicit; default_dim (when positive) applies to every mode beyond them.
struct ModeModel {
    std::vector<int> dims;
    int default_dim = 0;

    int dim(std::size_t mode) const;
    Mat identity(std::size_t mode) const;
    // E_n on the given mode; ranks above the mode dimension clamp to the
    // identity, the strict limit of the growing projections.
    Mat proj(std::size_t mode, int n) const;
};

// scalar * A_1 (x) ... (x) A_k (x) E_{n_{k+1}} (x) E_{n_{k+2}} (x) ...
// The tail sequence is indexed by absolute mode position; entries below the
// head length are inert.
struct ElementaryTensor {
    Cplx scalar{1.0, 0.0};
    std::vector<Mat> head;
    SequenceClass tail = SequenceClass::ones();

    static ElementaryTensor zero();
    bool is_zero() const;

    // Purely periodic representative of the tail's ~-class.
    SequenceClass tail_class() const;
};

// All-projector element E[n]_1 (empty head).
ElementaryTensor projector_tensor(const SequenceClass& tail);

// 1 (x) ... (x) 1 (x) E[1]_{slots+1}: 'slots' identity factors, then the
// bottom tail.  Right-multiplication by it crushes tails to rank one.
ElementaryTensor unit_tail_projector(const ModeModel& model, std::size_t slots);

// Materialize tail entries into head slots up to head length 'len'; the tail
// class is unchanged and pad(pad(t, j), k) == pad(t, k) for j <= k.
ElementaryTensor pad(const ModeModel& model, const ElementaryTensor& t, std::size_t len);

// Slotwise product after padding to a common head length; the resulting tail
// is the pointwise min of the tails.  A slot product that vanishes exactly
// collapses the whole term to the canonical zero.
ElementaryTensor tensor_mul(const ModeModel& model, const ElementaryTensor& x,
                            const ElementaryTensor& y);

ElementaryTensor tensor_star(const ElementaryTensor& t);

// Finite sum of elementary tensors grouped by tail class.
class TensorPolynomial {
public:
    using TermMap = std::map<SequenceClass, std::vector<ElementaryTensor>>;

    TensorPolynomial() = default;
    explicit TensorPolynomial(const ElementaryTensor& t) { add_term(t); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const;
    std::size_t max_head() const;

    void add_term(const ElementaryTensor& t);

private:
    TermMap terms_;
};

TensorPolynomial poly_add(const TensorPolynomial& x, const TensorPolynomial& y);
TensorPolynomial poly_scale(const TensorPolynomial& x, Cplx c);
TensorPolynomial poly_mul(const ModeModel& model, const TensorPolynomial& x,
                          const TensorPolynomial& y);
TensorPolynomial poly_star(const TensorPolynomial& x);

// Image of the polynomial on the first m modes.  The reference vector of
// every further mode sits inside the bottom projection, so the dropped tail
// contributes factor 1 and the resulting operator norm is a lower bound for
// the norm of x, nondecreasing in m.
Mat eval_on_modes(const ModeModel& model, const TensorPolynomial& x, std::size_t m);

double eval_norm(const ModeModel& model, const TensorPolynomial& x, std::size_t m);

}  // namespace ccr
