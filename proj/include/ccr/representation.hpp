#pragma once

#include <vector>

#include "ccr/finite_weyl.hpp"
#include "ccr/tensor_algebra.hpp"

namespace ccr {

// Concrete matrices for finitely many modes on (x)_j C^{d_j} (x) C^mult:
// per-mode Weyl generators, per-mode approximate-identity projections, and
// arbitrary head images, all conjugated by a frame unitary and optionally
// compressed to a subspace.  Head images stay multiplicative as long as the
// compressing projection commutes with the operators being consumed, which
// holds for the projection subalgebra used by the regularity machinery.
class ModeRepresentation {
public:
    static ModeRepresentation standard(ModeModel model, std::size_t modes,
                                       int multiplicity = 1);

    ModeRepresentation conjugated(const Mat& unitary) const;
    ModeRepresentation compressed(const Mat& projection) const;

    std::size_t modes() const { return modes_; }
    const ModeModel& model() const { return model_; }
    int multiplicity() const { return multiplicity_; }
    Eigen::Index dim() const;       // dimension of the (possibly compressed) space
    Eigen::Index full_dim() const;  // dimension before compression

    // pi(A_1 (x) ... (x) A_k (x) 1 (x) ...) for k <= modes().
    Mat head_image(const std::vector<Mat>& heads) const;

    // Image of the mode's Weyl generator W(a, b).
    Mat weyl_image(std::size_t mode, long a, long b) const;

    // Image of E_n on the mode.
    Mat proj_image(std::size_t mode, int n) const;

    // The per-mode Weyl generator images, e.g. for commutant computations.
    std::vector<Mat> generators() const;

private:
    ModeRepresentation() = default;

    Mat lift(std::size_t mode, const Mat& op) const;
    Mat surround(const Mat& x) const;

    ModeModel model_;
    std::size_t modes_ = 0;
    int multiplicity_ = 1;
    Mat frame_;     // empty means identity
    Mat compress_;  // empty means none; otherwise isometry full_dim x dim
};

// The defining irreducible representation of the finite Weyl system, as a
// one-mode representation of dimension d.
ModeRepresentation standard_irrep(const FiniteWeylSystem& sys);

// Orthonormal basis (isometry) of the range of a hermitian projection.
Mat range_isometry(const Mat& projection);

// Haar-ish random unitary from a seeded QR draw.
Mat random_unitary(Eigen::Index n, unsigned long seed);

}  // namespace ccr
