#include "ccr/representation.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <random>

namespace ccr {

ModeRepresentation ModeRepresentation::standard(ModeModel model, std::size_t modes,
                                                int multiplicity) {
    ModeRepresentation rep;
    rep.model_ = std::move(model);
    rep.modes_ = modes;
    rep.multiplicity_ = multiplicity;
    for (std::size_t j = 0; j < modes; ++j) rep.model_.dim(j);  // validate
    return rep;
}

ModeRepresentation ModeRepresentation::conjugated(const Mat& unitary) const {
    if (compress_.size() != 0)
        throw PreconditionViolation("conjugate before compressing, not after");
    if (unitary.rows() != full_dim())
        throw DimensionMismatch("frame dimension mismatch");
    ModeRepresentation rep = *this;
    rep.frame_ = frame_.size() == 0 ? unitary : Mat(unitary * frame_);
    return rep;
}

ModeRepresentation ModeRepresentation::compressed(const Mat& projection) const {
    ModeRepresentation rep = *this;
    rep.compress_ = range_isometry(projection);
    return rep;
}

Eigen::Index ModeRepresentation::full_dim() const {
    Eigen::Index total = multiplicity_;
    for (std::size_t j = 0; j < modes_; ++j) total *= model_.dim(j);
    return total;
}

Eigen::Index ModeRepresentation::dim() const {
    return compress_.size() == 0 ? full_dim() : compress_.cols();
}

Mat ModeRepresentation::surround(const Mat& x) const {
    Mat out = x;
    if (frame_.size() != 0) out = frame_ * out * frame_.adjoint();
    if (compress_.size() != 0) out = compress_.adjoint() * out * compress_;
    return out;
}

Mat ModeRepresentation::head_image(const std::vector<Mat>& heads) const {
    if (heads.size() > modes_) throw ModeRange("head longer than the representation");
    Mat x = Mat::Identity(1, 1);
    for (std::size_t j = 0; j < modes_; ++j) {
        if (j < heads.size()) {
            if (heads[j].rows() != model_.dim(j))
                throw DimensionMismatch("head slot dimension mismatch");
            x = kron(x, heads[j]);
        } else {
            x = kron(x, model_.identity(j));
        }
    }
    if (multiplicity_ > 1) x = kron(x, Mat::Identity(multiplicity_, multiplicity_));
    return surround(x);
}

Mat ModeRepresentation::lift(std::size_t mode, const Mat& op) const {
    if (mode >= modes_) throw ModeRange("mode index beyond the representation");
    Mat x = Mat::Identity(1, 1);
    for (std::size_t j = 0; j < modes_; ++j)
        x = kron(x, j == mode ? op : Mat(model_.identity(j)));
    if (multiplicity_ > 1) x = kron(x, Mat::Identity(multiplicity_, multiplicity_));
    return surround(x);
}

Mat ModeRepresentation::weyl_image(std::size_t mode, long a, long b) const {
    FiniteWeylSystem sys(model_.dim(mode));
    return lift(mode, weyl_matrix(sys, a, b));
}

Mat ModeRepresentation::proj_image(std::size_t mode, int n) const {
    return lift(mode, model_.proj(mode, n));
}

std::vector<Mat> ModeRepresentation::generators() const {
    std::vector<Mat> gens;
    gens.reserve(2 * modes_);
    for (std::size_t j = 0; j < modes_; ++j) {
        gens.push_back(weyl_image(j, 1, 0));
        gens.push_back(weyl_image(j, 0, 1));
    }
    return gens;
}

ModeRepresentation standard_irrep(const FiniteWeylSystem& sys) {
    return ModeRepresentation::standard(ModeModel{{sys.d}, 0}, 1);
}

Mat range_isometry(const Mat& projection) {
    Eigen::SelfAdjointEigenSolver<Mat> es(projection);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    Mat iso(projection.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) iso.col(k) = es.eigenvectors().col(keep[k]);
    return iso;
}

Mat random_unitary(Eigen::Index n, unsigned long seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = Cplx(gauss(eng), gauss(eng));
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the draw is a function of the seed alone.
    for (Eigen::Index j = 0; j < n; ++j) {
        const Cplx d = r(j, j);
        if (d != 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace ccr
