#include "ccr/tensor_algebra.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace ccr {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

int ModeModel::dim(std::size_t mode) const {
    if (mode < dims.size()) return dims[mode];
    if (default_dim > 0) return default_dim;
    throw ModeRange("mode index beyond the model's dimensions");
}

Mat ModeModel::identity(std::size_t mode) const {
    const int d = dim(mode);
    return Mat::Identity(d, d);
}

Mat ModeModel::proj(std::size_t mode, int n) const {
    const int d = dim(mode);
    if (n < 1) throw std::invalid_argument("projection rank must be >= 1");
    Mat e = Mat::Zero(d, d);
    const int r = std::min(n, d);
    for (int k = 0; k < r; ++k) e(k, k) = 1.0;
    return e;
}

ElementaryTensor ElementaryTensor::zero() {
    ElementaryTensor t;
    t.scalar = 0.0;
    return t;
}

bool ElementaryTensor::is_zero() const {
    if (scalar == 0.0) return true;
    for (const auto& slot : head)
        if (slot.isZero(0.0)) return true;
    return false;
}

SequenceClass ElementaryTensor::tail_class() const { return tail.class_representative(); }

ElementaryTensor projector_tensor(const SequenceClass& tail) {
    ElementaryTensor t;
    t.tail = tail;
    return t;
}

ElementaryTensor unit_tail_projector(const ModeModel& model, std::size_t slots) {
    ElementaryTensor t;
    for (std::size_t j = 0; j < slots; ++j) t.head.push_back(model.identity(j));
    t.tail = SequenceClass::ones();
    return t;
}

ElementaryTensor pad(const ModeModel& model, const ElementaryTensor& t, std::size_t len) {
    ElementaryTensor out = t;
    for (std::size_t j = out.head.size(); j < len; ++j)
        out.head.push_back(model.proj(j, out.tail.entry(j)));
    return out;
}

ElementaryTensor tensor_mul(const ModeModel& model, const ElementaryTensor& x,
                            const ElementaryTensor& y) {
    if (x.is_zero() || y.is_zero()) return ElementaryTensor::zero();
    const std::size_t len = std::max(x.head.size(), y.head.size());
    ElementaryTensor a = pad(model, x, len);
    ElementaryTensor b = pad(model, y, len);

    ElementaryTensor out;
    out.scalar = a.scalar * b.scalar;
    out.head.reserve(len);
    for (std::size_t j = 0; j < len; ++j) {
        if (a.head[j].rows() != b.head[j].rows())
            throw DimensionMismatch("slot dimension mismatch");
        Mat prod = a.head[j] * b.head[j];
        if (prod.isZero(0.0)) return ElementaryTensor::zero();
        out.head.push_back(std::move(prod));
    }
    out.tail = seq_min(x.tail, y.tail);
    return out;
}

ElementaryTensor tensor_star(const ElementaryTensor& t) {
    ElementaryTensor out;
    out.scalar = std::conj(t.scalar);
    out.head.reserve(t.head.size());
    for (const auto& slot : t.head) out.head.push_back(slot.adjoint());
    out.tail = t.tail;
    return out;
}

std::size_t TensorPolynomial::term_count() const {
    std::size_t n = 0;
    for (const auto& [cls, list] : terms_) n += list.size();
    return n;
}

std::size_t TensorPolynomial::max_head() const {
    std::size_t n = 0;
    for (const auto& [cls, list] : terms_)
        for (const auto& t : list) n = std::max(n, t.head.size());
    return n;
}

void TensorPolynomial::add_term(const ElementaryTensor& t) {
    if (t.is_zero()) return;
    terms_[t.tail_class()].push_back(t);
}

TensorPolynomial poly_add(const TensorPolynomial& x, const TensorPolynomial& y) {
    TensorPolynomial out = x;
    for (const auto& [cls, list] : y.terms())
        for (const auto& t : list) out.add_term(t);
    return out;
}

TensorPolynomial poly_scale(const TensorPolynomial& x, Cplx c) {
    TensorPolynomial out;
    if (c == 0.0) return out;
    for (const auto& [cls, list] : x.terms())
        for (auto t : list) {
            t.scalar *= c;
            out.add_term(t);
        }
    return out;
}

TensorPolynomial poly_mul(const ModeModel& model, const TensorPolynomial& x,
                          const TensorPolynomial& y) {
    TensorPolynomial out;
    for (const auto& [cx, lx] : x.terms())
        for (const auto& [cy, ly] : y.terms())
            for (const auto& tx : lx)
                for (const auto& ty : ly) out.add_term(tensor_mul(model, tx, ty));
    return out;
}

TensorPolynomial poly_star(const TensorPolynomial& x) {
    TensorPolynomial out;
    for (const auto& [cls, list] : x.terms())
        for (const auto& t : list) out.add_term(tensor_star(t));
    return out;
}

Mat eval_on_modes(const ModeModel& model, const TensorPolynomial& x, std::size_t m) {
    if (m < x.max_head()) throw PreconditionViolation("mode count below maximal head length");
    Eigen::Index total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= model.dim(j);
    Mat acc = Mat::Zero(total, total);
    for (const auto& [cls, list] : x.terms())
        for (const auto& t : list) {
            ElementaryTensor padded = pad(model, t, m);
            Mat term = Mat::Identity(1, 1);
            for (std::size_t j = 0; j < m; ++j) term = kron(term, padded.head[j]);
            acc += padded.scalar * term;
        }
    return acc;
}

double eval_norm(const ModeModel& model, const TensorPolynomial& x, std::size_t m) {
    const Mat img = eval_on_modes(model, x, m);
    if (img.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(img);
    return svd.singularValues()(0);
}

}  // namespace ccr
