#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "ccr/tensor_algebra.hpp"

using namespace ccr;

namespace {

Mat random_matrix(std::mt19937_64& eng, Eigen::Index n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Cplx(gauss(eng), gauss(eng));
    return m;
}

Mat random_unitary_small(std::mt19937_64& eng, Eigen::Index n) {
    Eigen::HouseholderQR<Mat> qr(random_matrix(eng, n));
    return qr.householderQ();
}

SequenceClass random_sequence(std::mt19937_64& eng, int max_entry) {
    std::uniform_int_distribution<int> entry(1, max_entry);
    std::uniform_int_distribution<int> plen(0, 2);
    std::uniform_int_distribution<int> wlen(1, 3);
    std::vector<int> prefix(plen(eng)), period(wlen(eng));
    for (auto& e : prefix) e = entry(eng);
    for (auto& e : period) e = entry(eng);
    return SequenceClass(std::move(prefix), std::move(period));
}

const ModeModel kModel{{2, 3, 2, 3}, 2};

ElementaryTensor random_tensor(std::mt19937_64& eng, std::size_t max_head) {
    std::uniform_int_distribution<std::size_t> hlen(0, max_head);
    ElementaryTensor t;
    std::normal_distribution<double> gauss(0.0, 1.0);
    t.scalar = Cplx(gauss(eng), gauss(eng));
    const std::size_t h = hlen(eng);
    for (std::size_t j = 0; j < h; ++j) t.head.push_back(random_matrix(eng, kModel.dim(j)));
    t.tail = random_sequence(eng, 3);
    return t;
}

}  // namespace

TEST_CASE("mode model dims, defaults and clamping") {
    CHECK(kModel.dim(0) == 2);
    CHECK(kModel.dim(3) == 3);
    CHECK(kModel.dim(17) == 2);
    const ModeModel bounded{{2, 2}, 0};
    CHECK_THROWS_AS(bounded.dim(2), ModeRange);

    const Mat e = kModel.proj(1, 2);
    CHECK(e.rows() == 3);
    CHECK(std::abs(e.trace().real() - 2.0) == 0.0);
    // ranks above the dimension saturate at the identity
    CHECK((kModel.proj(0, 7) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("padding materializes tail projections without changing the class") {
    ElementaryTensor t;
    t.head.push_back(Mat::Identity(2, 2));
    t.tail = SequenceClass({1, 2}, {1});

    const ElementaryTensor same = pad(kModel, t, 1);
    CHECK(same.head.size() == 1);

    const ElementaryTensor wide = pad(kModel, t, 3);
    REQUIRE(wide.head.size() == 3);
    CHECK((wide.head[1] - kModel.proj(1, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((wide.head[2] - kModel.proj(2, 1)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(seq_equiv(wide.tail, t.tail));

    // pad composition collapses
    const ElementaryTensor twice = pad(kModel, pad(kModel, t, 2), 3);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK((twice.head[j] - wide.head[j]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("products multiply slots and meet the tails") {
    std::mt19937_64 eng(2);
    ElementaryTensor x, y;
    x.head.push_back(random_matrix(eng, 2));
    x.tail = random_sequence(eng, 3);
    y.head.push_back(random_matrix(eng, 2));
    y.tail = SequenceClass::ones();

    const ElementaryTensor xy = tensor_mul(kModel, x, y);
    CHECK((xy.head[0] - Mat(x.head[0] * y.head[0])).cwiseAbs().maxCoeff() == 0.0);
    CHECK(xy.tail == SequenceClass::ones());

    // nested projections: E_n E_1 = E_1
    const ElementaryTensor en = projector_tensor(SequenceClass::constant(2));
    const ElementaryTensor e1 = projector_tensor(SequenceClass::ones());
    const ElementaryTensor prod = tensor_mul(kModel, en, e1);
    CHECK(prod.tail == SequenceClass::ones());
    const ElementaryTensor padded = pad(kModel, prod, 2);
    CHECK((padded.head[0] - kModel.proj(0, 1)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("identity-slot tensor is a left unit on matching tails") {
    std::mt19937_64 eng(3);
    ElementaryTensor x;
    x.head.push_back(random_matrix(eng, 2));
    x.tail = SequenceClass::constant(2);
    ElementaryTensor one;
    one.head.push_back(Mat::Identity(2, 2));
    one.tail = SequenceClass::constant(2);
    const ElementaryTensor prod = tensor_mul(kModel, one, x);
    CHECK((prod.head[0] - x.head[0]).cwiseAbs().maxCoeff() == 0.0);
    CHECK(seq_equiv(prod.tail, x.tail));
}

TEST_CASE("class reduction matches the pointwise minimum") {
    std::mt19937_64 eng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const ElementaryTensor x = random_tensor(eng, 2);
        const ElementaryTensor y = random_tensor(eng, 2);
        const ElementaryTensor xy = tensor_mul(kModel, x, y);
        REQUIRE(!xy.is_zero());
        CHECK(xy.tail_class() == seq_min(x.tail, y.tail).class_representative());
        for (std::size_t i = 0; i < 30; ++i)
            CHECK(xy.tail.entry(i) == std::min(x.tail.entry(i), y.tail.entry(i)));
    }
}

TEST_CASE("vanishing slot products collapse to the canonical zero") {
    // E_1 on a 2-dim mode kills the complementary projection exactly.
    ElementaryTensor x, y;
    x.head.push_back(kModel.proj(0, 1));
    x.tail = SequenceClass::ones();
    y.head.push_back(Mat::Identity(2, 2) - kModel.proj(0, 1));
    y.tail = SequenceClass::ones();
    CHECK(tensor_mul(kModel, x, y).is_zero());

    TensorPolynomial p(x);
    const TensorPolynomial q(y);
    CHECK(poly_mul(kModel, p, q).is_zero());
}

TEST_CASE("tensor multiplication is associative slot for slot") {
    std::mt19937_64 eng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const ElementaryTensor x = random_tensor(eng, 2);
        const ElementaryTensor y = random_tensor(eng, 2);
        const ElementaryTensor z = random_tensor(eng, 2);
        const ElementaryTensor a = tensor_mul(kModel, tensor_mul(kModel, x, y), z);
        const ElementaryTensor b = tensor_mul(kModel, x, tensor_mul(kModel, y, z));
        REQUIRE(a.head.size() == b.head.size());
        CHECK(std::abs(a.scalar - b.scalar) < 1e-12);
        for (std::size_t j = 0; j < a.head.size(); ++j)
            CHECK((a.head[j] - b.head[j]).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(a.tail == b.tail);
    }
}

TEST_CASE("polynomials group terms by class and cancel to zero") {
    std::mt19937_64 eng(9);
    const ElementaryTensor t = random_tensor(eng, 2);
    TensorPolynomial p(t);
    CHECK(p.term_count() == 1);

    const TensorPolynomial zero = poly_add(p, poly_scale(p, -1.0));
    const Mat img = eval_on_modes(kModel, zero, 3);
    CHECK(img.cwiseAbs().maxCoeff() == 0.0);

    CHECK(poly_add(p, TensorPolynomial()).term_count() == 1);
}

TEST_CASE("star is involutive and anti-multiplicative") {
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 25; ++trial) {
        TensorPolynomial x, y;
        x.add_term(random_tensor(eng, 2));
        x.add_term(random_tensor(eng, 1));
        y.add_term(random_tensor(eng, 2));

        const TensorPolynomial twice = poly_star(poly_star(x));
        const Mat diff = eval_on_modes(kModel, poly_add(twice, poly_scale(x, -1.0)), 3);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-13);

        const TensorPolynomial lhs = poly_star(poly_mul(kModel, x, y));
        const TensorPolynomial rhs = poly_mul(kModel, poly_star(y), poly_star(x));
        const Mat gap = eval_on_modes(kModel, poly_add(lhs, poly_scale(rhs, -1.0)), 3);
        CHECK(gap.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("evaluation norm of a unitary-slot tensor is its scalar") {
    std::mt19937_64 eng(13);
    ElementaryTensor t;
    t.scalar = Cplx(0.4, -1.1);
    t.head.push_back(random_unitary_small(eng, 2));
    t.head.push_back(random_unitary_small(eng, 3));
    t.tail = SequenceClass::constant(2);
    CHECK(eval_norm(kModel, TensorPolynomial(t), 2) == doctest::Approx(std::abs(t.scalar)));
    CHECK(eval_norm(kModel, TensorPolynomial(t), 4) == doctest::Approx(std::abs(t.scalar)));
}

TEST_CASE("evaluation norm never decreases with the mode count") {
    std::mt19937_64 eng(15);
    for (int trial = 0; trial < 10; ++trial) {
        TensorPolynomial p;
        p.add_term(random_tensor(eng, 2));
        p.add_term(random_tensor(eng, 2));
        double prev = 0.0;
        for (std::size_t m = 2; m <= 4; ++m) {
            const double norm = eval_norm(kModel, p, m);
            CHECK(norm >= prev - 1e-11);
            prev = norm;
        }
    }
}

TEST_CASE("norm-one projector tensors of inequivalent classes sit at distance one") {
    const SequenceClass a = SequenceClass::ones();
    const SequenceClass b = SequenceClass::constant(2);
    TensorPolynomial diff(projector_tensor(a));
    diff = poly_add(diff, poly_scale(TensorPolynomial(projector_tensor(b)), -1.0));
    const std::size_t ell = separating_mode({a, b}, 0);
    CHECK(eval_norm(kModel, diff, ell) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projected families become linearly independent at the separating mode") {
    std::mt19937_64 eng(17);
    const ModeModel model{{}, 2};
    for (int family = 0; family < 10; ++family) {
        std::vector<SequenceClass> classes;
        while (classes.size() < 3) {
            SequenceClass cand = random_sequence(eng, 2);
            bool fresh = true;
            for (const auto& c : classes) fresh = fresh && !seq_equiv(c, cand);
            if (fresh) classes.push_back(std::move(cand));
        }
        std::vector<ElementaryTensor> tensors;
        std::size_t max_head = 0;
        for (const auto& cls : classes) {
            ElementaryTensor t;
            t.tail = cls;
            if (family % 2 == 0) {
                t.head.push_back(random_matrix(eng, 2));
                max_head = 1;
            }
            tensors.push_back(std::move(t));
        }
        const std::size_t ell = separating_mode(classes, max_head);
        const ElementaryTensor crush = unit_tail_projector(model, ell);

        Mat stacked;
        for (std::size_t k = 0; k < tensors.size(); ++k) {
            const Mat img =
                eval_on_modes(model, TensorPolynomial(tensor_mul(model, tensors[k], crush)), ell);
            if (stacked.size() == 0) stacked.resize(3, img.size());
            stacked.row(k) = Eigen::Map<const Eigen::VectorXcd>(img.data(), img.size()).transpose();
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(stacked * stacked.adjoint());
        CHECK(es.eigenvalues()(0) > 1e-12);
    }
}

TEST_CASE("evaluation rejects undersized mode counts") {
    std::mt19937_64 eng(19);
    ElementaryTensor t;
    t.head.push_back(random_matrix(eng, 2));
    t.head.push_back(random_matrix(eng, 3));
    CHECK_THROWS_AS(eval_on_modes(kModel, TensorPolynomial(t), 1), PreconditionViolation);
}
