#include <doctest.h>

#include <random>

#include "ccr/json_io.hpp"

using namespace ccr;

TEST_CASE("rationals and complex numbers round trip") {
    const Rational r(-7, 3);
    const Json j = rational_to_json(r);
    CHECK(j.at("num").get<long>() == -7);
    CHECK(j.at("den").get<long>() == 3);
    CHECK(rational_from_json(j) == r);
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(Json{{"num", 1}, {"den", 0}}), SchemaError);

    const Cplx c(1.5, -0.25);
    CHECK(complex_from_json(complex_to_json(c)) == c);
}

TEST_CASE("matrices round trip through row-major pairs") {
    Mat m(2, 2);
    m << Cplx(1, 2), Cplx(0, -1), Cplx(3, 0), Cplx(-2, 5);
    const Mat back = matrix_from_json(matrix_to_json(m));
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[ [1,0] ],[ [1,0],[2,0] ]]")), SchemaError);
}

TEST_CASE("forms round trip and stay antisymmetric") {
    const BilinearForm form = BilinearForm::canonical(2);
    const BilinearForm back = form_from_json(form_to_json(form));
    CHECK(back.dim() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(back.entry(i, j) == form.entry(i, j));

    Json bad = form_to_json(form);
    bad["entries"][0][1] = rational_to_json(Rational(2));
    CHECK_THROWS_AS(form_from_json(bad), SchemaError);
}

TEST_CASE("weyl elements round trip") {
    WeylElement x(2);
    x.add_term(rat_vector({1, 0}), Cplx(0.5, -1.0));
    x.add_term(rat_vector({0, 1}), Cplx(2.0, 0.0));
    const WeylElement back = weyl_element_from_json(weyl_element_to_json(x));
    CHECK(coeff_distance(x, back) == 0.0);
}

TEST_CASE("sequence classes canonicalize on input") {
    const Json j = Json{{"prefix", Json::array({5, 1})}, {"period", Json::array({1, 1})}};
    const SequenceClass s = sequence_from_json(j);
    CHECK(s.prefix() == std::vector<int>{5});
    CHECK(s.period() == std::vector<int>{1});
    CHECK_THROWS_AS(sequence_from_json(Json{{"prefix", Json::array()}, {"period", Json::array()}}),
                    SchemaError);
}

TEST_CASE("tensors and polynomials round trip") {
    std::mt19937_64 eng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ElementaryTensor t;
    t.scalar = Cplx(0.25, 1.0);
    Mat slot(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) slot(i, j) = Cplx(gauss(eng), gauss(eng));
    t.head.push_back(slot);
    t.tail = SequenceClass({2}, {1, 3});

    const ElementaryTensor back = tensor_from_json(tensor_to_json(t));
    CHECK(back.scalar == t.scalar);
    CHECK((back.head[0] - t.head[0]).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.tail == t.tail);

    TensorPolynomial p(t);
    p.add_term(projector_tensor(SequenceClass::ones()));
    const TensorPolynomial q = polynomial_from_json(polynomial_to_json(p));
    CHECK(q.term_count() == p.term_count());
    const ModeModel model{{2, 2}, 2};
    const Mat diff = eval_on_modes(model, poly_add(p, poly_scale(q, -1.0)), 2);
    CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mode models validate dimensions") {
    const ModeModel m = model_from_json(Json{{"dims", Json::array({2, 3})}, {"default_dim", 2}});
    CHECK(m.dim(0) == 2);
    CHECK(m.dim(5) == 2);
    CHECK_THROWS_AS(model_from_json(Json{{"dims", Json::array({1})}}), SchemaError);
}

TEST_CASE("reports serialize deterministically") {
    const BilinearForm form = BilinearForm::canonical(3);
    CHECK(form_to_json(form).dump() == form_to_json(form).dump());
}
