#include "ccr/json_io.hpp"

namespace ccr {

namespace {

const Json& expect(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::overflow_error("rational too large for the wire format");
    return Json{{"num", r.get_num().get_si()}, {"den", r.get_den().get_si()}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    const long num = expect(j, "num").get<long>();
    const long den = expect(j, "den").get<long>();
    if (den == 0) throw SchemaError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Json complex_to_json(const Cplx& c) { return Json::array({c.real(), c.imag()}); }

Cplx complex_from_json(const Json& j) {
    if (j.is_number()) return Cplx(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2) throw SchemaError("complex numbers are [re, im]");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Mat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[r].size()) != cols)
            throw SchemaError("ragged matrix rows");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

Json rat_vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(rational_to_json(r));
    return out;
}

RatVector rat_vector_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("vector must be an array");
    RatVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json form_to_json(const BilinearForm& form) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < form.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < form.dim(); ++j) row.push_back(rational_to_json(form.entry(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"dim", form.dim()}, {"entries", std::move(entries)}};
}

BilinearForm form_from_json(const Json& j) {
    const auto dim = expect(j, "dim").get<std::size_t>();
    const Json& entries = expect(j, "entries");
    if (!entries.is_array() || entries.size() != dim) throw SchemaError("entries/dim mismatch");
    RatMatrix m(dim, RatVector(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        if (entries[r].size() != dim) throw SchemaError("entries/dim mismatch");
        for (std::size_t c = 0; c < dim; ++c) m[r][c] = rational_from_json(entries[r][c]);
    }
    try {
        return BilinearForm(dim, std::move(m));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Json weyl_element_to_json(const WeylElement& x) {
    Json terms = Json::array();
    for (const auto& [s, c] : x.terms())
        terms.push_back(Json{{"vector", rat_vector_to_json(s)}, {"coeff", complex_to_json(c)}});
    return Json{{"dim", x.dim()}, {"terms", std::move(terms)}};
}

WeylElement weyl_element_from_json(const Json& j) {
    WeylElement x(expect(j, "dim").get<std::size_t>());
    for (const auto& term : expect(j, "terms"))
        x.add_term(rat_vector_from_json(expect(term, "vector")),
                   complex_from_json(expect(term, "coeff")));
    return x;
}

Json sequence_to_json(const SequenceClass& s) {
    return Json{{"prefix", s.prefix()}, {"period", s.period()}};
}

SequenceClass sequence_from_json(const Json& j) {
    try {
        return SequenceClass(expect(j, "prefix").get<std::vector<int>>(),
                             expect(j, "period").get<std::vector<int>>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Json tensor_to_json(const ElementaryTensor& t) {
    Json head = Json::array();
    for (const auto& slot : t.head) head.push_back(matrix_to_json(slot));
    return Json{{"scalar", complex_to_json(t.scalar)},
                {"head", std::move(head)},
                {"tail", sequence_to_json(t.tail)}};
}

ElementaryTensor tensor_from_json(const Json& j) {
    ElementaryTensor t;
    t.scalar = complex_from_json(expect(j, "scalar"));
    for (const auto& slot : expect(j, "head")) t.head.push_back(matrix_from_json(slot));
    t.tail = sequence_from_json(expect(j, "tail"));
    return t;
}

Json polynomial_to_json(const TensorPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [cls, list] : p.terms())
        for (const auto& t : list) terms.push_back(tensor_to_json(t));
    return terms;
}

TensorPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("polynomial must be an array of tensors");
    TensorPolynomial p;
    for (const auto& t : j) p.add_term(tensor_from_json(t));
    return p;
}

Json model_to_json(const ModeModel& m) {
    return Json{{"dims", m.dims}, {"default_dim", m.default_dim}};
}

ModeModel model_from_json(const Json& j) {
    ModeModel m;
    m.dims = expect(j, "dims").get<std::vector<int>>();
    if (j.contains("default_dim")) m.default_dim = j.at("default_dim").get<int>();
    for (int d : m.dims)
        if (d < 2) throw SchemaError("mode dimensions must be >= 2");
    return m;
}

}  // namespace ccr
