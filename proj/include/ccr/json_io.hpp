#pragma once

#include <json.hpp>

#include "ccr/host_action.hpp"
#include "ccr/ideals.hpp"
#include "ccr/symplectic.hpp"
#include "ccr/weyl_core.hpp"

namespace ccr {

// Stable machine-readable schemas: rationals as {"num", "den"}, complex
// numbers as [re, im], matrices row-major.  Keys are emitted in a fixed
// order so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json complex_to_json(const Cplx& c);
Cplx complex_from_json(const Json& j);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

Json form_to_json(const BilinearForm& form);
BilinearForm form_from_json(const Json& j);

Json rat_vector_to_json(const RatVector& v);
RatVector rat_vector_from_json(const Json& j);

Json weyl_element_to_json(const WeylElement& x);
WeylElement weyl_element_from_json(const Json& j);

Json sequence_to_json(const SequenceClass& s);
SequenceClass sequence_from_json(const Json& j);

Json tensor_to_json(const ElementaryTensor& t);
ElementaryTensor tensor_from_json(const Json& j);

Json polynomial_to_json(const TensorPolynomial& p);
TensorPolynomial polynomial_from_json(const Json& j);

Json model_to_json(const ModeModel& m);
ModeModel model_from_json(const Json& j);

}  // namespace ccr
