#pragma once

#include <utility>
#include <vector>

#include "ccr/representation.hpp"

namespace ccr {

// Integer lattice point of the mode-adapted symplectic space: one (a, b)
// pair per mode, finitely many nonzero.  These are the labels the finite
// Weyl backend can represent exactly.
struct WeylLabel {
    std::vector<std::pair<long, long>> comps;

    static WeylLabel zero() { return {}; }
    std::size_t support_end() const;  // one past the last nonzero mode
    WeylLabel operator+(const WeylLabel& other) const;
};

// Product over modes of the per-mode half-angle phases; the mode-adapted
// form pairs distinct modes to zero, so this is the full cocycle.
Cplx sigma_label(const ModeModel& model, const WeylLabel& s, const WeylLabel& t);

// Multiplier action of the Weyl generator labelled s, scaled by `phase`:
// every term is padded to cover the support of s and its slots are
// left-multiplied by the per-mode Weyl matrices.  Tail classes never change.
TensorPolynomial eta_act(const ModeModel& model, const WeylLabel& s, Cplx phase,
                         const TensorPolynomial& x);

struct LimitProjection {
    Mat matrix;
    // Smallest t with product(start..t-1) already equal to the full product;
    // the finite stand-in for a strong limit, reported so convergence claims
    // stay auditable.
    std::size_t stabilized_at;
};

// Product of the represented projections E_{n_j} over modes start..m-1.
LimitProjection limit_projection(const ModeRepresentation& rep, const SequenceClass& n,
                                 std::size_t start);

struct RegularityReport {
    bool regular;
    std::vector<Eigen::Index> ranks;  // rank of P_k for k = 0..m-1
    std::size_t stabilization_index;
};

// True iff some nonempty suffix product of represented projections is the
// identity, i.e. the increasing family P_k reaches 1 inside the model.
RegularityReport regularity_criterion(const ModeRepresentation& rep, const SequenceClass& n);

struct InducedRep {
    SequenceClass tail = SequenceClass::ones();
    std::vector<Mat> limit_projs;  // P_k for k = 0..m (P_m = identity)
    Mat essential;                 // P_0, the essential projection
    bool regular = false;          // criterion verdict on the base space
    std::size_t stabilization_index = 0;
};

// The representation induced from the class n.  A failing criterion yields a
// degenerate induced representation, returned with its essential projection
// rather than rejected.
InducedRep induce(const ModeRepresentation& rep, const SequenceClass& n);

// pi_0 applied to a polynomial: each term maps to (head image) * (limit
// projection of its own tail class from the head length onward).
Mat induced_apply(const ModeRepresentation& rep, const TensorPolynomial& x);
Mat induced_apply(const ModeRepresentation& rep, const ElementaryTensor& t);

// Image of the Weyl generator labelled s: the product of the per-mode images.
Mat weyl_label_image(const ModeRepresentation& rep, const WeylLabel& s);

}  // namespace ccr
