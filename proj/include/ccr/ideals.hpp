#pragma once

#include <optional>
#include <vector>

#include "ccr/tensor_algebra.hpp"

namespace ccr {

// Ideal generated by the classes at or below any of the listed generators.
class IdealDescriptor {
public:
    explicit IdealDescriptor(std::vector<SequenceClass> generators);

    const std::vector<SequenceClass>& generators() const { return generators_; }

private:
    std::vector<SequenceClass> generators_;
};

// True iff q <= n_l for some generator n_l.
bool ideal_contains_class(const IdealDescriptor& ideal, const SequenceClass& q);

// Pointwise class reduction under products.
SequenceClass product_reduction(const SequenceClass& n, const SequenceClass& m);

struct DistanceResult {
    double distance;       // min over coefficient draws of the eval norm
    double norm_c;         // eval norm of C alone
    bool bound_satisfied;  // distance >= norm_c - tol
    std::vector<Cplx> lambda;
    std::optional<double> oracle_gap;  // |optimizer - grid| when the oracle ran
    std::size_t strict_slot;           // tail slot where C dominates every sample
};

struct DistanceOptions {
    std::size_t restarts = 32;
    std::size_t iterations = 500;
    double step = 0.3;  // step_t = step / sqrt(t)
    unsigned long seed = 1;
    double tolerance = 1e-6;
    bool run_grid_oracle = false;  // exhaustive grid, single-sample instances only
    double grid_lo = -2.0, grid_hi = 2.0, grid_step = 0.01;
};

// Distance from the elementary tensor C to the span of the samples, measured
// on the first m modes.  Requires class(C) strictly above every generator,
// every sample term inside the ideal, and a tail slot below m where C's
// projector strictly dominates every sample's (that slot makes the norm
// bound distance >= ||C|| effective at finite m).
DistanceResult distance_lower_bound(const ModeModel& model, const ElementaryTensor& C,
                                    const IdealDescriptor& ideal,
                                    const std::vector<TensorPolynomial>& samples,
                                    std::size_t m, const DistanceOptions& opt = {});

struct J1Certificate {
    SequenceClass reduced;  // min(n_j, extra)
    bool equals_generator;  // [reduced] == [n_j]
    bool equals_extra;      // [reduced] == [extra]
};

struct J1Verdict {
    bool proper;
    std::vector<J1Certificate> certificates;
    std::optional<std::size_t> witness;  // generator index refuting properness
};

// Semilattice argument: the product ideal J_1 could only fail to be proper if
// some reduction equals [extra] while every reduction equals its own
// generator, which forces [n_j] == [extra] and contradicts pairwise
// inequivalence.  Duplicate inputs are an error.
J1Verdict j1_properness(const std::vector<SequenceClass>& generators,
                        const SequenceClass& extra);

}  // namespace ccr
