#include "ccr/battery.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "ccr/decompose.hpp"
#include "ccr/fock.hpp"
#include "ccr/host_action.hpp"
#include "ccr/ideals.hpp"
#include "ccr/symplectic.hpp"

namespace ccr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Rand {
    std::mt19937_64 eng;

    explicit Rand(unsigned long seed) : eng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    double gauss() { return std::normal_distribution<double>(0.0, 1.0)(eng); }

    Rational rational(int max_num, int max_den) {
        Rational r(integer(-max_num, max_num), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    RatVector rat_vector(std::size_t dim, int max_num, int max_den) {
        RatVector v(dim);
        for (auto& x : v) x = rational(max_num, max_den);
        return v;
    }

    BilinearForm antisymmetric_form(std::size_t dim, int max_entry) {
        RatMatrix m(dim, RatVector(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                m[i][j] = integer(-max_entry, max_entry);
                m[j][i] = -m[i][j];
            }
        return BilinearForm(dim, std::move(m));
    }

    BilinearForm nondegenerate_form(std::size_t dim, int max_entry) {
        for (;;) {
            BilinearForm form = antisymmetric_form(dim, max_entry);
            if (ratlin::determinant(form.entries()) != 0) return form;
        }
    }

    SequenceClass sequence(int max_entry, int max_prefix, int max_period) {
        std::vector<int> prefix(integer(0, max_prefix));
        std::vector<int> period(integer(1, max_period));
        for (auto& e : prefix) e = integer(1, max_entry);
        for (auto& e : period) e = integer(1, max_entry);
        return SequenceClass(std::move(prefix), std::move(period));
    }

    Mat matrix(Eigen::Index n) {
        Mat m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Cplx(gauss(), gauss());
        return m;
    }
};

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double min_eigenvalue(const Mat& hermitian) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
    return es.eigenvalues()(0);
}

CriterionResult cocycle_identity(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 * static_cast<std::size_t>(rnd.integer(1, 10));
        BilinearForm form = rnd.antisymmetric_form(dim, 3);
        const RatVector x = rnd.rat_vector(dim, 3, 3);
        const RatVector y = rnd.rat_vector(dim, 3, 3);
        const RatVector z = rnd.rat_vector(dim, 3, 3);
        const Cplx lhs = cocycle_sigma(form, x, y) * cocycle_sigma(form, add(x, y), z);
        const Cplx rhs = cocycle_sigma(form, x, add(y, z)) * cocycle_sigma(form, y, z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    const double elapsed = seconds_since(t0);
    return {"cocycle-identity", worst < 1e-12 && elapsed < 1.0, worst, 1e-12, elapsed,
            "1000 random rational triples, dims <= 20"};
}

CriterionResult darboux_exactness(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 1);
    bool exact = true;
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 * static_cast<std::size_t>(rnd.integer(1, 10));
        BilinearForm form = rnd.nondegenerate_form(dim, 5);
        DarbouxBasis basis = darboux_basis(form);
        const std::size_t n = basis.pairs();
        exact = exact && 2 * n == dim;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                exact = exact && form.eval(basis.p[i], basis.q[j]) == Rational(i == j ? 1 : 0);
                exact = exact && form.eval(basis.p[i], basis.p[j]) == 0;
                exact = exact && form.eval(basis.q[i], basis.q[j]) == 0;
                ++checked;
            }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "50 random nondegenerate forms, " << checked << " exact pairings";
    return {"darboux-exact-relations", exact && elapsed < 5.0, exact ? 0.0 : 1.0, 0.0, elapsed,
            detail.str()};
}

CriterionResult finite_weyl_relations(unsigned long) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    bool spans = true;
    for (int d : {2, 3, 5, 7}) {
        FiniteWeylSystem sys(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int a2 = 0; a2 < d; ++a2)
                    for (int b2 = 0; b2 < d; ++b2) {
                        const Mat lhs = weyl_matrix(sys, a, b) * weyl_matrix(sys, a2, b2);
                        const Mat rhs =
                            sigma_d(sys, a, b, a2, b2) * weyl_matrix(sys, a + a2, b + b2);
                        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
                    }
        spans = spans && span_dimension(sys) == d * d;
    }
    const double elapsed = seconds_since(t0);
    return {"finite-weyl-relations", worst < 1e-12 && spans && elapsed < 2.0, worst, 1e-12,
            elapsed, "all label pairs, d in {2,3,5,7}; span dimension d^2"};
}

CriterionResult fock_convergence(unsigned long) {
    const auto t0 = Clock::now();
    const Cplx z(1.0, 0.0), w(0.0, 1.0);
    std::vector<double> errs;
    for (int n : {16, 32, 64}) errs.push_back(relation_error(z, w, FockTruncation(n)));
    const bool monotone = errs[0] >= errs[1] && errs[1] >= errs[2];
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "errors " << format_double(errs[0]) << " -> " << format_double(errs[1]) << " -> "
           << format_double(errs[2]);
    return {"fock-truncation-convergence", monotone && errs[2] < 1e-6 && elapsed < 10.0, errs[2],
            1e-6, elapsed, detail.str()};
}

CriterionResult class_reduction(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 2);
    ModeModel model{{}, 3};
    bool all_equal = true;
    for (int trial = 0; trial < 200; ++trial) {
        ElementaryTensor x, y;
        x.tail = rnd.sequence(5, 3, 4);
        y.tail = rnd.sequence(5, 3, 4);
        const auto hx = static_cast<std::size_t>(rnd.integer(0, 2));
        const auto hy = static_cast<std::size_t>(rnd.integer(0, 2));
        for (std::size_t j = 0; j < hx; ++j) x.head.push_back(rnd.matrix(model.dim(j)));
        for (std::size_t j = 0; j < hy; ++j) y.head.push_back(rnd.matrix(model.dim(j)));
        const ElementaryTensor prod = tensor_mul(model, x, y);
        all_equal = all_equal && !prod.is_zero() &&
                    prod.tail_class() == seq_min(x.tail, y.tail).class_representative();
        // Entrywise oracle over a long window, independent of the meet.
        for (std::size_t j = 0; j < 48; ++j)
            all_equal = all_equal &&
                        prod.tail.entry(j) == std::min(x.tail.entry(j), y.tail.entry(j));
    }
    const double elapsed = seconds_since(t0);
    return {"class-reduction", all_equal, all_equal ? 0.0 : 1.0, 0.0, elapsed,
            "class(product) == pointwise min on 200 random pairs, exact"};
}

CriterionResult directness(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 3);
    ModeModel model{{}, 2};
    bool all_full_rank = true;
    for (int family = 0; family < 20; ++family) {
        const int count = rnd.integer(2, 4);
        std::vector<SequenceClass> classes;
        while (static_cast<int>(classes.size()) < count) {
            SequenceClass cand = rnd.sequence(2, 2, 3);
            bool fresh = true;
            for (const auto& c : classes) fresh = fresh && !seq_equiv(c, cand);
            if (fresh) classes.push_back(std::move(cand));
        }
        std::vector<ElementaryTensor> tensors;
        std::size_t max_head = 0;
        for (const auto& cls : classes) {
            ElementaryTensor t;
            t.tail = cls;
            const auto h = static_cast<std::size_t>(rnd.integer(0, 2));
            for (std::size_t j = 0; j < h; ++j) t.head.push_back(rnd.matrix(model.dim(j)));
            max_head = std::max(max_head, h);
            tensors.push_back(std::move(t));
        }
        const std::size_t ell = separating_mode(classes, max_head);
        const ElementaryTensor crush = unit_tail_projector(model, ell);

        Mat stacked(count, 0);
        for (int k = 0; k < count; ++k) {
            const ElementaryTensor projected = tensor_mul(model, tensors[k], crush);
            const Mat img = eval_on_modes(model, TensorPolynomial(projected), ell);
            if (stacked.cols() == 0) stacked.resize(count, img.size());
            stacked.row(k) =
                Eigen::Map<const Eigen::VectorXcd>(img.data(), img.size()).transpose();
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(stacked * stacked.adjoint());
        const double scale = es.eigenvalues()(count - 1);
        int rank = 0;
        for (Eigen::Index i = 0; i < count; ++i)
            if (es.eigenvalues()(i) > 1e-16 * std::max(scale, 1.0)) ++rank;
        all_full_rank = all_full_rank && rank == count;
    }
    const double elapsed = seconds_since(t0);
    return {"direct-sum-independence", all_full_rank, all_full_rank ? 0.0 : 1.0, 0.0, elapsed,
            "20 families; rank after the separating projection equals family size"};
}

CriterionResult ideal_distance(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 4);
    bool all_bounds = true;
    bool all_oracle = true;
    double worst_defect = 0.0;
    double worst_gap = 0.0;

    const std::vector<std::vector<int>> dim_choices = {
        {2, 2, 2}, {3, 3}, {2, 3, 2}, {4, 4}, {2, 2, 2, 2}};

    for (int inst = 0; inst < 20; ++inst) {
        ModeModel model{dim_choices[static_cast<std::size_t>(inst) % dim_choices.size()], 0};
        const std::size_t m = model.dims.size();

        std::vector<SequenceClass> gens = {SequenceClass::ones()};
        // A second generator needs a later even slot to stay admissible.
        if (inst % 3 == 0 && m >= 3) gens.push_back(SequenceClass({}, {1, 2}));
        IdealDescriptor ideal(gens);

        ElementaryTensor c;
        c.tail = SequenceClass::constant(inst % 2 == 0 ? 2 : 3);
        if (inst % 4 == 1) c.head.push_back(rnd.matrix(model.dim(0)));
        if (inst % 4 == 2) {
            c.scalar = Cplx(rnd.gauss(), rnd.gauss());
            if (c.scalar == 0.0) c.scalar = 1.0;
        }

        // Oracle-bearing single-sample instances live on the small models so
        // the exhaustive grid stays inside the runtime budget.
        const int sample_count = inst % 5 <= 1 ? 1 : 2 + inst % 2;
        std::vector<TensorPolynomial> samples;
        for (int s = 0; s < sample_count; ++s) {
            TensorPolynomial poly;
            const int terms = 1 + rnd.integer(0, 1);
            for (int t = 0; t < terms; ++t) {
                ElementaryTensor tensor;
                tensor.tail = gens[static_cast<std::size_t>(rnd.integer(0, 1)) % gens.size()];
                const auto h = static_cast<std::size_t>(rnd.integer(0, 1));
                for (std::size_t j = 0; j < h; ++j) tensor.head.push_back(rnd.matrix(model.dim(j)));
                poly.add_term(tensor);
            }
            samples.push_back(std::move(poly));
        }

        DistanceOptions opt;
        opt.seed = seed + 100 + static_cast<unsigned long>(inst);
        opt.run_grid_oracle = sample_count == 1;
        const DistanceResult res = distance_lower_bound(model, c, ideal, samples, m, opt);

        worst_defect = std::max(worst_defect, res.norm_c - res.distance);
        all_bounds = all_bounds && res.bound_satisfied;
        if (res.oracle_gap) {
            worst_gap = std::max(worst_gap, *res.oracle_gap);
            all_oracle = all_oracle && *res.oracle_gap < 1e-3;
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "20 instances; worst bound defect " << format_double(worst_defect)
           << ", worst oracle gap " << format_double(worst_gap);
    return {"ideal-distance-bound", all_bounds && all_oracle && elapsed < 60.0, worst_defect,
            1e-6, elapsed, detail.str()};
}

CriterionResult induced_round_trip(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 5);
    ModeModel model{{3, 2}, 0};
    const auto rep = ModeRepresentation::standard(model, 2);
    const SequenceClass cls({}, {2});  // entries (2,2): full on mode 1, proper on mode 0

    const RegularityReport reg = regularity_criterion(rep, cls);
    bool ok = reg.regular;
    double worst = 0.0;

    auto random_poly = [&](int max_terms) {
        TensorPolynomial poly;
        const int terms = 1 + rnd.integer(0, max_terms - 1);
        for (int t = 0; t < terms; ++t) {
            ElementaryTensor tensor;
            tensor.scalar = Cplx(rnd.gauss(), rnd.gauss());
            tensor.tail = rnd.sequence(3, 1, 2);
            const auto h = static_cast<std::size_t>(rnd.integer(0, 2));
            for (std::size_t j = 0; j < h; ++j) tensor.head.push_back(rnd.matrix(model.dim(j)));
            poly.add_term(tensor);
        }
        return poly;
    };

    for (int trial = 0; trial < 20; ++trial) {
        const TensorPolynomial x = random_poly(2);
        const TensorPolynomial y = random_poly(2);
        const Mat lhs = induced_apply(rep, poly_mul(model, x, y));
        const Mat rhs = induced_apply(rep, x) * induced_apply(rep, y);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }

    for (int trial = 0; trial < 10; ++trial) {
        ElementaryTensor t;
        t.head.push_back(rnd.matrix(model.dim(0)));
        t.tail = cls;
        const Mat unpadded = induced_apply(rep, t);
        const Mat padded = induced_apply(rep, pad(model, t, 2));
        worst = std::max(worst, (unpadded - padded).cwiseAbs().maxCoeff());
    }

    const InducedRep ind = induce(rep, cls);
    for (int trial = 0; trial < 10; ++trial) {
        WeylLabel s;
        s.comps = {{rnd.integer(0, 2), rnd.integer(0, 2)}, {rnd.integer(0, 1), rnd.integer(0, 1)}};
        const Mat via_eta =
            induced_apply(rep, eta_act(model, s, 1.0, TensorPolynomial(projector_tensor(cls))));
        const Mat direct = weyl_label_image(rep, s) * ind.essential;
        worst = std::max(worst, (via_eta - direct).cwiseAbs().maxCoeff());
    }

    ok = ok && worst < 1e-10;
    const double elapsed = seconds_since(t0);
    return {"induced-representation-round-trip", ok, worst, 1e-10, elapsed,
            "multiplicativity, padding consistency, multiplier action recovery"};
}

CriterionResult regularity_discrimination(unsigned long) {
    const auto t0 = Clock::now();
    ModeModel model{{2, 2}, 0};
    const auto rep = ModeRepresentation::standard(model, 2);
    const SequenceClass ones = SequenceClass::ones();
    const SequenceClass full({}, {2});

    const RegularityReport fail = regularity_criterion(rep, ones);
    const RegularityReport pass_full = regularity_criterion(rep, full);

    const Mat bottom = limit_projection(rep, ones, 0).matrix;
    const RegularityReport pass_compressed =
        regularity_criterion(rep.compressed(bottom), ones);

    const bool ok = !fail.regular && fail.ranks[0] == 1 && pass_full.regular &&
                    pass_compressed.regular;
    const double elapsed = seconds_since(t0);
    return {"regularity-discrimination", ok, ok ? 0.0 : 1.0, 0.0, elapsed,
            "fails for bottom class, passes for full class and compressed rep"};
}

CriterionResult decomposition(unsigned long seed) {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    for (int caseno = 0; caseno < 10; ++caseno) {
        const int d = caseno % 2 == 0 ? 2 : 3;
        const int copies = 1 + caseno % 3;
        FiniteWeylSystem sys(d);
        const Eigen::Index n = static_cast<Eigen::Index>(d) * copies;

        std::vector<Mat> gens;
        for (auto [a, b] : {std::pair<int, int>{1, 0}, {0, 1}}) {
            Mat g = Mat::Zero(n, n);
            for (int c = 0; c < copies; ++c) g.block(c * d, c * d, d, d) = weyl_matrix(sys, a, b);
            gens.push_back(std::move(g));
        }
        const Mat u = random_unitary(n, seed + 77 + static_cast<unsigned long>(caseno));
        for (auto& g : gens) g = u * g * u.adjoint();

        const DecompositionReport report =
            decompose(gens, seed + 200 + static_cast<unsigned long>(caseno));
        ok = ok && static_cast<int>(report.blocks.size()) == copies;
        for (const auto& block : report.blocks) {
            ok = ok && block.commutant_dimension == 1;
            ok = ok && block.equivalence_class == 0;
        }
        for (std::size_t i = 0; i < report.blocks.size(); ++i) {
            const auto& v = report.intertwiners[i];
            const auto& rep_block = report.blocks.front();
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const double resid =
                    (v * report.blocks[i].generators[k] - rep_block.generators[k] * v)
                        .cwiseAbs()
                        .maxCoeff();
                worst = std::max(worst, resid);
            }
        }
        worst = std::max(worst, report.reconstruction_error);
        ok = ok && report.gram_error < 1e-10;
    }
    ok = ok && worst < 1e-8;
    const double elapsed = seconds_since(t0);
    return {"decomposition", ok && elapsed < 30.0, worst, 1e-8, elapsed,
            "10 seeded conjugated direct sums, d in {2,3}, multiplicity 1..3"};
}

CriterionResult monotonicity(unsigned long seed) {
    const auto t0 = Clock::now();
    Rand rnd(seed + 6);
    double worst = 0.0;
    for (int config = 0; config < 50; ++config) {
        const std::size_t modes = static_cast<std::size_t>(rnd.integer(2, 3));
        ModeModel model;
        for (std::size_t j = 0; j < modes; ++j) model.dims.push_back(rnd.integer(2, 4));
        auto rep = ModeRepresentation::standard(model, modes);
        if (config % 2 == 1)
            rep = rep.conjugated(
                random_unitary(rep.dim(), seed + 300 + static_cast<unsigned long>(config)));

        const SequenceClass upper = rnd.sequence(4, 2, 3);
        const SequenceClass lower = seq_min(upper, rnd.sequence(4, 2, 3));

        for (std::size_t k = 0; k + 1 <= modes; ++k) {
            const Mat pk = limit_projection(rep, upper, k).matrix;
            const Mat pk1 = limit_projection(rep, upper, k + 1).matrix;
            worst = std::max(worst, -min_eigenvalue(pk1 - pk));
        }
        const Mat en = limit_projection(rep, lower, 0).matrix;
        const Mat em = limit_projection(rep, upper, 0).matrix;
        worst = std::max(worst, -min_eigenvalue(em - en));
    }
    const double elapsed = seconds_since(t0);
    return {"projection-monotonicity", worst < 1e-12, worst, 1e-12, elapsed,
            "50 random configurations; suffix products and class order"};
}

}  // namespace

std::vector<CriterionResult> run_battery(unsigned long seed) {
    return {
        cocycle_identity(seed),
        darboux_exactness(seed),
        finite_weyl_relations(seed),
        fock_convergence(seed),
        class_reduction(seed),
        directness(seed),
        ideal_distance(seed),
        induced_round_trip(seed),
        regularity_discrimination(seed),
        decomposition(seed),
        monotonicity(seed),
    };
}

}  // namespace ccr
