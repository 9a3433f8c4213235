#include "ccr/host_action.hpp"

namespace ccr {

std::size_t WeylLabel::support_end() const {
    std::size_t end = 0;
    for (std::size_t j = 0; j < comps.size(); ++j)
        if (comps[j].first != 0 || comps[j].second != 0) end = j + 1;
    return end;
}

WeylLabel WeylLabel::operator+(const WeylLabel& other) const {
    WeylLabel out;
    out.comps.resize(std::max(comps.size(), other.comps.size()), {0, 0});
    for (std::size_t j = 0; j < out.comps.size(); ++j) {
        if (j < comps.size()) {
            out.comps[j].first += comps[j].first;
            out.comps[j].second += comps[j].second;
        }
        if (j < other.comps.size()) {
            out.comps[j].first += other.comps[j].first;
            out.comps[j].second += other.comps[j].second;
        }
    }
    return out;
}

Cplx sigma_label(const ModeModel& model, const WeylLabel& s, const WeylLabel& t) {
    Cplx phase = 1.0;
    const std::size_t n = std::max(s.comps.size(), t.comps.size());
    for (std::size_t j = 0; j < n; ++j) {
        const auto [a, b] = j < s.comps.size() ? s.comps[j] : std::pair<long, long>{0, 0};
        const auto [a2, b2] = j < t.comps.size() ? t.comps[j] : std::pair<long, long>{0, 0};
        if ((a == 0 && b == 0) || (a2 == 0 && b2 == 0)) continue;
        FiniteWeylSystem sys(model.dim(j));
        phase *= sigma_d(sys, a, b, a2, b2);
    }
    return phase;
}

TensorPolynomial eta_act(const ModeModel& model, const WeylLabel& s, Cplx phase,
                         const TensorPolynomial& x) {
    const std::size_t cover = s.support_end();
    TensorPolynomial out;
    for (const auto& [cls, list] : x.terms())
        for (const auto& term : list) {
            ElementaryTensor t = pad(model, term, std::max(cover, term.head.size()));
            t.scalar *= phase;
            for (std::size_t j = 0; j < cover; ++j) {
                const auto [a, b] = s.comps[j];
                if (a == 0 && b == 0) continue;
                FiniteWeylSystem sys(model.dim(j));
                t.head[j] = weyl_matrix(sys, a, b) * t.head[j];
            }
            out.add_term(t);
        }
    return out;
}

LimitProjection limit_projection(const ModeRepresentation& rep, const SequenceClass& n,
                                 std::size_t start) {
    const std::size_t m = rep.modes();
    if (start > m) throw ModeRange("start mode beyond the representation");
    Mat prod = Mat::Identity(rep.dim(), rep.dim());
    std::size_t stabilized = start;
    for (std::size_t j = start; j < m; ++j) {
        Mat next = prod * rep.proj_image(j, n.entry(j));
        if (!next.isApprox(prod, 1e-12)) stabilized = j + 1;
        prod = std::move(next);
    }
    return {std::move(prod), stabilized};
}

namespace {

Eigen::Index projection_rank(const Mat& p) {
    // Eigenvalues of these products are numerically clean 0s and 1s.
    return static_cast<Eigen::Index>(std::llround(p.trace().real()));
}

}  // namespace

RegularityReport regularity_criterion(const ModeRepresentation& rep, const SequenceClass& n) {
    RegularityReport report;
    report.stabilization_index = rep.modes();
    const Eigen::Index full = rep.dim();
    bool regular = false;
    for (std::size_t k = 0; k < rep.modes(); ++k) {
        LimitProjection pk = limit_projection(rep, n, k);
        report.ranks.push_back(projection_rank(pk.matrix));
        if (k == 0) report.stabilization_index = pk.stabilized_at;
        if (report.ranks.back() == full) regular = true;
    }
    report.regular = regular;
    return report;
}

InducedRep induce(const ModeRepresentation& rep, const SequenceClass& n) {
    InducedRep ind;
    ind.tail = n;
    for (std::size_t k = 0; k <= rep.modes(); ++k) {
        LimitProjection pk = limit_projection(rep, n, k);
        if (k == 0) {
            ind.essential = pk.matrix;
            ind.stabilization_index = pk.stabilized_at;
        }
        ind.limit_projs.push_back(std::move(pk.matrix));
    }
    ind.regular = regularity_criterion(rep, n).regular;
    return ind;
}

Mat induced_apply(const ModeRepresentation& rep, const ElementaryTensor& t) {
    const Mat head = rep.head_image(t.head);
    const LimitProjection tail = limit_projection(rep, t.tail, t.head.size());
    return t.scalar * head * tail.matrix;
}

Mat induced_apply(const ModeRepresentation& rep, const TensorPolynomial& x) {
    Mat acc = Mat::Zero(rep.dim(), rep.dim());
    for (const auto& [cls, list] : x.terms())
        for (const auto& t : list) acc += induced_apply(rep, t);
    return acc;
}

Mat weyl_label_image(const ModeRepresentation& rep, const WeylLabel& s) {
    Mat acc = Mat::Identity(rep.dim(), rep.dim());
    for (std::size_t j = 0; j < s.comps.size(); ++j) {
        const auto [a, b] = s.comps[j];
        if (a == 0 && b == 0) continue;
        acc = acc * rep.weyl_image(j, a, b);
    }
    return acc;
}

}  // namespace ccr
