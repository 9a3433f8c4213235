#include "ccr/weyl_core.hpp"

#include <algorithm>
#include <cmath>

namespace ccr {

WeylElement WeylElement::generator(RatVector s, Coeff c) {
    WeylElement e(s.size());
    e.add_term(s, c);
    return e;
}

WeylElement WeylElement::identity(std::size_t dim) {
    return generator(RatVector(dim, Rational(0)));
}

void WeylElement::add_term(const RatVector& s, Coeff c) {
    if (s.size() != dim_) throw DimensionMismatch("support vector dimension mismatch");
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (c != 0.0) terms_.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

WeylElement WeylElement::operator+(const WeylElement& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("weyl element dimension mismatch");
    WeylElement out = *this;
    for (const auto& [s, c] : other.terms_) out.add_term(s, c);
    return out;
}

WeylElement WeylElement::operator-(const WeylElement& other) const {
    return *this + other.scaled(-1.0);
}

WeylElement WeylElement::scaled(Coeff c) const {
    WeylElement out(dim_);
    if (c == 0.0) return out;
    for (const auto& [s, coeff] : terms_) out.terms_.emplace(s, coeff * c);
    return out;
}

WeylElement weyl_mul(const BilinearForm& form, const WeylElement& x, const WeylElement& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("weyl element dimension mismatch");
    WeylElement out(x.dim());
    for (const auto& [f, cf] : x.terms())
        for (const auto& [g, cg] : y.terms())
            out.add_term(add(f, g), cf * cg * cocycle_sigma(form, f, g));
    return out;
}

WeylElement weyl_star(const WeylElement& x) {
    WeylElement out(x.dim());
    for (const auto& [f, c] : x.terms()) out.add_term(negate(f), std::conj(c));
    return out;
}

std::set<std::size_t> mode_support(const BilinearForm& form, const DarbouxBasis& basis,
                                   const WeylElement& x) {
    std::set<std::size_t> modes;
    for (const auto& [s, c] : x.terms()) {
        (void)c;
        for (std::size_t j = 0; j < basis.pairs(); ++j) {
            if (form.eval(s, basis.q[j]) != 0 || form.eval(basis.p[j], s) != 0)
                modes.insert(j);
        }
    }
    return modes;
}

double coeff_distance(const WeylElement& x, const WeylElement& y) {
    double worst = 0.0;
    auto scan = [&](const WeylElement& a, const WeylElement& b) {
        for (const auto& [s, c] : a.terms()) {
            auto it = b.terms().find(s);
            const std::complex<double> other = it == b.terms().end() ? 0.0 : it->second;
            worst = std::max(worst, std::abs(c - other));
        }
    };
    scan(x, y);
    scan(y, x);
    return worst;
}

}  // namespace ccr
