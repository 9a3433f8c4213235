#include "ccr/symplectic.hpp"

#include <sstream>

namespace ccr {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

BilinearForm::BilinearForm(std::size_t dim, RatMatrix entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_) throw DimensionMismatch("form entry rows != dim");
    for (const auto& row : entries_)
        if (row.size() != dim_) throw DimensionMismatch("form entry cols != dim");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (entries_[i][j] != -entries_[j][i])
                throw std::invalid_argument("form is not antisymmetric");
}

BilinearForm BilinearForm::canonical(std::size_t pairs) {
    const std::size_t d = 2 * pairs;
    RatMatrix m(d, RatVector(d, Rational(0)));
    for (std::size_t k = 0; k < pairs; ++k) {
        m[2 * k][2 * k + 1] = 1;
        m[2 * k + 1][2 * k] = -1;
    }
    return BilinearForm(d, std::move(m));
}

Rational BilinearForm::eval(const RatVector& v, const RatVector& w) const {
    if (v.size() != dim_ || w.size() != dim_)
        throw DimensionMismatch("vector dimension does not match form");
    Rational acc(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (entries_[i][j] == 0 || w[j] == 0) continue;
            row += entries_[i][j] * w[j];
        }
        acc += v[i] * row;
    }
    return acc;
}

namespace ratlin {

namespace {

// Row echelon with full pivoting skipped; exact arithmetic needs no pivot
// magnitude heuristics, any nonzero pivot works.
std::size_t eliminate(std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const std::vector<RatVector>& rows) {
    auto work = rows;
    return eliminate(work);
}

bool in_span(const std::vector<RatVector>& rows, const RatVector& v) {
    auto work = rows;
    const std::size_t base = eliminate(work);
    work.push_back(v);
    return eliminate(work) == base;
}

RatVector solve(const RatMatrix& m, const RatVector& v) {
    const std::size_t n = m.size();
    std::vector<RatVector> aug(n, RatVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n] = v[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && aug[pivot][c] == 0) ++pivot;
        if (pivot == n) throw DegenerateForm("singular system");
        std::swap(aug[c], aug[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c] / aug[c][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
    return x;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix out(n, RatVector(n));
    for (std::size_t k = 0; k < n; ++k) {
        RatVector e(n, Rational(0));
        e[k] = 1;
        RatVector col = solve(m, e);
        for (std::size_t i = 0; i < n; ++i) out[i][k] = col[i];
    }
    return out;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace ratlin

namespace {

RatVector unit_vector(std::size_t dim, std::size_t k) {
    RatVector e(dim, Rational(0));
    e[k] = 1;
    return e;
}

}  // namespace

DarbouxBasis darboux_basis(const BilinearForm& form) {
    const std::size_t dim = form.dim();
    if (dim % 2 != 0) throw OddDimension("symplectic dimension must be even");

    DarbouxBasis basis;
    std::vector<RatVector> chosen;  // p_1..p_k, q_1..q_k in construction order

    while (chosen.size() < dim) {
        // Minimal m with e_m outside the current span.
        std::size_t m = 0;
        while (m < dim && ratlin::in_span(chosen, unit_vector(dim, m))) ++m;
        if (m == dim) break;

        auto orthogonalize = [&](const RatVector& e) {
            RatVector v = e;
            for (std::size_t i = 0; i < basis.pairs(); ++i) {
                Rational a = form.eval(e, basis.q[i]);
                Rational b = form.eval(basis.p[i], e);
                for (std::size_t j = 0; j < dim; ++j)
                    v[j] -= a * basis.p[i][j] + b * basis.q[i][j];
            }
            return v;
        };

        RatVector p = orthogonalize(unit_vector(dim, m));

        // Minimal l with B(p, e_l) != 0; fails only for singular forms.
        std::size_t l = 0;
        while (l < dim && form.eval(p, unit_vector(dim, l)) == 0) ++l;
        if (l == dim) throw DegenerateForm("no partner vector pairs with p; form is degenerate");

        RatVector qt = orthogonalize(unit_vector(dim, l));
        Rational pairing = form.eval(p, qt);
        RatVector q(dim);
        for (std::size_t j = 0; j < dim; ++j) q[j] = qt[j] / pairing;

        basis.p.push_back(p);
        basis.q.push_back(q);
        chosen.push_back(std::move(p));
        chosen.push_back(std::move(q));
    }

    if (2 * basis.pairs() != dim)
        throw DegenerateForm("construction terminated before spanning the space");
    return basis;
}

ComplexStructure complex_structure(const BilinearForm& form, const DarbouxBasis& basis) {
    const std::size_t dim = form.dim();
    const std::size_t n = basis.pairs();
    if (2 * n != dim) throw DimensionMismatch("basis does not span the form's space");

    // Change of basis T: columns are p_1..p_n, q_1..q_n.  In that basis I is
    // the block [[0,-1],[1,0]], so I = T J T^{-1} in coordinates.
    RatMatrix t(dim, RatVector(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            t[i][k] = basis.p[k][i];
            t[i][n + k] = basis.q[k][i];
        }
    RatMatrix tinv = ratlin::inverse(t);

    RatMatrix I(dim, RatVector(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < n; ++k) {
                // J column k is e_{n+k} (p_k -> q_k), column n+k is -e_k.
                acc += t[i][n + k] * tinv[k][j];
                acc -= t[i][k] * tinv[n + k][j];
            }
            I[i][j] = acc;
        }
    return ComplexStructure{std::move(I)};
}

RatVector ComplexStructure::apply(const RatVector& v) const {
    const std::size_t n = matrix.size();
    if (v.size() != n) throw DimensionMismatch("complex structure dimension mismatch");
    RatVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix[i][j] != 0 && v[j] != 0) out[i] += matrix[i][j] * v[j];
    return out;
}

Rational symmetric_form(const BilinearForm& form, const ComplexStructure& I,
                        const RatVector& v, const RatVector& w) {
    return form.eval(v, I.apply(w));
}

std::complex<double> hermitian_form(const BilinearForm& form, const ComplexStructure& I,
                                    const RatVector& v, const RatVector& w) {
    return {to_double(symmetric_form(form, I, v, w)), to_double(form.eval(v, w))};
}

std::complex<double> cocycle_sigma(const BilinearForm& form, const RatVector& v,
                                   const RatVector& w) {
    return unit_phase(form.eval(v, w) / 2);
}

}  // namespace ccr
