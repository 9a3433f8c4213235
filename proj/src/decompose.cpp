#include "ccr/decompose.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <random>

namespace ccr {

namespace {

Mat unvec(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const Mat>(v.data(), rows, cols);
}

// Orthonormal nullspace basis of a stacked linear system.
std::vector<Eigen::VectorXcd> nullspace(const Mat& system, Eigen::Index unknowns) {
    if (system.rows() == 0) {
        std::vector<Eigen::VectorXcd> basis;
        for (Eigen::Index i = 0; i < unknowns; ++i) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(unknowns);
            e(i) = 1.0;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Eigen::JacobiSVD<Mat> svd(system, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cutoff = 1e-10 * (s.size() > 0 ? std::max(s(0), 1.0) : 1.0);
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index i = 0; i < unknowns; ++i) {
        const double sv = i < s.size() ? s(i) : 0.0;
        if (sv <= cutoff) basis.push_back(svd.matrixV().col(i));
    }
    return basis;
}

}  // namespace

std::vector<Mat> commutant(const std::vector<Mat>& generators) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    const Eigen::Index n = generators.front().rows();
    const Eigen::Index nn = n * n;
    Mat system(static_cast<Eigen::Index>(generators.size()) * nn, nn);
    const Mat id = Mat::Identity(n, n);
    Eigen::Index row = 0;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator size mismatch");
        // [X, G] = 0  <=>  (I (x) G - G^T (x) I) vec(X) = 0.
        system.block(row, 0, nn, nn) = kron(id, g) - kron(g.transpose(), id);
        row += nn;
    }
    std::vector<Mat> basis;
    for (const auto& v : nullspace(system, nn)) basis.push_back(unvec(v, n, n));
    return basis;
}

std::optional<Mat> intertwiner(const std::vector<Mat>& a, const std::vector<Mat>& b) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    const Eigen::Index da = a.front().rows();
    const Eigen::Index db = b.front().rows();
    Mat system(static_cast<Eigen::Index>(a.size()) * da * db, da * db);
    Eigen::Index row = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        // V a(G) = b(G) V  <=>  (a(G)^T (x) I - I (x) b(G)) vec(V) = 0.
        system.block(row, 0, da * db, da * db) =
            kron(a[k].transpose(), Mat::Identity(db, db)) -
            kron(Mat::Identity(da, da), b[k]);
        row += da * db;
    }
    const auto basis = nullspace(system, da * db);
    if (basis.empty() || da != db) return std::nullopt;

    // A generic element of the solution space is invertible whenever an
    // invertible one exists; a few seeded draws settle it.
    std::mt19937_64 eng(20240915);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mat v = Mat::Zero(db, da);
        if (attempt == 0 && basis.size() == 1) {
            v = unvec(basis[0], db, da);
        } else {
            for (const auto& col : basis) v += Cplx(gauss(eng), gauss(eng)) * unvec(col, db, da);
        }
        Eigen::JacobiSVD<Mat> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        if (s(s.size() - 1) <= 1e-8 * std::max(1.0, s(0))) continue;
        Mat unitary = svd.matrixU() * svd.matrixV().adjoint();
        double residual = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            residual = std::max(residual, (unitary * a[k] - b[k] * unitary).norm());
        if (residual < 1e-8) return unitary;
    }
    return std::nullopt;
}

namespace {

struct Splitter {
    std::mt19937_64 eng;
    std::size_t retries = 0;

    void split(const std::vector<Mat>& gens, const Mat& ambient_basis,
               std::vector<Block>& out) {
        const auto comm = commutant(gens);
        if (comm.size() == 1) {
            out.push_back(Block{ambient_basis, gens, comm.size(), 0});
            return;
        }

        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int attempt = 0; attempt < 10; ++attempt) {
            Mat r = Mat::Zero(gens.front().rows(), gens.front().cols());
            for (const auto& x : comm) r += Cplx(gauss(eng), gauss(eng)) * x;
            Mat h = 0.5 * (r + r.adjoint());

            Eigen::SelfAdjointEigenSolver<Mat> es(h);
            const auto& ev = es.eigenvalues();

            // Cluster eigenvalues; each well-separated eigenspace is
            // invariant and strictly smaller when the spectrum actually
            // splits.
            std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
            Eigen::Index begin = 0;
            for (Eigen::Index i = 1; i <= ev.size(); ++i) {
                if (i == ev.size() || ev(i) - ev(i - 1) > 1e-8) {
                    clusters.emplace_back(begin, i);
                    begin = i;
                }
            }
            if (clusters.size() < 2) {
                ++retries;
                continue;
            }
            for (const auto& [lo, hi] : clusters) {
                Mat basis = es.eigenvectors().middleCols(lo, hi - lo);
                std::vector<Mat> restricted;
                restricted.reserve(gens.size());
                for (const auto& g : gens) restricted.push_back(basis.adjoint() * g * basis);
                split(restricted, Mat(ambient_basis * basis), out);
            }
            return;
        }
        throw MaxRetriesExceeded("commutant element spectrum failed to split 10 times");
    }
};

}  // namespace

DecompositionReport decompose(const std::vector<Mat>& generators, unsigned long seed) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    const Eigen::Index n = generators.front().rows();

    DecompositionReport report;
    Splitter splitter{std::mt19937_64(seed)};
    splitter.split(generators, Mat::Identity(n, n), report.blocks);
    report.retries = splitter.retries;

    // Group blocks by unitary equivalence; the intertwiner search doubles as
    // the equivalence test.
    std::vector<std::size_t> class_reps;
    report.intertwiners.resize(report.blocks.size());
    for (std::size_t i = 0; i < report.blocks.size(); ++i) {
        bool matched = false;
        for (std::size_t rep_id = 0; rep_id < class_reps.size() && !matched; ++rep_id) {
            const auto& rep_block = report.blocks[class_reps[rep_id]];
            if (rep_block.generators.front().rows() !=
                report.blocks[i].generators.front().rows())
                continue;
            auto v = intertwiner(report.blocks[i].generators, rep_block.generators);
            if (v) {
                report.blocks[i].equivalence_class = rep_id;
                report.intertwiners[i] = *v;
                ++report.multiplicities[rep_id];
                matched = true;
            }
        }
        if (!matched) {
            report.blocks[i].equivalence_class = class_reps.size();
            class_reps.push_back(i);
            report.multiplicities.push_back(1);
            report.intertwiners[i] =
                Mat::Identity(report.blocks[i].basis.cols(), report.blocks[i].basis.cols());
        }
    }

    Eigen::Index total = 0;
    for (const auto& b : report.blocks) total += b.basis.cols();
    if (total != n) throw std::logic_error("block dimensions do not sum to the total");

    Mat joined(n, n);
    Eigen::Index col = 0;
    for (const auto& b : report.blocks) {
        joined.middleCols(col, b.basis.cols()) = b.basis;
        col += b.basis.cols();
    }
    report.gram_error = (joined.adjoint() * joined - Mat::Identity(n, n)).cwiseAbs().maxCoeff();

    report.reconstruction_error = 0.0;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        Mat block_sum = Mat::Zero(n, n);
        Eigen::Index at = 0;
        for (const auto& b : report.blocks) {
            block_sum.block(at, at, b.basis.cols(), b.basis.cols()) = b.generators[k];
            at += b.basis.cols();
        }
        report.reconstruction_error =
            std::max(report.reconstruction_error,
                     (joined * block_sum * joined.adjoint() - generators[k]).cwiseAbs().maxCoeff());
    }
    return report;
}

DecompositionReport decompose(const ModeRepresentation& rep, unsigned long seed) {
    return decompose(rep.generators(), seed);
}

}  // namespace ccr
