#pragma once

#include <optional>
#include <vector>

#include "ccr/representation.hpp"

namespace ccr {

// Orthonormal (Frobenius) basis of {X : [X, G] = 0 for all generators G}.
// Contains the identity direction; dimension 1 certifies irreducibility.
std::vector<Mat> commutant(const std::vector<Mat>& generators);

// Solves V a(G) = b(G) V for all matched generators; returns the unitary
// polar factor of an invertible solution when one exists.
std::optional<Mat> intertwiner(const std::vector<Mat>& a, const std::vector<Mat>& b);

struct Block {
    Mat basis;                        // ambient isometry onto the block
    std::vector<Mat> generators;      // restricted generator matrices
    std::size_t commutant_dimension;  // 1 for each finished block
    std::size_t equivalence_class;    // index of the first equivalent block
};

struct DecompositionReport {
    std::vector<Block> blocks;
    std::vector<std::size_t> multiplicities;  // per equivalence class id
    std::vector<Mat> intertwiners;            // block -> its class representative
    double gram_error;            // orthonormality defect of the joined bases
    double reconstruction_error;  // conjugated block sum vs input generators
    std::size_t retries;
};

// Splits along eigenspaces of seeded random self-adjoint commutant elements
// until every block is irreducible, then groups blocks by unitary
// equivalence.  Throws MaxRetriesExceeded after 10 non-splitting draws.
DecompositionReport decompose(const std::vector<Mat>& generators, unsigned long seed);

DecompositionReport decompose(const ModeRepresentation& rep, unsigned long seed);

}  // namespace ccr
