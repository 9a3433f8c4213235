#pragma once

#include <cstddef>
#include <vector>

#include "ccr/errors.hpp"

namespace ccr {

// Eventually periodic sequence of positive integers, used as a representative
// of its class under "differs in finitely many entries".  Canonical form has
// the shortest possible prefix and a primitive period, which makes canonical
// representations unique per sequence; the family is closed under pointwise
// min and finite modification, so equivalence, order and meet are decidable.
class SequenceClass {
public:
    SequenceClass(std::vector<int> prefix, std::vector<int> period);

    static SequenceClass constant(int value);
    static SequenceClass ones() { return constant(1); }

    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& period() const { return period_; }

    // Entry at 0-based position i.
    int entry(std::size_t i) const;

    // The purely periodic sequence that eventually agrees with this one,
    // aligned to absolute positions.  Equal across a ~-class, so it serves as
    // the canonical class representative (and as a map key for classes).
    SequenceClass class_representative() const;

    bool operator==(const SequenceClass& other) const {
        return prefix_ == other.prefix_ && period_ == other.period_;
    }
    bool operator<(const SequenceClass& other) const;  // lexicographic on canonical form

private:
    void canonicalize();

    std::vector<int> prefix_;
    std::vector<int> period_;
};

// True iff the two sequences differ in only finitely many entries.
bool seq_equiv(const SequenceClass& a, const SequenceClass& b);

// Pointwise minimum, canonical.
SequenceClass seq_min(const SequenceClass& a, const SequenceClass& b);

// Eventual pointwise order: a <= b iff a_k <= b_k for all large k.
bool seq_le(const SequenceClass& a, const SequenceClass& b);

bool seq_strictly_less(const SequenceClass& a, const SequenceClass& b);

// Smallest l > start such that the entry patterns on the window [start, l)
// are pairwise distinct.  Throws EquivalentClasses on ~-equal inputs.
std::size_t separating_mode(const std::vector<SequenceClass>& classes, std::size_t start);

}  // namespace ccr
