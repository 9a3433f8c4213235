#include "ccr/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace ccr {

namespace {

// Shortest word w such that s is a power of w.
std::vector<int> primitive_root(const std::vector<int>& s) {
    const std::size_t n = s.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = s[i] == s[i % len];
        if (ok) return {s.begin(), s.begin() + static_cast<long>(len)};
    }
    return s;
}

}  // namespace

SequenceClass::SequenceClass(std::vector<int> prefix, std::vector<int> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    for (int v : prefix_)
        if (v < 1) throw std::invalid_argument("entries must be >= 1");
    for (int v : period_)
        if (v < 1) throw std::invalid_argument("entries must be >= 1");
    canonicalize();
}

SequenceClass SequenceClass::constant(int value) { return SequenceClass({}, {value}); }

void SequenceClass::canonicalize() {
    period_ = primitive_root(period_);
    // Absorb prefix entries that already match the periodic tail: dropping the
    // last prefix entry and rotating the period right leaves the sequence
    // unchanged exactly when that entry equals the period's last letter.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
        prefix_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

int SequenceClass::entry(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
}

SequenceClass SequenceClass::class_representative() const {
    const std::size_t len = period_.size();
    // Rotate so that absolute position i carries period[(i - |prefix|) mod len].
    const std::size_t offset = prefix_.size() % len;
    std::vector<int> rotated(len);
    for (std::size_t k = 0; k < len; ++k) rotated[k] = period_[(k + len - offset) % len];
    return SequenceClass({}, std::move(rotated));
}

bool SequenceClass::operator<(const SequenceClass& other) const {
    if (prefix_ != other.prefix_) return prefix_ < other.prefix_;
    return period_ < other.period_;
}

namespace {

// Both sequences are periodic with period lcm(|pa|,|pb|) past the prefixes,
// so any property of the joint tail is decided on one such window.
struct Window {
    std::size_t start;
    std::size_t length;
};

Window joint_tail(const SequenceClass& a, const SequenceClass& b) {
    const std::size_t start = std::max(a.prefix().size(), b.prefix().size());
    const std::size_t length = std::lcm(a.period().size(), b.period().size());
    return {start, length};
}

}  // namespace

bool seq_equiv(const SequenceClass& a, const SequenceClass& b) {
    const auto [start, length] = joint_tail(a, b);
    for (std::size_t i = start; i < start + length; ++i)
        if (a.entry(i) != b.entry(i)) return false;
    return true;
}

SequenceClass seq_min(const SequenceClass& a, const SequenceClass& b) {
    const auto [start, length] = joint_tail(a, b);
    std::vector<int> prefix(start), period(length);
    for (std::size_t i = 0; i < start; ++i) prefix[i] = std::min(a.entry(i), b.entry(i));
    for (std::size_t i = 0; i < length; ++i)
        period[i] = std::min(a.entry(start + i), b.entry(start + i));
    return SequenceClass(std::move(prefix), std::move(period));
}

bool seq_le(const SequenceClass& a, const SequenceClass& b) {
    const auto [start, length] = joint_tail(a, b);
    for (std::size_t i = start; i < start + length; ++i)
        if (a.entry(i) > b.entry(i)) return false;
    return true;
}

bool seq_strictly_less(const SequenceClass& a, const SequenceClass& b) {
    return seq_le(a, b) && !seq_equiv(a, b);
}

std::size_t separating_mode(const std::vector<SequenceClass>& classes, std::size_t start) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (seq_equiv(classes[i], classes[j]))
                throw EquivalentClasses("separating_mode needs pairwise inequivalent classes");

    std::size_t end = start + 1;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            // First position >= start where the pair differs; one exists in
            // the joint tail window because the classes are inequivalent.
            const auto& a = classes[i];
            const auto& b = classes[j];
            std::size_t w0 = std::max({start, a.prefix().size(), b.prefix().size()});
            std::size_t limit = w0 + std::lcm(a.period().size(), b.period().size());
            std::size_t pos = start;
            while (pos < limit && a.entry(pos) == b.entry(pos)) ++pos;
            end = std::max(end, pos + 1);
        }
    return end;
}

}  // namespace ccr
