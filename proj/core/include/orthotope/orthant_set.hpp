#pragma once

#include <cstdint>
#include <vector>

#include "orthotope/diagram.hpp"

namespace ortho {

/// A set of (open) orthants of R^m, m <= 6, stored as a bitmask over the
/// 2^m sign patterns.  Pattern bit i set means coordinate i is positive.
class OrthantSet {
public:
    static constexpr int kMaxArity = 6;

    explicit OrthantSet(int arity);
    static OrthantSet full(int arity);

    int arity() const { return arity_; }
    std::uint64_t mask() const { return mask_; }

    bool contains(unsigned pattern) const {
        return (mask_ >> pattern) & 1u;
    }
    void insert(unsigned pattern) { mask_ |= std::uint64_t{1} << pattern; }
    void erase(unsigned pattern) { mask_ &= ~(std::uint64_t{1} << pattern); }

    /// Membership by sign tuple, entries +-1, tuple[i] for coordinate i.
    bool contains_signs(const std::vector<int>& signs) const;
    void insert_signs(const std::vector<int>& signs);

    int count() const;
    bool empty() const { return mask_ == 0; }
    bool is_full() const;

    OrthantSet complemented() const;

    bool operator==(const OrthantSet&) const = default;

private:
    int arity_;
    std::uint64_t mask_ = 0;
};

/// Outcome of read-once recognition of an orthant set.
struct Recognition {
    enum class Kind : std::uint8_t { ConstFalse, ConstTrue, Floral, NotFloral };

    Kind kind = Kind::NotFloral;
    Diagram diagram;             // valid when kind == Floral
    std::vector<int> orientations; // size arity(); +-1 per coordinate, +1 for
                                   // inessential or constant sets
    std::vector<int> essential;  // coordinates the set depends on, ascending

    bool floral() const { return kind != Kind::NotFloral; }
};

/// Decide whether the orthant set is the truth set of a read-once formula
/// "coordinate i has sign o_i" combined by AND / OR, and if so return the
/// series-parallel class together with the literal orientations.
Recognition recognize(const OrthantSet& set);

/// The orthant set of a diagram under given literal orientations; the i-th
/// leaf in encoding order tests "sign of coordinate i equals orientations[i]".
/// Inverse of recognize on floral sets.
OrthantSet orthants_of(const Diagram& d, const std::vector<int>& orientations);

} // namespace ortho
