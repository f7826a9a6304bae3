#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthotope/ehrhart.hpp"

namespace ortho {

/// Per-axis dilation factors, all >= 1.
class DilationSpec {
public:
    static DilationSpec uniform(int dim, int t);
    static DilationSpec per_axis(std::vector<int> factors);

    int dim() const { return static_cast<int>(factors_.size()); }
    int factor(int axis) const {
        return factors_[static_cast<std::size_t>(axis)];
    }
    const std::vector<int>& factors() const { return factors_; }
    bool is_uniform() const;

    /// "t=3" or "t=(1,2,3)".
    std::string to_string() const;

private:
    explicit DilationSpec(std::vector<int> factors);
    std::vector<int> factors_;
};

/// Count the lattice points of the dilated solid directly, grouped by the
/// read-once class of the local occupancy pattern.  This is the slow
/// independent check of the polynomial machinery: it never consults a
/// census or a polynomial.  Throws NonFloralPoint if a lattice point of the
/// dilate has a non-read-once pattern (impossible for a generic solid).
std::map<ClassId, std::int64_t> direct_census(const VoxelSet& s,
                                              const DilationSpec& spec,
                                              const ClassTable& table);

struct OracleCheck {
    DilationSpec spec;
    std::map<ClassId, std::int64_t> counted;   // from direct_census
    std::map<ClassId, std::int64_t> predicted; // from the polynomials
    bool pass;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool pass() const;
};

/// Compare direct counts against polynomial predictions: uniform dilations
/// t = 1..t_max against the univariate polynomials, and a deterministic
/// family of non-uniform dilations (entries <= min(3, t_max); for dim >= 4 a
/// fixed seeded sample) against the directional ones.
OracleReport verify_against_formula(const VoxelSet& s, const ClassTable& table,
                                    int t_max);

/// Same comparison, but with the polynomials derived from a caller-supplied
/// census instead of a fresh classification.
OracleReport oracle_compare(const VoxelSet& s, const CellCensus& census,
                            const ClassTable& table, int t_max);

} // namespace ortho
