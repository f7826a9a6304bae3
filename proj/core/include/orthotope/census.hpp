#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "orthotope/class_table.hpp"
#include "orthotope/voxel_set.hpp"

namespace ortho {

/// Cell counts of a solid, refined by tangent-cone class: C[alpha][k] counts
/// cells of dimension k with class alpha, and C[alpha][I] refines that by
/// the actual direction set I (a bitmask over coordinates).
class CellCensus {
public:
    explicit CellCensus(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    std::int64_t by_dim(ClassId cls, int k) const;
    std::int64_t by_directions(ClassId cls, std::uint32_t dirs) const;

    const std::map<std::pair<ClassId, int>, std::int64_t>& dim_counts() const {
        return dim_counts_;
    }
    const std::map<std::pair<ClassId, std::uint32_t>, std::int64_t>&
    direction_counts() const {
        return direction_counts_;
    }

    /// Distinct classes present, ascending.
    std::vector<ClassId> classes() const;

    std::int64_t total_cells() const;

    void record(ClassId cls, std::uint32_t dirs);

    bool operator==(const CellCensus&) const = default;

private:
    int dim_;
    std::map<std::pair<ClassId, int>, std::int64_t> dim_counts_;
    std::map<std::pair<ClassId, std::uint32_t>, std::int64_t> direction_counts_;
};

/// Classify every cell of the solid by the read-once class of its tangent
/// cone.  Throws NotGenericError (with the offending cell attached) if some
/// cone is not read-once, and DimensionCapExceeded if the table cannot hold
/// classes of the solid's dimension.
CellCensus classify(const VoxelSet& s, const ClassTable& table);

/// Whether every cell's tangent cone is read-once.
bool is_generic(const VoxelSet& s);

/// Grow a random generic solid of `voxel_count` voxels by repeatedly
/// attaching a face neighbour that keeps the solid generic.  Deterministic
/// for a fixed seed.  Throws GenerationFailed if the retry budget runs out.
VoxelSet random_generic(int dim, int voxel_count, std::uint64_t seed);

} // namespace ortho
