#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "orthotope/orthant_set.hpp"

namespace ortho {

using Point = std::vector<int>;

/// A finite union of closed unit cubes v + [0,1]^d with integer corners v,
/// d <= 6.  The voxel list is kept sorted and deduplicated.
class VoxelSet {
public:
    static constexpr int kMaxDim = 6;

    VoxelSet(int dim, std::vector<Point> voxels);

    int dim() const { return dim_; }
    std::size_t size() const { return voxels_.size(); }
    const std::vector<Point>& voxels() const { return voxels_; }
    bool contains(const Point& v) const;

    const Point& box_min() const { return lo_; }
    const Point& box_max() const { return hi_; }

    bool operator==(const VoxelSet&) const = default;

private:
    int dim_;
    std::vector<Point> voxels_;
    Point lo_, hi_;
};

/// A relatively open cell of the unit grid: coordinates in `directions`
/// range over (anchor_i, anchor_i + 1), the others are fixed at anchor_i.
struct GridCell {
    Point anchor;
    std::uint32_t directions = 0;

    int dimension() const { return std::popcount(directions); }
    bool operator==(const GridCell&) const = default;
};

/// Whether the solid contains the cell (equivalently, contains its closure).
bool contains_cell(const VoxelSet& s, const GridCell& c);

/// Every grid cell contained in the solid, in a fixed deterministic order.
std::vector<GridCell> cells_of(const VoxelSet& s);

/// Local structure of the solid around a cell: which of the unit cubes
/// touching the cell are present, as an orthant set over the fixed
/// coordinates (ascending; pattern bit set = cube on the positive side).
/// Throws CellNotInPolytope when the cell is not in the solid.
OrthantSet tangent_cone_at(const VoxelSet& s, const GridCell& c);

} // namespace ortho
