#include "orthotope/voxel_set.hpp"

#include <algorithm>
#include <string>

#include "orthotope/errors.hpp"

namespace ortho {

VoxelSet::VoxelSet(int dim, std::vector<Point> voxels) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        throw DimensionOutOfRange("dimension " + std::to_string(dim) +
                                  " outside [1, " + std::to_string(kMaxDim) +
                                  "]");
    if (voxels.empty()) throw EmptyInput("voxel list is empty");
    for (const Point& v : voxels)
        if (static_cast<int>(v.size()) != dim)
            throw RaggedTuple("voxel with " + std::to_string(v.size()) +
                              " coordinates in a " + std::to_string(dim) +
                              "-dimensional set");
    std::sort(voxels.begin(), voxels.end());
    voxels.erase(std::unique(voxels.begin(), voxels.end()), voxels.end());
    voxels_ = std::move(voxels);
    lo_ = hi_ = voxels_.front();
    for (const Point& v : voxels_)
        for (int i = 0; i < dim_; ++i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            lo_[ui] = std::min(lo_[ui], v[ui]);
            hi_[ui] = std::max(hi_[ui], v[ui]);
        }
}

bool VoxelSet::contains(const Point& v) const {
    return std::binary_search(voxels_.begin(), voxels_.end(), v);
}

bool contains_cell(const VoxelSet& s, const GridCell& c) {
    // The cell lies in the solid iff some voxel's closed cube contains it:
    // the cube must start at the anchor along open directions and at the
    // anchor or one below along fixed ones.
    const int d = s.dim();
    Point v = c.anchor;
    const std::uint32_t fixed = ~c.directions & ((1u << d) - 1);
    std::uint32_t sub = fixed;
    while (true) {
        for (int i = 0; i < d; ++i)
            v[static_cast<std::size_t>(i)] =
                c.anchor[static_cast<std::size_t>(i)] -
                (((sub >> i) & 1) ? 1 : 0);
        if (s.contains(v)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & fixed; // next subset of the fixed coordinates
    }
    return false;
}

std::vector<GridCell> cells_of(const VoxelSet& s) {
    const int d = s.dim();
    std::vector<GridCell> out;
    Point a = s.box_min();
    while (true) {
        for (std::uint32_t dirs = 0; dirs < (1u << d); ++dirs) {
            GridCell c{a, dirs};
            if (contains_cell(s, c)) out.push_back(std::move(c));
        }
        int i = 0;
        while (i < d && a[static_cast<std::size_t>(i)] ==
                            s.box_max()[static_cast<std::size_t>(i)] + 1) {
            a[static_cast<std::size_t>(i)] =
                s.box_min()[static_cast<std::size_t>(i)];
            ++i;
        }
        if (i == d) break;
        ++a[static_cast<std::size_t>(i)];
    }
    return out;
}

OrthantSet tangent_cone_at(const VoxelSet& s, const GridCell& c) {
    const int d = s.dim();
    std::vector<int> fixed;
    for (int i = 0; i < d; ++i)
        if (!((c.directions >> i) & 1)) fixed.push_back(i);
    const int m = static_cast<int>(fixed.size());
    OrthantSet cone(m);
    Point v(static_cast<std::size_t>(d));
    for (unsigned q = 0; q < (1u << m); ++q) {
        v = c.anchor;
        for (int j = 0; j < m; ++j)
            if (!((q >> j) & 1))
                --v[static_cast<std::size_t>(fixed[static_cast<std::size_t>(j)])];
        if (s.contains(v)) cone.insert(q);
    }
    if (cone.empty())
        throw CellNotInPolytope("cell is not contained in the solid");
    return cone;
}

} // namespace ortho
