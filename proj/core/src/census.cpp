#include "orthotope/census.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "orthotope/errors.hpp"

namespace ortho {

std::int64_t CellCensus::by_dim(ClassId cls, int k) const {
    auto it = dim_counts_.find({cls, k});
    return it == dim_counts_.end() ? 0 : it->second;
}

std::int64_t CellCensus::by_directions(ClassId cls, std::uint32_t dirs) const {
    auto it = direction_counts_.find({cls, dirs});
    return it == direction_counts_.end() ? 0 : it->second;
}

std::vector<ClassId> CellCensus::classes() const {
    std::vector<ClassId> out;
    for (const auto& [key, count] : dim_counts_)
        if (out.empty() || out.back() != key.first) out.push_back(key.first);
    return out;
}

std::int64_t CellCensus::total_cells() const {
    std::int64_t n = 0;
    for (const auto& [key, count] : dim_counts_) n += count;
    return n;
}

void CellCensus::record(ClassId cls, std::uint32_t dirs) {
    ++dim_counts_[{cls, std::popcount(dirs)}];
    ++direction_counts_[{cls, dirs}];
}

namespace {

std::string cell_text(const GridCell& c, int d) {
    std::string out = "anchor (";
    for (int i = 0; i < d; ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(c.anchor[static_cast<std::size_t>(i)]);
    }
    out += "), open directions {";
    bool first = true;
    for (int i = 0; i < d; ++i)
        if ((c.directions >> i) & 1) {
            if (!first) out += ", ";
            out += std::to_string(i + 1);
            first = false;
        }
    out += "}";
    return out;
}

} // namespace

CellCensus classify(const VoxelSet& s, const ClassTable& table) {
    if (table.max_dim() < s.dim())
        throw DimensionCapExceeded(
            "table cap " + std::to_string(table.max_dim()) +
            " is below the solid dimension " + std::to_string(s.dim()));
    CellCensus census(s.dim());
    for (const GridCell& cell : cells_of(s)) {
        const OrthantSet cone = tangent_cone_at(s, cell);
        const Recognition rec = recognize(cone);
        switch (rec.kind) {
        case Recognition::Kind::ConstTrue:
            census.record(kIdentityClass, cell.directions);
            break;
        case Recognition::Kind::Floral:
            census.record(table.id_of(rec.diagram), cell.directions);
            break;
        case Recognition::Kind::NotFloral: {
            std::string bits;
            for (int q = (1 << cone.arity()) - 1; q >= 0; --q)
                bits += cone.contains(static_cast<unsigned>(q)) ? '1' : '0';
            throw NotGenericError(
                "solid is not generic: tangent cone at cell " +
                    cell_text(cell, s.dim()) + " has occupancy 0b" + bits +
                    " and is not read-once",
                cell.anchor, cell.directions, cone.mask());
        }
        case Recognition::Kind::ConstFalse:
            throw CellNotInPolytope("empty tangent cone for a listed cell");
        }
    }
    return census;
}

bool is_generic(const VoxelSet& s) {
    for (const GridCell& cell : cells_of(s))
        if (!recognize(tangent_cone_at(s, cell)).floral()) return false;
    return true;
}

VoxelSet random_generic(int dim, int voxel_count, std::uint64_t seed) {
    if (dim < 1 || dim > VoxelSet::kMaxDim)
        throw DimensionOutOfRange("dimension " + std::to_string(dim) +
                                  " outside [1, " +
                                  std::to_string(VoxelSet::kMaxDim) + "]");
    if (voxel_count < 1) throw EmptyInput("requested voxel count is not positive");

    std::mt19937_64 rng(seed);
    const int kRestarts = 20;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        std::vector<Point> grown{Point(static_cast<std::size_t>(dim), 0)};
        bool stuck = false;
        while (static_cast<int>(grown.size()) < voxel_count && !stuck) {
            VoxelSet current(dim, grown);
            // Deterministic candidate pool: face neighbours not yet present.
            std::vector<Point> candidates;
            for (const Point& v : current.voxels())
                for (int i = 0; i < dim; ++i)
                    for (int step : {-1, 1}) {
                        Point w = v;
                        w[static_cast<std::size_t>(i)] += step;
                        if (!current.contains(w)) candidates.push_back(std::move(w));
                    }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            stuck = true;
            while (!candidates.empty()) {
                // rng() % size instead of a distribution: identical streams
                // on every platform.
                const std::size_t pick =
                    static_cast<std::size_t>(rng() % candidates.size());
                std::vector<Point> trial = grown;
                trial.push_back(candidates[pick]);
                if (is_generic(VoxelSet(dim, trial))) {
                    grown = std::move(trial);
                    stuck = false;
                    break;
                }
                candidates.erase(candidates.begin() +
                                 static_cast<std::ptrdiff_t>(pick));
            }
        }
        if (static_cast<int>(grown.size()) == voxel_count)
            return VoxelSet(dim, std::move(grown));
    }
    throw GenerationFailed("could not grow a generic solid of " +
                           std::to_string(voxel_count) + " voxels in " +
                           std::to_string(dim) + " dimensions");
}

} // namespace ortho
