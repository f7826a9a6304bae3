#include "orthotope/oracle.hpp"

#include <algorithm>
#include <random>

#include "orthotope/errors.hpp"

namespace ortho {

DilationSpec::DilationSpec(std::vector<int> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw EmptyInput("no dilation factors");
    for (int t : factors_)
        if (t < 1)
            throw Error("dilation factor " + std::to_string(t) +
                        " is not positive");
}

DilationSpec DilationSpec::uniform(int dim, int t) {
    if (dim < 1) throw DimensionOutOfRange("dimension must be positive");
    return DilationSpec(std::vector<int>(static_cast<std::size_t>(dim), t));
}

DilationSpec DilationSpec::per_axis(std::vector<int> factors) {
    return DilationSpec(std::move(factors));
}

bool DilationSpec::is_uniform() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](int t) { return t == factors_.front(); });
}

std::string DilationSpec::to_string() const {
    if (is_uniform()) return "t=" + std::to_string(factors_.front());
    std::string out = "t=(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(factors_[i]);
    }
    out += ")";
    return out;
}

namespace {

// Exact floor of a / b for b > 0.
int floor_div(int a, int b) {
    const int q = a / b;
    return a % b != 0 && (a < 0) != (b < 0) ? q - 1 : q;
}

} // namespace

std::map<ClassId, std::int64_t> direct_census(const VoxelSet& s,
                                              const DilationSpec& spec,
                                              const ClassTable& table) {
    const int d = s.dim();
    if (spec.dim() != d)
        throw LengthMismatch("dilation factor count does not match dimension");
    if (table.max_dim() < d)
        throw DimensionCapExceeded("table cap is below the solid dimension");

    std::map<ClassId, std::int64_t> counts;
    std::map<std::uint64_t, ClassId> memo; // occupancy pattern -> class

    // Lattice points of the dilated bounding box.
    Point x(static_cast<std::size_t>(d));
    Point lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        lo[ui] = s.box_min()[ui] * spec.factor(i);
        hi[ui] = (s.box_max()[ui] + 1) * spec.factor(i);
    }
    x = lo;
    Point probe(static_cast<std::size_t>(d));
    while (true) {
        // Occupancy around x: for each sign pattern q, sample the dilate at
        // x + q/2.  The probe coordinate 2x_i + q_i is odd, so it falls
        // strictly inside a unique dilated voxel along every axis.
        OrthantSet occupancy(d);
        for (unsigned q = 0; q < (1u << d); ++q) {
            for (int i = 0; i < d; ++i) {
                const std::size_t ui = static_cast<std::size_t>(i);
                const int off = (q >> i) & 1 ? 1 : -1;
                probe[ui] = floor_div(2 * x[ui] + off, 2 * spec.factor(i));
            }
            if (s.contains(probe)) occupancy.insert(q);
        }
        if (!occupancy.empty()) {
            ClassId cls;
            if (auto it = memo.find(occupancy.mask()); it != memo.end()) {
                cls = it->second;
            } else {
                const Recognition rec = recognize(occupancy);
                if (rec.kind == Recognition::Kind::ConstTrue)
                    cls = kIdentityClass;
                else if (rec.kind == Recognition::Kind::Floral)
                    cls = table.id_of(rec.diagram);
                else
                    throw NonFloralPoint(
                        "lattice point of the dilate has a non-read-once "
                        "occupancy pattern");
                memo.emplace(occupancy.mask(), cls);
            }
            ++counts[cls];
        }
        int i = 0;
        while (i < d && x[static_cast<std::size_t>(i)] ==
                            hi[static_cast<std::size_t>(i)]) {
            x[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
            ++i;
        }
        if (i == d) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return counts;
}

bool OracleReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::map<ClassId, std::int64_t> drop_zeros(std::map<ClassId, std::int64_t> m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

} // namespace

OracleReport verify_against_formula(const VoxelSet& s, const ClassTable& table,
                                    int t_max) {
    return oracle_compare(s, classify(s, table), table, t_max);
}

OracleReport oracle_compare(const VoxelSet& s, const CellCensus& census,
                            const ClassTable& table, int t_max) {
    if (t_max < 1) throw Error("t_max must be at least 1");
    const int d = s.dim();
    const ClassPolynomial uni = class_ehrhart(census, table);
    const DirectionalPolynomial multi = directional_ehrhart(census, table);

    std::vector<DilationSpec> specs;
    for (int t = 1; t <= t_max; ++t) specs.push_back(DilationSpec::uniform(d, t));
    const int cap = std::min(3, t_max);
    if (d <= 3) {
        // Every non-uniform vector with entries <= cap.
        std::vector<int> f(static_cast<std::size_t>(d), 1);
        while (true) {
            DilationSpec spec = DilationSpec::per_axis(f);
            if (!spec.is_uniform()) specs.push_back(std::move(spec));
            int i = 0;
            while (i < d && f[static_cast<std::size_t>(i)] == cap) {
                f[static_cast<std::size_t>(i)] = 1;
                ++i;
            }
            if (i == d) break;
            ++f[static_cast<std::size_t>(i)];
        }
    } else {
        std::mt19937_64 rng(0xa11ce);
        for (int n = 0; n < 8; ++n) {
            std::vector<int> f(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                f[static_cast<std::size_t>(i)] =
                    1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
            DilationSpec spec = DilationSpec::per_axis(std::move(f));
            if (!spec.is_uniform()) specs.push_back(std::move(spec));
        }
    }

    OracleReport report;
    for (const DilationSpec& spec : specs) {
        OracleCheck check{spec, direct_census(s, spec, table), {}, false};
        std::map<ClassId, std::int64_t> predicted;
        if (spec.is_uniform()) {
            for (const auto& [cls, row] : uni.rows())
                predicted[cls] = uni.evaluate(cls, spec.factor(0));
        } else {
            for (const auto& [cls, row] : multi.rows())
                predicted[cls] = multi.evaluate(cls, spec.factors());
        }
        check.predicted = drop_zeros(std::move(predicted));
        check.pass = check.counted == check.predicted;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace ortho
