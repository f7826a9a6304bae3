#include "orthotope/class_table.hpp"

#include <algorithm>
#include <utility>

#include "orthotope/errors.hpp"

namespace ortho {

namespace {

struct Enumerator {
    // (dimension, root kind) -> all canonical diagrams with that root
    std::map<std::pair<int, NodeKind>, std::vector<Diagram>> memo;

    // Diagrams of dimension n usable as children of a `parent` node: any
    // root except `parent` itself.
    std::vector<Diagram> children_for(int n, NodeKind parent) {
        if (n == 1) return {Diagram::leaf()};
        const NodeKind other = parent == NodeKind::Series ? NodeKind::Parallel
                                                          : NodeKind::Series;
        return rooted(n, other);
    }

    const std::vector<Diagram>& rooted(int n, NodeKind kind) {
        auto key = std::make_pair(n, kind);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // Pool of candidate children of any dimension < n, in a fixed order.
        std::vector<Diagram> pool;
        for (int m = 1; m < n; ++m) {
            auto part = children_for(m, kind);
            pool.insert(pool.end(), part.begin(), part.end());
        }
        std::vector<Diagram> out;
        std::vector<Diagram> picked;
        // Multisets of >= 2 pool elements with dimensions summing to n,
        // enumerated with non-decreasing pool index.
        auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
            if (remaining == 0) {
                if (picked.size() >= 2) {
                    auto copy = picked;
                    out.push_back(kind == NodeKind::Series
                                      ? Diagram::series(std::move(copy))
                                      : Diagram::parallel(std::move(copy)));
                }
                return;
            }
            for (std::size_t j = from; j < pool.size(); ++j) {
                if (pool[j].dim() > remaining) continue;
                picked.push_back(pool[j]);
                self(self, j, remaining - pool[j].dim());
                picked.pop_back();
            }
        };
        rec(rec, 0, n);
        return memo.emplace(key, std::move(out)).first->second;
    }
};

} // namespace

std::vector<Diagram> enumerate_classes(int max_dim) {
    if (max_dim < 0 || max_dim > ClassTable::kMaxDim)
        throw DimensionCapExceeded("class enumeration cap " +
                                   std::to_string(max_dim) + " outside [0, " +
                                   std::to_string(ClassTable::kMaxDim) + "]");
    Enumerator en;
    std::vector<Diagram> out;
    out.push_back(Diagram::one());
    if (max_dim >= 1) out.push_back(Diagram::leaf());
    for (int n = 2; n <= max_dim; ++n) {
        std::vector<Diagram> level = en.rooted(n, NodeKind::Series);
        auto par = en.rooted(n, NodeKind::Parallel);
        level.insert(level.end(), par.begin(), par.end());
        std::sort(level.begin(), level.end(),
                  [](const Diagram& a, const Diagram& b) {
                      return a.encoding() < b.encoding();
                  });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

IntRow m_row(const Diagram& d, const ClassTable& table) {
    const int n = d.dim();
    IntRow row;
    SignVector s(static_cast<std::size_t>(n), -1);
    while (true) {
        int zeros = 0;
        for (int v : s)
            if (v == 0) ++zeros;
        PartialEval r = partial_eval(d, s);
        if (r.kind == EvalKind::ConstTrue) {
            if (zeros == 0) ++row[kIdentityClass];
        } else if (r.kind == EvalKind::Residual &&
                   static_cast<int>(r.survivors.size()) == zeros) {
            ++row[table.id_of(r.residual)];
        }
        // Odometer over {-1, 0, +1}^n.
        int i = 0;
        while (i < n && s[static_cast<std::size_t>(i)] == 1) {
            s[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == n) break;
        ++s[static_cast<std::size_t>(i)];
    }
    return row;
}

namespace {

// h^-1 rows via the geometric series of the nilpotent part: with
// N = M - I (strictly dimension-decreasing off the diagonal),
// S = sum_k (-1)^k N^k, truncated after dim(alpha) steps for row alpha.
std::vector<IntRow> s_rows_series(const std::vector<IntRow>& m_rows,
                                  const std::vector<int>& dims) {
    const std::size_t n = m_rows.size();
    std::vector<IntRow> nilpotent(n);
    for (std::size_t a = 0; a < n; ++a) {
        nilpotent[a] = m_rows[a];
        auto it = nilpotent[a].find(static_cast<ClassId>(a));
        if (it == nilpotent[a].end() || it->second != 1)
            throw IdentityCheckFailed("h matrix diagonal entry is not 1");
        nilpotent[a].erase(it);
    }
    std::vector<IntRow> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        IntRow acc{{static_cast<ClassId>(a), 1}};
        IntRow power{{static_cast<ClassId>(a), 1}};
        int sign = 1;
        for (int k = 1; k <= dims[a]; ++k) {
            IntRow next;
            for (const auto& [b, vb] : power)
                for (const auto& [c, vc] : nilpotent[b]) {
                    auto& slot = next[c];
                    slot += vb * vc;
                    if (slot == 0) next.erase(c);
                }
            power = std::move(next);
            if (power.empty()) break;
            sign = -sign;
            for (const auto& [b, v] : power) {
                auto& slot = acc[b];
                slot += sign * v;
                if (slot == 0) acc.erase(b);
            }
        }
        out[a] = std::move(acc);
    }
    return out;
}

// h^-1 rows by triangular back substitution: solve S.M = I one row at a
// time, filling columns in order of decreasing dimension.
std::vector<IntRow> s_rows_backsub(const std::vector<IntRow>& m_rows,
                                   const std::vector<int>& dims) {
    const std::size_t n = m_rows.size();
    std::vector<IntRow> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        IntRow& row = out[a];
        row[static_cast<ClassId>(a)] = 1;
        for (std::size_t bi = a; bi-- > 0;) {
            const ClassId b = static_cast<ClassId>(bi);
            if (dims[bi] >= dims[a] && bi != a) continue;
            std::int64_t acc = 0;
            for (const auto& [g, sg] : row) {
                auto it = m_rows[g].find(b);
                if (it != m_rows[g].end() && g != b) acc += sg * it->second;
            }
            if (acc != 0) row[b] = -acc;
        }
    }
    return out;
}

} // namespace

ClassTable::ClassTable(int max_dim) : max_dim_(max_dim) {
    diagrams_ = enumerate_classes(max_dim);
    const std::size_t n = diagrams_.size();
    by_dim_.resize(static_cast<std::size_t>(max_dim) + 1);
    for (std::size_t i = 0; i < n; ++i) {
        index_.emplace(diagrams_[i].encoding(), static_cast<ClassId>(i));
        by_dim_[static_cast<std::size_t>(diagrams_[i].dim())].push_back(
            static_cast<ClassId>(i));
    }
    mu_.reserve(n);
    rho_.reserve(n);
    complement_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        mu_.push_back(ortho::mu(diagrams_[i]));
        rho_.push_back(ortho::rho(diagrams_[i]));
        complement_.push_back(
            i == kIdentityClass
                ? std::nullopt
                : std::optional<ClassId>(id_of(complement(diagrams_[i]))));
    }
    m_rows_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        m_rows_.push_back(ortho::m_row(diagrams_[i], *this));

    std::vector<int> dims(n);
    for (std::size_t i = 0; i < n; ++i) dims[i] = diagrams_[i].dim();
    s_rows_ = s_rows_series(m_rows_, dims);
    if (s_rows_ != s_rows_backsub(m_rows_, dims))
        throw IdentityCheckFailed(
            "h^-1 rows disagree between series and back-substitution routes");
}

std::optional<ClassId> ClassTable::complement_of(ClassId id) const {
    return complement_.at(id);
}

ClassId ClassTable::id_of(const Diagram& d) const {
    if (auto id = find(d)) return *id;
    throw Error("class \"" + d.encoding() + "\" is not in the table (cap " +
                std::to_string(max_dim_) + ")");
}

ClassId ClassTable::id_of(std::string_view encoding) const {
    if (auto id = find(encoding)) return *id;
    throw Error("class \"" + std::string(encoding) +
                "\" is not in the table (cap " + std::to_string(max_dim_) +
                ")");
}

std::optional<ClassId> ClassTable::find(const Diagram& d) const {
    return find(d.encoding());
}

std::optional<ClassId> ClassTable::find(std::string_view encoding) const {
    auto it = index_.find(encoding);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<ClassId>& ClassTable::classes_of_dim(int n) const {
    static const std::vector<ClassId> empty;
    if (n < 0 || n > max_dim_) return empty;
    return by_dim_[static_cast<std::size_t>(n)];
}

} // namespace ortho
