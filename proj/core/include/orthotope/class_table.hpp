#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthotope/diagram.hpp"

namespace ortho {

/// Index of a class in a ClassTable.  0 is always the identity class "1".
using ClassId = std::uint32_t;
inline constexpr ClassId kIdentityClass = 0;

/// All classes of dimension <= max_dim in table order: ascending dimension,
/// then ascending encoding.  Counts per dimension from 0 are 1, 1, 2, 4, 10,
/// 24, 66, 180, 522, ...
std::vector<Diagram> enumerate_classes(int max_dim);

/// A sparse integer row keyed by class id.
using IntRow = std::map<ClassId, std::int64_t>;

class ClassTable;

/// Structure constants of the subdivision operator h on the basis class of
/// d: coefficient of each residual class over all ways of fixing a subset of
/// coordinates to signs.  A residual is counted only when it still depends
/// on every unfixed coordinate.  m_row(d)["1"] counts full sign assignments
/// satisfying d, so m_{d,1} = mu(d).
IntRow m_row(const Diagram& d, const ClassTable& table);

/// The classes up to a dimension cap together with their precomputed data:
/// mu, rho, sigma, complements, the h structure constants (m-rows) and the
/// h^-1 structure constants (s-rows).  The s-rows are computed by two
/// independent routes (nilpotent geometric series and triangular back
/// substitution) and cross-checked at build time.
class ClassTable {
public:
    static constexpr int kDefaultMaxDim = 6;
    static constexpr int kMaxDim = 8;

    explicit ClassTable(int max_dim = kDefaultMaxDim);

    int max_dim() const { return max_dim_; }
    std::size_t size() const { return diagrams_.size(); }

    const Diagram& diagram(ClassId id) const { return diagrams_.at(id); }
    int dim(ClassId id) const { return diagrams_.at(id).dim(); }
    std::int64_t mu(ClassId id) const { return mu_.at(id); }
    int rho(ClassId id) const { return rho_.at(id); }
    int sigma(ClassId id) const { return rho_.at(id) % 2 == 0 ? 1 : -1; }

    /// Complement class; nullopt for the identity class.
    std::optional<ClassId> complement_of(ClassId id) const;

    const IntRow& m_row(ClassId id) const { return m_rows_.at(id); }
    const IntRow& s_row(ClassId id) const { return s_rows_.at(id); }

    ClassId id_of(const Diagram& d) const;
    ClassId id_of(std::string_view encoding) const;
    std::optional<ClassId> find(const Diagram& d) const;
    std::optional<ClassId> find(std::string_view encoding) const;

    /// Ids of the classes of one dimension, ascending.
    const std::vector<ClassId>& classes_of_dim(int n) const;

private:
    int max_dim_;
    std::vector<Diagram> diagrams_;
    std::map<std::string, ClassId, std::less<>> index_;
    std::vector<std::int64_t> mu_;
    std::vector<int> rho_;
    std::vector<std::optional<ClassId>> complement_;
    std::vector<IntRow> m_rows_;
    std::vector<IntRow> s_rows_;
    std::vector<std::vector<ClassId>> by_dim_;
};

} // namespace ortho
