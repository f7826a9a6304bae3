#include "orthotope/ehrhart.hpp"

#include <bit>
#include <string>

#include "orthotope/errors.hpp"

namespace ortho {

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

} // namespace

std::int64_t ClassPolynomial::coefficient(ClassId cls, int k) const {
    auto it = rows_.find(cls);
    if (it == rows_.end()) return 0;
    if (k < 0 || k >= static_cast<int>(it->second.size())) return 0;
    return it->second[static_cast<std::size_t>(k)];
}

void ClassPolynomial::set_row(ClassId cls, std::vector<std::int64_t> coeffs) {
    rows_[cls] = std::move(coeffs);
}

std::vector<std::int64_t> ClassPolynomial::total() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(dim_) + 1, 0);
    for (const auto& [cls, row] : rows_)
        for (std::size_t k = 0; k < row.size(); ++k) out[k] += row[k];
    return out;
}

std::int64_t ClassPolynomial::evaluate(ClassId cls, std::int64_t t) const {
    auto it = rows_.find(cls);
    if (it == rows_.end()) return 0;
    std::int64_t v = 0;
    for (std::size_t k = it->second.size(); k-- > 0;)
        v = v * t + it->second[k];
    return v;
}

std::int64_t ClassPolynomial::evaluate_total(std::int64_t t) const {
    std::int64_t v = 0;
    for (const auto& [cls, row] : rows_) v += evaluate(cls, t);
    return v;
}

std::int64_t DirectionalPolynomial::coefficient(ClassId cls,
                                                std::uint32_t dirs) const {
    auto it = rows_.find(cls);
    if (it == rows_.end()) return 0;
    auto jt = it->second.find(dirs);
    return jt == it->second.end() ? 0 : jt->second;
}

void DirectionalPolynomial::set(ClassId cls, std::uint32_t dirs,
                                std::int64_t value) {
    if (value == 0) return;
    rows_[cls][dirs] = value;
}

std::int64_t DirectionalPolynomial::evaluate(
    ClassId cls, const std::vector<int>& factors) const {
    if (static_cast<int>(factors.size()) != dim_)
        throw LengthMismatch("dilation factor count does not match dimension");
    auto it = rows_.find(cls);
    if (it == rows_.end()) return 0;
    std::int64_t v = 0;
    for (const auto& [dirs, c] : it->second) {
        std::int64_t term = c;
        for (int i = 0; i < dim_; ++i)
            if ((dirs >> i) & 1) term *= factors[static_cast<std::size_t>(i)];
        v += term;
    }
    return v;
}

std::int64_t DirectionalPolynomial::evaluate_total(
    const std::vector<int>& factors) const {
    std::int64_t v = 0;
    for (const auto& [cls, row] : rows_) v += evaluate(cls, factors);
    return v;
}

ClassPolynomial class_ehrhart(const CellCensus& census,
                              const ClassTable& table) {
    const int d = census.dim();
    ClassPolynomial alt(d);
    for (ClassId cls : census.classes()) {
        const int deg = d - table.dim(cls);
        std::vector<std::int64_t> row(static_cast<std::size_t>(deg) + 1, 0);
        for (int k = 0; k <= deg; ++k)
            for (int j = k; j <= deg; ++j) {
                const std::int64_t term = binom(j, k) * census.by_dim(cls, j);
                row[static_cast<std::size_t>(k)] +=
                    (j + k) % 2 == 0 ? term : -term;
            }
        alt.set_row(cls, std::move(row));
    }

    // Independent route: accumulate C_j (t-1)^j directly.
    ClassPolynomial shift(d);
    for (ClassId cls : census.classes()) {
        const int deg = d - table.dim(cls);
        std::vector<std::int64_t> acc(static_cast<std::size_t>(deg) + 1, 0);
        std::vector<std::int64_t> pw{1}; // (t-1)^j
        for (int j = 0; j <= deg; ++j) {
            const std::int64_t c = census.by_dim(cls, j);
            for (std::size_t i = 0; i < pw.size(); ++i) acc[i] += c * pw[i];
            std::vector<std::int64_t> next(pw.size() + 1, 0);
            for (std::size_t i = 0; i < pw.size(); ++i) {
                next[i + 1] += pw[i];
                next[i] -= pw[i];
            }
            pw = std::move(next);
        }
        shift.set_row(cls, std::move(acc));
    }

    if (!(alt == shift))
        throw IdentityCheckFailed(
            "class polynomial routes disagree (binomial sums vs shift expansion)");
    return alt;
}

FloralVector ehrhart_class_vector(const ClassPolynomial& poly, int k,
                                  const ClassTable& table) {
    FloralVector v(table);
    for (const auto& [cls, row] : poly.rows())
        v.add(cls, poly.coefficient(cls, k));
    return v;
}

FloralVector census_class_vector(const CellCensus& census, int k,
                                 const ClassTable& table) {
    const int d = census.dim();
    FloralVector acc(table);
    for (ClassId cls : census.classes()) {
        if (table.dim(cls) != d - k) continue;
        const std::int64_t top = census.by_dim(cls, k);
        if (top == 0) continue;
        acc += dilate(h_inverse(FloralVector::basis(table, cls)))
                   .scaled(Dyadic(top));
    }
    FloralVector out = acc.scaled(Dyadic::pow2(k - d));
    if (!out.is_integral())
        throw NonIntegralResult(
            "predicted coefficient vector for t^" + std::to_string(k) +
            " is not integral: " + out.to_string());
    return out;
}

bool FormulaReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

FormulaReport verify_class_formula(const CellCensus& census,
                                   const ClassTable& table) {
    const ClassPolynomial poly = class_ehrhart(census, table);
    FormulaReport report;
    for (int k = 0; k <= census.dim(); ++k) {
        FloralVector lhs = ehrhart_class_vector(poly, k, table);
        FloralVector rhs = census_class_vector(census, k, table);
        const bool ok = lhs == rhs;
        report.checks.push_back({k, ok, std::move(lhs), std::move(rhs)});
    }
    return report;
}

std::pair<Dyadic, Dyadic> refinement_count_check(const CellCensus& census,
                                                 ClassId beta, int k,
                                                 const ClassTable& table) {
    const int d = census.dim();
    Dyadic lhs;
    for (ClassId cls : census.classes()) {
        const auto& row = table.m_row(cls);
        auto it = row.find(beta);
        if (it == row.end()) continue;
        lhs += Dyadic::pow2(-table.dim(cls)) *
               Dyadic(it->second * census.by_dim(cls, k));
    }
    const int deg = d - table.dim(beta);
    Dyadic rhs = Dyadic::pow2(-table.dim(beta)) *
                 Dyadic(binom(deg, k) * census.by_dim(beta, deg));
    return {lhs, rhs};
}

FloralVector euler_vector(const ClassPolynomial& poly, const CellCensus& census,
                          const ClassTable& table) {
    FloralVector direct = ehrhart_class_vector(poly, 0, table);
    FloralVector predicted = census_class_vector(census, 0, table);
    if (!(direct == predicted))
        throw IdentityCheckFailed("euler vector routes disagree: " +
                                  direct.to_string() + " vs " +
                                  predicted.to_string());
    return direct;
}

std::int64_t euler_characteristic(const ClassPolynomial& poly) {
    const std::int64_t c = poly.coefficient(kIdentityClass, 0);
    return poly.dim() % 2 == 0 ? c : -c;
}

ReciprocityReport reciprocity_check(const ClassPolynomial& poly) {
    const int d = poly.dim();
    ReciprocityReport out;
    out.identity_row.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k)
        out.identity_row[static_cast<std::size_t>(k)] =
            poly.coefficient(kIdentityClass, k);
    const std::vector<std::int64_t> total = poly.total();
    out.reflected.resize(total.size());
    for (std::size_t k = 0; k < total.size(); ++k)
        out.reflected[k] = (d + static_cast<int>(k)) % 2 == 0 ? total[k]
                                                              : -total[k];
    out.pass = out.identity_row == out.reflected;
    return out;
}

Valuations special_valuations(const ClassPolynomial& poly,
                              const ClassTable& table) {
    const int d = poly.dim();
    Valuations v{};
    for (const auto& [cls, row] : poly.rows()) {
        if (table.dim(cls) == d) v.vertex_count += row[0];
        if (table.dim(cls) == d - 1) v.edge_count -= row[0];
    }
    v.volume = poly.coefficient(kIdentityClass, d);
    const ClassId half_space = table.id_of(Diagram::leaf());
    v.boundary_measure = poly.coefficient(half_space, d - 1);
    if (v.boundary_measure != -2 * poly.coefficient(kIdentityClass, d - 1))
        throw IdentityCheckFailed(
            "boundary relation violated: half-space coefficient is not -2 "
            "times the identity coefficient at degree d-1");
    return v;
}

DirectionalPolynomial directional_ehrhart(const CellCensus& census,
                                          const ClassTable& table) {
    const int d = census.dim();
    DirectionalPolynomial out(d);
    for (std::uint32_t dirs = 0; dirs < (1u << d); ++dirs) {
        const int k = std::popcount(dirs);
        FloralVector acc(table);
        for (ClassId cls : census.classes()) {
            if (table.dim(cls) != d - k) continue;
            const std::int64_t c = census.by_directions(cls, dirs);
            if (c == 0) continue;
            acc += dilate(h_inverse(FloralVector::basis(table, cls)))
                       .scaled(Dyadic(c));
        }
        const FloralVector scaled = acc.scaled(Dyadic::pow2(k - d));
        if (!scaled.is_integral())
            throw NonIntegralResult(
                "directional coefficient vector is not integral");
        for (const auto& [cls, coeff] : scaled.terms())
            out.set(cls, dirs, coeff.integer_value());
    }

    // The direction-set coefficients must sum, level by level, to the
    // univariate ones.
    const ClassPolynomial uni = class_ehrhart(census, table);
    for (const auto& [cls, row] : uni.rows())
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            std::int64_t sum = 0;
            for (std::uint32_t dirs = 0; dirs < (1u << d); ++dirs)
                if (std::popcount(dirs) == k) sum += out.coefficient(cls, dirs);
            if (sum != row[static_cast<std::size_t>(k)])
                throw IdentityCheckFailed(
                    "directional coefficients do not specialise to the "
                    "univariate polynomial");
        }
    for (const auto& [cls, row] : out.rows())
        if (uni.rows().find(cls) == uni.rows().end())
            throw IdentityCheckFailed(
                "directional coefficients mention a class absent from the "
                "univariate polynomial");
    return out;
}

} // namespace ortho
