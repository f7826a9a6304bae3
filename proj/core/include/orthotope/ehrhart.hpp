#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "orthotope/census.hpp"
#include "orthotope/floral_vector.hpp"

namespace ortho {

/// The class-refined counting polynomials of a d-dimensional solid: for each
/// class alpha, L_alpha(t) = sum_k coeff[k] t^k of exact degree d - dim(alpha),
/// counting the lattice points of the dilated solid whose local class is
/// alpha.  All coefficients are integers.
class ClassPolynomial {
public:
    explicit ClassPolynomial(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<ClassId, std::vector<std::int64_t>>& rows() const {
        return rows_;
    }

    /// coeff of t^k in L_cls; 0 for absent classes or k out of range.
    std::int64_t coefficient(ClassId cls, int k) const;

    void set_row(ClassId cls, std::vector<std::int64_t> coeffs);

    /// Coefficients of sum_alpha L_alpha(t), the plain lattice-point count.
    std::vector<std::int64_t> total() const;

    std::int64_t evaluate(ClassId cls, std::int64_t t) const;
    std::int64_t evaluate_total(std::int64_t t) const;

    bool operator==(const ClassPolynomial&) const = default;

private:
    int dim_;
    std::map<ClassId, std::vector<std::int64_t>> rows_;
};

/// Multivariable refinement: coefficients indexed by the set of dilated
/// directions (bitmask I), so L_alpha(t_1, ..., t_d) =
/// sum_I coeff[I] * prod_{i in I} t_i.
class DirectionalPolynomial {
public:
    explicit DirectionalPolynomial(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<ClassId, std::map<std::uint32_t, std::int64_t>>& rows()
        const {
        return rows_;
    }

    std::int64_t coefficient(ClassId cls, std::uint32_t dirs) const;
    void set(ClassId cls, std::uint32_t dirs, std::int64_t value);

    std::int64_t evaluate(ClassId cls, const std::vector<int>& factors) const;
    std::int64_t evaluate_total(const std::vector<int>& factors) const;

private:
    int dim_;
    std::map<ClassId, std::map<std::uint32_t, std::int64_t>> rows_;
};

/// Recover the class polynomials from the census by inclusion-exclusion
/// over cell dimensions.  Computed by two routes (alternating binomial sums
/// and expansion of C_alpha(t - 1)) that must agree.
ClassPolynomial class_ehrhart(const CellCensus& census, const ClassTable& table);

/// sum_alpha L_alpha_k e_alpha, read off a computed polynomial.
FloralVector ehrhart_class_vector(const ClassPolynomial& poly, int k,
                                  const ClassTable& table);

/// The same vector predicted from the census alone: the k-th coefficient
/// vector equals 2^(k-d) sum over classes of codegree k of
/// C_alpha_k D(h^-1(e_alpha)).  Throws NonIntegralResult if the predicted
/// vector is not integral (impossible for a census of a genuine solid).
FloralVector census_class_vector(const CellCensus& census, int k,
                                 const ClassTable& table);

struct FormulaCheck {
    int k;
    bool pass;
    FloralVector from_polynomial;
    FloralVector from_census;
};

struct FormulaReport {
    std::vector<FormulaCheck> checks;
    bool pass() const;
};

/// Compare ehrhart_class_vector with census_class_vector for every k.
FormulaReport verify_class_formula(const CellCensus& census,
                                   const ClassTable& table);

/// Exact identity tying the census to its half-grid refinement: both sides
/// count the k-cells of class beta after one subdivision, with dyadic
/// weights.  Returns (weighted sum over the census, closed form); the two
/// are equal for every census of a solid.
std::pair<Dyadic, Dyadic> refinement_count_check(const CellCensus& census,
                                                 ClassId beta, int k,
                                                 const ClassTable& table);

/// sum_alpha L_alpha_0 e_alpha: the constant terms, an integer vector that
/// refines the Euler characteristic.  Cross-checked against the census
/// route; IdentityCheckFailed on disagreement.
FloralVector euler_vector(const ClassPolynomial& poly, const CellCensus& census,
                          const ClassTable& table);

/// (-1)^d times the constant term of the identity class.
std::int64_t euler_characteristic(const ClassPolynomial& poly);

struct ReciprocityReport {
    bool pass;
    std::vector<std::int64_t> identity_row; // L of the identity class, padded
    std::vector<std::int64_t> reflected;    // (-1)^d L(-t), total
};

/// L_identity(t) = (-1)^d L(-t): interior counts against reflected totals.
ReciprocityReport reciprocity_check(const ClassPolynomial& poly);

struct Valuations {
    std::int64_t vertex_count;
    std::int64_t edge_count;
    std::int64_t boundary_measure; // (d-1)-volume of the boundary
    std::int64_t volume;
};

/// Classical quantities read off the class polynomials.  Asserts the
/// boundary relation (the half-space coefficient of t^(d-1) is -2 times the
/// identity coefficient); IdentityCheckFailed if violated.
Valuations special_valuations(const ClassPolynomial& poly,
                              const ClassTable& table);

/// Per-direction-set refinement of the coefficients, from the directional
/// census.  Cross-checked against class_ehrhart by summing each dimension
/// level; IdentityCheckFailed on disagreement, NonIntegralResult if a
/// predicted coefficient is fractional.
DirectionalPolynomial directional_ehrhart(const CellCensus& census,
                                          const ClassTable& table);

} // namespace ortho
