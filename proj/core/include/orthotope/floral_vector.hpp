#pragma once

#include <map>
#include <string>

#include "orthotope/class_table.hpp"
#include "orthotope/dyadic.hpp"

namespace ortho {

/// An element of the class algebra over a fixed table: a finite formal sum
/// of basis classes with dyadic coefficients.  The basis product is the
/// concatenation product of classes, extended bilinearly.  Every vector is
/// bound to its table; mixing tables throws TableMismatch, and products
/// whose class would exceed the table cap throw DimensionCapExceeded.
class FloralVector {
public:
    explicit FloralVector(const ClassTable& table) : table_(&table) {}

    static FloralVector basis(const ClassTable& table, ClassId id);

    const ClassTable& table() const { return *table_; }
    const std::map<ClassId, Dyadic>& terms() const { return terms_; }

    Dyadic coefficient(ClassId id) const;
    void set(ClassId id, const Dyadic& c);
    void add(ClassId id, const Dyadic& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    FloralVector& operator+=(const FloralVector& o);
    FloralVector& operator-=(const FloralVector& o);
    friend FloralVector operator+(FloralVector a, const FloralVector& b) {
        a += b;
        return a;
    }
    friend FloralVector operator-(FloralVector a, const FloralVector& b) {
        a -= b;
        return a;
    }

    FloralVector scaled(const Dyadic& c) const;
    FloralVector operator*(const FloralVector& o) const;

    bool operator==(const FloralVector& o) const;

    /// Rendered like "(1)-18(x)+11(x*x)+7(x+x)"; "0" when empty.
    std::string to_string() const;

private:
    void check_same(const FloralVector& o) const;

    const ClassTable* table_;
    std::map<ClassId, Dyadic> terms_;
};

/// The subdivision operator h: linear extension of the m-rows.  An algebra
/// automorphism.
FloralVector h(const FloralVector& v);

/// The inverse h^-1: linear extension of the s-rows.
FloralVector h_inverse(const FloralVector& v);

/// The dilation operator D: scales each basis class by 2^dim.
FloralVector dilate(const FloralVector& v);

} // namespace ortho
