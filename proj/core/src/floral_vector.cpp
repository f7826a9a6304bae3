#include "orthotope/floral_vector.hpp"

#include "orthotope/errors.hpp"

namespace ortho {

FloralVector FloralVector::basis(const ClassTable& table, ClassId id) {
    FloralVector v(table);
    v.set(id, 1);
    return v;
}

Dyadic FloralVector::coefficient(ClassId id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Dyadic() : it->second;
}

void FloralVector::set(ClassId id, const Dyadic& c) {
    if (id >= table_->size())
        throw Error("class id " + std::to_string(id) + " out of range");
    if (c.is_zero())
        terms_.erase(id);
    else
        terms_[id] = c;
}

void FloralVector::add(ClassId id, const Dyadic& c) {
    if (id >= table_->size())
        throw Error("class id " + std::to_string(id) + " out of range");
    auto& slot = terms_[id];
    slot += c;
    if (slot.is_zero()) terms_.erase(id);
}

bool FloralVector::is_integral() const {
    for (const auto& [id, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

void FloralVector::check_same(const FloralVector& o) const {
    if (table_ != o.table_)
        throw TableMismatch("floral vectors are bound to different tables");
}

FloralVector& FloralVector::operator+=(const FloralVector& o) {
    check_same(o);
    for (const auto& [id, c] : o.terms_) add(id, c);
    return *this;
}

FloralVector& FloralVector::operator-=(const FloralVector& o) {
    check_same(o);
    for (const auto& [id, c] : o.terms_) add(id, -c);
    return *this;
}

FloralVector FloralVector::scaled(const Dyadic& c) const {
    FloralVector out(*table_);
    if (c.is_zero()) return out;
    for (const auto& [id, v] : terms_) out.set(id, v * c);
    return out;
}

FloralVector FloralVector::operator*(const FloralVector& o) const {
    check_same(o);
    FloralVector out(*table_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            const Diagram p = product(table_->diagram(a), table_->diagram(b));
            auto id = table_->find(p);
            if (!id)
                throw DimensionCapExceeded(
                    "product class \"" + p.encoding() +
                    "\" exceeds the table cap " +
                    std::to_string(table_->max_dim()));
            out.add(*id, ca * cb);
        }
    return out;
}

bool FloralVector::operator==(const FloralVector& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

std::string FloralVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [id, c] : terms_) {
        std::string piece;
        if (c == Dyadic(1))
            piece = "";
        else if (c == Dyadic(-1))
            piece = "-";
        else
            piece = c.to_string();
        piece += "(" + table_->diagram(id).encoding() + ")";
        if (!out.empty() && piece[0] != '-') out += '+';
        out += piece;
    }
    return out;
}

FloralVector h(const FloralVector& v) {
    FloralVector out(v.table());
    for (const auto& [a, c] : v.terms())
        for (const auto& [b, m] : v.table().m_row(a)) out.add(b, c * Dyadic(m));
    return out;
}

FloralVector h_inverse(const FloralVector& v) {
    FloralVector out(v.table());
    for (const auto& [a, c] : v.terms())
        for (const auto& [b, s] : v.table().s_row(a)) out.add(b, c * Dyadic(s));
    return out;
}

FloralVector dilate(const FloralVector& v) {
    FloralVector out(v.table());
    for (const auto& [a, c] : v.terms())
        out.set(a, c * Dyadic::pow2(v.table().dim(a)));
    return out;
}

} // namespace ortho
