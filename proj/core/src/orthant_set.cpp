#include "orthotope/orthant_set.hpp"

#include <bit>
#include <optional>
#include <string>

#include "orthotope/errors.hpp"

namespace ortho {

namespace {

// All 2^k patterns over k coordinates, as a bitmask.
std::uint64_t cube(int k) {
    return k >= 6 ? ~std::uint64_t{0}
                  : (std::uint64_t{1} << (1u << k)) - 1;
}

} // namespace

OrthantSet::OrthantSet(int arity) : arity_(arity) {
    if (arity < 0 || arity > kMaxArity)
        throw DimensionCapExceeded("orthant set arity " +
                                   std::to_string(arity) +
                                   " outside [0, " +
                                   std::to_string(kMaxArity) + "]");
}

OrthantSet OrthantSet::full(int arity) {
    OrthantSet s(arity);
    s.mask_ = cube(arity);
    return s;
}

bool OrthantSet::contains_signs(const std::vector<int>& signs) const {
    if (static_cast<int>(signs.size()) != arity_)
        throw LengthMismatch("sign tuple length does not match arity");
    unsigned pattern = 0;
    for (int i = 0; i < arity_; ++i)
        if (signs[static_cast<std::size_t>(i)] > 0) pattern |= 1u << i;
    return contains(pattern);
}

void OrthantSet::insert_signs(const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != arity_)
        throw LengthMismatch("sign tuple length does not match arity");
    unsigned pattern = 0;
    for (int i = 0; i < arity_; ++i)
        if (signs[static_cast<std::size_t>(i)] > 0) pattern |= 1u << i;
    insert(pattern);
}

int OrthantSet::count() const { return std::popcount(mask_); }

bool OrthantSet::is_full() const { return mask_ == cube(arity_); }

OrthantSet OrthantSet::complemented() const {
    OrthantSet s(arity_);
    s.mask_ = cube(arity_) & ~mask_;
    return s;
}

namespace {

struct Split {
    std::uint64_t mask_a = 0, mask_b = 0;
    std::vector<int> coords_a, coords_b;
};

// Try to write `mask` (over the coordinates `coords`, local bit j =
// coords[j]) as a cartesian product across some bipartition.  Local bit 0
// always goes to the A side, so each unordered bipartition is tried once.
std::optional<Split> find_product_split(std::uint64_t mask,
                                        const std::vector<int>& coords) {
    const int k = static_cast<int>(coords.size());
    const int n = std::popcount(mask);
    for (unsigned a = 1; a < (1u << k) - 1; a += 2) {
        std::uint64_t sa = 0, sb = 0;
        for (unsigned q = 0; q < (1u << k); ++q) {
            if (!((mask >> q) & 1)) continue;
            unsigned pa = 0, pb = 0;
            int ia = 0, ib = 0;
            for (int j = 0; j < k; ++j) {
                const bool bit = (q >> j) & 1;
                if ((a >> j) & 1) {
                    if (bit) pa |= 1u << ia;
                    ++ia;
                } else {
                    if (bit) pb |= 1u << ib;
                    ++ib;
                }
            }
            sa |= std::uint64_t{1} << pa;
            sb |= std::uint64_t{1} << pb;
        }
        if (std::popcount(sa) * std::popcount(sb) != n) continue;
        Split out;
        out.mask_a = sa;
        out.mask_b = sb;
        for (int j = 0; j < k; ++j)
            ((a >> j) & 1 ? out.coords_a : out.coords_b).push_back(coords[j]);
        return out;
    }
    return std::nullopt;
}

struct Recognizer {
    std::vector<int> orientations;

    // pre: mask depends on every coordinate in coords (so it is neither
    // empty nor full), coords nonempty.
    std::optional<Diagram> run(std::uint64_t mask,
                               const std::vector<int>& coords) {
        const int k = static_cast<int>(coords.size());
        if (k == 1) {
            orientations[static_cast<std::size_t>(coords[0])] =
                mask == 0b10 ? +1 : -1;
            return Diagram::leaf();
        }
        if (auto sp = find_product_split(mask, coords)) {
            auto fa = run(sp->mask_a, sp->coords_a);
            if (!fa) return std::nullopt;
            auto fb = run(sp->mask_b, sp->coords_b);
            if (!fb) return std::nullopt;
            return product(*fa, *fb);
        }
        // De Morgan: if the complement is a product, the set itself is a
        // disjunction of the complemented factors.
        if (auto sp = find_product_split(cube(k) & ~mask, coords)) {
            const int ka = static_cast<int>(sp->coords_a.size());
            const int kb = static_cast<int>(sp->coords_b.size());
            auto fa = run(cube(ka) & ~sp->mask_a, sp->coords_a);
            if (!fa) return std::nullopt;
            auto fb = run(cube(kb) & ~sp->mask_b, sp->coords_b);
            if (!fb) return std::nullopt;
            std::vector<Diagram> kids;
            kids.push_back(std::move(*fa));
            kids.push_back(std::move(*fb));
            return Diagram::parallel(std::move(kids));
        }
        return std::nullopt;
    }
};

} // namespace

Recognition recognize(const OrthantSet& set) {
    const int m = set.arity();
    Recognition out;
    out.orientations.assign(static_cast<std::size_t>(m), +1);
    const std::uint64_t mask = set.mask();
    if (mask == 0) {
        out.kind = Recognition::Kind::ConstFalse;
        return out;
    }
    if (mask == cube(m)) {
        out.kind = Recognition::Kind::ConstTrue;
        return out;
    }
    for (int i = 0; i < m; ++i) {
        for (unsigned q = 0; q < (1u << m); ++q) {
            if (((mask >> q) & 1) != ((mask >> (q ^ (1u << i))) & 1)) {
                out.essential.push_back(i);
                break;
            }
        }
    }
    // Restrict to the essential coordinates; the inessential ones are fixed
    // to the negative side when sampling (any choice gives the same set).
    std::uint64_t reduced = 0;
    const int me = static_cast<int>(out.essential.size());
    for (unsigned r = 0; r < (1u << me); ++r) {
        unsigned q = 0;
        for (int j = 0; j < me; ++j)
            if ((r >> j) & 1)
                q |= 1u << out.essential[static_cast<std::size_t>(j)];
        if ((mask >> q) & 1) reduced |= std::uint64_t{1} << r;
    }
    Recognizer rec{out.orientations};
    auto d = rec.run(reduced, out.essential);
    if (!d) {
        out.kind = Recognition::Kind::NotFloral;
        return out;
    }
    out.kind = Recognition::Kind::Floral;
    out.diagram = std::move(*d);
    out.orientations = std::move(rec.orientations);
    return out;
}

OrthantSet orthants_of(const Diagram& d, const std::vector<int>& orientations) {
    const int n = d.dim();
    if (static_cast<int>(orientations.size()) != n)
        throw LengthMismatch("orientation vector length does not match dimension");
    OrthantSet out(n);
    SignVector signs(static_cast<std::size_t>(n));
    for (unsigned q = 0; q < (1u << n); ++q) {
        for (int i = 0; i < n; ++i) {
            const int coord_sign = (q >> i) & 1 ? +1 : -1;
            signs[static_cast<std::size_t>(i)] =
                coord_sign == orientations[static_cast<std::size_t>(i)] ? +1
                                                                        : -1;
        }
        if (partial_eval(d, signs).kind == EvalKind::ConstTrue)
            out.insert(q);
    }
    return out;
}

} // namespace ortho
