#include "orthotope/diagram.hpp"

#include <algorithm>
#include <cctype>

#include "orthotope/errors.hpp"

namespace ortho {

namespace {

// Child order inside a node: descending dimension, ties by encoding.  This
// is the order that reproduces the conventional way of writing the classes
// ("(x+x)*x", "x*x+x", ...).
bool child_before(const Diagram& a, const Diagram& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.encoding() < b.encoding();
}

std::string encode(NodeKind kind, const std::vector<Diagram>& children) {
    std::string out;
    const char sep = kind == NodeKind::Series ? '*' : '+';
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) out += sep;
        const Diagram& c = children[i];
        const bool wrap =
            kind == NodeKind::Series && c.kind() == NodeKind::Parallel;
        if (wrap) out += '(';
        out += c.encoding();
        if (wrap) out += ')';
    }
    return out;
}

} // namespace

Diagram Diagram::leaf() {
    return Diagram(NodeKind::Leaf, {}, 1, "x");
}

Diagram Diagram::series(std::vector<Diagram> children) {
    std::vector<Diagram> flat;
    for (Diagram& c : children) {
        if (c.kind_ == NodeKind::One) continue; // TRUE is the unit
        if (c.kind_ == NodeKind::Series)
            flat.insert(flat.end(), c.children_.begin(), c.children_.end());
        else
            flat.push_back(std::move(c));
    }
    if (flat.empty()) return one();
    if (flat.size() == 1) return std::move(flat.front());
    std::sort(flat.begin(), flat.end(), child_before);
    int dim = 0;
    for (const Diagram& c : flat) dim += c.dim_;
    std::string enc = encode(NodeKind::Series, flat);
    return Diagram(NodeKind::Series, std::move(flat), dim, std::move(enc));
}

Diagram Diagram::parallel(std::vector<Diagram> children) {
    std::vector<Diagram> flat;
    for (Diagram& c : children) {
        if (c.kind_ == NodeKind::One) return one(); // TRUE absorbs
        if (c.kind_ == NodeKind::Parallel)
            flat.insert(flat.end(), c.children_.begin(), c.children_.end());
        else
            flat.push_back(std::move(c));
    }
    if (flat.empty()) return one();
    if (flat.size() == 1) return std::move(flat.front());
    std::sort(flat.begin(), flat.end(), child_before);
    int dim = 0;
    for (const Diagram& c : flat) dim += c.dim_;
    std::string enc = encode(NodeKind::Parallel, flat);
    return Diagram(NodeKind::Parallel, std::move(flat), dim, std::move(enc));
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    char peek() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        return pos < s.size() ? s[pos] : '\0';
    }

    Diagram expr() {
        std::vector<Diagram> terms;
        terms.push_back(term());
        while (peek() == '+') {
            ++pos;
            terms.push_back(term());
        }
        return Diagram::parallel(std::move(terms));
    }

    Diagram term() {
        std::vector<Diagram> factors;
        factors.push_back(factor());
        while (peek() == '*') {
            ++pos;
            factors.push_back(factor());
        }
        return Diagram::series(std::move(factors));
    }

    Diagram factor() {
        switch (peek()) {
        case 'x':
            ++pos;
            return Diagram::leaf();
        case '1':
            ++pos;
            return Diagram::one();
        case '(': {
            ++pos;
            Diagram d = expr();
            if (peek() != ')')
                throw ParseError("unbalanced '(' in diagram encoding");
            ++pos;
            return d;
        }
        default:
            throw ParseError("unexpected character in diagram encoding: \"" +
                             std::string(s) + "\"");
        }
    }
};

} // namespace

Diagram parse_diagram(std::string_view text) {
    Parser p{text};
    Diagram d = p.expr();
    if (p.peek() != '\0')
        throw ParseError("trailing characters in diagram encoding: \"" +
                         std::string(text) + "\"");
    return d;
}

Diagram complement(const Diagram& d) {
    switch (d.kind()) {
    case NodeKind::One:
        throw ComplementOfIdentity("the identity class \"1\" has no complement");
    case NodeKind::Leaf:
        return Diagram::leaf();
    default: {
        std::vector<Diagram> kids;
        kids.reserve(d.children().size());
        for (const Diagram& c : d.children()) kids.push_back(complement(c));
        return d.kind() == NodeKind::Series ? Diagram::parallel(std::move(kids))
                                            : Diagram::series(std::move(kids));
    }
    }
}

Diagram product(const Diagram& a, const Diagram& b) {
    std::vector<Diagram> pair;
    pair.reserve(2);
    pair.push_back(a);
    pair.push_back(b);
    return Diagram::series(std::move(pair));
}

std::int64_t mu(const Diagram& d) {
    switch (d.kind()) {
    case NodeKind::One:
    case NodeKind::Leaf:
        return 1;
    case NodeKind::Series: {
        std::int64_t m = 1;
        for (const Diagram& c : d.children()) m *= mu(c);
        return m;
    }
    case NodeKind::Parallel: {
        // Count the complementary event: every branch FALSE.
        std::int64_t dead = 1;
        for (const Diagram& c : d.children())
            dead *= (std::int64_t{1} << c.dim()) - mu(c);
        return (std::int64_t{1} << d.dim()) - dead;
    }
    }
    return 1; // unreachable
}

int rho(const Diagram& d) {
    int r = d.kind() == NodeKind::Parallel
                ? static_cast<int>(d.children().size()) - 1
                : 0;
    for (const Diagram& c : d.children()) r += rho(c);
    return r;
}

namespace {

// Walks leaves left to right, which is encoding order because children are
// stored sorted.  Children are always fully traversed, even once the value
// of the node is decided, so that the cursor stays aligned.
struct Evaluator {
    const SignVector& signs;
    int cursor = 0;

    PartialEval eval(const Diagram& d) {
        switch (d.kind()) {
        case NodeKind::One:
            return {EvalKind::ConstTrue, Diagram(), {}};
        case NodeKind::Leaf: {
            const int idx = cursor++;
            const int s = signs[static_cast<std::size_t>(idx)];
            if (s > 0) return {EvalKind::ConstTrue, Diagram(), {}};
            if (s < 0) return {EvalKind::ConstFalse, Diagram(), {}};
            return {EvalKind::Residual, Diagram::leaf(), {idx}};
        }
        case NodeKind::Series: {
            bool dead = false;
            std::vector<Diagram> live;
            std::vector<int> survivors;
            for (const Diagram& c : d.children()) {
                PartialEval r = eval(c);
                if (r.kind == EvalKind::ConstFalse) dead = true;
                if (r.kind == EvalKind::Residual) {
                    live.push_back(std::move(r.residual));
                    survivors.insert(survivors.end(), r.survivors.begin(),
                                     r.survivors.end());
                }
            }
            if (dead) return {EvalKind::ConstFalse, Diagram(), {}};
            if (live.empty()) return {EvalKind::ConstTrue, Diagram(), {}};
            return {EvalKind::Residual, Diagram::series(std::move(live)),
                    std::move(survivors)};
        }
        case NodeKind::Parallel: {
            bool alive = false;
            std::vector<Diagram> live;
            std::vector<int> survivors;
            for (const Diagram& c : d.children()) {
                PartialEval r = eval(c);
                if (r.kind == EvalKind::ConstTrue) alive = true;
                if (r.kind == EvalKind::Residual) {
                    live.push_back(std::move(r.residual));
                    survivors.insert(survivors.end(), r.survivors.begin(),
                                     r.survivors.end());
                }
            }
            if (alive) return {EvalKind::ConstTrue, Diagram(), {}};
            if (live.empty()) return {EvalKind::ConstFalse, Diagram(), {}};
            return {EvalKind::Residual, Diagram::parallel(std::move(live)),
                    std::move(survivors)};
        }
        }
        return {EvalKind::ConstTrue, Diagram(), {}}; // unreachable
    }
};

} // namespace

PartialEval partial_eval(const Diagram& d, const SignVector& signs) {
    if (static_cast<int>(signs.size()) != d.dim())
        throw LengthMismatch("sign vector has length " +
                             std::to_string(signs.size()) + ", diagram \"" +
                             d.encoding() + "\" has dimension " +
                             std::to_string(d.dim()));
    Evaluator ev{signs};
    return ev.eval(d);
}

} // namespace ortho
