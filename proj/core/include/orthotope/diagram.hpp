#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ortho {

/// A series-parallel diagram: a read-once Boolean combination of distinct
/// literals, one per coordinate direction.  Series nodes are conjunctions,
/// parallel nodes are disjunctions.  Diagrams are kept canonical at all
/// times:
///
///   * no node has exactly one child,
///   * no series child of a series node, no parallel child of a parallel
///     node,
///   * children are sorted by descending dimension, then by encoding,
///   * the constant TRUE ("1", the class of interior cells) appears only as
///     the whole diagram, never as a subterm.
///
/// Two diagrams are equal iff their encodings are equal.  The encoding
/// grammar writes a leaf as "x", a series node by joining children with "*"
/// (parenthesising parallel children), and a parallel node by joining with
/// "+".  Examples: "x*x", "x+x", "(x+x)*x", "x*x+x".
enum class NodeKind : std::uint8_t { One, Leaf, Series, Parallel };

class Diagram {
public:
    /// The identity class "1" (dimension 0, constant TRUE).
    Diagram() = default;

    static Diagram one() { return Diagram(); }
    static Diagram leaf();

    /// Build a conjunction.  Canonicalises: drops TRUE children, flattens
    /// nested series nodes, collapses empty/singleton lists, sorts.
    static Diagram series(std::vector<Diagram> children);

    /// Build a disjunction.  Canonicalises as above; a TRUE child absorbs
    /// the whole node.
    static Diagram parallel(std::vector<Diagram> children);

    NodeKind kind() const { return kind_; }
    const std::vector<Diagram>& children() const { return children_; }

    /// Number of leaves, i.e. the dimension of the class.
    int dim() const { return dim_; }

    const std::string& encoding() const { return encoding_; }

    bool operator==(const Diagram& o) const { return encoding_ == o.encoding_; }

    /// Table order: by dimension, then by encoding.
    bool operator<(const Diagram& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        return encoding_ < o.encoding_;
    }

private:
    Diagram(NodeKind kind, std::vector<Diagram> children, int dim,
            std::string encoding)
        : kind_(kind), children_(std::move(children)), dim_(dim),
          encoding_(std::move(encoding)) {}

    NodeKind kind_ = NodeKind::One;
    std::vector<Diagram> children_;
    int dim_ = 0;
    std::string encoding_ = "1";
};

/// Parse the encoding grammar.  Accepts optional whitespace.  Throws
/// ParseError on malformed input.
Diagram parse_diagram(std::string_view text);

/// Swap series and parallel nodes throughout.  An involution on classes of
/// positive dimension; throws ComplementOfIdentity on "1".
Diagram complement(const Diagram& d);

/// Concatenation product: the class of a cartesian product of cones.
/// Associative and commutative with identity "1".
Diagram product(const Diagram& a, const Diagram& b);

/// Number of orthants on which the diagram evaluates TRUE, out of 2^dim.
/// mu("1") = 1 by convention.
std::int64_t mu(const Diagram& d);

/// Total parallel excess: sum over parallel nodes of (arity - 1).
int rho(const Diagram& d);

/// Parity sign (-1)^rho.
inline int sigma(const Diagram& d) { return rho(d) % 2 == 0 ? 1 : -1; }

/// A sign vector assigns each leaf (in encoding order, left to right)
/// +1 = forced TRUE, -1 = forced FALSE, 0 = left free.
using SignVector = std::vector<int>;

enum class EvalKind : std::uint8_t { ConstFalse, ConstTrue, Residual };

struct PartialEval {
    EvalKind kind = EvalKind::ConstTrue;
    Diagram residual;            // meaningful only when kind == Residual
    std::vector<int> survivors;  // 0-based positions of free leaves that
                                 // remain in the residual, ascending
};

/// Substitute constants for the non-zero entries of `signs` and propagate.
/// Throws LengthMismatch unless signs.size() == d.dim().
PartialEval partial_eval(const Diagram& d, const SignVector& signs);

} // namespace ortho
