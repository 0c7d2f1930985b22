// values.hpp -- payload elements and container values for the four functor instances.
//
// Elem is an immutable ordered tree of payload data: symbols, integers, pairs,
// sequences, finite function tables, and wrapped container values. Wrapping is
// how nested containers M (M X) are represented: the inner M-value becomes an
// element of the outer one. MVal is a single container value of one instance:
// a nonempty list (prefix/suffix), a pointed list, or a pointed term.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moconad {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed structures or spec documents (CLI exit 2).
struct SchemaError : Error {
    using Error::Error;
};
// Well-formed input outside an operation's domain (CLI exit 3).
struct DomainError : Error {
    using Error::Error;
};

enum class Functor { PrefixList, SuffixList, PointedList, PointedTerm };

const char* functorName(Functor f);
std::optional<Functor> functorFromName(const std::string& name);

// symbol -> arity; nonempty exactly for pointed-term instances
using RankedAlphabet = std::map<std::string, int>;

struct MoconadInstance {
    Functor functor;
    RankedAlphabet alphabet;
};

MoconadInstance listInstance(Functor f);
MoconadInstance termInstance(RankedAlphabet alphabet);

struct MVal;

class Elem {
public:
    enum class Tag { Symbol = 0, Int = 1, Pair = 2, Seq = 3, Fn = 4, Wrapped = 5 };

    Elem() : Elem(integer(0)) {}

    static Elem sym(std::string name);
    static Elem integer(std::int64_t v);
    static Elem pair(Elem a, Elem b);
    static Elem seq(std::vector<Elem> items);
    // Table entries are sorted by input; duplicate inputs are rejected.
    static Elem fn(std::vector<Elem> domain, std::vector<Elem> values);
    static Elem wrapped(MVal inner);

    Tag tag() const;
    const std::string& symbol() const;
    std::int64_t intValue() const;
    const Elem& first() const;
    const Elem& second() const;
    const std::vector<Elem>& items() const;     // Seq
    const std::vector<Elem>& fnDomain() const;  // Fn
    const std::vector<Elem>& fnValues() const;  // Fn
    const MVal& inner() const;                  // Wrapped

    // Fn lookup; DomainError when x is not in the table.
    Elem apply(const Elem& x) const;

    std::string show() const;

private:
    struct Rep;
    explicit Elem(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;

    friend int compare(const Elem& a, const Elem& b);
};

// Total order: tag rank first, then lexicographic on content.
int compare(const Elem& a, const Elem& b);
bool operator==(const Elem& a, const Elem& b);
bool operator!=(const Elem& a, const Elem& b);
bool operator<(const Elem& a, const Elem& b);

// Term node. A leaf carries a payload label; an inner node carries a ranked
// symbol (possibly nullary, so an arity-0 symbol is a childless inner node,
// not a leaf).
struct TreeNode {
    std::string symbol;
    std::optional<Elem> label;
    std::vector<TreeNode> children;

    static TreeNode leaf(Elem payload);
    static TreeNode node(std::string symbol, std::vector<TreeNode> children);
    bool isLeaf() const { return label.has_value(); }
};

int compare(const TreeNode& a, const TreeNode& b);
bool operator==(const TreeNode& a, const TreeNode& b);
std::size_t nodeCount(const TreeNode& n);
// All root-to-leaf paths addressing payload leaves, 1-based child steps,
// left to right.
std::vector<std::vector<int>> leafPaths(const TreeNode& root);
const TreeNode& nodeAt(const TreeNode& root, const std::vector<int>& path);
TreeNode withLeafLabel(const TreeNode& root, const std::vector<int>& path, const Elem& x);
TreeNode withSubtree(const TreeNode& root, const std::vector<int>& path, const TreeNode& sub);

// One container value. Which fields are meaningful depends on the functor:
// lists use items (nonempty) and, for pointed lists, focus (1-based);
// pointed terms use root and path (1-based child steps to the focused leaf).
struct MVal {
    Functor functor = Functor::PrefixList;
    std::vector<Elem> items;
    std::size_t focus = 0;
    TreeNode root;
    std::vector<int> path;
};

MVal makeListValue(Functor f, std::vector<Elem> items);
MVal makePointedValue(std::vector<Elem> items, std::size_t focus1);
MVal makeTermValue(TreeNode root, std::vector<int> path);

// Structural checks: nonempty, focus in range, path addresses a leaf, symbols
// declared with matching arities. Throws SchemaError.
void validateValue(const MoconadInstance& inst, const MVal& v);

// Payload positions: list length, or term node count (inner nodes included).
std::size_t sizeOf(const MVal& v);

int compare(const MVal& a, const MVal& b);
bool operator==(const MVal& a, const MVal& b);
bool operator!=(const MVal& a, const MVal& b);
bool operator<(const MVal& a, const MVal& b);

std::string show(const MVal& v);
std::string show(const TreeNode& n);
std::string show(const Elem& e);

}  // namespace moconad
