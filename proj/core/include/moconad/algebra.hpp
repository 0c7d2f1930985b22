// algebra.hpp -- finite product algebras over the four container shapes.
//
// An algebra is a finite carrier plus a product map respecting unit and
// flattening. Products are stored as finite presentations:
//   - prefix/suffix lists: an associative multiplication table
//   - pointed lists: left/right transform monoids and a two-sided action
//   - pointed terms: per-symbol slot action tables plus constants for
//     childless symbols
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <variant>

#include "moconad/values.hpp"

namespace moconad {

struct SemigroupTable {
    std::vector<Elem> carrier;
    // row-major: mul[i * n + j] = index of carrier[i] * carrier[j]
    std::vector<std::size_t> mul;

    std::size_t size() const { return carrier.size(); }
    std::size_t at(std::size_t i, std::size_t j) const;
    std::size_t indexOf(const Elem& e) const;
};

struct AssocFailure {
    Elem a, b, c;
};
std::optional<AssocFailure> checkAssociative(const SemigroupTable& t);

// Monoid check: index 0 must be a two-sided identity.
bool hasIdentityAtZero(const SemigroupTable& t);

// Evaluation of a focused word uses three pieces: the prefix folds through
// the left monoid, the suffix through the right monoid, and g combines both
// with the focused letter. Both monoid tables multiply in word order.
struct PointedPresentation {
    SemigroupTable left;
    SemigroupTable right;
    std::vector<std::size_t> hLeft;   // carrier index -> left index
    std::vector<std::size_t> hRight;  // carrier index -> right index
    // g[(l * |carrier| + a) * |right| + r] -> carrier index
    std::vector<std::size_t> g;

    std::size_t apply(std::size_t l, std::size_t a, std::size_t r,
                      std::size_t carrierSize) const;
};

// Focused trees evaluate along the focus spine. act[symbol][slot] gives the
// product of a depth-one tree focused at that slot; the same tables with the
// first slot focused also summarise unfocused subtrees. Childless symbols
// need explicit constants since they cannot hold a focus.
struct TermAutomaton {
    // act[symbol][slot][flat tuple index], tuple flattened with the last
    // child index varying fastest
    std::map<std::string, std::vector<std::vector<std::size_t>>> act;
    std::map<std::string, std::size_t> nullary;
};

using Presentation = std::variant<SemigroupTable, PointedPresentation, TermAutomaton>;

struct FiniteAlgebra {
    MoconadInstance inst;
    std::vector<Elem> carrier;
    Presentation pres;

    std::size_t indexOf(const Elem& e) const;  // DomainError when absent
    Elem prod(const MVal& value) const;
};

// Unfocused subtree summary (term algebras only).
Elem evaluateUnpointed(const FiniteAlgebra& alg, const TreeNode& t);

FiniteAlgebra algebraFromSemigroup(const MoconadInstance& inst,
                                   const SemigroupTable& table);
// Pointed-list algebra whose product multiplies out the whole word,
// ignoring the focus.
FiniteAlgebra pointedAlgebraFromSemigroup(const SemigroupTable& table);
SemigroupTable semigroupFromAlgebra(const FiniteAlgebra& alg);

// A product given as a callback; used to materialise presentations for
// carriers built on the fly. Childless symbols need their constants supplied
// since no focused value exercises them.
struct RawAlgebra {
    MoconadInstance inst;
    std::vector<Elem> carrier;
    std::function<Elem(const MVal&)> prod;
    std::map<std::string, Elem> nullary;
};

FiniteAlgebra algebraFromOracle(const RawAlgebra& raw, std::size_t cap = 100000);

// Derive the left/right transform monoids and two-sided action of a
// pointed-list product. Monoid elements are function tables over the carrier.
PointedPresentation decomposePointedAlgebra(const std::vector<Elem>& carrier,
                                            const std::function<Elem(const MVal&)>& prod,
                                            std::size_t cap = 100000);

struct AlgebraIssue {
    std::string what;
    std::optional<MVal> witness;
};

// Unit and flattening laws on all values with carrier payloads up to the
// size bound, plus presentation sanity (associativity, identities, table
// shapes). Empty result means no issue found.
std::optional<AlgebraIssue> validateAlgebra(const FiniteAlgebra& alg, int bound);

// One-hole contexts: the carrier map x -> prod(value with focus replaced
// by x), as a function-table element.
Elem contextOf(const FiniteAlgebra& alg, const MVal& value);

// All contexts of values up to the size bound, as a composition monoid
// (mul = "apply right context, then left"). Throws when the collection is
// not closed under composition within the bound.
SemigroupTable contextMonoid(const FiniteAlgebra& alg, int bound = 0);

// Every element has a two-sided inverse for the identity.
bool isGroupMonoid(const SemigroupTable& monoid);
// Every element satisfies x^{n+1} = x^n for some n <= |monoid|.
bool isAperiodic(const SemigroupTable& monoid);

// The same checks applied to the algebra's context monoid.
bool isMGroup(const FiniteAlgebra& alg);
bool isAperiodic(const FiniteAlgebra& alg);

}  // namespace moconad
