// Worked example transductions shared by several test binaries, plus seeded
// generators of random (but law-abiding) transductions for the composition
// checks.
#pragma once

#include <functional>

#include "moconad/enumerate.hpp"
#include "moconad/mealy.hpp"
#include "moconad/transduction.hpp"
#include "testutil.hpp"

namespace tu {

using namespace moconad;

// Prefix transduction over {a, b}: the first a becomes c, every other letter
// becomes d. Carrier pairs (seen a strictly before the last letter, last
// letter); multiplication in word order.
inline Transduction firstAtoC() {
    auto mk = [](int seen, const char* c) { return Elem::pair(I(seen), S(c)); };
    SemigroupTable t;
    t.carrier = {mk(0, "a"), mk(0, "b"), mk(1, "a"), mk(1, "b")};
    t.mul = {2, 3, 2, 3,
             0, 1, 2, 3,
             2, 3, 2, 3,
             2, 3, 2, 3};
    Transduction out;
    out.algebra = algebraFromSemigroup(listInstance(Functor::PrefixList), t);
    out.inputAlphabet = syms({"a", "b"});
    out.outputAlphabet = syms({"c", "d"});
    out.h = {{S("a"), mk(0, "a")}, {S("b"), mk(0, "b")}};
    out.lambda = {{mk(0, "a"), S("c")},
                  {mk(0, "b"), S("d")},
                  {mk(1, "a"), S("d")},
                  {mk(1, "b"), S("d")}};
    return out;
}

// Suffix transduction over {a, b}: every letter becomes the last letter of
// the word. The product of a suffix is its last letter (right projection).
inline Transduction everyLetterToLast() {
    SemigroupTable t;
    t.carrier = syms({"a", "b"});
    t.mul = {0, 1, 0, 1};
    Transduction out;
    out.algebra = algebraFromSemigroup(listInstance(Functor::SuffixList), t);
    out.inputAlphabet = syms({"a", "b"});
    out.outputAlphabet = syms({"a", "b"});
    out.h = {{S("a"), S("a")}, {S("b"), S("b")}};
    out.lambda = {{S("a"), S("a")}, {S("b"), S("b")}};
    return out;
}

// Pointed transduction over {a, b}: the first letter becomes the last letter,
// all others stay. Carrier triples (focus at word start, focused letter, last
// letter), derived from a product oracle.
inline Transduction firstLetterToLast() {
    auto mk = [](int atStart, const Elem& cur, const Elem& last) {
        return Elem::seq({I(atStart), cur, last});
    };
    std::vector<Elem> letters = syms({"a", "b"});
    std::vector<Elem> carrier;
    for (int f = 0; f <= 1; ++f)
        for (const auto& c : letters)
            for (const auto& l : letters) carrier.push_back(mk(f, c, l));
    auto prod = [mk](const MVal& v) {
        const auto& focused = v.items[v.focus - 1].items();
        const auto& last = v.items.back().items();
        int atStart = v.focus == 1 ? int(focused[0].intValue()) : 0;
        return mk(atStart, focused[1], last[2]);
    };
    Transduction out;
    out.algebra = algebraFromOracle(RawAlgebra{listInstance(Functor::PointedList),
                                               carrier, prod, {}});
    out.inputAlphabet = letters;
    out.outputAlphabet = letters;
    for (const auto& x : letters) out.h[x] = mk(1, x, x);
    for (const auto& t : carrier)
        out.lambda[t] = t.items()[0].intValue() == 1 ? t.items()[2] : t.items()[1];
    return out;
}

// Term transduction over integer leaves {0, 1}: every leaf becomes the xor of
// all leaves (and childless c nodes count as 0).
inline Transduction leavesToTreeParity() {
    std::function<Elem(const TreeNode&)> fold = [&](const TreeNode& n) -> Elem {
        if (n.isLeaf()) return *n.label;
        if (n.symbol == "c") return I(0);
        std::int64_t acc = 0;
        for (const auto& ch : n.children) acc ^= fold(ch).intValue();
        return I(acc);
    };
    auto prod = [fold](const MVal& v) { return fold(v.root); };
    Transduction out;
    out.algebra =
        algebraFromOracle(RawAlgebra{termInst(), ints({0, 1}), prod, {{"c", I(0)}}});
    out.inputAlphabet = ints({0, 1});
    out.outputAlphabet = ints({0, 1});
    out.h = {{I(0), I(0)}, {I(1), I(1)}};
    out.lambda = {{I(0), I(0)}, {I(1), I(1)}};
    return out;
}

// ---------------------------------------------------------------------------
// Seeded random transductions. Carriers have at most 3 elements and letter
// alphabets at most 3 letters. Every draw lands in a family that satisfies
// the algebra laws by construction:
//   - prefix/suffix: a word fold through a random associative table
//   - pointed: a word fold that ignores the focus, the projection onto the
//     focused element, or a start detector (the focused element, passed
//     through a random idempotent map whenever the focus is not at position
//     1; idempotence makes the "at the start" flag compose by conjunction)
//   - terms: either a bottom-up fold through random per-symbol tables
//     (ignores the focus) or a walk up the focus path through random
//     per-slot maps (ignores everything off the path)

inline SemigroupTable randomAssocTable(Rng& rng, std::size_t size) {
    SemigroupTable t;
    for (std::size_t i = 0; i < size; ++i) t.carrier.push_back(I(std::int64_t(i)));
    do {
        t.mul.clear();
        for (std::size_t i = 0; i < size * size; ++i) t.mul.push_back(rng.below(size));
    } while (checkAssociative(t).has_value());
    return t;
}

// Forward machine: the first a becomes c, everything else d.
inline MealyMachine firstAtoCMachine() {
    MealyMachine m;
    m.direction = Direction::LeftToRight;
    m.states = syms({"q0", "q1"});
    m.inputAlphabet = syms({"a", "b"});
    m.outputAlphabet = syms({"c", "d"});
    m.initial = 0;
    m.next = {1, 0, 1, 1};
    m.out = {0, 1, 1, 1};
    return m;
}

// Backward machine: every letter becomes the last letter of the word.
inline MealyMachine lastLetterMachine() {
    MealyMachine m;
    m.direction = Direction::RightToLeft;
    m.states = syms({"s0", "sa", "sb"});
    m.inputAlphabet = syms({"a", "b"});
    m.outputAlphabet = syms({"a", "b"});
    m.initial = 0;
    m.next = {1, 2, 1, 1, 2, 2};
    m.out = {0, 1, 0, 0, 1, 1};
    return m;
}

// Guess-the-last-letter machine: the first letter becomes the last one.
// Starting in s_x commits to final letter x; pair states remember the guess
// and the letter just read, and a run is accepted when the guess was right.
inline UnambiguousMealy firstToLastMachine() {
    UnambiguousMealy m;
    m.states = syms({"sa", "sb", "aa", "ab", "ba", "bb"});
    m.inputAlphabet = syms({"a", "b"});
    m.outputAlphabet = syms({"a", "b"});
    m.initial = {0, 1};
    m.accepting = {2, 5};
    const std::size_t A = 0, B = 1;
    m.transitions = {
        {0, A, 2, A}, {0, B, 3, A},  // sa reads, outputs the guess a
        {1, A, 4, B}, {1, B, 5, B},  // sb reads, outputs the guess b
        {2, A, 2, A}, {2, B, 3, B},  // later letters output themselves
        {3, A, 2, A}, {3, B, 3, B},
        {4, A, 4, A}, {4, B, 5, B},
        {5, A, 4, A}, {5, B, 5, B},
    };
    return m;
}

inline MealyMachine randomMealy(std::uint64_t seed) {
    Rng rng(seed, 0);
    MealyMachine m;
    m.direction = rng.below(2) ? Direction::RightToLeft : Direction::LeftToRight;
    std::size_t n = 1 + rng.below(4);
    for (std::size_t i = 0; i < n; ++i) m.states.push_back(S("q" + std::to_string(i)));
    m.inputAlphabet = syms({"a", "b"});
    m.outputAlphabet = syms({"c", "d"});
    m.initial = rng.below(n);
    for (std::size_t i = 0; i < n * 2; ++i) {
        m.next.push_back(rng.below(n));
        m.out.push_back(rng.below(2));
    }
    return m;
}

// Second stage for firstAtoC outputs: c stays, d flips between d and e.
inline Transduction alternateDs() {
    auto mk = [](int parity, const char* c) { return Elem::pair(I(parity), S(c)); };
    // carrier: (number of d's seen so far mod 2, last letter)
    std::vector<Elem> carrier = {mk(0, "c"), mk(0, "d"), mk(1, "c"), mk(1, "d")};
    auto prod = [mk](const MVal& v) {
        int parity = 0;
        for (const auto& e : v.items) parity ^= int(e.first().intValue());
        return mk(parity, v.items.back().second().symbol().c_str());
    };
    Transduction out;
    out.algebra = algebraFromOracle(RawAlgebra{listInstance(Functor::PrefixList),
                                               carrier, prod, {}});
    out.inputAlphabet = syms({"c", "d"});
    out.outputAlphabet = syms({"c", "d", "e"});
    out.h = {{S("c"), mk(0, "c")}, {S("d"), mk(1, "d")}};
    out.lambda = {{mk(0, "c"), S("c")},
                  {mk(1, "c"), S("c")},
                  {mk(1, "d"), S("d")},
                  {mk(0, "d"), S("e")}};
    return out;
}

inline FiniteAlgebra randomPointedAlgebra(Rng& rng, std::size_t size) {
    std::vector<Elem> carrier;
    for (std::size_t i = 0; i < size; ++i) carrier.push_back(I(std::int64_t(i)));
    std::function<Elem(const MVal&)> prod;
    switch (rng.below(3)) {
        case 0:
            return pointedAlgebraFromSemigroup(randomAssocTable(rng, size));
        case 1:
            prod = [](const MVal& v) { return v.items[v.focus - 1]; };
            break;
        default: {
            std::vector<std::size_t> e(size);
            do
                for (auto& v : e) v = rng.below(size);
            while ([&] {
                for (std::size_t x = 0; x < size; ++x)
                    if (e[e[x]] != e[x]) return true;
                return false;
            }());
            prod = [carrier, e](const MVal& v) {
                const Elem& x = v.items[v.focus - 1];
                return v.focus == 1 ? x : carrier[e[std::size_t(x.intValue())]];
            };
            break;
        }
    }
    return algebraFromOracle(
        RawAlgebra{listInstance(Functor::PointedList), carrier, prod, {}});
}

inline FiniteAlgebra randomTermAlgebra(Rng& rng, std::size_t size,
                                       const MoconadInstance& inst) {
    std::vector<Elem> carrier;
    for (std::size_t i = 0; i < size; ++i) carrier.push_back(I(std::int64_t(i)));
    auto idx = [](const Elem& e) { return std::size_t(e.intValue()); };

    std::map<std::string, Elem> nullary;
    for (const auto& [sym, arity] : inst.alphabet)
        if (arity == 0) nullary[sym] = carrier[rng.below(size)];

    std::function<Elem(const MVal&)> prod;
    if (rng.below(2) == 0) {
        // bottom-up fold; the focus plays no role
        std::map<std::string, std::vector<std::size_t>> tables;
        for (const auto& [sym, arity] : inst.alphabet) {
            std::size_t cells = 1;
            for (int i = 0; i < arity; ++i) cells *= size;
            auto& t = tables[sym];
            for (std::size_t i = 0; i < cells; ++i) t.push_back(rng.below(size));
        }
        auto foldTables = tables;
        auto nul = nullary;
        prod = [carrier, foldTables, nul, idx](const MVal& v) {
            std::function<std::size_t(const TreeNode&)> go =
                [&](const TreeNode& n) -> std::size_t {
                if (n.isLeaf()) return idx(*n.label);
                if (n.children.empty()) return idx(nul.at(n.symbol));
                std::size_t flat = 0;
                for (const auto& ch : n.children)
                    flat = flat * carrier.size() + go(ch);
                return foldTables.at(n.symbol)[flat];
            };
            return carrier[go(v.root)];
        };
    } else {
        // walk up the focus path; everything off the path is ignored
        std::map<std::string, std::vector<std::vector<std::size_t>>> steps;
        for (const auto& [sym, arity] : inst.alphabet) {
            auto& per = steps[sym];
            for (int slot = 0; slot < arity; ++slot) {
                std::vector<std::size_t> m(size);
                for (auto& v : m) v = rng.below(size);
                per.push_back(std::move(m));
            }
        }
        auto pathSteps = steps;
        prod = [carrier, pathSteps, idx](const MVal& v) {
            std::size_t x = idx(*nodeAt(v.root, v.path).label);
            const TreeNode* node = &v.root;
            std::vector<std::pair<std::string, int>> spine;
            for (int step : v.path) {
                spine.emplace_back(node->symbol, step - 1);
                node = &node->children[std::size_t(step) - 1];
            }
            for (auto it = spine.rbegin(); it != spine.rend(); ++it)
                x = pathSteps.at(it->first)[std::size_t(it->second)][x];
            return carrier[x];
        };
    }
    return algebraFromOracle(RawAlgebra{inst, carrier, prod, nullary});
}

inline Transduction randomTransduction(const MoconadInstance& inst, std::uint64_t seed,
                                       const std::vector<Elem>& alphabet) {
    Rng rng(seed, 0);
    std::size_t size = 1 + rng.below(3);
    Transduction t;
    switch (inst.functor) {
        case Functor::PrefixList:
        case Functor::SuffixList:
            t.algebra = algebraFromSemigroup(inst, randomAssocTable(rng, size));
            break;
        case Functor::PointedList:
            t.algebra = randomPointedAlgebra(rng, size);
            break;
        case Functor::PointedTerm:
            t.algebra = randomTermAlgebra(rng, size, inst);
            break;
    }
    t.inputAlphabet = alphabet;
    t.outputAlphabet = alphabet;
    for (const auto& x : alphabet) t.h[x] = t.algebra.carrier[rng.below(size)];
    for (const auto& c : t.algebra.carrier)
        t.lambda[c] = alphabet[rng.below(alphabet.size())];
    return t;
}

}  // namespace tu
