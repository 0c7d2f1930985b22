#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "moconad/enumerate.hpp"
#include "moconad/transduction.hpp"

using namespace moconad;
using namespace tu;

namespace {

MVal word(Functor f, const char* letters, std::size_t focus = 0) {
    std::vector<Elem> items;
    for (const char* p = letters; *p; ++p) items.push_back(S(std::string(1, *p)));
    if (f == Functor::PointedList) return makePointedValue(items, focus);
    return makeListValue(f, items);
}

std::string outWord(const MVal& v) {
    std::string s;
    for (const auto& e : v.items) s += e.symbol();
    return s;
}

}  // namespace

TEST_CASE("prefix transduction: first a becomes c, the rest d") {
    Transduction t = firstAtoC();
    CHECK_FALSE(validateTransduction(t, 4).has_value());
    CHECK(outWord(applyTransduction(t, word(Functor::PrefixList, "aab"))) == "cdd");
    CHECK(outWord(applyTransduction(t, word(Functor::PrefixList, "bba"))) == "ddc");
    CHECK(outWord(applyTransduction(t, word(Functor::PrefixList, "aba"))) == "cdd");
    CHECK(outWord(applyTransduction(t, word(Functor::PrefixList, "b"))) == "d");
    CHECK(checkShapePreserved(t, 4));
}

TEST_CASE("suffix transduction: every letter becomes the last one") {
    Transduction t = everyLetterToLast();
    CHECK_FALSE(validateTransduction(t, 4).has_value());
    CHECK(outWord(applyTransduction(t, word(Functor::SuffixList, "ab"))) == "bb");
    CHECK(outWord(applyTransduction(t, word(Functor::SuffixList, "baab"))) == "bbbb");
    CHECK(outWord(applyTransduction(t, word(Functor::SuffixList, "ba"))) == "aa");
    CHECK(checkShapePreserved(t, 4));
}

TEST_CASE("pointed transduction: the first letter becomes the last one") {
    Transduction t = firstLetterToLast();
    CHECK_FALSE(validateTransduction(t, 3).has_value());
    for (std::size_t focus = 1; focus <= 2; ++focus) {
        MVal out = applyTransduction(t, word(Functor::PointedList, "ab", focus));
        CHECK(outWord(out) == "bb");
        CHECK(out.focus == focus);
    }
    CHECK(outWord(applyTransduction(t, word(Functor::PointedList, "a", 1))) == "a");
    CHECK(outWord(applyTransduction(t, word(Functor::PointedList, "bba", 2))) == "aba");
    CHECK(checkShapePreserved(t, 4));
}

TEST_CASE("term transduction: every leaf becomes the tree parity") {
    Transduction t = leavesToTreeParity();
    TreeNode tree = TreeNode::node(
        "f", {TreeNode::leaf(I(1)),
              TreeNode::node("g", {TreeNode::leaf(I(0))})});
    MVal out = applyTransduction(t, makeTermValue(tree, {1}));
    CHECK(shown(out) == "f(1, g(1))@[1]");

    TreeNode even = TreeNode::node("f", {TreeNode::leaf(I(1)), TreeNode::leaf(I(1))});
    CHECK(shown(applyTransduction(t, makeTermValue(even, {2}))) == "f(0, 0)@[2]");
    CHECK(checkShapePreserved(t, 5));
}

TEST_CASE("letters outside the input alphabet are domain errors") {
    Transduction t = firstAtoC();
    MVal bad = makeListValue(Functor::PrefixList, {S("a"), S("x"), S("b")});
    CHECK_THROWS_WITH_AS(applyTransduction(t, bad),
                         "letter x at position 2 is not in the input alphabet",
                         DomainError);
}

TEST_CASE("language recognition applies the product to the read word") {
    SemigroupTable parity{ints({0, 1}), {0, 1, 1, 0}};
    LanguageRecognizer r;
    r.algebra = algebraFromSemigroup(prefixInst(), parity);
    r.alphabet = ints({0, 1});
    r.h = {{I(0), I(0)}, {I(1), I(1)}};
    r.accepting = {I(0)};
    CHECK(recognize(r, makeListValue(Functor::PrefixList, ints({1, 0, 1}))));
    CHECK_FALSE(recognize(r, makeListValue(Functor::PrefixList, ints({1, 0}))));
}

TEST_CASE("relaxed transductions can change the shape") {
    SemigroupTable last{syms({"a", "b"}), {0, 1, 0, 1}};
    RelaxedTransduction t;
    t.algebra = algebraFromSemigroup(prefixInst(), last);
    t.inputAlphabet = syms({"a", "b"});
    t.outputAlphabet = syms({"a", "b"});
    t.h = {{S("a"), S("a")}, {S("b"), S("b")}};
    // each position emits its letter twice
    t.lambda = {{S("a"), makeListValue(Functor::PrefixList, syms({"a", "a"}))},
                {S("b"), makeListValue(Functor::PrefixList, syms({"b", "b"}))}};

    MVal out = applyRelaxed(t, word(Functor::PrefixList, "ab"));
    CHECK(outWord(out) == "aabb");
    CHECK_FALSE(checkShapePreservedRelaxed(t, 3));

    // emitting exactly one letter per position is shape preserving
    RelaxedTransduction single = t;
    single.lambda = {{S("a"), makeListValue(Functor::PrefixList, syms({"a"}))},
                     {S("b"), makeListValue(Functor::PrefixList, syms({"b"}))}};
    CHECK(checkShapePreservedRelaxed(single, 3));
}

TEST_CASE("validation catches missing letter maps and broken algebras") {
    Transduction t = firstAtoC();
    CHECK_FALSE(validateTransduction(t, 3).has_value());

    Transduction noH = t;
    noH.h.erase(S("b"));
    CHECK(validateTransduction(noH, 3).has_value());

    Transduction noLambda = t;
    noLambda.lambda.erase(noLambda.lambda.begin()->first);
    CHECK(validateTransduction(noLambda, 3).has_value());

    Transduction strayOutput = t;
    strayOutput.lambda[strayOutput.algebra.carrier[0]] = S("z");
    CHECK(validateTransduction(strayOutput, 3).has_value());

    Transduction badAlgebra = t;
    std::get<SemigroupTable>(badAlgebra.algebra.pres).mul[1] = 0;
    CHECK(validateTransduction(badAlgebra, 3).has_value());
}

TEST_CASE("every fixture transduction preserves shape at size 4") {
    for (const auto& t : {firstAtoC(), everyLetterToLast(), firstLetterToLast(),
                          leavesToTreeParity()}) {
        CAPTURE(functorName(t.algebra.inst.functor));
        CHECK(checkShapePreserved(t, 4));
    }
}
