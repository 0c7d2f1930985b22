#include "moconad/transduction.hpp"

#include <algorithm>

#include "moconad/enumerate.hpp"
#include "moconad/ops.hpp"

namespace moconad {

namespace {

MVal readLetters(const MoconadInstance& inst, const std::map<Elem, Elem>& h,
                 const MVal& value) {
    std::size_t position = 0;
    ElemFn read = [&](const Elem& x) {
        ++position;
        auto it = h.find(x);
        if (it == h.end())
            throw DomainError("letter " + show(x) + " at position " +
                              std::to_string(position) + " is not in the input alphabet");
        return it->second;
    };
    return map(inst, read, value);
}

MVal viewProducts(const FiniteAlgebra& alg, const MVal& read) {
    ElemFn prodInner = [&alg](const Elem& e) { return alg.prod(e.inner()); };
    return map(alg.inst, prodInner, expand(alg.inst, read));
}

}  // namespace

MVal applyTransduction(const Transduction& t, const MVal& value) {
    validateValue(t.algebra.inst, value);
    MVal prods = viewProducts(t.algebra, readLetters(t.algebra.inst, t.h, value));
    ElemFn emit = [&t](const Elem& a) {
        auto it = t.lambda.find(a);
        if (it == t.lambda.end())
            throw DomainError("no output letter for carrier element " + show(a));
        return it->second;
    };
    return map(t.algebra.inst, emit, prods);
}

bool recognize(const LanguageRecognizer& r, const MVal& value) {
    validateValue(r.algebra.inst, value);
    Elem p = r.algebra.prod(readLetters(r.algebra.inst, r.h, value));
    return std::find(r.accepting.begin(), r.accepting.end(), p) != r.accepting.end();
}

MVal applyRelaxed(const RelaxedTransduction& t, const MVal& value) {
    validateValue(t.algebra.inst, value);
    MVal prods = viewProducts(t.algebra, readLetters(t.algebra.inst, t.h, value));
    ElemFn emit = [&t](const Elem& a) {
        auto it = t.lambda.find(a);
        if (it == t.lambda.end())
            throw DomainError("no output block for carrier element " + show(a));
        return Elem::wrapped(it->second);
    };
    return flatten(t.algebra.inst, map(t.algebra.inst, emit, prods));
}

bool checkShapePreserved(const Transduction& t, int bound) {
    const auto& inst = t.algebra.inst;
    for (const MVal& w : enumerateValues(inst, t.inputAlphabet, bound))
        if (!(shape(inst, applyTransduction(t, w)) == shape(inst, w))) return false;
    return true;
}

bool checkShapePreservedRelaxed(const RelaxedTransduction& t, int bound) {
    const auto& inst = t.algebra.inst;
    for (const MVal& w : enumerateValues(inst, t.inputAlphabet, bound))
        if (!(shape(inst, applyRelaxed(t, w)) == shape(inst, w))) return false;
    return true;
}

std::optional<std::string> validateTransduction(const Transduction& t, int bound) {
    for (const Elem& a : t.inputAlphabet) {
        auto it = t.h.find(a);
        if (it == t.h.end()) return "no carrier element for input letter " + show(a);
        bool inCarrier = std::find(t.algebra.carrier.begin(), t.algebra.carrier.end(),
                                   it->second) != t.algebra.carrier.end();
        if (!inCarrier)
            return "input letter " + show(a) + " maps outside the carrier";
    }
    for (const Elem& c : t.algebra.carrier) {
        auto it = t.lambda.find(c);
        if (it == t.lambda.end())
            return "no output letter for carrier element " + show(c);
        bool inOut = std::find(t.outputAlphabet.begin(), t.outputAlphabet.end(),
                               it->second) != t.outputAlphabet.end();
        if (!inOut)
            return "carrier element " + show(c) + " maps outside the output alphabet";
    }
    if (auto issue = validateAlgebra(t.algebra, bound)) return issue->what;
    return std::nullopt;
}

}  // namespace moconad
