#include "moconad/wreath.hpp"

#include <algorithm>
#include <set>

#include "moconad/enumerate.hpp"
#include "moconad/ops.hpp"

namespace moconad {

namespace {

Elem firstOf(const Elem& e) { return e.first(); }

Elem composeCtx(const std::vector<Elem>& carrier1, const Elem& outer,
                const Elem& inner) {
    std::vector<Elem> values;
    for (const Elem& x : carrier1) values.push_back(outer.apply(inner.apply(x)));
    return Elem::fn(carrier1, values);
}

struct WreathCore {
    const FiniteAlgebra& a1;
    const FiniteAlgebra& a2;
    std::vector<Elem> space;

    Elem prod3(const MVal& v) const {
        const MoconadInstance& inst = a1.inst;
        MVal pi1 = map(inst, firstOf, v);
        Elem first = a1.prod(pi1);

        // per-position stored tables and the context of the view there
        std::vector<Elem> stored;
        std::vector<Elem> viewCtx;
        ElemFn collect = [&](const Elem& e) {
            const MVal& w = e.inner();
            stored.push_back(extract(inst, w).second());
            viewCtx.push_back(contextOf(a1, map(inst, firstOf, w)));
            return e;
        };
        map(inst, collect, expand(inst, v));

        std::size_t counter = 0;
        ElemFn number = [&counter](const Elem&) {
            return Elem::integer(static_cast<std::int64_t>(counter++));
        };
        MVal positions = map(inst, number, v);

        std::vector<Elem> secondValues;
        for (const Elem& c : space) {
            ElemFn contribution = [&](const Elem& p) {
                auto i = static_cast<std::size_t>(p.intValue());
                return stored[i].apply(composeCtx(a1.carrier, c, viewCtx[i]));
            };
            secondValues.push_back(a2.prod(map(inst, contribution, positions)));
        }
        return Elem::pair(first, Elem::fn(space, secondValues));
    }
};

std::vector<Elem> makeSpace(const FiniteAlgebra& a1, bool contextsOnly) {
    if (contextsOnly) return contextMonoid(a1).carrier;
    return enumerateFnTables(a1.carrier, a1.carrier);
}

const TermAutomaton& automatonOf(const FiniteAlgebra& alg) {
    const auto* ta = std::get_if<TermAutomaton>(&alg.pres);
    if (!ta) throw Error("term algebra expected");
    return *ta;
}

std::map<std::string, Elem> compositeNullary(const FiniteAlgebra& a1,
                                             const FiniteAlgebra& a2,
                                             const std::vector<Elem>& space) {
    std::map<std::string, Elem> out;
    if (a1.inst.functor != Functor::PointedTerm) return out;
    const TermAutomaton& t1 = automatonOf(a1);
    const TermAutomaton& t2 = automatonOf(a2);
    for (const auto& [sym, arity] : a1.inst.alphabet) {
        if (arity != 0) continue;
        Elem n2 = a2.carrier[t2.nullary.at(sym)];
        std::vector<Elem> constant(space.size(), n2);
        out[sym] = Elem::pair(a1.carrier[t1.nullary.at(sym)], Elem::fn(space, constant));
    }
    return out;
}

std::vector<Elem> fullPairCarrier(const FiniteAlgebra& a1, const FiniteAlgebra& a2,
                                  const std::vector<Elem>& space, std::size_t cap) {
    std::size_t total = a1.carrier.size();
    for (std::size_t i = 0; i < space.size(); ++i) {
        total *= a2.carrier.size();
        if (total > cap)
            throw DomainError("composite carrier would exceed the cap of " +
                        std::to_string(cap));
    }
    std::vector<Elem> out;
    std::vector<Elem> tables = enumerateFnTables(space, a2.carrier);
    for (const Elem& a : a1.carrier)
        for (const Elem& f : tables) out.push_back(Elem::pair(a, f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> reachableCarrier(const WreathCore& core,
                                   const std::vector<Elem>& generators,
                                   const std::map<std::string, Elem>& nullary,
                                   std::size_t cap) {
    std::set<Elem> seen(generators.begin(), generators.end());
    for (const auto& [sym, e] : nullary) seen.insert(e);
    const MoconadInstance& inst = core.a1.inst;
    auto guard = [&] {
        if (seen.size() > cap)
            throw DomainError("composite carrier would exceed the cap of " +
                        std::to_string(cap));
    };
    if (inst.functor == Functor::PointedTerm) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Elem> elems(seen.begin(), seen.end());
            for (const auto& [sym, arity] : inst.alphabet) {
                if (arity < 1) continue;
                std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
                for (;;) {
                    std::vector<TreeNode> children;
                    for (std::size_t i : idx) children.push_back(TreeNode::leaf(elems[i]));
                    TreeNode t = TreeNode::node(sym, children);
                    for (int slot = 1; slot <= arity; ++slot) {
                        Elem r = core.prod3(makeTermValue(t, {slot}));
                        if (seen.insert(r).second) {
                            grew = true;
                            guard();
                        }
                    }
                    std::size_t pos = idx.size();
                    while (pos > 0) {
                        --pos;
                        if (++idx[pos] < elems.size()) break;
                        idx[pos] = 0;
                        if (pos == 0) goto tupleDone;
                    }
                    if (idx.empty()) break;
                    continue;
                tupleDone:
                    break;
                }
            }
        }
        return std::vector<Elem>(seen.begin(), seen.end());
    }
    std::vector<Elem> elems(seen.begin(), seen.end());
    bool pointed = inst.functor == Functor::PointedList;
    auto tryAdd = [&](const Elem& e) {
        if (seen.insert(e).second) {
            elems.push_back(e);
            guard();
        }
    };
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            const std::pair<Elem, Elem> combos[] = {{elems[i], elems[k]},
                                                    {elems[k], elems[i]}};
            for (const auto& [x, y] : combos) {
                if (pointed) {
                    tryAdd(core.prod3(makePointedValue({x, y}, 1)));
                    tryAdd(core.prod3(makePointedValue({x, y}, 2)));
                } else {
                    tryAdd(core.prod3(makeListValue(inst.functor, {x, y})));
                }
            }
        }
    }
    return std::vector<Elem>(seen.begin(), seen.end());
}

FiniteAlgebra extractAlgebra(const WreathCore& core, std::vector<Elem> carrier,
                             const std::map<std::string, Elem>& nullary,
                             std::size_t cap) {
    RawAlgebra raw;
    raw.inst = core.a1.inst;
    raw.carrier = std::move(carrier);
    WreathCore byValue = core;
    raw.prod = [byValue](const MVal& v) { return byValue.prod3(v); };
    raw.nullary = nullary;
    return algebraFromOracle(raw, cap);
}

void checkSameInstance(const FiniteAlgebra& a1, const FiniteAlgebra& a2) {
    if (a1.inst.functor != a2.inst.functor || a1.inst.alphabet != a2.inst.alphabet)
        throw DomainError("composition needs both algebras over the same instance");
}

Elem identityTable(const std::vector<Elem>& carrier) {
    return Elem::fn(carrier, carrier);
}

}  // namespace

WreathAlgebra wreathProduct(const FiniteAlgebra& a1, const FiniteAlgebra& a2,
                            const WreathOptions& opts) {
    checkSameInstance(a1, a2);
    WreathCore core{a1, a2, makeSpace(a1, opts.contextsOnlySpace)};
    std::vector<Elem> carrier =
        fullPairCarrier(a1, a2, core.space, opts.carrierCap);
    auto nullary = compositeNullary(a1, a2, core.space);
    return WreathAlgebra{extractAlgebra(core, std::move(carrier), nullary,
                                        opts.carrierCap),
                         core.space};
}

Transduction composeTransductions(const Transduction& second, const Transduction& first,
                                  const WreathOptions& opts) {
    checkSameInstance(first.algebra, second.algebra);
    for (const auto& [a, s] : first.lambda)
        if (!second.h.count(s))
            throw DomainError("the second stage cannot read output letter " + show(s));

    WreathCore core{first.algebra, second.algebra,
                    makeSpace(first.algebra, opts.contextsOnlySpace)};
    std::map<Elem, Elem> h3;
    std::vector<Elem> generators;
    for (const Elem& a : first.inputAlphabet) {
        auto it = first.h.find(a);
        if (it == first.h.end())
            throw DomainError("no carrier element for input letter " + show(a));
        const Elem& s1 = it->second;
        std::vector<Elem> values;
        for (const Elem& c : core.space)
            values.push_back(second.h.at(first.lambda.at(c.apply(s1))));
        Elem image = Elem::pair(s1, Elem::fn(core.space, values));
        h3[a] = image;
        generators.push_back(image);
    }
    auto nullary = compositeNullary(first.algebra, second.algebra, core.space);
    std::vector<Elem> carrier =
        opts.fullCarrier
            ? fullPairCarrier(first.algebra, second.algebra, core.space,
                              opts.carrierCap)
            : reachableCarrier(core, generators, nullary, opts.carrierCap);
    FiniteAlgebra alg = extractAlgebra(core, std::move(carrier), nullary,
                                       opts.carrierCap);

    Elem id = identityTable(first.algebra.carrier);
    std::map<Elem, Elem> lambda3;
    for (const Elem& e : alg.carrier)
        lambda3[e] = second.lambda.at(e.second().apply(id));
    return Transduction{std::move(alg), first.inputAlphabet, second.outputAlphabet,
                        std::move(h3), std::move(lambda3)};
}

MVal oracleCompose(const Transduction& second, const Transduction& first,
                   const MVal& value) {
    return applyTransduction(second, applyTransduction(first, value));
}

Transduction classicalWreathCompose(const Transduction& second,
                                    const Transduction& first) {
    if (first.algebra.inst.functor != Functor::PrefixList ||
        second.algebra.inst.functor != Functor::PrefixList)
        throw DomainError("the classical construction applies to prefix lists only");
    for (const auto& [a, s] : first.lambda)
        if (!second.h.count(s))
            throw DomainError("the second stage cannot read output letter " + show(s));

    SemigroupTable s1 = semigroupFromAlgebra(first.algebra);
    SemigroupTable s2 = semigroupFromAlgebra(second.algebra);
    std::size_t n1 = s1.size();

    // the table domain adjoins a unit: 0 is the unit, i + 1 is carrier[i]
    std::vector<Elem> domain;
    for (std::size_t i = 0; i <= n1; ++i)
        domain.push_back(Elem::integer(static_cast<std::int64_t>(i)));
    auto actRight = [&](std::size_t code, std::size_t j) {
        // (unit-extended element) * carrier[j], as a code
        return code == 0 ? j + 1 : s1.at(code - 1, j) + 1;
    };

    auto mulPair = [&](const Elem& x, const Elem& y) {
        std::size_t sIdx = s1.indexOf(x.first());
        std::size_t tIdx = s1.indexOf(y.first());
        std::vector<Elem> values;
        for (std::size_t code = 0; code <= n1; ++code) {
            Elem fx = x.second().apply(domain[code]);
            Elem gx = y.second().apply(domain[actRight(code, sIdx)]);
            values.push_back(s2.carrier[s2.at(s2.indexOf(fx), s2.indexOf(gx))]);
        }
        return Elem::pair(s1.carrier[s1.at(sIdx, tIdx)], Elem::fn(domain, values));
    };

    std::map<Elem, Elem> h3;
    std::set<Elem> seen;
    std::vector<Elem> elems;
    for (const Elem& a : first.inputAlphabet) {
        auto it = first.h.find(a);
        if (it == first.h.end())
            throw DomainError("no carrier element for input letter " + show(a));
        std::size_t j = s1.indexOf(it->second);
        std::vector<Elem> values;
        for (std::size_t code = 0; code <= n1; ++code)
            values.push_back(
                second.h.at(first.lambda.at(s1.carrier[actRight(code, j) - 1])));
        Elem image = Elem::pair(it->second, Elem::fn(domain, values));
        h3[a] = image;
        if (seen.insert(image).second) elems.push_back(image);
    }
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            const std::pair<Elem, Elem> combos[] = {{elems[i], elems[k]},
                                                    {elems[k], elems[i]}};
            for (const auto& [x, y] : combos) {
                Elem p = mulPair(x, y);
                if (seen.insert(p).second) elems.push_back(p);
            }
        }

    std::vector<Elem> carrier(seen.begin(), seen.end());
    SemigroupTable table;
    table.carrier = carrier;
    table.mul.resize(carrier.size() * carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = 0; j < carrier.size(); ++j)
            table.mul[i * carrier.size() + j] = table.indexOf(mulPair(carrier[i], carrier[j]));

    FiniteAlgebra alg = algebraFromSemigroup(listInstance(Functor::PrefixList), table);
    std::map<Elem, Elem> lambda3;
    for (const Elem& e : carrier)
        lambda3[e] = second.lambda.at(e.second().apply(domain[0]));
    return Transduction{std::move(alg), first.inputAlphabet, second.outputAlphabet,
                        std::move(h3), std::move(lambda3)};
}

}  // namespace moconad
