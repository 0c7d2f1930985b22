#include "moconad/laws.hpp"

#include <array>

namespace moconad {

std::vector<LawId> allLaws() {
    std::vector<LawId> out;
    out.reserve(kLawCount);
    for (int i = 0; i < kLawCount; ++i) out.push_back(static_cast<LawId>(i));
    return out;
}

namespace {
constexpr std::array<const char*, kLawCount> kLawNames = {
    "functor-id-law",
    "functor-compose",
    "monad-mu-natural",
    "monad-eta-natural",
    "monad-assoc",
    "monad-unit-left",
    "monad-unit-right",
    "comonad-delta-natural",
    "comonad-epsilon-natural",
    "comonad-coassoc",
    "comonad-counit-left",
    "comonad-counit-right",
    "put-natural",
    "flatten-extract",
    "singleton-expand",
    "singleton-extract",
    "get-put",
    "put-get",
    "put-put",
    "put-assoc",
    "singleton-put",
    "flatten-expand",
    "flatten-expand-alt-equiv",
};
}  // namespace

const char* lawName(LawId law) {
    return kLawNames[static_cast<std::size_t>(law)];
}

std::optional<LawId> lawFromName(const std::string& name) {
    for (int i = 0; i < kLawCount; ++i)
        if (name == kLawNames[static_cast<std::size_t>(i)]) return static_cast<LawId>(i);
    return std::nullopt;
}

std::vector<Slot> lawSlots(LawId law) {
    using S = Slot;
    switch (law) {
        case LawId::FunctorIdLaw: return {S::Value};
        case LawId::FunctorCompose: return {S::FnAB, S::FnBC, S::Value};
        case LawId::MonadMuNatural: return {S::FnAB, S::Nested2};
        case LawId::MonadEtaNatural: return {S::FnAB, S::DomainElem};
        case LawId::MonadAssoc: return {S::Nested3};
        case LawId::MonadUnitLeft: return {S::Value};
        case LawId::MonadUnitRight: return {S::Value};
        case LawId::ComonadDeltaNatural: return {S::FnAB, S::Value};
        case LawId::ComonadEpsilonNatural: return {S::FnAB, S::Value};
        case LawId::ComonadCoassoc: return {S::Value};
        case LawId::ComonadCounitLeft: return {S::Value};
        case LawId::ComonadCounitRight: return {S::Value};
        case LawId::PutNatural: return {S::FnAB, S::Value, S::DomainElem};
        case LawId::FlattenExtract: return {S::Nested2};
        case LawId::SingletonExpand: return {S::DomainElem};
        case LawId::SingletonExtract: return {S::DomainElem};
        case LawId::GetPut: return {S::Value, S::DomainElem};
        case LawId::PutGet: return {S::Value};
        case LawId::PutPut: return {S::Value, S::DomainElem, S::DomainElem};
        case LawId::PutAssoc: return {S::Nested2, S::Value, S::DomainElem};
        case LawId::SingletonPut: return {S::DomainElem, S::DomainElem};
        case LawId::FlattenExpand: return {S::Nested2};
        case LawId::FlattenExpandAltEquiv: return {S::Nested2};
    }
    throw Error("unknown law id");
}

std::string show(const LawCase& c) {
    std::string out;
    for (const auto& v : c.values) {
        if (!out.empty()) out += "; ";
        out += show(v);
    }
    for (const auto& e : c.elems) {
        if (!out.empty()) out += "; ";
        out += e.show();
    }
    for (const auto& f : c.fns) {
        if (!out.empty()) out += "; ";
        out += f.show();
    }
    return out;
}

namespace {

Elem wrapv(MVal v) { return Elem::wrapped(std::move(v)); }

ElemFn tableFn(const Elem& table) {
    return [table](const Elem& x) { return table.apply(x); };
}

// f . g as an explicit table over g's domain.
Elem composeTables(const Elem& f, const Elem& g) {
    std::vector<Elem> values;
    values.reserve(g.fnDomain().size());
    for (const auto& y : g.fnValues()) values.push_back(f.apply(y));
    return Elem::fn(g.fnDomain(), values);
}

}  // namespace

MVal expandWork(const MoconadInstance& inst, const Ops& ops, const MVal& view) {
    // map flatten . map put . strength . (id x expand) . <id, extract>
    const MVal focusedInner = ops.extract(inst, view).inner();
    MVal d = ops.expand(inst, focusedInner);
    MVal paired = ops.strength(inst, wrapv(view), d);
    return map(inst,
               [&](const Elem& pr) {
                   MVal replaced = ops.put(inst, pr.first().inner(), pr.second());
                   return wrapv(ops.flatten(inst, replaced));
               },
               paired);
}

LawEval evalLaw(LawId law, const MoconadInstance& inst, const Ops& ops, const LawCase& c) {
    const auto value = [&](std::size_t i) -> const MVal& { return c.values.at(i); };
    const auto elem = [&](std::size_t i) -> const Elem& { return c.elems.at(i); };
    const auto fn = [&](std::size_t i) -> const Elem& { return c.fns.at(i); };

    // Apply f at every payload one level down.
    const auto mapInner = [&](const ElemFn& f, const MVal& mm) {
        return ops.map(inst, [&](const Elem& e) { return wrapv(ops.map(inst, f, e.inner())); },
                       mm);
    };

    switch (law) {
        case LawId::FunctorIdLaw: {
            MVal lhs = ops.map(inst, [](const Elem& x) { return x; }, value(0));
            return {wrapv(lhs), wrapv(value(0))};
        }
        case LawId::FunctorCompose: {
            const Elem& g = fn(0);
            const Elem& f = fn(1);
            MVal lhs = ops.map(inst, tableFn(f), ops.map(inst, tableFn(g), value(0)));
            MVal rhs = ops.map(inst, tableFn(composeTables(f, g)), value(0));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::MonadMuNatural: {
            MVal lhs = ops.flatten(inst, mapInner(tableFn(fn(0)), value(0)));
            MVal rhs = ops.map(inst, tableFn(fn(0)), ops.flatten(inst, value(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::MonadEtaNatural: {
            MVal lhs = ops.unit(inst, fn(0).apply(elem(0)));
            MVal rhs = ops.map(inst, tableFn(fn(0)), ops.unit(inst, elem(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::MonadAssoc: {
            MVal lhs = ops.flatten(inst, ops.flatten(inst, value(0)));
            MVal rhs = ops.flatten(
                inst, ops.map(inst,
                              [&](const Elem& e) { return wrapv(ops.flatten(inst, e.inner())); },
                              value(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::MonadUnitLeft: {
            MVal lhs = ops.flatten(inst, ops.unit(inst, wrapv(value(0))));
            return {wrapv(lhs), wrapv(value(0))};
        }
        case LawId::MonadUnitRight: {
            MVal lhs = ops.flatten(
                inst,
                ops.map(inst, [&](const Elem& x) { return wrapv(ops.unit(inst, x)); }, value(0)));
            return {wrapv(lhs), wrapv(value(0))};
        }
        case LawId::ComonadDeltaNatural: {
            MVal lhs = ops.expand(inst, ops.map(inst, tableFn(fn(0)), value(0)));
            MVal rhs = mapInner(tableFn(fn(0)), ops.expand(inst, value(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::ComonadEpsilonNatural: {
            Elem lhs = fn(0).apply(ops.extract(inst, value(0)));
            Elem rhs = ops.extract(inst, ops.map(inst, tableFn(fn(0)), value(0)));
            return {lhs, rhs};
        }
        case LawId::ComonadCoassoc: {
            MVal lhs = ops.expand(inst, ops.expand(inst, value(0)));
            MVal rhs = ops.map(
                inst, [&](const Elem& e) { return wrapv(ops.expand(inst, e.inner())); },
                ops.expand(inst, value(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::ComonadCounitLeft: {
            Elem lhs = ops.extract(inst, ops.expand(inst, value(0)));
            return {lhs, wrapv(value(0))};
        }
        case LawId::ComonadCounitRight: {
            MVal lhs = ops.map(inst,
                               [&](const Elem& e) { return ops.extract(inst, e.inner()); },
                               ops.expand(inst, value(0)));
            return {wrapv(lhs), wrapv(value(0))};
        }
        case LawId::PutNatural: {
            MVal lhs = ops.map(inst, tableFn(fn(0)), ops.put(inst, value(0), elem(0)));
            MVal rhs = ops.put(inst, ops.map(inst, tableFn(fn(0)), value(0)),
                               fn(0).apply(elem(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::FlattenExtract: {
            Elem lhs = ops.extract(inst, ops.flatten(inst, value(0)));
            Elem rhs = ops.extract(inst, ops.extract(inst, value(0)).inner());
            return {lhs, rhs};
        }
        case LawId::SingletonExpand: {
            MVal lhs = ops.expand(inst, ops.unit(inst, elem(0)));
            MVal rhs = ops.map(
                inst, [&](const Elem& x) { return wrapv(ops.unit(inst, x)); },
                ops.unit(inst, elem(0)));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::SingletonExtract: {
            Elem lhs = ops.extract(inst, ops.unit(inst, elem(0)));
            return {lhs, elem(0)};
        }
        case LawId::GetPut: {
            Elem lhs = ops.extract(inst, ops.put(inst, value(0), elem(0)));
            return {lhs, elem(0)};
        }
        case LawId::PutGet: {
            MVal lhs = ops.put(inst, value(0), ops.extract(inst, value(0)));
            return {wrapv(lhs), wrapv(value(0))};
        }
        case LawId::PutPut: {
            MVal lhs = ops.put(inst, ops.put(inst, value(0), elem(0)), elem(1));
            MVal rhs = ops.put(inst, value(0), elem(1));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::PutAssoc: {
            // put(flatten(put(x, y)), z) == flatten(put(x, put(y, z)))
            const MVal& x = value(0);
            const MVal& y = value(1);
            const Elem& z = elem(0);
            MVal lhs = ops.put(inst, ops.flatten(inst, ops.put(inst, x, wrapv(y))), z);
            MVal rhs = ops.flatten(inst, ops.put(inst, x, wrapv(ops.put(inst, y, z))));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::SingletonPut: {
            MVal lhs = ops.put(inst, ops.unit(inst, elem(0)), elem(1));
            MVal rhs = ops.unit(inst, elem(1));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::FlattenExpand: {
            MVal lhs = ops.expand(inst, ops.flatten(inst, value(0)));
            MVal views = ops.expand(inst, value(0));
            MVal rhs = ops.flatten(
                inst,
                ops.map(inst,
                        [&](const Elem& e) { return wrapv(expandWork(inst, ops, e.inner())); },
                        views));
            return {wrapv(lhs), wrapv(rhs)};
        }
        case LawId::FlattenExpandAltEquiv: {
            // Top path of the exchange law, stated two ways.
            const MVal& x = value(0);
            MVal views = ops.expand(inst, x);
            MVal lhs = ops.flatten(
                inst,
                ops.map(inst,
                        [&](const Elem& e) { return wrapv(expandWork(inst, ops, e.inner())); },
                        views));

            // map flatten . flatten . map (map put) . map strength
            //   . map <map extract, extract> . expand . map expand
            MVal a = ops.map(
                inst, [&](const Elem& e) { return wrapv(ops.expand(inst, e.inner())); }, x);
            MVal b = ops.expand(inst, a);
            MVal csteps = ops.map(
                inst,
                [&](const Elem& e) {
                    const MVal& v = e.inner();
                    MVal firstPart = ops.map(
                        inst,
                        [&](const Elem& e2) { return ops.extract(inst, e2.inner()); }, v);
                    Elem sndPart = ops.extract(inst, v);
                    return Elem::pair(wrapv(std::move(firstPart)), sndPart);
                },
                b);
            MVal d = ops.map(
                inst,
                [&](const Elem& pr) {
                    return wrapv(ops.strength(inst, pr.first(), pr.second().inner()));
                },
                csteps);
            MVal e = ops.map(
                inst,
                [&](const Elem& eo) {
                    return wrapv(ops.map(
                        inst,
                        [&](const Elem& pr) {
                            return wrapv(ops.put(inst, pr.first().inner(), pr.second()));
                        },
                        eo.inner()));
                },
                d);
            MVal f = ops.flatten(inst, e);
            MVal rhs = ops.map(
                inst, [&](const Elem& eo) { return wrapv(ops.flatten(inst, eo.inner())); }, f);
            return {wrapv(lhs), wrapv(rhs)};
        }
    }
    throw Error("unknown law id");
}

}  // namespace moconad
