// laws.hpp -- the executable law catalog.
//
// Each law is a pair of closed expressions over the operation table, evaluated
// on a bundle of quantified inputs. Results are reported as elements (container
// results are wrapped) so every law compares uniformly.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moconad/ops.hpp"

namespace moconad {

enum class LawId {
    FunctorIdLaw = 0,
    FunctorCompose,
    MonadMuNatural,
    MonadEtaNatural,
    MonadAssoc,
    MonadUnitLeft,
    MonadUnitRight,
    ComonadDeltaNatural,
    ComonadEpsilonNatural,
    ComonadCoassoc,
    ComonadCounitLeft,
    ComonadCounitRight,
    PutNatural,
    FlattenExtract,
    SingletonExpand,
    SingletonExtract,
    GetPut,
    PutGet,
    PutPut,
    PutAssoc,
    SingletonPut,
    FlattenExpand,
    FlattenExpandAltEquiv,
};

inline constexpr int kLawCount = 23;

std::vector<LawId> allLaws();
const char* lawName(LawId law);
std::optional<LawId> lawFromName(const std::string& name);

// What a law quantifies over, in LawCase slot order.
enum class Slot {
    Value,       // one container value
    Nested2,     // one doubly nested value
    Nested3,     // one triply nested value
    DomainElem,  // one payload element
    FnAB,        // one function table, payload domain to a second domain
    FnBC,        // one function table, second domain to a third
};

std::vector<Slot> lawSlots(LawId law);

struct LawCase {
    std::vector<MVal> values;  // Value/Nested2/Nested3 slots, in order
    std::vector<Elem> elems;   // DomainElem slots, in order
    std::vector<Elem> fns;     // FnAB/FnBC slots, in order
};

std::string show(const LawCase& c);

struct LawEval {
    Elem lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

LawEval evalLaw(LawId law, const MoconadInstance& inst, const Ops& ops, const LawCase& c);

// One refocusing step of the flatten/expand exchange: for a doubly nested
// view, rebuild every inner view's surrounding context. Exposed because its
// intermediate values are part of the observable behaviour.
MVal expandWork(const MoconadInstance& inst, const Ops& ops, const MVal& view);

}  // namespace moconad
