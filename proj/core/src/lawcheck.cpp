#include "moconad/lawcheck.hpp"

namespace moconad {

namespace {

std::vector<Elem> middleDomain() { return {Elem::sym("u"), Elem::sym("v")}; }
std::vector<Elem> finalDomain() { return {Elem::sym("p"), Elem::sym("q")}; }

struct SlotOptions {
    // exactly one of the two is populated per slot
    std::vector<MVal> values;
    std::vector<Elem> elems;

    std::size_t size() const { return values.empty() ? elems.size() : values.size(); }
};

SlotOptions optionsFor(const MoconadInstance& inst, Slot slot,
                       const std::vector<Elem>& domA, int bound) {
    SlotOptions out;
    switch (slot) {
        case Slot::Value:
            out.values = enumerateValues(inst, domA, bound);
            break;
        case Slot::Nested2:
            out.values = enumerateNested(inst, domA, 2, bound);
            break;
        case Slot::Nested3:
            out.values = enumerateNested(inst, domA, 3, bound);
            break;
        case Slot::DomainElem:
            out.elems = domA;
            break;
        case Slot::FnAB:
            out.elems = enumerateFnTables(domA, middleDomain());
            break;
        case Slot::FnBC:
            out.elems = enumerateFnTables(middleDomain(), finalDomain());
            break;
    }
    return out;
}

LawCase caseAt(const std::vector<Slot>& slots, const std::vector<SlotOptions>& options,
               const std::vector<std::size_t>& idx) {
    LawCase c;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const SlotOptions& o = options[s];
        switch (slots[s]) {
            case Slot::Value:
            case Slot::Nested2:
            case Slot::Nested3:
                c.values.push_back(o.values[idx[s]]);
                break;
            case Slot::DomainElem:
                c.elems.push_back(o.elems[idx[s]]);
                break;
            case Slot::FnAB:
            case Slot::FnBC:
                c.fns.push_back(o.elems[idx[s]]);
                break;
        }
    }
    return c;
}

Elem sampleFnTable(Rng& rng, const std::vector<Elem>& domain,
                   const std::vector<Elem>& codomain) {
    std::vector<Elem> values;
    for (std::size_t i = 0; i < domain.size(); ++i)
        values.push_back(codomain[rng.below(codomain.size())]);
    return Elem::fn(domain, values);
}

}  // namespace

int defaultBound(const MoconadInstance& inst) {
    return inst.functor == Functor::PointedTerm ? 7 : 4;
}

LawReport checkLaw(const MoconadInstance& inst, const Ops& ops, LawId law,
                   const Strategy& strategy) {
    LawReport report;
    report.law = law;
    std::vector<Slot> slots = lawSlots(law);

    if (const auto* ex = std::get_if<ExhaustiveStrategy>(&strategy)) {
        int bound = ex->bound > 0 ? ex->bound : defaultBound(inst);
        std::vector<Elem> domA = canonicalDomain(ex->domainSize);
        std::vector<SlotOptions> options;
        for (Slot s : slots) options.push_back(optionsFor(inst, s, domA, bound));
        for (const SlotOptions& o : options)
            if (o.size() == 0) return report;  // empty slot space, nothing to check

        std::vector<std::size_t> idx(slots.size(), 0);
        for (;;) {
            LawCase c = caseAt(slots, options, idx);
            LawEval eval = evalLaw(law, inst, ops, c);
            ++report.casesChecked;
            if (!eval.holds()) {
                report.holds = false;
                report.counterexample = c;
                report.lhs = eval.lhs;
                report.rhs = eval.rhs;
                return report;
            }
            std::size_t pos = idx.size();
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < options[pos].size()) {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
            if (done) return report;
        }
    }

    const auto& rs = std::get<RandomStrategy>(strategy);
    int bound = rs.bound > 0 ? rs.bound : defaultBound(inst);
    std::vector<Elem> domA = canonicalDomain(rs.domainSize);
    // one independent stream per (slot, sample)
    std::vector<std::uint64_t> slotSeed;
    for (std::size_t s = 0; s < slots.size(); ++s)
        slotSeed.push_back(Rng(rs.seed, 0x10000 + s).next());
    std::vector<std::vector<MVal>> valueDraws(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (slots[s] == Slot::Value)
            valueDraws[s] = sampleValues(inst, domA, bound, slotSeed[s], rs.samples);
        else if (slots[s] == Slot::Nested2)
            valueDraws[s] = sampleNested(inst, domA, 2, bound, slotSeed[s], rs.samples);
        else if (slots[s] == Slot::Nested3)
            valueDraws[s] = sampleNested(inst, domA, 3, bound, slotSeed[s], rs.samples);
    }
    for (int i = 0; i < rs.samples; ++i) {
        LawCase c;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            Rng rng(slotSeed[s], static_cast<std::uint64_t>(i));
            switch (slots[s]) {
                case Slot::Value:
                case Slot::Nested2:
                case Slot::Nested3:
                    c.values.push_back(valueDraws[s][static_cast<std::size_t>(i)]);
                    break;
                case Slot::DomainElem:
                    c.elems.push_back(domA[rng.below(domA.size())]);
                    break;
                case Slot::FnAB:
                    c.fns.push_back(sampleFnTable(rng, domA, middleDomain()));
                    break;
                case Slot::FnBC:
                    c.fns.push_back(sampleFnTable(rng, middleDomain(), finalDomain()));
                    break;
            }
        }
        LawEval eval = evalLaw(law, inst, ops, c);
        ++report.casesChecked;
        if (!eval.holds()) {
            report.holds = false;
            report.counterexample = c;
            report.lhs = eval.lhs;
            report.rhs = eval.rhs;
            return report;
        }
    }
    return report;
}

std::vector<LawReport> checkAllLaws(const MoconadInstance& inst, const Ops& ops,
                                    const Strategy& strategy) {
    std::vector<LawReport> out;
    for (LawId law : allLaws()) out.push_back(checkLaw(inst, ops, law, strategy));
    return out;
}

std::uint64_t exhaustiveCaseCount(const MoconadInstance& inst, LawId law,
                                  const ExhaustiveStrategy& strategy) {
    int bound = strategy.bound > 0 ? strategy.bound : defaultBound(inst);
    int d = strategy.domainSize;
    std::uint64_t total = 1;
    for (Slot s : lawSlots(law)) {
        switch (s) {
            case Slot::Value:
                total *= countValues(inst, d, bound);
                break;
            case Slot::Nested2:
                total *= countNested(inst, d, 2, bound);
                break;
            case Slot::Nested3:
                total *= countNested(inst, d, 3, bound);
                break;
            case Slot::DomainElem:
                total *= static_cast<std::uint64_t>(d);
                break;
            case Slot::FnAB:
                total *= static_cast<std::uint64_t>(1)
                         << static_cast<std::uint64_t>(d);  // 2^d tables into {u,v}
                break;
            case Slot::FnBC:
                total *= 4;  // 2^2 tables from {u,v} into {p,q}
                break;
        }
    }
    return total;
}

LawCase minimizeCounterexample(const MoconadInstance& inst, const Ops& ops, LawId law,
                               const LawCase& found) {
    for (int b = 1; b <= defaultBound(inst); ++b) {
        ExhaustiveStrategy ex;
        ex.bound = b;
        LawReport r = checkLaw(inst, ops, law, Strategy{ex});
        if (!r.holds) return *r.counterexample;
    }
    return found;
}

}  // namespace moconad
