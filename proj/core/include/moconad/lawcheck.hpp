// lawcheck.hpp -- exhaustive and randomised checking of the law catalogue.
//
// Exhaustive runs enumerate every slot assignment up to the size bound in
// canonical order, so the first failure is also the smallest one. Randomised
// runs draw each case from a counter-based stream: sample i of a run depends
// only on (seed, i).
#pragma once

#include <variant>

#include "moconad/enumerate.hpp"
#include "moconad/laws.hpp"

namespace moconad {

struct ExhaustiveStrategy {
    int bound = 0;  // 0 picks the instance default
    int domainSize = 2;
};

struct RandomStrategy {
    std::uint64_t seed = 0;
    int samples = 200;
    int bound = 0;  // 0 picks the instance default
    int domainSize = 2;
};

using Strategy = std::variant<ExhaustiveStrategy, RandomStrategy>;

// 4 for lists, 7 for terms (payload count, resp. node count).
int defaultBound(const MoconadInstance& inst);

struct LawReport {
    LawId law = LawId::FunctorIdLaw;
    bool holds = true;
    std::uint64_t casesChecked = 0;
    std::optional<LawCase> counterexample;
    std::optional<Elem> lhs;
    std::optional<Elem> rhs;
};

LawReport checkLaw(const MoconadInstance& inst, const Ops& ops, LawId law,
                   const Strategy& strategy);
std::vector<LawReport> checkAllLaws(const MoconadInstance& inst, const Ops& ops,
                                    const Strategy& strategy);

// Closed-form number of cases an exhaustive run visits when the law holds.
std::uint64_t exhaustiveCaseCount(const MoconadInstance& inst, LawId law,
                                  const ExhaustiveStrategy& strategy);

// Smallest failing case in canonical order, found by re-running bounds
// 1, 2, ... up to the instance default; falls back to the given case.
LawCase minimizeCounterexample(const MoconadInstance& inst, const Ops& ops, LawId law,
                               const LawCase& found);

}  // namespace moconad
