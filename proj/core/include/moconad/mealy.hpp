// mealy.hpp -- sequential letter-to-letter machines and their equivalence
// with list transductions: deterministic one-pass machines match prefix and
// suffix lists, unambiguous nondeterministic machines match pointed lists.
#pragma once

#include "moconad/transduction.hpp"

namespace moconad {

enum class Direction { LeftToRight, RightToLeft };

struct MealyMachine {
    Direction direction = Direction::LeftToRight;
    std::vector<Elem> states;
    std::vector<Elem> inputAlphabet;
    std::vector<Elem> outputAlphabet;
    std::size_t initial = 0;
    // dense tables indexed by state * |input| + letter
    std::vector<std::size_t> next;
    std::vector<std::size_t> out;
};

// Right-to-left machines scan from the last letter; the output keeps input
// positions either way.
std::vector<Elem> runMealy(const MealyMachine& m, const std::vector<Elem>& word);

// Carrier elements are word behaviours: tables sending a state to the state
// reached and the letter last emitted.
Transduction mealyToTransduction(const MealyMachine& m);

// Inverse direction; the transduction must live on prefix or suffix lists.
// States are the carrier plus a fresh start marker.
MealyMachine transductionToMealy(const Transduction& t);

struct MealyTransition {
    std::size_t from;
    std::size_t letter;
    std::size_t to;
    std::size_t output;
};

struct UnambiguousMealy {
    std::vector<Elem> states;
    std::vector<Elem> inputAlphabet;
    std::vector<Elem> outputAlphabet;
    std::vector<std::size_t> initial;
    std::vector<std::size_t> accepting;
    std::vector<MealyTransition> transitions;
};

enum class RunCount { Unambiguous, NoRun, MultipleRuns };

struct AmbiguityReport {
    RunCount verdict;
    // a shortest offending word; empty when unambiguous
    std::vector<Elem> witness;
};

// Exact check that every nonempty word has exactly one accepting run. Runs
// are transition sequences, so two parallel transitions differing only in
// output give their word two runs.
AmbiguityReport checkUnambiguous(const UnambiguousMealy& m);

// Outputs along the unique run; throws when the run count is not one.
std::vector<Elem> runUnambiguous(const UnambiguousMealy& m,
                                 const std::vector<Elem>& word);

// Carrier elements are triples (left relation, letter, right relation) over
// the machine's state relations; requires the machine to be unambiguous.
Transduction unambiguousToTransduction(const UnambiguousMealy& m);

// Inverse direction for pointed-list transductions: states pair a left and a
// right transform, the right one guessed up front and checked on the way.
UnambiguousMealy transductionToUnambiguous(const Transduction& t);

MVal underlineAt(const std::vector<Elem>& word, std::size_t focus);
std::vector<Elem> forgetUnderline(const MVal& v);

// The word function of a list transduction; pointed lists give the same
// outputs wherever the input focus sits.
std::vector<Elem> applyAsWordFunction(const Transduction& t,
                                      const std::vector<Elem>& word);

}  // namespace moconad
