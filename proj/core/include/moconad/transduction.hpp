// transduction.hpp -- letter-to-letter container transformations driven by a
// finite algebra: read letters into the carrier, summarise every focused view
// with the product, then emit one output letter per position.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "moconad/algebra.hpp"

namespace moconad {

struct Transduction {
    FiniteAlgebra algebra;
    std::vector<Elem> inputAlphabet;
    std::vector<Elem> outputAlphabet;
    std::map<Elem, Elem> h;       // input letter -> carrier element
    std::map<Elem, Elem> lambda;  // carrier element -> output letter
};

// Shape-preserving by construction: the output places, at each position, the
// letter computed from the product of the view focused there.
MVal applyTransduction(const Transduction& t, const MVal& value);

struct LanguageRecognizer {
    FiniteAlgebra algebra;
    std::vector<Elem> alphabet;
    std::map<Elem, Elem> h;
    std::vector<Elem> accepting;
};

bool recognize(const LanguageRecognizer& r, const MVal& value);

// Variant whose output map emits a whole container per position; the results
// are flattened in, so the output shape can differ from the input shape.
struct RelaxedTransduction {
    FiniteAlgebra algebra;
    std::vector<Elem> inputAlphabet;
    std::vector<Elem> outputAlphabet;
    std::map<Elem, Elem> h;
    std::map<Elem, MVal> lambda;  // carrier element -> output value
};

MVal applyRelaxed(const RelaxedTransduction& t, const MVal& value);

bool checkShapePreserved(const Transduction& t, int bound);
bool checkShapePreservedRelaxed(const RelaxedTransduction& t, int bound);

// Totality of the letter maps, carrier/alphabet membership, and the algebra
// laws up to the bound. Empty result means valid.
std::optional<std::string> validateTransduction(const Transduction& t, int bound);

}  // namespace moconad
