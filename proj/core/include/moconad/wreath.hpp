// wreath.hpp -- composing two transductions into one.
//
// The composite carrier pairs a first-stage element with a table mapping
// inner contexts (carrier maps of the first stage) to second-stage elements.
// The composite product threads the first stage through as-is and, for every
// context, re-evaluates the second stage on the letters the first stage
// would emit under that context.
#pragma once

#include "moconad/transduction.hpp"

namespace moconad {

struct WreathOptions {
    // materialise every (element, table) pair instead of only the ones
    // reachable from the letter images
    bool fullCarrier = false;
    // restrict the tables' domain to realised contexts instead of all
    // carrier maps
    bool contextsOnlySpace = false;
    std::size_t carrierCap = 100000;
};

struct WreathAlgebra {
    FiniteAlgebra algebra;
    // the context tables that second components are functions of
    std::vector<Elem> space;
};

// Full composite algebra of two algebras over the same instance. Throws when
// the pair count would exceed the cap.
WreathAlgebra wreathProduct(const FiniteAlgebra& a1, const FiniteAlgebra& a2,
                            const WreathOptions& opts = {});

// One transduction equivalent to running `first`, then `second` on its
// output. By default the carrier keeps only elements reachable from the
// letter images (the full pair space is usually far larger).
Transduction composeTransductions(const Transduction& second, const Transduction& first,
                                  const WreathOptions& opts = {});

// Reference composition: apply the two stages in sequence.
MVal oracleCompose(const Transduction& second, const Transduction& first,
                   const MVal& value);

// Prefix-list composition through the classical construction: pairs of a
// first-stage element and a table over the unit-extended first carrier.
Transduction classicalWreathCompose(const Transduction& second,
                                    const Transduction& first);

}  // namespace moconad
