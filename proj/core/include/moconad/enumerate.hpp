// enumerate.hpp -- canonical enumeration, closed-form counting, seeded sampling.
//
// Canonical order is: by size, then lexicographically by payload, then by
// focus position (or focus path). Nested enumeration bounds the total payload
// count across levels for lists, and the total node count across levels for
// terms. Sampling is reproducible: sample i of a run depends only on
// (seed, i), via a counter-based generator.
#pragma once

#include <cstdint>

#include "moconad/values.hpp"

namespace moconad {

// Counter-based generator; the stream for (seed, counter) is independent of
// any draws made from other streams.
struct Rng {
    std::uint64_t state;
    Rng(std::uint64_t seed, std::uint64_t counter);
    std::uint64_t next();
    // uniform in [0, n), n > 0
    std::uint64_t below(std::uint64_t n);
};

// Symbols a, b, c, ... (size <= 26).
std::vector<Elem> canonicalDomain(int size);

std::vector<MVal> enumerateValues(const MoconadInstance& inst,
                                  const std::vector<Elem>& domain, int bound);
std::vector<MVal> enumerateValuesExact(const MoconadInstance& inst,
                                       const std::vector<Elem>& domain, int size);
std::uint64_t countValues(const MoconadInstance& inst, int domainSize, int bound);

// Nesting depth 2 or 3: values of M (M X) or M (M (M X)).
std::vector<MVal> enumerateNested(const MoconadInstance& inst,
                                  const std::vector<Elem>& domain, int depth,
                                  int totalBound);
std::uint64_t countNested(const MoconadInstance& inst, int domainSize, int depth,
                          int totalBound);

// All |codomain|^|domain| tables, ordered by their value tuples.
std::vector<Elem> enumerateFnTables(const std::vector<Elem>& domain,
                                    const std::vector<Elem>& codomain);

std::vector<MVal> sampleValues(const MoconadInstance& inst,
                               const std::vector<Elem>& domain, int bound,
                               std::uint64_t seed, int count);
std::vector<MVal> sampleNested(const MoconadInstance& inst,
                               const std::vector<Elem>& domain, int depth,
                               int totalBound, std::uint64_t seed, int count);

// All nonempty words up to maxLen, by length then lexicographically.
std::vector<std::vector<Elem>> enumerateWords(const std::vector<Elem>& alphabet,
                                              int maxLen);

}  // namespace moconad
