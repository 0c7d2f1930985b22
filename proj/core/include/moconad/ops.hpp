// ops.hpp -- the container operations every instance supports.
//
// All operations take the instance explicitly and assume structurally valid
// values (see validateValue). Nested containers are represented by wrapping:
// flatten expects every payload to wrap a value of the same instance, and
// expand produces such payloads.
#pragma once

#include <functional>

#include "moconad/values.hpp"

namespace moconad {

using ElemFn = std::function<Elem(const Elem&)>;

// Apply f to every payload position, keeping the structure and focus.
MVal map(const MoconadInstance& inst, const ElemFn& f, const MVal& v);

// Smallest container holding x: singleton list, singleton pointed list,
// or a single focused leaf.
MVal unit(const MoconadInstance& inst, const Elem& x);

// Collapse one nesting level. Lists concatenate; the result focus is the
// inner focus of the outer focused block. Terms substitute each wrapped tree
// at its leaf; the result path extends the outer path by the inner one.
MVal flatten(const MoconadInstance& inst, const MVal& mm);

// The focused payload: last (prefix), first (suffix), or the marked position.
Elem extract(const MoconadInstance& inst, const MVal& v);

// All focused views of v, arranged in the shape of v: prefixes ending at each
// position, suffixes starting at each position, or the value refocused at
// every payload position (outer focus at the original one).
MVal expand(const MoconadInstance& inst, const MVal& v);

// Replace the focused payload with x; structure otherwise unchanged.
MVal put(const MoconadInstance& inst, const MVal& v, const Elem& x);

// Pair a constant with every payload: strength(a, v) = map(x -> (a, x), v).
MVal strength(const MoconadInstance& inst, const Elem& a, const MVal& v);

// Forget payloads, keeping the structure (payloads become a fixed bullet).
MVal shape(const MoconadInstance& inst, const MVal& v);

// Override the focused element of k with the whole container l, then flatten:
// concat(k, l) = flatten(put(map(unit, k), l)).
MVal concat(const MoconadInstance& inst, const MVal& k, const MVal& l);

extern const Elem kBullet;

// Operation table used by the law checker, so tests can swap in deliberately
// broken variants and confirm the laws reject them.
struct Ops {
    MVal (*map)(const MoconadInstance&, const ElemFn&, const MVal&);
    MVal (*unit)(const MoconadInstance&, const Elem&);
    MVal (*flatten)(const MoconadInstance&, const MVal&);
    Elem (*extract)(const MoconadInstance&, const MVal&);
    MVal (*expand)(const MoconadInstance&, const MVal&);
    MVal (*put)(const MoconadInstance&, const MVal&, const Elem&);
    MVal (*strength)(const MoconadInstance&, const Elem&, const MVal&);

    static const Ops& standard();
};

}  // namespace moconad
