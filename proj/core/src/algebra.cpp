#include "moconad/algebra.hpp"

#include <algorithm>
#include <set>

#include "moconad/enumerate.hpp"
#include "moconad/ops.hpp"

namespace moconad {

std::size_t SemigroupTable::at(std::size_t i, std::size_t j) const {
    return mul[i * carrier.size() + j];
}

std::size_t SemigroupTable::indexOf(const Elem& e) const {
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (carrier[i] == e) return i;
    throw DomainError("element not in carrier: " + show(e));
}

std::optional<AssocFailure> checkAssociative(const SemigroupTable& t) {
    std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k)))
                    return AssocFailure{t.carrier[i], t.carrier[j], t.carrier[k]};
    return std::nullopt;
}

bool hasIdentityAtZero(const SemigroupTable& t) {
    if (t.carrier.empty()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.at(0, i) != i || t.at(i, 0) != i) return false;
    return true;
}

std::size_t PointedPresentation::apply(std::size_t l, std::size_t a, std::size_t r,
                                       std::size_t carrierSize) const {
    return g[(l * carrierSize + a) * right.size() + r];
}

std::size_t FiniteAlgebra::indexOf(const Elem& e) const {
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (carrier[i] == e) return i;
    throw DomainError("element not in carrier: " + show(e));
}

namespace {

std::size_t flatTuple(const std::vector<std::size_t>& idx, std::size_t base) {
    std::size_t f = 0;
    for (std::size_t i : idx) f = f * base + i;
    return f;
}

const std::vector<std::vector<std::size_t>>& actFor(const TermAutomaton& ta,
                                                    const std::string& sym) {
    auto it = ta.act.find(sym);
    if (it == ta.act.end()) throw DomainError("no action table for symbol: " + sym);
    return it->second;
}

std::size_t deltaIndex(const FiniteAlgebra& alg, const TermAutomaton& ta,
                       const TreeNode& t) {
    if (t.isLeaf()) return alg.indexOf(*t.label);
    if (t.children.empty()) {
        auto it = ta.nullary.find(t.symbol);
        if (it == ta.nullary.end())
            throw DomainError("no constant for childless symbol: " + t.symbol);
        return it->second;
    }
    std::vector<std::size_t> idx;
    for (const TreeNode& c : t.children) idx.push_back(deltaIndex(alg, ta, c));
    return actFor(ta, t.symbol)[0][flatTuple(idx, alg.carrier.size())];
}

std::size_t spineIndex(const FiniteAlgebra& alg, const TermAutomaton& ta,
                       const TreeNode& node, const std::vector<int>& path,
                       std::size_t depth) {
    if (depth == path.size()) {
        if (!node.isLeaf()) throw SchemaError("focus path does not reach a leaf");
        return alg.indexOf(*node.label);
    }
    std::size_t slot = static_cast<std::size_t>(path[depth]) - 1;
    if (slot >= node.children.size()) throw SchemaError("focus path leaves the tree");
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < node.children.size(); ++j)
        idx.push_back(j == slot ? spineIndex(alg, ta, node.children[j], path, depth + 1)
                                : deltaIndex(alg, ta, node.children[j]));
    return actFor(ta, node.symbol)[slot][flatTuple(idx, alg.carrier.size())];
}

}  // namespace

Elem FiniteAlgebra::prod(const MVal& value) const {
    validateValue(inst, value);
    if (inst.functor == Functor::PrefixList || inst.functor == Functor::SuffixList) {
        const auto* table = std::get_if<SemigroupTable>(&pres);
        if (!table) throw Error("presentation does not match instance");
        std::size_t acc = table->indexOf(value.items[0]);
        for (std::size_t i = 1; i < value.items.size(); ++i)
            acc = table->at(acc, table->indexOf(value.items[i]));
        return carrier[acc];
    }
    if (inst.functor == Functor::PointedList) {
        const auto* pp = std::get_if<PointedPresentation>(&pres);
        if (!pp) throw Error("presentation does not match instance");
        std::size_t l = 0, r = 0;
        for (std::size_t i = 0; i + 1 < value.focus; ++i)
            l = pp->left.at(l, pp->hLeft[indexOf(value.items[i])]);
        for (std::size_t i = value.focus; i < value.items.size(); ++i)
            r = pp->right.at(r, pp->hRight[indexOf(value.items[i])]);
        std::size_t a = indexOf(value.items[value.focus - 1]);
        return carrier[pp->apply(l, a, r, carrier.size())];
    }
    const auto* ta = std::get_if<TermAutomaton>(&pres);
    if (!ta) throw Error("presentation does not match instance");
    return carrier[spineIndex(*this, *ta, value.root, value.path, 0)];
}

Elem evaluateUnpointed(const FiniteAlgebra& alg, const TreeNode& t) {
    const auto* ta = std::get_if<TermAutomaton>(&alg.pres);
    if (!ta) throw Error("unpointed evaluation needs a term algebra");
    return alg.carrier[deltaIndex(alg, *ta, t)];
}

FiniteAlgebra algebraFromSemigroup(const MoconadInstance& inst,
                                   const SemigroupTable& table) {
    if (inst.functor != Functor::PrefixList && inst.functor != Functor::SuffixList)
        throw Error("multiplication tables present prefix or suffix algebras only");
    if (auto bad = checkAssociative(table))
        throw Error("multiplication not associative at (" + show(bad->a) + ", " +
                    show(bad->b) + ", " + show(bad->c) + ")");
    return FiniteAlgebra{inst, table.carrier, table};
}

SemigroupTable semigroupFromAlgebra(const FiniteAlgebra& alg) {
    if (alg.inst.functor == Functor::PointedTerm)
        throw Error("no underlying multiplication for a term algebra");
    if (const auto* table = std::get_if<SemigroupTable>(&alg.pres)) return *table;
    std::size_t n = alg.carrier.size();
    SemigroupTable t;
    t.carrier = alg.carrier;
    t.mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MVal two = alg.inst.functor == Functor::PointedList
                           ? makePointedValue({alg.carrier[i], alg.carrier[j]}, 2)
                           : makeListValue(alg.inst.functor,
                                           {alg.carrier[i], alg.carrier[j]});
            t.mul[i * n + j] = alg.indexOf(alg.prod(two));
        }
    return t;
}

namespace {

// transform-monoid closure from generator maps; mulWordOrder composes so that
// the table entry (i, j) is the transform of word_i followed by word_j
struct TransformClosure {
    std::vector<std::vector<std::size_t>> maps;  // index 0 is the identity
    std::vector<std::size_t> mul;
};

TransformClosure closeTransforms(const std::vector<std::vector<std::size_t>>& generators,
                                 bool leftHanded, std::size_t cap) {
    auto compWord = [&](const std::vector<std::size_t>& u,
                        const std::vector<std::size_t>& v) {
        // transform of word u ++ v
        std::vector<std::size_t> out(u.size());
        for (std::size_t x = 0; x < u.size(); ++x)
            out[x] = leftHanded ? u[v[x]] : v[u[x]];
        return out;
    };
    std::size_t n = generators.empty() ? 0 : generators[0].size();
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    TransformClosure tc;
    tc.maps.push_back(id);
    std::map<std::vector<std::size_t>, std::size_t> seen;
    seen[id] = 0;
    for (std::size_t i = 0; i < tc.maps.size(); ++i) {
        for (const auto& g : generators) {
            auto next = compWord(tc.maps[i], g);
            if (seen.emplace(next, tc.maps.size()).second) {
                tc.maps.push_back(next);
                if (tc.maps.size() > cap) throw Error("transform monoid exceeds cap");
            }
        }
    }
    std::size_t m = tc.maps.size();
    tc.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto prod = compWord(tc.maps[i], tc.maps[j]);
            auto it = seen.find(prod);
            if (it == seen.end()) throw Error("transform monoid not closed");
            tc.mul[i * m + j] = it->second;
        }
    return tc;
}

Elem fnOfMap(const std::vector<Elem>& carrier, const std::vector<std::size_t>& m) {
    std::vector<Elem> values;
    for (std::size_t i = 0; i < carrier.size(); ++i) values.push_back(carrier[m[i]]);
    return Elem::fn(carrier, values);
}

}  // namespace

PointedPresentation decomposePointedAlgebra(
    const std::vector<Elem>& carrier, const std::function<Elem(const MVal&)>& prod,
    std::size_t cap) {
    std::size_t n = carrier.size();
    auto indexOf = [&](const Elem& e) {
        for (std::size_t i = 0; i < n; ++i)
            if (carrier[i] == e) return i;
        throw DomainError("product left the carrier: " + show(e));
    };
    std::vector<std::vector<std::size_t>> lgen, rgen;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> lm(n), rm(n);
        for (std::size_t x = 0; x < n; ++x) {
            lm[x] = indexOf(prod(makePointedValue({carrier[a], carrier[x]}, 2)));
            rm[x] = indexOf(prod(makePointedValue({carrier[x], carrier[a]}, 1)));
        }
        lgen.push_back(lm);
        rgen.push_back(rm);
    }
    TransformClosure lc = closeTransforms(lgen, true, cap);
    TransformClosure rc = closeTransforms(rgen, false, cap);

    PointedPresentation pp;
    pp.left.mul = lc.mul;
    pp.right.mul = rc.mul;
    for (const auto& m : lc.maps) pp.left.carrier.push_back(fnOfMap(carrier, m));
    for (const auto& m : rc.maps) pp.right.carrier.push_back(fnOfMap(carrier, m));
    for (std::size_t a = 0; a < n; ++a) {
        pp.hLeft.push_back(
            static_cast<std::size_t>(std::find(lc.maps.begin(), lc.maps.end(), lgen[a]) -
                                     lc.maps.begin()));
        pp.hRight.push_back(
            static_cast<std::size_t>(std::find(rc.maps.begin(), rc.maps.end(), rgen[a]) -
                                     rc.maps.begin()));
    }
    pp.g.resize(lc.maps.size() * n * rc.maps.size());
    for (std::size_t l = 0; l < lc.maps.size(); ++l)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t r = 0; r < rc.maps.size(); ++r)
                pp.g[(l * n + a) * rc.maps.size() + r] = rc.maps[r][lc.maps[l][a]];
    return pp;
}

FiniteAlgebra pointedAlgebraFromSemigroup(const SemigroupTable& table) {
    if (auto bad = checkAssociative(table))
        throw Error("multiplication not associative at (" + show(bad->a) + ", " +
                    show(bad->b) + ", " + show(bad->c) + ")");
    auto prod = [table](const MVal& v) {
        std::size_t acc = table.indexOf(v.items[0]);
        for (std::size_t i = 1; i < v.items.size(); ++i)
            acc = table.at(acc, table.indexOf(v.items[i]));
        return table.carrier[acc];
    };
    MoconadInstance inst = listInstance(Functor::PointedList);
    return FiniteAlgebra{inst, table.carrier,
                         decomposePointedAlgebra(table.carrier, prod)};
}

FiniteAlgebra algebraFromOracle(const RawAlgebra& raw, std::size_t cap) {
    const auto& inst = raw.inst;
    std::size_t n = raw.carrier.size();
    auto indexOf = [&](const Elem& e) {
        for (std::size_t i = 0; i < n; ++i)
            if (raw.carrier[i] == e) return i;
        throw DomainError("product left the carrier: " + show(e));
    };
    if (inst.functor == Functor::PrefixList || inst.functor == Functor::SuffixList) {
        SemigroupTable t;
        t.carrier = raw.carrier;
        t.mul.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t.mul[i * n + j] = indexOf(raw.prod(
                    makeListValue(inst.functor, {raw.carrier[i], raw.carrier[j]})));
        return algebraFromSemigroup(inst, t);
    }
    if (inst.functor == Functor::PointedList)
        return FiniteAlgebra{inst, raw.carrier,
                             decomposePointedAlgebra(raw.carrier, raw.prod, cap)};

    TermAutomaton ta;
    for (const auto& [sym, arity] : inst.alphabet) {
        if (arity == 0) {
            auto it = raw.nullary.find(sym);
            if (it == raw.nullary.end())
                throw Error("missing constant for childless symbol: " + sym);
            ta.nullary[sym] = indexOf(it->second);
            continue;
        }
        std::size_t tuples = 1;
        for (int i = 0; i < arity; ++i) tuples *= n;
        std::vector<std::vector<std::size_t>> slots(
            static_cast<std::size_t>(arity), std::vector<std::size_t>(tuples));
        std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
        for (std::size_t flat = 0; flat < tuples; ++flat) {
            std::vector<TreeNode> children;
            for (std::size_t i : idx) children.push_back(TreeNode::leaf(raw.carrier[i]));
            TreeNode t = TreeNode::node(sym, children);
            for (int slot = 0; slot < arity; ++slot)
                slots[static_cast<std::size_t>(slot)][flat] =
                    indexOf(raw.prod(makeTermValue(t, {slot + 1})));
            for (std::size_t pos = idx.size(); pos-- > 0;) {
                if (++idx[pos] < n) break;
                idx[pos] = 0;
            }
        }
        ta.act[sym] = std::move(slots);
    }
    return FiniteAlgebra{inst, raw.carrier, ta};
}

std::optional<AlgebraIssue> validateAlgebra(const FiniteAlgebra& alg, int bound) {
    // presentation shape
    std::size_t n = alg.carrier.size();
    if (n == 0) return AlgebraIssue{"carrier is empty", std::nullopt};
    if (const auto* t = std::get_if<SemigroupTable>(&alg.pres)) {
        if (t->carrier != alg.carrier || t->mul.size() != n * n)
            return AlgebraIssue{"multiplication table shape mismatch", std::nullopt};
        if (auto bad = checkAssociative(*t))
            return AlgebraIssue{"multiplication not associative at (" + show(bad->a) +
                                    ", " + show(bad->b) + ", " + show(bad->c) + ")",
                                std::nullopt};
    } else if (const auto* pp = std::get_if<PointedPresentation>(&alg.pres)) {
        if (!hasIdentityAtZero(pp->left) || !hasIdentityAtZero(pp->right))
            return AlgebraIssue{"transform monoid lacks identity at index 0",
                                std::nullopt};
        if (checkAssociative(pp->left) || checkAssociative(pp->right))
            return AlgebraIssue{"transform monoid not associative", std::nullopt};
        if (pp->hLeft.size() != n || pp->hRight.size() != n ||
            pp->g.size() != pp->left.size() * n * pp->right.size())
            return AlgebraIssue{"presentation table shape mismatch", std::nullopt};
    } else if (const auto* ta = std::get_if<TermAutomaton>(&alg.pres)) {
        for (const auto& [sym, arity] : alg.inst.alphabet) {
            if (arity == 0) {
                if (!ta->nullary.count(sym))
                    return AlgebraIssue{"missing constant for childless symbol: " + sym,
                                        std::nullopt};
                continue;
            }
            auto it = ta->act.find(sym);
            std::size_t tuples = 1;
            for (int i = 0; i < arity; ++i) tuples *= n;
            if (it == ta->act.end() ||
                it->second.size() != static_cast<std::size_t>(arity))
                return AlgebraIssue{"missing action table for symbol: " + sym,
                                    std::nullopt};
            for (const auto& slot : it->second)
                if (slot.size() != tuples)
                    return AlgebraIssue{"action table shape mismatch for: " + sym,
                                        std::nullopt};
        }
    }
    for (const Elem& a : alg.carrier) {
        MVal u = unit(alg.inst, a);
        if (!(alg.prod(u) == a))
            return AlgebraIssue{"product of a singleton is not its payload", u};
    }
    ElemFn inner = [&alg](const Elem& e) { return alg.prod(e.inner()); };
    for (const MVal& nested : enumerateNested(alg.inst, alg.carrier, 2, bound)) {
        Elem lhs = alg.prod(flatten(alg.inst, nested));
        Elem rhs = alg.prod(map(alg.inst, inner, nested));
        if (!(lhs == rhs))
            return AlgebraIssue{"product disagrees with flattening", nested};
    }
    return std::nullopt;
}

Elem contextOf(const FiniteAlgebra& alg, const MVal& value) {
    std::vector<Elem> out;
    for (const Elem& x : alg.carrier) out.push_back(alg.prod(put(alg.inst, value, x)));
    return Elem::fn(alg.carrier, out);
}

SemigroupTable contextMonoid(const FiniteAlgebra& alg, int bound) {
    if (bound <= 0) {
        int maxArity = 1;
        for (const auto& [sym, arity] : alg.inst.alphabet)
            maxArity = std::max(maxArity, arity);
        bound = std::max(static_cast<int>(alg.carrier.size()) + 2, maxArity + 1);
    }
    std::set<Elem> seen;
    for (const MVal& v : enumerateValues(alg.inst, alg.carrier, bound))
        seen.insert(contextOf(alg, v));
    std::vector<Elem> elems(seen.begin(), seen.end());
    std::size_t m = elems.size();
    auto compose = [&](const Elem& f, const Elem& g) {
        std::vector<Elem> values;
        for (const Elem& x : alg.carrier) values.push_back(f.apply(g.apply(x)));
        return Elem::fn(alg.carrier, values);
    };
    SemigroupTable table;
    table.carrier = elems;
    table.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Elem c = compose(elems[i], elems[j]);
            auto it = std::lower_bound(elems.begin(), elems.end(), c);
            if (it == elems.end() || !(*it == c))
                throw Error("context collection not closed under composition within bound " +
                            std::to_string(bound));
            table.mul[i * m + j] = static_cast<std::size_t>(it - elems.begin());
        }
    return table;
}

namespace {

std::optional<std::size_t> identityOf(const SemigroupTable& t) {
    for (std::size_t e = 0; e < t.size(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < t.size() && ok; ++x)
            ok = t.at(e, x) == x && t.at(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

}  // namespace

bool isGroupMonoid(const SemigroupTable& monoid) {
    auto e = identityOf(monoid);
    if (!e) return false;
    for (std::size_t x = 0; x < monoid.size(); ++x) {
        bool inv = false;
        for (std::size_t y = 0; y < monoid.size() && !inv; ++y)
            inv = monoid.at(x, y) == *e && monoid.at(y, x) == *e;
        if (!inv) return false;
    }
    return true;
}

bool isAperiodic(const SemigroupTable& monoid) {
    for (std::size_t x = 0; x < monoid.size(); ++x) {
        std::size_t p = x;
        bool settled = false;
        for (std::size_t k = 0; k <= monoid.size(); ++k) {
            std::size_t q = monoid.at(p, x);
            if (q == p) {
                settled = true;
                break;
            }
            p = q;
        }
        if (!settled) return false;
    }
    return true;
}

bool isMGroup(const FiniteAlgebra& alg) {
    return isGroupMonoid(contextMonoid(alg));
}

bool isAperiodic(const FiniteAlgebra& alg) {
    return isAperiodic(contextMonoid(alg));
}

}  // namespace moconad
