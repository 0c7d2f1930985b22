#include "moconad/mealy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace moconad {

namespace {

std::size_t letterIndex(const std::vector<Elem>& alphabet, const Elem& x) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == x) return i;
    throw DomainError("letter not in alphabet: " + show(x));
}

// same lookup, but a word position to blame
std::size_t letterIndexAt(const std::vector<Elem>& alphabet, const Elem& x,
                          std::size_t pos) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == x) return i;
    throw DomainError("letter " + show(x) + " at position " +
                      std::to_string(pos + 1) + " is not in the input alphabet");
}

}  // namespace

std::vector<Elem> runMealy(const MealyMachine& m, const std::vector<Elem>& word) {
    if (word.empty()) throw DomainError("words are nonempty");
    std::size_t n = word.size();
    std::vector<Elem> output(n);
    std::size_t s = m.initial;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pos = m.direction == Direction::LeftToRight ? step : n - 1 - step;
        std::size_t a = letterIndexAt(m.inputAlphabet, word[pos], pos);
        output[pos] = m.outputAlphabet[m.out[s * m.inputAlphabet.size() + a]];
        s = m.next[s * m.inputAlphabet.size() + a];
    }
    return output;
}

Transduction mealyToTransduction(const MealyMachine& m) {
    bool l2r = m.direction == Direction::LeftToRight;
    MoconadInstance inst =
        listInstance(l2r ? Functor::PrefixList : Functor::SuffixList);

    auto behaviour = [&](std::size_t state, std::size_t a) {
        return Elem::pair(m.states[m.next[state * m.inputAlphabet.size() + a]],
                          m.outputAlphabet[m.out[state * m.inputAlphabet.size() + a]]);
    };
    // word-order product: the scan-first behaviour feeds its state to the
    // other one
    auto mulB = [&](const Elem& f, const Elem& g) {
        std::vector<Elem> values;
        for (const Elem& s : m.states) {
            Elem viaFirst = l2r ? f.apply(s) : g.apply(s);
            values.push_back(l2r ? g.apply(viaFirst.first())
                                 : f.apply(viaFirst.first()));
        }
        return Elem::fn(m.states, values);
    };

    std::map<Elem, Elem> h;
    std::set<Elem> seen;
    std::vector<Elem> elems;
    for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a) {
        std::vector<Elem> values;
        for (std::size_t s = 0; s < m.states.size(); ++s)
            values.push_back(behaviour(s, a));
        Elem b = Elem::fn(m.states, values);
        h[m.inputAlphabet[a]] = b;
        if (seen.insert(b).second) elems.push_back(b);
    }
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            const std::pair<Elem, Elem> combos[] = {{elems[i], elems[k]},
                                                    {elems[k], elems[i]}};
            for (const auto& [x, y] : combos) {
                Elem p = mulB(x, y);
                if (seen.insert(p).second) elems.push_back(p);
            }
        }

    SemigroupTable table;
    table.carrier.assign(seen.begin(), seen.end());
    std::size_t n = table.carrier.size();
    table.mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.mul[i * n + j] = table.indexOf(mulB(table.carrier[i], table.carrier[j]));

    std::map<Elem, Elem> lambda;
    for (const Elem& f : table.carrier)
        lambda[f] = f.apply(m.states[m.initial]).second();
    return Transduction{algebraFromSemigroup(inst, table), m.inputAlphabet,
                        m.outputAlphabet, std::move(h), std::move(lambda)};
}

MealyMachine transductionToMealy(const Transduction& t) {
    Functor f = t.algebra.inst.functor;
    if (f != Functor::PrefixList && f != Functor::SuffixList)
        throw Error("one-pass machines match prefix or suffix transductions only");
    SemigroupTable table = semigroupFromAlgebra(t.algebra);
    std::size_t n = table.size();

    Elem marker = Elem::seq({});
    while (std::find(table.carrier.begin(), table.carrier.end(), marker) !=
           table.carrier.end())
        marker = Elem::seq({marker});

    MealyMachine m;
    m.direction =
        f == Functor::PrefixList ? Direction::LeftToRight : Direction::RightToLeft;
    m.states.push_back(marker);
    m.states.insert(m.states.end(), table.carrier.begin(), table.carrier.end());
    m.inputAlphabet = t.inputAlphabet;
    m.outputAlphabet = t.outputAlphabet;
    m.initial = 0;
    std::size_t na = m.inputAlphabet.size();
    m.next.resize(m.states.size() * na);
    m.out.resize(m.states.size() * na);
    for (std::size_t a = 0; a < na; ++a) {
        auto it = t.h.find(m.inputAlphabet[a]);
        if (it == t.h.end())
            throw Error("no carrier element for input letter " +
                        show(m.inputAlphabet[a]));
        std::size_t ha = table.indexOf(it->second);
        for (std::size_t s = 0; s <= n; ++s) {
            std::size_t target;
            if (s == 0)
                target = ha;
            else if (f == Functor::PrefixList)
                target = table.at(s - 1, ha);
            else
                target = table.at(ha, s - 1);
            m.next[s * na + a] = target + 1;
            m.out[s * na + a] =
                letterIndex(m.outputAlphabet, t.lambda.at(table.carrier[target]));
        }
    }
    return m;
}

namespace {

struct TransitionIndex {
    // per (state, letter): indices into the deduplicated transition list
    std::vector<std::vector<std::size_t>> bySource;
    std::vector<MealyTransition> transitions;
    std::size_t letters;

    TransitionIndex(const UnambiguousMealy& m) : letters(m.inputAlphabet.size()) {
        std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen;
        for (const MealyTransition& t : m.transitions)
            if (seen.insert({t.from, t.letter, t.to, t.output}).second)
                transitions.push_back(t);
        bySource.resize(m.states.size() * letters);
        for (std::size_t i = 0; i < transitions.size(); ++i)
            bySource[transitions[i].from * letters + transitions[i].letter].push_back(i);
    }

    const std::vector<std::size_t>& at(std::size_t state, std::size_t letter) const {
        return bySource[state * letters + letter];
    }
};

std::vector<Elem> wordOf(const std::vector<std::size_t>& letters,
                         const std::vector<Elem>& alphabet) {
    std::vector<Elem> w;
    for (std::size_t a : letters) w.push_back(alphabet[a]);
    return w;
}

// shortest word whose run count is zero, via subset search
std::optional<std::vector<std::size_t>> noRunWitness(const UnambiguousMealy& m,
                                                     const TransitionIndex& ti) {
    if (m.inputAlphabet.empty()) return std::nullopt;
    using Key = std::vector<std::size_t>;
    Key start(m.initial.begin(), m.initial.end());
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    std::map<Key, std::pair<Key, std::size_t>> parent;
    std::deque<Key> queue{start};
    parent[start] = {start, 0};
    auto rebuild = [&](Key k) {
        std::vector<std::size_t> letters;
        while (!(parent[k].first == k)) {
            letters.push_back(parent[k].second);
            k = parent[k].first;
        }
        std::reverse(letters.begin(), letters.end());
        return letters;
    };
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a) {
            std::set<std::size_t> nextSet;
            for (std::size_t q : cur)
                for (std::size_t t : ti.at(q, a)) nextSet.insert(ti.transitions[t].to);
            Key next(nextSet.begin(), nextSet.end());
            if (parent.count(next)) continue;
            parent[next] = {cur, a};
            bool accepts = false;
            for (std::size_t q : next)
                accepts = accepts || std::find(m.accepting.begin(), m.accepting.end(),
                                               q) != m.accepting.end();
            if (!accepts) return rebuild(next);
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

// shortest word with two distinct runs, via a flagged pair search
std::optional<std::vector<std::size_t>> multiRunWitness(const UnambiguousMealy& m,
                                                        const TransitionIndex& ti) {
    if (m.inputAlphabet.empty()) return std::nullopt;
    using Key = std::tuple<std::size_t, std::size_t, bool>;
    auto canon = [](std::size_t p, std::size_t q, bool flag) {
        return p <= q ? Key{p, q, flag} : Key{q, p, flag};
    };
    auto isAccepting = [&](std::size_t q) {
        return std::find(m.accepting.begin(), m.accepting.end(), q) !=
               m.accepting.end();
    };
    std::map<Key, std::pair<Key, std::size_t>> parent;
    std::deque<Key> queue;
    for (std::size_t i : m.initial)
        for (std::size_t j : m.initial) {
            Key k = canon(i, j, false);
            if (!parent.count(k)) {
                parent[k] = {k, 0};
                queue.push_back(k);
            }
        }
    auto rebuild = [&](Key k) {
        std::vector<std::size_t> letters;
        while (!(parent[k].first == k)) {
            letters.push_back(parent[k].second);
            k = parent[k].first;
        }
        std::reverse(letters.begin(), letters.end());
        return letters;
    };
    while (!queue.empty()) {
        auto [p, q, flag] = queue.front();
        queue.pop_front();
        Key cur{p, q, flag};
        for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a)
            for (std::size_t t1 : ti.at(p, a))
                for (std::size_t t2 : ti.at(q, a)) {
                    bool nf = flag || t1 != t2;
                    Key next = canon(ti.transitions[t1].to, ti.transitions[t2].to, nf);
                    if (parent.count(next)) continue;
                    parent[next] = {cur, a};
                    if (nf && isAccepting(ti.transitions[t1].to) &&
                        isAccepting(ti.transitions[t2].to))
                        return rebuild(next);
                    queue.push_back(next);
                }
    }
    return std::nullopt;
}

}  // namespace

AmbiguityReport checkUnambiguous(const UnambiguousMealy& m) {
    TransitionIndex ti(m);
    auto none = noRunWitness(m, ti);
    auto multi = multiRunWitness(m, ti);
    if (!none && !multi) return {RunCount::Unambiguous, {}};
    if (none && (!multi || none->size() <= multi->size()))
        return {RunCount::NoRun, wordOf(*none, m.inputAlphabet)};
    return {RunCount::MultipleRuns, wordOf(*multi, m.inputAlphabet)};
}

std::vector<Elem> runUnambiguous(const UnambiguousMealy& m,
                                 const std::vector<Elem>& word) {
    if (word.empty()) throw DomainError("words are nonempty");
    TransitionIndex ti(m);
    std::size_t n = word.size();
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < n; ++i)
        letters.push_back(letterIndexAt(m.inputAlphabet, word[i], i));

    std::vector<std::set<std::size_t>> forward(n + 1), backward(n + 1);
    forward[0].insert(m.initial.begin(), m.initial.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q : forward[i])
            for (std::size_t t : ti.at(q, letters[i]))
                forward[i + 1].insert(ti.transitions[t].to);
    backward[n].insert(m.accepting.begin(), m.accepting.end());
    for (std::size_t i = n; i-- > 0;)
        for (const MealyTransition& t : ti.transitions)
            if (t.letter == letters[i] && backward[i + 1].count(t.to))
                backward[i].insert(t.from);

    std::vector<std::size_t> run(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> both;
        std::set_intersection(forward[i].begin(), forward[i].end(),
                              backward[i].begin(), backward[i].end(),
                              std::back_inserter(both));
        if (both.empty()) throw DomainError("no run for this word");
        if (both.size() > 1) throw DomainError("multiple runs for this word");
        run[i] = both[0];
    }
    std::vector<Elem> output;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> fits;
        for (std::size_t t : ti.at(run[i], letters[i]))
            if (ti.transitions[t].to == run[i + 1]) fits.push_back(t);
        if (fits.empty()) throw DomainError("no run for this word");
        if (fits.size() > 1) throw DomainError("multiple runs for this word");
        output.push_back(m.outputAlphabet[ti.transitions[fits[0]].output]);
    }
    return output;
}

namespace {

Elem identityRelation(const std::vector<Elem>& states) {
    std::vector<Elem> pairs;
    for (const Elem& s : states) pairs.push_back(Elem::pair(s, s));
    std::sort(pairs.begin(), pairs.end());
    return Elem::seq(pairs);
}

Elem relationOf(const std::set<std::pair<Elem, Elem>>& pairs) {
    std::vector<Elem> items;
    for (const auto& [a, b] : pairs) items.push_back(Elem::pair(a, b));
    std::sort(items.begin(), items.end());
    return Elem::seq(items);
}

Elem composeRelations(const Elem& r1, const Elem& r2) {
    std::set<std::pair<Elem, Elem>> out;
    for (const Elem& p : r1.items())
        for (const Elem& q : r2.items())
            if (p.second() == q.first()) out.insert({p.first(), q.second()});
    return relationOf(out);
}

bool relatedIn(const Elem& rel, const Elem& a, const Elem& b) {
    Elem probe = Elem::pair(a, b);
    const auto& items = rel.items();
    return std::binary_search(items.begin(), items.end(), probe);
}

}  // namespace

Transduction unambiguousToTransduction(const UnambiguousMealy& m) {
    AmbiguityReport report = checkUnambiguous(m);
    if (report.verdict != RunCount::Unambiguous)
        throw DomainError("machine is not unambiguous near word " +
                    show(makeListValue(Functor::PrefixList, report.witness)));
    TransitionIndex ti(m);
    Elem relId = identityRelation(m.states);
    std::map<std::size_t, Elem> letterRel;
    for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a) {
        std::set<std::pair<Elem, Elem>> pairs;
        for (const MealyTransition& t : ti.transitions)
            if (t.letter == a) pairs.insert({m.states[t.from], m.states[t.to]});
        letterRel[a] = relationOf(pairs);
    }

    auto fullRel = [&](const Elem& triple) {
        const auto& parts = triple.items();
        std::size_t a = letterIndex(m.inputAlphabet, parts[1]);
        return composeRelations(composeRelations(parts[0], letterRel[a]), parts[2]);
    };
    auto leftOp = [&](const Elem& t, const Elem& x) {
        const auto& parts = x.items();
        return Elem::seq(
            {composeRelations(fullRel(t), parts[0]), parts[1], parts[2]});
    };
    auto rightOp = [&](const Elem& t, const Elem& x) {
        const auto& parts = x.items();
        return Elem::seq(
            {parts[0], parts[1], composeRelations(parts[2], fullRel(t))});
    };

    std::map<Elem, Elem> h;
    std::set<Elem> seen;
    std::vector<Elem> elems;
    for (const Elem& a : m.inputAlphabet) {
        Elem triple = Elem::seq({relId, a, relId});
        h[a] = triple;
        if (seen.insert(triple).second) elems.push_back(triple);
    }
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            const std::pair<Elem, Elem> combos[] = {{elems[i], elems[k]},
                                                    {elems[k], elems[i]}};
            for (const auto& [t, x] : combos) {
                Elem l = leftOp(t, x);
                if (seen.insert(l).second) elems.push_back(l);
                Elem r = rightOp(t, x);
                if (seen.insert(r).second) elems.push_back(r);
            }
        }
    std::vector<Elem> carrier(seen.begin(), seen.end());

    auto prod = [&, relId](const MVal& v) {
        Elem left = relId, right = relId;
        for (std::size_t i = 0; i + 1 < v.focus; ++i)
            left = composeRelations(left, fullRel(v.items[i]));
        for (std::size_t i = v.focus; i < v.items.size(); ++i)
            right = composeRelations(right, fullRel(v.items[i]));
        const auto& parts = v.items[v.focus - 1].items();
        return Elem::seq({composeRelations(left, parts[0]), parts[1],
                          composeRelations(parts[2], right)});
    };

    std::map<Elem, Elem> lambda;
    for (const Elem& triple : carrier) {
        const auto& parts = triple.items();
        std::size_t a = letterIndex(m.inputAlphabet, parts[1]);
        std::set<Elem> outputs;
        for (const MealyTransition& t : ti.transitions) {
            if (t.letter != a) continue;
            bool leftOk = false, rightOk = false;
            for (std::size_t qi : m.initial)
                leftOk = leftOk || relatedIn(parts[0], m.states[qi], m.states[t.from]);
            for (std::size_t qf : m.accepting)
                rightOk = rightOk || relatedIn(parts[2], m.states[t.to], m.states[qf]);
            if (leftOk && rightOk) outputs.insert(m.outputAlphabet[t.output]);
        }
        if (outputs.size() != 1)
            throw Error("no unique output for a realised context of letter " +
                        show(parts[1]));
        lambda[triple] = *outputs.begin();
    }

    FiniteAlgebra alg{listInstance(Functor::PointedList), carrier,
                      decomposePointedAlgebra(carrier, prod)};
    return Transduction{std::move(alg), m.inputAlphabet, m.outputAlphabet,
                        std::move(h), std::move(lambda)};
}

UnambiguousMealy transductionToUnambiguous(const Transduction& t) {
    if (t.algebra.inst.functor != Functor::PointedList)
        throw Error("two-sided machines match pointed-list transductions only");
    const auto* pp = std::get_if<PointedPresentation>(&t.algebra.pres);
    if (!pp) throw Error("presentation does not match instance");
    std::size_t nl = pp->left.size(), nr = pp->right.size();
    std::size_t nc = t.algebra.carrier.size();

    UnambiguousMealy m;
    m.inputAlphabet = t.inputAlphabet;
    m.outputAlphabet = t.outputAlphabet;
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t r = 0; r < nr; ++r)
            m.states.push_back(Elem::pair(pp->left.carrier[l], pp->right.carrier[r]));
    for (std::size_t r = 0; r < nr; ++r) m.initial.push_back(0 * nr + r);
    for (std::size_t l = 0; l < nl; ++l) m.accepting.push_back(l * nr + 0);

    for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a) {
        auto it = t.h.find(m.inputAlphabet[a]);
        if (it == t.h.end())
            throw Error("no carrier element for input letter " +
                        show(m.inputAlphabet[a]));
        std::size_t ci = t.algebra.indexOf(it->second);
        for (std::size_t l = 0; l < nl; ++l)
            for (std::size_t r = 0; r < nr; ++r) {
                std::size_t src = l * nr + pp->right.at(pp->hRight[ci], r);
                std::size_t dst = pp->left.at(l, pp->hLeft[ci]) * nr + r;
                Elem outLetter =
                    t.lambda.at(t.algebra.carrier[pp->g[(l * nc + ci) * nr + r]]);
                m.transitions.push_back(
                    {src, a, dst, letterIndex(m.outputAlphabet, outLetter)});
            }
    }
    return m;
}

MVal underlineAt(const std::vector<Elem>& word, std::size_t focus) {
    if (word.empty()) throw DomainError("cannot underline the empty word");
    if (focus < 1 || focus > word.size())
        throw DomainError("underline position out of range");
    return makePointedValue(word, focus);
}

std::vector<Elem> forgetUnderline(const MVal& v) {
    if (v.functor != Functor::PointedList)
        throw SchemaError("expected a pointed list");
    return v.items;
}

std::vector<Elem> applyAsWordFunction(const Transduction& t,
                                      const std::vector<Elem>& word) {
    Functor f = t.algebra.inst.functor;
    if (f == Functor::PointedTerm)
        throw Error("word application needs a list instance");
    MVal in = f == Functor::PointedList ? makePointedValue(word, 1)
                                        : makeListValue(f, word);
    return applyTransduction(t, in).items;
}

}  // namespace moconad
