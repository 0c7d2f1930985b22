#include "moconad/json_io.hpp"

namespace moconad {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw SchemaError(std::string("missing field: ") + name);
    return j.at(name);
}

std::string stringField(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_string()) throw SchemaError(std::string(name) + " must be a string");
    return f.get<std::string>();
}

std::size_t indexField(const json& j, std::size_t limit, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw SchemaError(std::string(what) + " must be a nonnegative index");
    auto v = j.get<std::uint64_t>();
    if (v >= limit) throw SchemaError(std::string(what) + " out of range");
    return static_cast<std::size_t>(v);
}

std::vector<Elem> elemsFromJson(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    std::vector<Elem> out;
    for (const json& e : j) out.push_back(elemFromJson(e));
    return out;
}

json elemsToJson(const std::vector<Elem>& es) {
    json out = json::array();
    for (const Elem& e : es) out.push_back(toJson(e));
    return out;
}

json treeToJson(const TreeNode& t) {
    if (t.isLeaf()) return json{{"leaf", toJson(*t.label)}};
    json children = json::array();
    for (const TreeNode& c : t.children) children.push_back(treeToJson(c));
    return json{{"symbol", t.symbol}, {"children", children}};
}

TreeNode treeFromJson(const json& j) {
    if (!j.is_object()) throw SchemaError("tree node must be an object");
    if (j.contains("leaf")) return TreeNode::leaf(elemFromJson(j.at("leaf")));
    std::string sym = stringField(j, "symbol");
    const json& cj = field(j, "children");
    if (!cj.is_array()) throw SchemaError("children must be an array");
    std::vector<TreeNode> children;
    for (const json& c : cj) children.push_back(treeFromJson(c));
    return TreeNode::node(sym, std::move(children));
}

json tableToJson(const SemigroupTable& t) {
    json mul = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < t.size(); ++j2) row.push_back(t.at(i, j2));
        mul.push_back(row);
    }
    return json{{"carrier", elemsToJson(t.carrier)}, {"mul", mul}};
}

SemigroupTable tableFromJson(const json& j) {
    SemigroupTable t;
    t.carrier = elemsFromJson(field(j, "carrier"), "carrier");
    const json& mul = field(j, "mul");
    std::size_t n = t.carrier.size();
    if (!mul.is_array() || mul.size() != n)
        throw SchemaError("mul must have one row per carrier element");
    for (const json& row : mul) {
        if (!row.is_array() || row.size() != n)
            throw SchemaError("mul rows must match the carrier size");
        for (const json& cell : row) t.mul.push_back(indexField(cell, n, "mul entry"));
    }
    return t;
}

json pairMapToJson(const std::map<Elem, Elem>& m) {
    json out = json::array();
    for (const auto& [k, v] : m) out.push_back(json::array({toJson(k), toJson(v)}));
    return out;
}

std::map<Elem, Elem> pairMapFromJson(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of pairs");
    std::map<Elem, Elem> out;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw SchemaError(std::string(what) + " entries must be [key, value]");
        out[elemFromJson(entry[0])] = elemFromJson(entry[1]);
    }
    return out;
}

std::vector<std::size_t> indicesFromJson(const json& j, std::size_t limit,
                                         const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const json& e : j) out.push_back(indexField(e, limit, what));
    return out;
}

}  // namespace

json toJson(const Elem& e) {
    switch (e.tag()) {
        case Elem::Tag::Symbol:
            return json{{"sym", e.symbol()}};
        case Elem::Tag::Int:
            return json{{"int", e.intValue()}};
        case Elem::Tag::Pair:
            return json{{"pair", json::array({toJson(e.first()), toJson(e.second())})}};
        case Elem::Tag::Seq:
            return json{{"seq", elemsToJson(e.items())}};
        case Elem::Tag::Fn: {
            json entries = json::array();
            const auto& dom = e.fnDomain();
            const auto& values = e.fnValues();
            for (std::size_t i = 0; i < dom.size(); ++i)
                entries.push_back(json::array({toJson(dom[i]), toJson(values[i])}));
            return json{{"fn", entries}};
        }
        case Elem::Tag::Wrapped:
            return json{{"wrapped", toJson(e.inner())}};
    }
    throw Error("unreachable");
}

Elem elemFromJson(const json& j) {
    if (!j.is_object() || j.size() != 1)
        throw SchemaError("element must be a single-key object");
    if (j.contains("sym")) {
        const json& s = j.at("sym");
        if (!s.is_string()) throw SchemaError("sym must be a string");
        return Elem::sym(s.get<std::string>());
    }
    if (j.contains("int")) {
        const json& v = j.at("int");
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw SchemaError("int must be an integer");
        return Elem::integer(v.get<std::int64_t>());
    }
    if (j.contains("pair")) {
        const json& p = j.at("pair");
        if (!p.is_array() || p.size() != 2)
            throw SchemaError("pair must hold exactly two elements");
        return Elem::pair(elemFromJson(p[0]), elemFromJson(p[1]));
    }
    if (j.contains("seq")) return Elem::seq(elemsFromJson(j.at("seq"), "seq"));
    if (j.contains("fn")) {
        const json& entries = j.at("fn");
        if (!entries.is_array()) throw SchemaError("fn must be an array of pairs");
        std::vector<Elem> dom, values;
        for (const json& entry : entries) {
            if (!entry.is_array() || entry.size() != 2)
                throw SchemaError("fn entries must be [input, output]");
            dom.push_back(elemFromJson(entry[0]));
            values.push_back(elemFromJson(entry[1]));
        }
        return Elem::fn(dom, values);
    }
    if (j.contains("wrapped")) return Elem::wrapped(valueFromJson(j.at("wrapped")));
    throw SchemaError("unknown element kind");
}

namespace {

Functor functorField(const json& j) {
    std::string name = stringField(j, "functor");
    auto f = functorFromName(name);
    if (!f) throw SchemaError("unknown functor: " + name);
    return *f;
}

}  // namespace

json toJson(const MVal& v) {
    json out{{"functor", functorName(v.functor)}};
    if (v.functor == Functor::PointedTerm) {
        out["root"] = treeToJson(v.root);
        out["focusPath"] = json(v.path);
        return out;
    }
    out["items"] = elemsToJson(v.items);
    if (v.functor == Functor::PointedList) out["focus"] = v.focus;
    return out;
}

MVal valueFromJson(const json& j) {
    Functor f = functorField(j);
    if (f == Functor::PointedTerm) {
        TreeNode root = treeFromJson(field(j, "root"));
        const json& pj = field(j, "focusPath");
        if (!pj.is_array()) throw SchemaError("focusPath must be an array");
        std::vector<int> path;
        for (const json& e : pj) {
            if (!e.is_number_integer() && !e.is_number_unsigned())
                throw SchemaError("focusPath entries must be integers");
            path.push_back(e.get<int>());
        }
        return makeTermValue(root, path);
    }
    std::vector<Elem> items = elemsFromJson(field(j, "items"), "items");
    if (f == Functor::PointedList) {
        std::size_t focus = indexField(field(j, "focus"), items.size() + 1, "focus");
        return makePointedValue(items, focus);
    }
    return makeListValue(f, items);
}

json toJson(const MoconadInstance& inst) {
    json out{{"functor", functorName(inst.functor)}};
    if (inst.functor == Functor::PointedTerm) {
        json alpha = json::object();
        for (const auto& [sym, arity] : inst.alphabet) alpha[sym] = arity;
        out["alphabet"] = alpha;
    }
    return out;
}

MoconadInstance instanceFromJson(const json& j) {
    Functor f = functorField(j);
    if (f != Functor::PointedTerm) return listInstance(f);
    const json& alpha = field(j, "alphabet");
    if (!alpha.is_object()) throw SchemaError("alphabet must be an object");
    RankedAlphabet ra;
    for (auto it = alpha.begin(); it != alpha.end(); ++it) {
        if (!it.value().is_number_integer() && !it.value().is_number_unsigned())
            throw SchemaError("arities must be integers");
        int arity = it.value().get<int>();
        if (arity < 0) throw SchemaError("arities must be nonnegative");
        ra[it.key()] = arity;
    }
    return termInstance(ra);
}

json toJson(const FiniteAlgebra& alg) {
    json out{{"instance", toJson(alg.inst)}, {"carrier", elemsToJson(alg.carrier)}};
    if (const auto* t = std::get_if<SemigroupTable>(&alg.pres)) {
        out["kind"] = "semigroup";
        out["presentation"] = json{{"mul", tableToJson(*t).at("mul")}};
    } else if (const auto* pp = std::get_if<PointedPresentation>(&alg.pres)) {
        out["kind"] = "pointed-presentation";
        json g = json::array();
        for (std::size_t l = 0; l < pp->left.size(); ++l) {
            json byCarrier = json::array();
            for (std::size_t a = 0; a < alg.carrier.size(); ++a) {
                json byRight = json::array();
                for (std::size_t r = 0; r < pp->right.size(); ++r)
                    byRight.push_back(pp->apply(l, a, r, alg.carrier.size()));
                byCarrier.push_back(byRight);
            }
            g.push_back(byCarrier);
        }
        out["presentation"] = json{{"left", tableToJson(pp->left)},
                                   {"right", tableToJson(pp->right)},
                                   {"hLeft", json(pp->hLeft)},
                                   {"hRight", json(pp->hRight)},
                                   {"g", g}};
    } else {
        const auto* ta = std::get_if<TermAutomaton>(&alg.pres);
        json act = json::object();
        for (const auto& [sym, slots] : ta->act) {
            json bySlot = json::array();
            for (const auto& row : slots) bySlot.push_back(json(row));
            act[sym] = bySlot;
        }
        json nullary = json::object();
        for (const auto& [sym, idx] : ta->nullary) nullary[sym] = idx;
        out["kind"] = "term-automaton";
        out["presentation"] = json{{"act", act}, {"nullary", nullary}};
    }
    return out;
}

FiniteAlgebra algebraFromJson(const json& j) {
    MoconadInstance inst = instanceFromJson(field(j, "instance"));
    std::vector<Elem> carrier = elemsFromJson(field(j, "carrier"), "carrier");
    std::size_t n = carrier.size();
    std::string kind = stringField(j, "kind");
    const json& pj = field(j, "presentation");
    if (kind == "semigroup") {
        json withCarrier{{"carrier", field(j, "carrier")}, {"mul", field(pj, "mul")}};
        return FiniteAlgebra{inst, carrier, tableFromJson(withCarrier)};
    }
    if (kind == "pointed-presentation") {
        PointedPresentation pp;
        pp.left = tableFromJson(field(pj, "left"));
        pp.right = tableFromJson(field(pj, "right"));
        pp.hLeft = indicesFromJson(field(pj, "hLeft"), pp.left.size(), "hLeft");
        pp.hRight = indicesFromJson(field(pj, "hRight"), pp.right.size(), "hRight");
        if (pp.hLeft.size() != n || pp.hRight.size() != n)
            throw SchemaError("hLeft and hRight must cover the carrier");
        const json& g = field(pj, "g");
        if (!g.is_array() || g.size() != pp.left.size())
            throw SchemaError("g must have one block per left element");
        for (const json& byCarrier : g) {
            if (!byCarrier.is_array() || byCarrier.size() != n)
                throw SchemaError("g blocks must cover the carrier");
            for (const json& byRight : byCarrier) {
                if (!byRight.is_array() || byRight.size() != pp.right.size())
                    throw SchemaError("g rows must cover the right monoid");
                for (const json& cell : byRight)
                    pp.g.push_back(indexField(cell, n, "g entry"));
            }
        }
        return FiniteAlgebra{inst, carrier, std::move(pp)};
    }
    if (kind == "term-automaton") {
        TermAutomaton ta;
        const json& act = field(pj, "act");
        if (!act.is_object()) throw SchemaError("act must be an object");
        for (auto it = act.begin(); it != act.end(); ++it) {
            auto arityIt = inst.alphabet.find(it.key());
            if (arityIt == inst.alphabet.end())
                throw SchemaError("action table for unknown symbol: " + it.key());
            int arity = arityIt->second;
            std::size_t tuples = 1;
            for (int i = 0; i < arity; ++i) tuples *= n;
            if (!it.value().is_array() ||
                it.value().size() != static_cast<std::size_t>(arity))
                throw SchemaError("act must hold one row per slot of " + it.key());
            std::vector<std::vector<std::size_t>> slots;
            for (const json& row : it.value()) {
                auto parsed = indicesFromJson(row, n, "act entry");
                if (parsed.size() != tuples)
                    throw SchemaError("act row size mismatch for " + it.key());
                slots.push_back(std::move(parsed));
            }
            ta.act[it.key()] = std::move(slots);
        }
        const json& nullary = field(pj, "nullary");
        if (!nullary.is_object()) throw SchemaError("nullary must be an object");
        for (auto it = nullary.begin(); it != nullary.end(); ++it)
            ta.nullary[it.key()] = indexField(it.value(), n, "nullary entry");
        return FiniteAlgebra{inst, carrier, std::move(ta)};
    }
    throw SchemaError("unknown presentation kind: " + kind);
}

json toJson(const Transduction& t) {
    return json{{"algebra", toJson(t.algebra)},
                {"inputAlphabet", elemsToJson(t.inputAlphabet)},
                {"outputAlphabet", elemsToJson(t.outputAlphabet)},
                {"h", pairMapToJson(t.h)},
                {"lambda", pairMapToJson(t.lambda)}};
}

Transduction transductionFromJson(const json& j) {
    Transduction t;
    t.algebra = algebraFromJson(field(j, "algebra"));
    t.inputAlphabet = elemsFromJson(field(j, "inputAlphabet"), "inputAlphabet");
    t.outputAlphabet = elemsFromJson(field(j, "outputAlphabet"), "outputAlphabet");
    t.h = pairMapFromJson(field(j, "h"), "h");
    t.lambda = pairMapFromJson(field(j, "lambda"), "lambda");
    return t;
}

json toJson(const MealyMachine& m) {
    json next = json::array(), out = json::array();
    for (std::size_t s = 0; s < m.states.size(); ++s) {
        json nrow = json::array(), orow = json::array();
        for (std::size_t a = 0; a < m.inputAlphabet.size(); ++a) {
            nrow.push_back(m.next[s * m.inputAlphabet.size() + a]);
            orow.push_back(m.out[s * m.inputAlphabet.size() + a]);
        }
        next.push_back(nrow);
        out.push_back(orow);
    }
    return json{{"direction", m.direction == Direction::LeftToRight ? "left-to-right"
                                                                    : "right-to-left"},
                {"states", elemsToJson(m.states)},
                {"inputAlphabet", elemsToJson(m.inputAlphabet)},
                {"outputAlphabet", elemsToJson(m.outputAlphabet)},
                {"initial", m.initial},
                {"next", next},
                {"out", out}};
}

MealyMachine mealyFromJson(const json& j) {
    MealyMachine m;
    std::string dir = stringField(j, "direction");
    if (dir == "left-to-right")
        m.direction = Direction::LeftToRight;
    else if (dir == "right-to-left")
        m.direction = Direction::RightToLeft;
    else
        throw SchemaError("unknown direction: " + dir);
    m.states = elemsFromJson(field(j, "states"), "states");
    m.inputAlphabet = elemsFromJson(field(j, "inputAlphabet"), "inputAlphabet");
    m.outputAlphabet = elemsFromJson(field(j, "outputAlphabet"), "outputAlphabet");
    m.initial = indexField(field(j, "initial"), m.states.size(), "initial");
    const json& next = field(j, "next");
    const json& out = field(j, "out");
    if (!next.is_array() || next.size() != m.states.size() || !out.is_array() ||
        out.size() != m.states.size())
        throw SchemaError("next and out must have one row per state");
    for (std::size_t s = 0; s < m.states.size(); ++s) {
        auto nrow = indicesFromJson(next[s], m.states.size(), "next entry");
        auto orow = indicesFromJson(out[s], m.outputAlphabet.size(), "out entry");
        if (nrow.size() != m.inputAlphabet.size() ||
            orow.size() != m.inputAlphabet.size())
            throw SchemaError("rows must have one entry per input letter");
        m.next.insert(m.next.end(), nrow.begin(), nrow.end());
        m.out.insert(m.out.end(), orow.begin(), orow.end());
    }
    return m;
}

json toJson(const UnambiguousMealy& m) {
    json ts = json::array();
    for (const MealyTransition& t : m.transitions)
        ts.push_back(json{{"from", t.from},
                          {"letter", t.letter},
                          {"to", t.to},
                          {"output", t.output}});
    return json{{"states", elemsToJson(m.states)},
                {"inputAlphabet", elemsToJson(m.inputAlphabet)},
                {"outputAlphabet", elemsToJson(m.outputAlphabet)},
                {"initial", json(m.initial)},
                {"accepting", json(m.accepting)},
                {"transitions", ts}};
}

UnambiguousMealy unambiguousFromJson(const json& j) {
    UnambiguousMealy m;
    m.states = elemsFromJson(field(j, "states"), "states");
    m.inputAlphabet = elemsFromJson(field(j, "inputAlphabet"), "inputAlphabet");
    m.outputAlphabet = elemsFromJson(field(j, "outputAlphabet"), "outputAlphabet");
    m.initial = indicesFromJson(field(j, "initial"), m.states.size(), "initial");
    m.accepting = indicesFromJson(field(j, "accepting"), m.states.size(), "accepting");
    const json& ts = field(j, "transitions");
    if (!ts.is_array()) throw SchemaError("transitions must be an array");
    for (const json& t : ts)
        m.transitions.push_back(
            {indexField(field(t, "from"), m.states.size(), "from"),
             indexField(field(t, "letter"), m.inputAlphabet.size(), "letter"),
             indexField(field(t, "to"), m.states.size(), "to"),
             indexField(field(t, "output"), m.outputAlphabet.size(), "output")});
    return m;
}

json toJson(const LawReport& r) {
    json out{{"law", lawName(r.law)},
             {"holds", r.holds},
             {"casesChecked", r.casesChecked}};
    if (r.counterexample) {
        json c{{"values", json::array()},
               {"elems", json::array()},
               {"fns", json::array()}};
        for (const MVal& v : r.counterexample->values) c["values"].push_back(toJson(v));
        for (const Elem& e : r.counterexample->elems) c["elems"].push_back(toJson(e));
        for (const Elem& f : r.counterexample->fns) c["fns"].push_back(toJson(f));
        out["counterexample"] = c;
    }
    if (r.lhs) out["lhs"] = toJson(*r.lhs);
    if (r.rhs) out["rhs"] = toJson(*r.rhs);
    return out;
}

}  // namespace moconad
