#include "moconad/values.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <variant>

namespace moconad {

const char* functorName(Functor f) {
    switch (f) {
        case Functor::PrefixList: return "prefix-list";
        case Functor::SuffixList: return "suffix-list";
        case Functor::PointedList: return "pointed-list";
        case Functor::PointedTerm: return "pointed-term";
    }
    throw Error("unknown functor tag");
}

std::optional<Functor> functorFromName(const std::string& name) {
    if (name == "prefix-list") return Functor::PrefixList;
    if (name == "suffix-list") return Functor::SuffixList;
    if (name == "pointed-list") return Functor::PointedList;
    if (name == "pointed-term") return Functor::PointedTerm;
    return std::nullopt;
}

MoconadInstance listInstance(Functor f) {
    if (f == Functor::PointedTerm)
        throw SchemaError("pointed-term instance requires a ranked alphabet");
    return MoconadInstance{f, {}};
}

MoconadInstance termInstance(RankedAlphabet alphabet) {
    if (alphabet.empty())
        throw SchemaError("pointed-term instance requires a nonempty ranked alphabet");
    for (const auto& [sym, arity] : alphabet) {
        if (sym.empty()) throw SchemaError("ranked alphabet symbol must be nonempty");
        if (arity < 0) throw SchemaError("ranked alphabet arity must be nonnegative");
    }
    return MoconadInstance{Functor::PointedTerm, std::move(alphabet)};
}

struct Elem::Rep {
    struct FnData {
        std::vector<Elem> domain;
        std::vector<Elem> values;
    };
    using Data = std::variant<std::string,               // Symbol
                              std::int64_t,              // Int
                              std::pair<Elem, Elem>,     // Pair
                              std::vector<Elem>,         // Seq
                              FnData,                    // Fn
                              std::shared_ptr<const MVal>>;  // Wrapped
    Tag tag;
    Data data;
};

Elem Elem::sym(std::string name) {
    return Elem(std::make_shared<const Rep>(Rep{Tag::Symbol, std::move(name)}));
}

Elem Elem::integer(std::int64_t v) {
    return Elem(std::make_shared<const Rep>(Rep{Tag::Int, v}));
}

Elem Elem::pair(Elem a, Elem b) {
    return Elem(std::make_shared<const Rep>(
        Rep{Tag::Pair, std::make_pair(std::move(a), std::move(b))}));
}

Elem Elem::seq(std::vector<Elem> items) {
    return Elem(std::make_shared<const Rep>(Rep{Tag::Seq, std::move(items)}));
}

Elem Elem::fn(std::vector<Elem> domain, std::vector<Elem> values) {
    if (domain.size() != values.size())
        throw SchemaError("function table: domain and value counts differ");
    std::vector<std::size_t> order(domain.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return domain[i] < domain[j];
    });
    std::vector<Elem> d, v;
    d.reserve(domain.size());
    v.reserve(values.size());
    for (std::size_t i : order) {
        if (!d.empty() && !(d.back() < domain[i]))
            throw SchemaError("function table: duplicate input " + domain[i].show());
        d.push_back(domain[i]);
        v.push_back(values[i]);
    }
    return Elem(std::make_shared<const Rep>(
        Rep{Tag::Fn, Rep::FnData{std::move(d), std::move(v)}}));
}

Elem Elem::wrapped(MVal inner) {
    return Elem(std::make_shared<const Rep>(
        Rep{Tag::Wrapped, std::make_shared<const MVal>(std::move(inner))}));
}

Elem::Tag Elem::tag() const { return rep_->tag; }

const std::string& Elem::symbol() const {
    if (tag() != Tag::Symbol) throw Error("elem: not a symbol");
    return std::get<std::string>(rep_->data);
}

std::int64_t Elem::intValue() const {
    if (tag() != Tag::Int) throw Error("elem: not an integer");
    return std::get<std::int64_t>(rep_->data);
}

const Elem& Elem::first() const {
    if (tag() != Tag::Pair) throw Error("elem: not a pair");
    return std::get<std::pair<Elem, Elem>>(rep_->data).first;
}

const Elem& Elem::second() const {
    if (tag() != Tag::Pair) throw Error("elem: not a pair");
    return std::get<std::pair<Elem, Elem>>(rep_->data).second;
}

const std::vector<Elem>& Elem::items() const {
    if (tag() != Tag::Seq) throw Error("elem: not a sequence");
    return std::get<std::vector<Elem>>(rep_->data);
}

const std::vector<Elem>& Elem::fnDomain() const {
    if (tag() != Tag::Fn) throw Error("elem: not a function table");
    return std::get<Rep::FnData>(rep_->data).domain;
}

const std::vector<Elem>& Elem::fnValues() const {
    if (tag() != Tag::Fn) throw Error("elem: not a function table");
    return std::get<Rep::FnData>(rep_->data).values;
}

const MVal& Elem::inner() const {
    if (tag() != Tag::Wrapped) throw Error("elem: not a wrapped value");
    return *std::get<std::shared_ptr<const MVal>>(rep_->data);
}

Elem Elem::apply(const Elem& x) const {
    const auto& dom = fnDomain();
    auto it = std::lower_bound(dom.begin(), dom.end(), x);
    if (it == dom.end() || *it != x)
        throw DomainError("function table: input " + x.show() + " not in domain");
    return fnValues()[static_cast<std::size_t>(it - dom.begin())];
}

static int compareSeq(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a[i], b[i]); c != 0) return c;
    return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

int compare(const Elem& a, const Elem& b) {
    if (a.rep_ == b.rep_) return 0;
    if (a.tag() != b.tag()) return a.tag() < b.tag() ? -1 : 1;
    switch (a.tag()) {
        case Elem::Tag::Symbol: {
            int c = a.symbol().compare(b.symbol());
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        case Elem::Tag::Int: {
            auto x = a.intValue(), y = b.intValue();
            return x < y ? -1 : x > y ? 1 : 0;
        }
        case Elem::Tag::Pair: {
            if (int c = compare(a.first(), b.first()); c != 0) return c;
            return compare(a.second(), b.second());
        }
        case Elem::Tag::Seq:
            return compareSeq(a.items(), b.items());
        case Elem::Tag::Fn: {
            if (int c = compareSeq(a.fnDomain(), b.fnDomain()); c != 0) return c;
            return compareSeq(a.fnValues(), b.fnValues());
        }
        case Elem::Tag::Wrapped:
            return compare(a.inner(), b.inner());
    }
    throw Error("unknown elem tag");
}

bool operator==(const Elem& a, const Elem& b) { return compare(a, b) == 0; }
bool operator!=(const Elem& a, const Elem& b) { return compare(a, b) != 0; }
bool operator<(const Elem& a, const Elem& b) { return compare(a, b) < 0; }

std::string Elem::show() const {
    std::ostringstream out;
    switch (tag()) {
        case Tag::Symbol:
            out << symbol();
            break;
        case Tag::Int:
            out << intValue();
            break;
        case Tag::Pair:
            out << '(' << first().show() << ", " << second().show() << ')';
            break;
        case Tag::Seq: {
            out << '[';
            bool sep = false;
            for (const auto& e : items()) {
                if (sep) out << ", ";
                out << e.show();
                sep = true;
            }
            out << ']';
            break;
        }
        case Tag::Fn: {
            out << '{';
            const auto& d = fnDomain();
            const auto& v = fnValues();
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (i) out << ", ";
                out << d[i].show() << "->" << v[i].show();
            }
            out << '}';
            break;
        }
        case Tag::Wrapped:
            out << '<' << moconad::show(inner()) << '>';
            break;
    }
    return out.str();
}

TreeNode TreeNode::leaf(Elem payload) {
    TreeNode n;
    n.label = std::move(payload);
    return n;
}

TreeNode TreeNode::node(std::string symbol, std::vector<TreeNode> children) {
    TreeNode n;
    n.symbol = std::move(symbol);
    n.children = std::move(children);
    return n;
}

int compare(const TreeNode& a, const TreeNode& b) {
    if (a.isLeaf() != b.isLeaf()) return a.isLeaf() ? -1 : 1;
    if (a.isLeaf()) return compare(*a.label, *b.label);
    if (int c = a.symbol.compare(b.symbol); c != 0) return c < 0 ? -1 : 1;
    std::size_t n = std::min(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.children[i], b.children[i]); c != 0) return c;
    return a.children.size() < b.children.size() ? -1
         : a.children.size() > b.children.size() ? 1 : 0;
}

bool operator==(const TreeNode& a, const TreeNode& b) { return compare(a, b) == 0; }

std::size_t nodeCount(const TreeNode& n) {
    std::size_t total = 1;
    for (const auto& c : n.children) total += nodeCount(c);
    return total;
}

static void collectLeafPaths(const TreeNode& n, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
    if (n.isLeaf()) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        prefix.push_back(static_cast<int>(i + 1));
        collectLeafPaths(n.children[i], prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> leafPaths(const TreeNode& root) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    collectLeafPaths(root, prefix, out);
    return out;
}

const TreeNode& nodeAt(const TreeNode& root, const std::vector<int>& path) {
    const TreeNode* n = &root;
    for (int step : path) {
        if (step < 1 || static_cast<std::size_t>(step) > n->children.size())
            throw SchemaError("term path step out of range");
        n = &n->children[static_cast<std::size_t>(step - 1)];
    }
    return *n;
}

TreeNode withLeafLabel(const TreeNode& root, const std::vector<int>& path, const Elem& x) {
    return withSubtree(root, path, TreeNode::leaf(x));
}

TreeNode withSubtree(const TreeNode& root, const std::vector<int>& path, const TreeNode& sub) {
    if (path.empty()) return sub;
    if (path.front() < 1 || static_cast<std::size_t>(path.front()) > root.children.size())
        throw SchemaError("term path step out of range");
    TreeNode out = root;
    std::vector<int> rest(path.begin() + 1, path.end());
    auto& child = out.children[static_cast<std::size_t>(path.front() - 1)];
    child = withSubtree(child, rest, sub);
    return out;
}

MVal makeListValue(Functor f, std::vector<Elem> items) {
    if (f != Functor::PrefixList && f != Functor::SuffixList)
        throw SchemaError("makeListValue: functor is not a plain list instance");
    MVal v;
    v.functor = f;
    v.items = std::move(items);
    if (v.items.empty()) throw SchemaError("list value must be nonempty");
    return v;
}

MVal makePointedValue(std::vector<Elem> items, std::size_t focus1) {
    MVal v;
    v.functor = Functor::PointedList;
    v.items = std::move(items);
    v.focus = focus1;
    if (v.items.empty()) throw SchemaError("pointed list must be nonempty");
    if (focus1 < 1 || focus1 > v.items.size())
        throw SchemaError("pointed list focus out of range");
    return v;
}

MVal makeTermValue(TreeNode root, std::vector<int> path) {
    MVal v;
    v.functor = Functor::PointedTerm;
    v.root = std::move(root);
    v.path = std::move(path);
    if (!nodeAt(v.root, v.path).isLeaf())
        throw SchemaError("pointed term focus path must address a leaf");
    return v;
}

static void validateTree(const RankedAlphabet& alphabet, const TreeNode& n) {
    if (n.isLeaf()) return;
    auto it = alphabet.find(n.symbol);
    if (it == alphabet.end())
        throw SchemaError("term symbol '" + n.symbol + "' not in ranked alphabet");
    if (static_cast<std::size_t>(it->second) != n.children.size())
        throw SchemaError("term symbol '" + n.symbol + "' used with wrong arity");
    for (const auto& c : n.children) validateTree(alphabet, c);
}

void validateValue(const MoconadInstance& inst, const MVal& v) {
    if (v.functor != inst.functor)
        throw SchemaError("value functor does not match instance");
    switch (inst.functor) {
        case Functor::PrefixList:
        case Functor::SuffixList:
            if (v.items.empty()) throw SchemaError("list value must be nonempty");
            break;
        case Functor::PointedList:
            if (v.items.empty()) throw SchemaError("pointed list must be nonempty");
            if (v.focus < 1 || v.focus > v.items.size())
                throw SchemaError("pointed list focus out of range");
            break;
        case Functor::PointedTerm:
            validateTree(inst.alphabet, v.root);
            if (!nodeAt(v.root, v.path).isLeaf())
                throw SchemaError("pointed term focus path must address a leaf");
            break;
    }
}

std::size_t sizeOf(const MVal& v) {
    if (v.functor == Functor::PointedTerm) return nodeCount(v.root);
    return v.items.size();
}

int compare(const MVal& a, const MVal& b) {
    if (a.functor != b.functor) return a.functor < b.functor ? -1 : 1;
    if (a.functor == Functor::PointedTerm) {
        if (int c = compare(a.root, b.root); c != 0) return c;
        std::size_t n = std::min(a.path.size(), b.path.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.path[i] != b.path[i]) return a.path[i] < b.path[i] ? -1 : 1;
        return a.path.size() < b.path.size() ? -1 : a.path.size() > b.path.size() ? 1 : 0;
    }
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.items.size(); ++i)
        if (int c = compare(a.items[i], b.items[i]); c != 0) return c;
    return a.focus < b.focus ? -1 : a.focus > b.focus ? 1 : 0;
}

bool operator==(const MVal& a, const MVal& b) { return compare(a, b) == 0; }
bool operator!=(const MVal& a, const MVal& b) { return compare(a, b) != 0; }
bool operator<(const MVal& a, const MVal& b) { return compare(a, b) < 0; }

std::string show(const TreeNode& n) {
    if (n.isLeaf()) return n.label->show();
    std::string out = n.symbol + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ", ";
        out += show(n.children[i]);
    }
    out += ")";
    return out;
}

std::string show(const MVal& v) {
    std::ostringstream out;
    if (v.functor == Functor::PointedTerm) {
        out << show(v.root) << "@[";
        for (std::size_t i = 0; i < v.path.size(); ++i) {
            if (i) out << '.';
            out << v.path[i];
        }
        out << ']';
        return out.str();
    }
    out << '[';
    for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i) out << ", ";
        out << v.items[i].show();
    }
    out << ']';
    if (v.functor == Functor::PointedList) out << '@' << v.focus;
    return out.str();
}

std::string show(const Elem& e) { return e.show(); }

}  // namespace moconad
