#include "moconad/ops.hpp"

#include <algorithm>

namespace moconad {

const Elem kBullet = Elem::sym("*");

static TreeNode mapTree(const ElemFn& f, const TreeNode& n) {
    if (n.isLeaf()) return TreeNode::leaf(f(*n.label));
    std::vector<TreeNode> children;
    children.reserve(n.children.size());
    for (const auto& c : n.children) children.push_back(mapTree(f, c));
    return TreeNode::node(n.symbol, std::move(children));
}

MVal map(const MoconadInstance& inst, const ElemFn& f, const MVal& v) {
    MVal out = v;
    if (inst.functor == Functor::PointedTerm) {
        out.root = mapTree(f, v.root);
        return out;
    }
    for (auto& e : out.items) e = f(e);
    return out;
}

MVal unit(const MoconadInstance& inst, const Elem& x) {
    switch (inst.functor) {
        case Functor::PrefixList:
        case Functor::SuffixList:
            return makeListValue(inst.functor, {x});
        case Functor::PointedList:
            return makePointedValue({x}, 1);
        case Functor::PointedTerm:
            return makeTermValue(TreeNode::leaf(x), {});
    }
    throw Error("unknown functor tag");
}

// Payload that must wrap an inner value of the same instance.
static const MVal& innerOf(const MoconadInstance& inst, const Elem& e) {
    if (e.tag() != Elem::Tag::Wrapped)
        throw SchemaError("flatten: payload is not a wrapped container value");
    const MVal& m = e.inner();
    if (m.functor != inst.functor)
        throw SchemaError("flatten: payload wraps a value of a different instance");
    return m;
}

static TreeNode substituteLeaves(const MoconadInstance& inst, const TreeNode& n) {
    if (n.isLeaf()) return innerOf(inst, *n.label).root;
    std::vector<TreeNode> children;
    children.reserve(n.children.size());
    for (const auto& c : n.children) children.push_back(substituteLeaves(inst, c));
    return TreeNode::node(n.symbol, std::move(children));
}

MVal flatten(const MoconadInstance& inst, const MVal& mm) {
    if (inst.functor == Functor::PointedTerm) {
        const MVal& focusedInner = innerOf(inst, *nodeAt(mm.root, mm.path).label);
        MVal out;
        out.functor = Functor::PointedTerm;
        out.root = substituteLeaves(inst, mm.root);
        out.path = mm.path;
        out.path.insert(out.path.end(), focusedInner.path.begin(), focusedInner.path.end());
        return out;
    }
    MVal out;
    out.functor = inst.functor;
    std::size_t focusedAt = 0;
    for (std::size_t i = 0; i < mm.items.size(); ++i) {
        const MVal& block = innerOf(inst, mm.items[i]);
        if (inst.functor == Functor::PointedList && i + 1 == mm.focus)
            focusedAt = out.items.size() + block.focus;
        out.items.insert(out.items.end(), block.items.begin(), block.items.end());
    }
    out.focus = focusedAt;
    if (out.items.empty()) throw SchemaError("flatten: empty result");
    return out;
}

static std::size_t focusIndex(const MoconadInstance& inst, const MVal& v) {
    switch (inst.functor) {
        case Functor::PrefixList: return v.items.size() - 1;
        case Functor::SuffixList: return 0;
        case Functor::PointedList: return v.focus - 1;
        default: throw Error("focusIndex: not a list instance");
    }
}

Elem extract(const MoconadInstance& inst, const MVal& v) {
    if (inst.functor == Functor::PointedTerm)
        return *nodeAt(v.root, v.path).label;
    return v.items[focusIndex(inst, v)];
}

MVal expand(const MoconadInstance& inst, const MVal& v) {
    MVal out;
    out.functor = inst.functor;
    switch (inst.functor) {
        case Functor::PrefixList: {
            for (std::size_t i = 1; i <= v.items.size(); ++i) {
                MVal view = v;
                view.items.resize(i);
                out.items.push_back(Elem::wrapped(std::move(view)));
            }
            return out;
        }
        case Functor::SuffixList: {
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                MVal view;
                view.functor = inst.functor;
                view.items.assign(v.items.begin() + static_cast<std::ptrdiff_t>(i),
                                  v.items.end());
                out.items.push_back(Elem::wrapped(std::move(view)));
            }
            return out;
        }
        case Functor::PointedList: {
            for (std::size_t i = 1; i <= v.items.size(); ++i) {
                MVal view = v;
                view.focus = i;
                out.items.push_back(Elem::wrapped(std::move(view)));
            }
            out.focus = v.focus;
            return out;
        }
        case Functor::PointedTerm: {
            TreeNode root = v.root;
            for (const auto& p : leafPaths(v.root)) {
                MVal view = v;
                view.path = p;
                root = withLeafLabel(root, p, Elem::wrapped(std::move(view)));
            }
            out.root = std::move(root);
            out.path = v.path;
            return out;
        }
    }
    throw Error("unknown functor tag");
}

MVal put(const MoconadInstance& inst, const MVal& v, const Elem& x) {
    MVal out = v;
    if (inst.functor == Functor::PointedTerm) {
        out.root = withLeafLabel(v.root, v.path, x);
        return out;
    }
    out.items[focusIndex(inst, v)] = x;
    return out;
}

MVal strength(const MoconadInstance& inst, const Elem& a, const MVal& v) {
    return map(inst, [&a](const Elem& x) { return Elem::pair(a, x); }, v);
}

MVal shape(const MoconadInstance& inst, const MVal& v) {
    return map(inst, [](const Elem&) { return kBullet; }, v);
}

MVal concat(const MoconadInstance& inst, const MVal& k, const MVal& l) {
    MVal singletons =
        map(inst, [&inst](const Elem& x) { return Elem::wrapped(unit(inst, x)); }, k);
    return flatten(inst, put(inst, singletons, Elem::wrapped(l)));
}

const Ops& Ops::standard() {
    static const Ops ops{&moconad::map,    &moconad::unit, &moconad::flatten,
                         &moconad::extract, &moconad::expand, &moconad::put,
                         &moconad::strength};
    return ops;
}

}  // namespace moconad
