#include "moconad/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace moconad {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t counter)
    : state(mix64(seed + 0x9E3779B97F4A7C15ULL * (counter + 1))) {}

std::uint64_t Rng::next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
}

std::uint64_t Rng::below(std::uint64_t n) {
    // n is tiny here; modulo bias is irrelevant for test-case generation
    return next() % n;
}

std::vector<Elem> canonicalDomain(int size) {
    if (size < 1 || size > 26) throw Error("domain size out of range: " + std::to_string(size));
    std::vector<Elem> out;
    for (int i = 0; i < size; ++i) out.push_back(Elem::sym(std::string(1, char('a' + i))));
    return out;
}

namespace {

// Positive compositions of total into parts, lexicographic; each part gets
// visit(parts) with the full tuple.
void forEachComposition(int total, int parts,
                        const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur(static_cast<std::size_t>(parts));
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == parts - 1) {
            cur[static_cast<std::size_t>(idx)] = remaining;
            visit(cur);
            return;
        }
        int maxHere = remaining - (parts - 1 - idx);
        for (int v = 1; v <= maxHere; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, remaining - v);
        }
    };
    if (parts >= 1 && total >= parts) rec(0, total);
}

void forEachTuple(const std::vector<std::size_t>& radix,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    for (std::size_t r : radix)
        if (r == 0) return;
    std::vector<std::size_t> idx(radix.size(), 0);
    for (;;) {
        visit(idx);
        std::size_t pos = radix.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < radix[pos]) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (radix.empty()) return;
    }
}

std::vector<TreeNode> treesOfSize(const RankedAlphabet& alphabet,
                                  const std::vector<Elem>& leafLabels, int size) {
    // by-size table up to `size`
    std::vector<std::vector<TreeNode>> bySize(static_cast<std::size_t>(size) + 1);
    for (int s = 1; s <= size; ++s) {
        auto& out = bySize[static_cast<std::size_t>(s)];
        if (s == 1) {
            for (const Elem& l : leafLabels) out.push_back(TreeNode::leaf(l));
            for (const auto& [sym, arity] : alphabet)
                if (arity == 0) out.push_back(TreeNode::node(sym, {}));
        } else {
            for (const auto& [sym, arity] : alphabet) {
                if (arity < 1 || arity > s - 1) continue;
                forEachComposition(s - 1, arity, [&](const std::vector<int>& parts) {
                    std::vector<std::size_t> radix;
                    for (int p : parts)
                        radix.push_back(bySize[static_cast<std::size_t>(p)].size());
                    forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
                        std::vector<TreeNode> children;
                        for (std::size_t i = 0; i < idx.size(); ++i)
                            children.push_back(
                                bySize[static_cast<std::size_t>(parts[i])][idx[i]]);
                        out.push_back(TreeNode::node(sym, std::move(children)));
                    });
                });
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const TreeNode& a, const TreeNode& b) { return compare(a, b) < 0; });
    }
    return bySize[static_cast<std::size_t>(size)];
}

std::vector<MVal> enumerateListsExact(const MoconadInstance& inst,
                                      const std::vector<Elem>& domain, int n) {
    std::vector<MVal> out;
    std::vector<std::size_t> radix(static_cast<std::size_t>(n), domain.size());
    forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
        std::vector<Elem> items;
        for (std::size_t i : idx) items.push_back(domain[i]);
        if (inst.functor == Functor::PointedList) {
            for (std::size_t f = 1; f <= static_cast<std::size_t>(n); ++f)
                out.push_back(makePointedValue(items, f));
        } else {
            out.push_back(makeListValue(inst.functor, items));
        }
    });
    return out;
}

std::vector<MVal> enumerateTermsExact(const MoconadInstance& inst,
                                      const std::vector<Elem>& domain, int n) {
    std::vector<MVal> out;
    for (const TreeNode& t : treesOfSize(inst.alphabet, domain, n))
        for (const std::vector<int>& p : leafPaths(t)) out.push_back(makeTermValue(t, p));
    return out;
}

int minNestedTotal(const MoconadInstance& inst, int depth) {
    return inst.functor == Functor::PointedTerm ? depth : 1;
}

std::vector<MVal> enumerateNestedExact(const MoconadInstance& inst,
                                       const std::vector<Elem>& domain, int depth,
                                       int total) {
    if (depth == 1) return enumerateValuesExact(inst, domain, total);
    std::vector<MVal> out;
    int minInner = minNestedTotal(inst, depth - 1);
    if (inst.functor == Functor::PointedTerm) {
        std::vector<Elem> hole = {Elem::sym("*")};
        for (int k = 1; k + minInner <= total; ++k) {
            for (const TreeNode& skel : treesOfSize(inst.alphabet, hole, k)) {
                auto paths = leafPaths(skel);
                int leaves = static_cast<int>(paths.size());
                if (leaves == 0 || k + leaves * minInner > total) continue;
                forEachComposition(total - k, leaves, [&](const std::vector<int>& parts) {
                    for (int p : parts)
                        if (p < minInner) return;
                    std::vector<std::vector<MVal>> opts;
                    for (int p : parts)
                        opts.push_back(enumerateNestedExact(inst, domain, depth - 1, p));
                    std::vector<std::size_t> radix;
                    for (const auto& o : opts) radix.push_back(o.size());
                    forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
                        TreeNode root = skel;
                        for (std::size_t i = 0; i < idx.size(); ++i)
                            root = withLeafLabel(root, paths[i],
                                                 Elem::wrapped(opts[i][idx[i]]));
                        for (const auto& fp : paths) out.push_back(makeTermValue(root, fp));
                    });
                });
            }
        }
        return out;
    }
    for (int m = 1; m <= total; ++m) {
        forEachComposition(total, m, [&](const std::vector<int>& parts) {
            std::vector<std::vector<MVal>> opts;
            for (int p : parts)
                opts.push_back(enumerateNestedExact(inst, domain, depth - 1, p));
            std::vector<std::size_t> radix;
            for (const auto& o : opts) radix.push_back(o.size());
            forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
                std::vector<Elem> items;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    items.push_back(Elem::wrapped(opts[i][idx[i]]));
                if (inst.functor == Functor::PointedList) {
                    for (std::size_t f = 1; f <= items.size(); ++f)
                        out.push_back(makePointedValue(items, f));
                } else {
                    out.push_back(makeListValue(inst.functor, items));
                }
            });
        });
    }
    return out;
}

// trees of each size: (count, total number of payload leaves over all trees)
struct TreeCounts {
    std::vector<std::uint64_t> cnt;
    std::vector<std::uint64_t> leafSum;
};

TreeCounts countTrees(const RankedAlphabet& alphabet, std::uint64_t leafChoices,
                      int bound) {
    TreeCounts tc;
    tc.cnt.assign(static_cast<std::size_t>(bound) + 1, 0);
    tc.leafSum.assign(static_cast<std::size_t>(bound) + 1, 0);
    for (int s = 1; s <= bound; ++s) {
        std::uint64_t c = 0, l = 0;
        if (s == 1) {
            c = leafChoices;
            l = leafChoices;
            for (const auto& [sym, arity] : alphabet)
                if (arity == 0) c += 1;
        }
        for (const auto& [sym, arity] : alphabet) {
            if (arity < 1 || arity > s - 1) continue;
            forEachComposition(s - 1, arity, [&](const std::vector<int>& parts) {
                std::uint64_t w = 1, lw = 0;
                for (int p : parts) {
                    std::uint64_t pc = tc.cnt[static_cast<std::size_t>(p)];
                    std::uint64_t pl = tc.leafSum[static_cast<std::size_t>(p)];
                    lw = lw * pc + w * pl;
                    w = w * pc;
                }
                c += w;
                l += lw;
            });
        }
        tc.cnt[static_cast<std::size_t>(s)] = c;
        tc.leafSum[static_cast<std::size_t>(s)] = l;
    }
    return tc;
}

// skeleton trees by (size, number of payload leaves); one leaf label choice
std::vector<std::vector<std::uint64_t>> countSkeletons(const RankedAlphabet& alphabet,
                                                       int bound) {
    std::vector<std::vector<std::uint64_t>> sk(
        static_cast<std::size_t>(bound) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(bound) + 1, 0));
    for (int s = 1; s <= bound; ++s) {
        if (s == 1) {
            sk[1][1] = 1;
            for (const auto& [sym, arity] : alphabet)
                if (arity == 0) sk[1][0] += 1;
            continue;
        }
        for (const auto& [sym, arity] : alphabet) {
            if (arity < 1 || arity > s - 1) continue;
            forEachComposition(s - 1, arity, [&](const std::vector<int>& parts) {
                // fold children: ways[l] = #tuples with l leaves total
                std::vector<std::uint64_t> ways = {1};
                for (int p : parts) {
                    std::vector<std::uint64_t> nw(ways.size() + static_cast<std::size_t>(p),
                                                  0);
                    for (std::size_t l1 = 0; l1 < ways.size(); ++l1) {
                        if (ways[l1] == 0) continue;
                        for (int l2 = 0; l2 <= p; ++l2)
                            nw[l1 + static_cast<std::size_t>(l2)] +=
                                ways[l1] * sk[static_cast<std::size_t>(p)]
                                             [static_cast<std::size_t>(l2)];
                    }
                    ways = std::move(nw);
                }
                for (std::size_t l = 0; l < ways.size() && l <= static_cast<std::size_t>(s);
                     ++l)
                    sk[static_cast<std::size_t>(s)][l] += ways[l];
            });
        }
    }
    return sk;
}

std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b, int bound) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(bound) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(bound);
             ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// exact-total counts for depth-k nesting, indexed by total
std::vector<std::uint64_t> nestedCounts(const MoconadInstance& inst, int domainSize,
                                        int depth, int bound) {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(bound) + 1, 0);
    if (inst.functor == Functor::PointedTerm) {
        TreeCounts tc = countTrees(inst.alphabet, static_cast<std::uint64_t>(domainSize),
                                   bound);
        for (int n = 1; n <= bound; ++n) f[static_cast<std::size_t>(n)] = tc.leafSum[static_cast<std::size_t>(n)];
        if (depth == 1) return f;
        auto sk = countSkeletons(inst.alphabet, bound);
        for (int d = 2; d <= depth; ++d) {
            std::vector<std::uint64_t> g(static_cast<std::size_t>(bound) + 1, 0);
            for (int s = 1; s <= bound; ++s) {
                for (int leaves = 1; leaves <= s; ++leaves) {
                    std::uint64_t w = sk[static_cast<std::size_t>(s)]
                                        [static_cast<std::size_t>(leaves)];
                    if (w == 0) continue;
                    // leaves-fold convolution of f, shifted by skeleton size
                    std::vector<std::uint64_t> pw(static_cast<std::size_t>(bound) + 1, 0);
                    pw[0] = 1;
                    for (int i = 0; i < leaves; ++i) pw = convolve(pw, f, bound);
                    for (int n = s; n <= bound; ++n)
                        g[static_cast<std::size_t>(n)] +=
                            w * static_cast<std::uint64_t>(leaves) *
                            pw[static_cast<std::size_t>(n - s)];
                }
            }
            f = std::move(g);
        }
        return f;
    }
    bool pointed = inst.functor == Functor::PointedList;
    std::uint64_t d64 = static_cast<std::uint64_t>(domainSize);
    std::uint64_t p = 1;
    for (int n = 1; n <= bound; ++n) {
        p *= d64;
        f[static_cast<std::size_t>(n)] = pointed ? static_cast<std::uint64_t>(n) * p : p;
    }
    for (int d = 2; d <= depth; ++d) {
        std::vector<std::uint64_t> g(static_cast<std::size_t>(bound) + 1, 0);
        std::vector<std::uint64_t> pw(static_cast<std::size_t>(bound) + 1, 0);
        pw[0] = 1;
        for (int m = 1; m <= bound; ++m) {
            pw = convolve(pw, f, bound);
            std::uint64_t w = pointed ? static_cast<std::uint64_t>(m) : 1;
            for (int n = 1; n <= bound; ++n)
                g[static_cast<std::size_t>(n)] += w * pw[static_cast<std::size_t>(n)];
        }
        f = std::move(g);
    }
    return f;
}

TreeNode sampleTree(Rng& rng, const RankedAlphabet& alphabet,
                    const std::vector<Elem>& leafLabels, int budget) {
    std::uint64_t nullary = 0;
    for (const auto& [sym, arity] : alphabet)
        if (arity == 0) ++nullary;
    std::function<TreeNode(int)> gen = [&](int b) -> TreeNode {
        std::vector<std::pair<std::string, int>> viable;
        if (b > 1)
            for (const auto& [sym, arity] : alphabet)
                if (arity >= 1 && arity <= b - 1) viable.emplace_back(sym, arity);
        // bias toward inner nodes when possible, else pick a leaf
        if (!viable.empty() && rng.below(4) != 0) {
            auto [sym, arity] = viable[rng.below(viable.size())];
            int remaining = b - 1;
            std::vector<TreeNode> children;
            for (int i = 0; i < arity; ++i) {
                int partsLeft = arity - 1 - i;
                int maxHere = remaining - partsLeft;
                int sz = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxHere)));
                remaining -= sz;
                children.push_back(gen(sz));
            }
            return TreeNode::node(sym, std::move(children));
        }
        std::uint64_t total = leafLabels.size() + nullary;
        std::uint64_t r = rng.below(total);
        if (r < leafLabels.size()) return TreeNode::leaf(leafLabels[r]);
        std::uint64_t k = r - leafLabels.size();
        for (const auto& [sym, arity] : alphabet)
            if (arity == 0 && k-- == 0) return TreeNode::node(sym, {});
        return TreeNode::leaf(leafLabels[0]);
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        TreeNode t = gen(budget);
        if (!leafPaths(t).empty()) return t;
    }
    return TreeNode::leaf(leafLabels[rng.below(leafLabels.size())]);
}

MVal sampleOne(const MoconadInstance& inst, const std::vector<Elem>& domain, int depth,
               int budget, Rng& rng) {
    if (inst.functor == Functor::PointedTerm) {
        if (depth == 1) {
            TreeNode t = sampleTree(rng, inst.alphabet, domain, budget);
            auto paths = leafPaths(t);
            return makeTermValue(t, paths[rng.below(paths.size())]);
        }
        int minInner = minNestedTotal(inst, depth - 1);
        std::vector<Elem> hole = {Elem::sym("*")};
        TreeNode skel = TreeNode::leaf(hole[0]);
        int leaves = 1;
        for (int attempt = 0; attempt < 64; ++attempt) {
            int skBudget = 1 + static_cast<int>(rng.below(
                                   static_cast<std::uint64_t>(budget - minInner)));
            TreeNode cand = sampleTree(rng, inst.alphabet, hole, skBudget);
            int l = static_cast<int>(leafPaths(cand).size());
            if (l >= 1 && nodeCount(cand) + l * minInner <= budget) {
                skel = cand;
                leaves = l;
                break;
            }
        }
        auto paths = leafPaths(skel);
        int remaining = budget - nodeCount(skel);
        TreeNode root = skel;
        for (int i = 0; i < leaves; ++i) {
            int partsLeft = leaves - 1 - i;
            int maxHere = remaining - partsLeft * minInner;
            int sz = minInner +
                     static_cast<int>(rng.below(
                         static_cast<std::uint64_t>(maxHere - minInner + 1)));
            remaining -= sz;
            MVal inner = sampleOne(inst, domain, depth - 1, sz, rng);
            root = withLeafLabel(root, paths[static_cast<std::size_t>(i)],
                                 Elem::wrapped(inner));
        }
        return makeTermValue(root, paths[rng.below(paths.size())]);
    }
    if (depth == 1) {
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(budget)));
        std::vector<Elem> items;
        for (int i = 0; i < n; ++i) items.push_back(domain[rng.below(domain.size())]);
        if (inst.functor == Functor::PointedList)
            return makePointedValue(items,
                                    1 + rng.below(static_cast<std::uint64_t>(n)));
        return makeListValue(inst.functor, items);
    }
    int total = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(budget)));
    int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
    std::vector<Elem> items;
    int remaining = total;
    for (int i = 0; i < m; ++i) {
        int partsLeft = m - 1 - i;
        int maxHere = remaining - partsLeft;
        int sz = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxHere)));
        remaining -= sz;
        items.push_back(Elem::wrapped(sampleOne(inst, domain, depth - 1, sz, rng)));
    }
    if (inst.functor == Functor::PointedList)
        return makePointedValue(items, 1 + rng.below(static_cast<std::uint64_t>(m)));
    return makeListValue(inst.functor, items);
}

}  // namespace

std::vector<MVal> enumerateValuesExact(const MoconadInstance& inst,
                                       const std::vector<Elem>& domain, int size) {
    if (size < 1) return {};
    if (inst.functor == Functor::PointedTerm)
        return enumerateTermsExact(inst, domain, size);
    return enumerateListsExact(inst, domain, size);
}

std::vector<MVal> enumerateValues(const MoconadInstance& inst,
                                  const std::vector<Elem>& domain, int bound) {
    std::vector<MVal> out;
    for (int n = 1; n <= bound; ++n) {
        auto part = enumerateValuesExact(inst, domain, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t countValues(const MoconadInstance& inst, int domainSize, int bound) {
    std::uint64_t total = 0;
    auto f = nestedCounts(inst, domainSize, 1, bound);
    for (int n = 1; n <= bound; ++n) total += f[static_cast<std::size_t>(n)];
    return total;
}

std::vector<MVal> enumerateNested(const MoconadInstance& inst,
                                  const std::vector<Elem>& domain, int depth,
                                  int totalBound) {
    std::vector<MVal> out;
    for (int n = minNestedTotal(inst, depth); n <= totalBound; ++n) {
        auto part = enumerateNestedExact(inst, domain, depth, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t countNested(const MoconadInstance& inst, int domainSize, int depth,
                          int totalBound) {
    std::uint64_t total = 0;
    auto f = nestedCounts(inst, domainSize, depth, totalBound);
    for (int n = 1; n <= totalBound; ++n) total += f[static_cast<std::size_t>(n)];
    return total;
}

std::vector<Elem> enumerateFnTables(const std::vector<Elem>& domain,
                                    const std::vector<Elem>& codomain) {
    std::vector<Elem> out;
    std::vector<std::size_t> radix(domain.size(), codomain.size());
    forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
        std::vector<Elem> values;
        for (std::size_t i : idx) values.push_back(codomain[i]);
        out.push_back(Elem::fn(domain, values));
    });
    return out;
}

std::vector<MVal> sampleValues(const MoconadInstance& inst,
                               const std::vector<Elem>& domain, int bound,
                               std::uint64_t seed, int count) {
    std::vector<MVal> out;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        out.push_back(sampleOne(inst, domain, 1, bound, rng));
    }
    return out;
}

std::vector<MVal> sampleNested(const MoconadInstance& inst,
                               const std::vector<Elem>& domain, int depth,
                               int totalBound, std::uint64_t seed, int count) {
    int minTotal = minNestedTotal(inst, depth);
    int budget = totalBound < minTotal ? minTotal : totalBound;
    std::vector<MVal> out;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        out.push_back(sampleOne(inst, domain, depth, budget, rng));
    }
    return out;
}

std::vector<std::vector<Elem>> enumerateWords(const std::vector<Elem>& alphabet,
                                              int maxLen) {
    std::vector<std::vector<Elem>> out;
    for (int n = 1; n <= maxLen; ++n) {
        std::vector<std::size_t> radix(static_cast<std::size_t>(n), alphabet.size());
        forEachTuple(radix, [&](const std::vector<std::size_t>& idx) {
            std::vector<Elem> w;
            for (std::size_t i : idx) w.push_back(alphabet[i]);
            out.push_back(w);
        });
    }
    return out;
}

}  // namespace moconad
