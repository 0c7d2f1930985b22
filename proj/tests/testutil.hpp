// Shared helpers for the test binaries. Everything here is sugar over the
// public headers; tests should stay readable as worked examples.
#pragma once

#include <string>
#include <vector>

#include "moconad/ops.hpp"
#include "moconad/values.hpp"

namespace tu {

inline moconad::Elem I(std::int64_t v) { return moconad::Elem::integer(v); }
inline moconad::Elem S(const std::string& s) { return moconad::Elem::sym(s); }

inline std::vector<moconad::Elem> ints(std::initializer_list<std::int64_t> vs) {
    std::vector<moconad::Elem> out;
    for (auto v : vs) out.push_back(I(v));
    return out;
}

inline std::vector<moconad::Elem> syms(std::initializer_list<const char*> vs) {
    std::vector<moconad::Elem> out;
    for (auto v : vs) out.push_back(S(v));
    return out;
}

inline moconad::MVal prefix(std::initializer_list<std::int64_t> vs) {
    return moconad::makeListValue(moconad::Functor::PrefixList, ints(vs));
}

inline moconad::MVal suffix(std::initializer_list<std::int64_t> vs) {
    return moconad::makeListValue(moconad::Functor::SuffixList, ints(vs));
}

inline moconad::MVal pointed(std::initializer_list<std::int64_t> vs, std::size_t focus) {
    return moconad::makePointedValue(ints(vs), focus);
}

// A nested value: each block becomes a wrapped payload of an outer value of
// the same functor.
inline moconad::MVal blocks(moconad::Functor f, std::vector<moconad::MVal> inner,
                            std::size_t focus = 0) {
    std::vector<moconad::Elem> items;
    for (auto& v : inner) items.push_back(moconad::Elem::wrapped(std::move(v)));
    if (f == moconad::Functor::PointedList) return moconad::makePointedValue(items, focus);
    return moconad::makeListValue(f, items);
}

inline const moconad::MoconadInstance& prefixInst() {
    static const auto inst = moconad::listInstance(moconad::Functor::PrefixList);
    return inst;
}

inline const moconad::MoconadInstance& suffixInst() {
    static const auto inst = moconad::listInstance(moconad::Functor::SuffixList);
    return inst;
}

inline const moconad::MoconadInstance& pointedInst() {
    static const auto inst = moconad::listInstance(moconad::Functor::PointedList);
    return inst;
}

// f binary, g unary, c childless
inline const moconad::MoconadInstance& termInst() {
    static const auto inst =
        moconad::termInstance({{"f", 2}, {"g", 1}, {"c", 0}});
    return inst;
}

inline std::string shown(const moconad::MVal& v) { return moconad::show(v); }

}  // namespace tu
