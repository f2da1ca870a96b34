#pragma once
// sigcodec.hpp - bijective Goedel numbering of terms over a finite signature.
//
// With LV variables, LC constants and LF functors (LVC = LV + LC):
//   variable i       <->  i
//   constant i       <->  LV + i
//   f_l(t1, ..., tk) <->  LVC + LF * from_tuple([code(t1), ..., code(tk)]) + l
// Every Nat decodes to a term as long as LF >= 1.

#include <bijenc/nat.hpp>
#include <bijenc/term.hpp>
#include <bijenc/tuple.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

namespace bijenc {

inline Nat term2nat(const Signature& sig, const Term& t) {
    const Nat lv(sig.num_vars());
    const Nat lvc(sig.num_leaves());
    const Nat lf(sig.num_funs());

    auto leaf_code = [&](const Term& leaf) -> Nat {
        if (leaf.is_var()) {
            if (auto i = sig.var_index(leaf.name())) return Nat(*i);
            throw domain_error("term2nat", "variable '" + leaf.name() + "' is not in the signature");
        }
        if (auto i = sig.const_index(leaf.name())) return lv + Nat(*i);
        throw domain_error("term2nat", "constant '" + leaf.name() + "' is not in the signature");
    };

    if (t.is_leaf()) return leaf_code(t);

    // Post-order over compounds; each frame gathers its argument codes.
    struct Frame {
        const Term* term;
        std::size_t fun;
        std::vector<Nat> codes;
    };
    std::vector<Frame> stack;
    auto open = [&](const Term& c) {
        auto l = sig.fun_index(c.name(), c.arity());
        if (!l)
            throw domain_error("term2nat", "functor '" + to_string(Functor{c.name(), c.arity()}) +
                                               "' is not in the signature");
        stack.push_back({&c, *l, {}});
        stack.back().codes.reserve(c.arity());
    };

    open(t);
    while (true) {
        Frame& top = stack.back();
        if (top.codes.size() < top.term->arity()) {
            const Term& arg = top.term->args()[top.codes.size()];
            if (arg.is_leaf())
                top.codes.push_back(leaf_code(arg));
            else
                open(arg);
            continue;
        }
        Nat code = lvc + lf * from_tuple(top.codes) + Nat(top.fun);
        stack.pop_back();
        if (stack.empty()) return code;
        stack.back().codes.push_back(std::move(code));
    }
}

inline Term nat2term(const Signature& sig, const Nat& n) {
    const std::size_t lv = sig.num_vars();
    const Nat lvc(sig.num_leaves());
    const std::size_t lf = sig.num_funs();

    // Returns the leaf for codes below LVC, otherwise splits the code into
    // functor index and argument codes.
    struct Split {
        std::size_t fun;
        NatTuple args;
    };
    auto classify = [&](const Nat& x) -> std::pair<std::optional<Term>, Split> {
        if (x < lvc) {
            const auto i = x.to<std::size_t>("nat2term");
            if (i < lv) return {Term::var(sig.vars()[i]), {}};
            return {Term::constant(sig.consts()[i - lv]), {}};
        }
        if (lf == 0)
            throw domain_error("nat2term", "no function symbols: codes beyond " + (lvc - Nat(1)).str() +
                                               " are undecodable, got " + x.str());
        auto [q, l] = divmod(x - lvc, lf);
        const Functor& f = sig.funs()[l];
        return {std::nullopt, Split{static_cast<std::size_t>(l), to_tuple(f.arity, q)}};
    };

    auto [leaf, root] = classify(n);
    if (leaf) return std::move(*leaf);

    struct Frame {
        std::size_t fun;
        NatTuple codes;
        std::vector<Term> args;
    };
    std::vector<Frame> stack;
    stack.push_back({root.fun, std::move(root.args), {}});
    while (true) {
        Frame& top = stack.back();
        if (top.args.size() < top.codes.size()) {
            auto [sub_leaf, sub] = classify(top.codes[top.args.size()]);
            if (sub_leaf)
                top.args.push_back(std::move(*sub_leaf));
            else
                stack.push_back({sub.fun, std::move(sub.args), {}});
            continue;
        }
        Term t = Term::compound(sig.funs()[top.fun].name, std::move(top.args));
        stack.pop_back();
        if (stack.empty()) return t;
        stack.back().args.push_back(std::move(t));
    }
}

/// Uniform Nat in [0, 2^bits). Consumes ceil(bits / 64) successive 64-bit
/// outputs of rng as little-endian limbs and masks the top limb.
template <class Engine>
Nat random_nat(std::size_t bits, Engine& rng) {
    static_assert(Engine::min() == 0 && Engine::max() == std::numeric_limits<std::uint64_t>::max(),
                  "random_nat needs an engine producing full 64-bit words");
    std::vector<std::uint64_t> limbs((bits + 63) / 64);
    for (auto& w : limbs) w = static_cast<std::uint64_t>(rng());
    if (bits % 64 != 0) limbs.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    return Nat::from_limbs(limbs);
}

/// Decodes a uniformly drawn code of the given bitsize. Deterministic for a
/// given engine state; std::mt19937_64 is the engine used by the tools.
template <class Engine>
Term ranterm(const Signature& sig, std::size_t bits, Engine& rng) {
    if (bits == 0) throw domain_error("ranterm", "bits must be at least 1");
    if (sig.num_funs() == 0) throw domain_error("ranterm", "signature has no function symbols");
    return nat2term(sig, random_nat(bits, rng));
}

} // namespace bijenc
