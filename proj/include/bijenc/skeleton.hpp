#pragma once
// skeleton.hpp - Catalan skeletons of terms.
//
// A term splits into its structure, a balanced parenthesis sequence, and its
// content, the preorder list of functor names and leaves. A compound
//   f(a1, ..., ak)
// becomes ( [f] [a1] ... [ak] ) where each member is wrapped as ( ... ):
// an empty wrapper for a leaf, or a wrapper around the nested compound.
// A lone leaf is the sequence ().

#include <bijenc/bbase.hpp>
#include <bijenc/nat.hpp>
#include <bijenc/term.hpp>
#include <bijenc/tuple.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bijenc {

enum class Paren : std::uint8_t { open = 0, close = 1 };

using ParenSeq = std::vector<Paren>;

/// Leaf payloads (functor names appear as constants), in emission order.
using AtomList = std::vector<Term>;

using NatList = std::vector<Nat>;

inline std::string to_string(const ParenSeq& ps) {
    std::string s;
    s.reserve(ps.size());
    for (Paren p : ps) s.push_back(p == Paren::open ? '(' : ')');
    return s;
}

inline ParenSeq parse_parens(std::string_view s) {
    ParenSeq ps;
    ps.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ps.push_back(Paren::open);
        else if (s[i] == ')')
            ps.push_back(Paren::close);
        else
            throw syntax_error(std::string("expected '(' or ')', got '") + s[i] + "'", i);
    }
    return ps;
}

/// True when ps is a single balanced group spanning the whole sequence.
inline bool is_single_group(const ParenSeq& ps) {
    std::size_t depth = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] == Paren::open) {
            ++depth;
        } else {
            if (depth == 0) return false;
            if (--depth == 0 && i + 1 != ps.size()) return false;
        }
    }
    return !ps.empty() && depth == 0;
}

// ---------------------------------------------------------------------------
// Nat <-> list of Nat

inline NatList nat2nats(const Nat& n) {
    if (n.is_zero()) return {};
    auto [len_minus_one, content] = decons(n);
    return to_tuple(len_minus_one + 1, content);
}

inline Nat nats2nat(std::span<const Nat> ns) {
    if (ns.empty()) return Nat();
    return cons(ns.size() - 1, from_tuple(ns));
}

// ---------------------------------------------------------------------------
// Nat <-> balanced parentheses

/// ( nat2pars(x1) ... nat2pars(xm) ) for [x1..xm] = nat2nats(n).
inline ParenSeq nat2pars(const Nat& n) {
    ParenSeq out;
    struct Frame {
        NatList items;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    out.push_back(Paren::open);
    stack.push_back({nat2nats(n)});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next < top.items.size()) {
            NatList children = nat2nats(top.items[top.next++]);
            out.push_back(Paren::open);
            stack.push_back({std::move(children)});
        } else {
            out.push_back(Paren::close);
            stack.pop_back();
        }
    }
    return out;
}

inline Nat pars2nat(const ParenSeq& ps) {
    if (ps.empty()) throw domain_error("pars2nat", "empty parenthesis sequence");
    std::vector<NatList> stack;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] == Paren::open) {
            if (i > 0 && stack.empty())
                throw domain_error("pars2nat", "trailing symbols after position " + std::to_string(i - 1));
            stack.emplace_back();
            continue;
        }
        if (stack.empty()) throw domain_error("pars2nat", "unbalanced ')' at position " + std::to_string(i));
        Nat code = nats2nat(stack.back());
        stack.pop_back();
        if (stack.empty()) {
            if (i + 1 != ps.size())
                throw domain_error("pars2nat", "trailing symbols after position " + std::to_string(i));
            return code;
        }
        stack.back().push_back(std::move(code));
    }
    throw domain_error("pars2nat", "unbalanced: " + std::to_string(stack.size()) + " unclosed '('");
}

// ---------------------------------------------------------------------------
// Term <-> (skeleton, atoms)

struct Skeleton {
    ParenSeq parens;
    AtomList atoms;
};

inline Skeleton term2bitpars(const Term& t) {
    Skeleton out;
    auto& ps = out.parens;
    if (t.is_leaf()) {
        ps = {Paren::open, Paren::close};
        out.atoms.push_back(t);
        return out;
    }
    // next == 0 is the functor slot, next == i + 1 is argument i.
    struct Frame {
        const Term* term;
        std::size_t next;
    };
    std::vector<Frame> stack{{&t, 0}};
    ps.push_back(Paren::open);
    while (!stack.empty()) {
        Frame& top = stack.back();
        const Term& c = *top.term;
        if (top.next > c.arity()) {
            ps.push_back(Paren::close);
            stack.pop_back();
            if (!stack.empty()) ps.push_back(Paren::close);  // closes the member wrapper
            continue;
        }
        const std::size_t member = top.next++;
        ps.push_back(Paren::open);
        if (member == 0) {
            out.atoms.push_back(Term::constant(c.name()));
            ps.push_back(Paren::close);
            continue;
        }
        const Term& arg = c.args()[member - 1];
        if (arg.is_leaf()) {
            out.atoms.push_back(arg);
            ps.push_back(Paren::close);
        } else {
            ps.push_back(Paren::open);
            stack.push_back({&arg, 0});
        }
    }
    return out;
}

inline Term bitpars2term(const ParenSeq& ps, const AtomList& atoms) {
    static constexpr const char* op = "bitpars2term";
    if (!is_single_group(ps)) throw domain_error(op, "malformed skeleton: not a single balanced group");

    // children[g] lists the groups nested directly in group g; groups are
    // numbered by the position of their '('.
    std::vector<std::vector<std::size_t>> children(ps.size());
    {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (ps[i] == Paren::open) {
                if (!open.empty()) children[open.back()].push_back(i);
                open.push_back(i);
            } else {
                open.pop_back();
            }
        }
    }

    std::size_t next_atom = 0;
    auto take_atom = [&]() -> const Term& {
        if (next_atom >= atoms.size())
            throw domain_error(op, "atom count mismatch: skeleton needs more than " + std::to_string(atoms.size()) +
                                       " atoms");
        const Term& a = atoms[next_atom++];
        if (!a.is_leaf()) throw domain_error(op, "atom '" + print_term(a) + "' is not a leaf");
        return a;
    };
    auto finish = [&](Term t) {
        if (next_atom != atoms.size())
            throw domain_error(op, "atom count mismatch: skeleton uses " + std::to_string(next_atom) + " of " +
                                       std::to_string(atoms.size()) + " atoms");
        return t;
    };

    if (children[0].empty()) return finish(take_atom());

    struct Frame {
        std::size_t group;
        std::string functor;
        std::vector<Term> args;
    };
    std::vector<Frame> stack;
    auto open_compound = [&](std::size_t g) {
        const auto& members = children[g];
        if (members.size() < 2)
            throw domain_error(op, "malformed skeleton: group at position " + std::to_string(g) + " has " +
                                       std::to_string(members.size()) + " member(s), a compound needs at least 2");
        if (!children[members[0]].empty())
            throw domain_error(op, "malformed skeleton: functor slot at position " + std::to_string(members[0]) +
                                       " is not a leaf");
        const Term& f = take_atom();
        if (!f.is_const() || !lex::is_symbol(f.name()))
            throw domain_error(op, "functor atom '" + f.name() + "' is not a lowercase symbol");
        stack.push_back({g, f.name(), {}});
    };

    open_compound(0);
    while (true) {
        Frame& top = stack.back();
        const auto& members = children[top.group];
        if (top.args.size() + 1 < members.size()) {
            const std::size_t wrapper = members[top.args.size() + 1];
            const auto& inner = children[wrapper];
            if (inner.empty())
                top.args.push_back(take_atom());
            else if (inner.size() == 1)
                open_compound(inner[0]);
            else
                throw domain_error(op, "malformed skeleton: argument wrapper at position " + std::to_string(wrapper) +
                                           " holds " + std::to_string(inner.size()) + " groups");
            continue;
        }
        Term t = Term::compound(std::move(top.functor), std::move(top.args));
        stack.pop_back();
        if (stack.empty()) return finish(std::move(t));
        stack.back().args.push_back(std::move(t));
    }
}

// ---------------------------------------------------------------------------
// Injective code: the skeleton read as bijective base-2 digits.

struct Coded {
    Nat code;
    AtomList atoms;
};

inline Coded term2inj_code(const Term& t) {
    Skeleton sk = term2bitpars(t);
    Digits ds;
    ds.reserve(sk.parens.size());
    for (Paren p : sk.parens) ds.push_back(static_cast<std::uint32_t>(p));
    return {from_bbase(2, ds), std::move(sk.atoms)};
}

inline Term inj_code2term(const Nat& n, const AtomList& atoms) {
    ParenSeq ps;
    for (auto d : to_bbase(2, n)) ps.push_back(static_cast<Paren>(d));
    if (!is_single_group(ps))
        throw domain_error("inj_code2term", "code " + n.str() + " is not a balanced skeleton");
    return bitpars2term(ps, atoms);
}

// ---------------------------------------------------------------------------
// Bijective skeleton code.

inline Coded term2code(const Term& t) {
    Skeleton sk = term2bitpars(t);
    return {pars2nat(sk.parens), std::move(sk.atoms)};
}

inline Term code2term(const Nat& n, const AtomList& atoms) { return bitpars2term(nat2pars(n), atoms); }

// ---------------------------------------------------------------------------
// Atom list text: comma-separated leaf tokens.

inline std::string format_atoms(const AtomList& atoms) {
    std::string s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) s += ',';
        s += atoms[i].name();
    }
    return s;
}

inline AtomList parse_atoms(std::string_view text) {
    AtomList out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        Term t = [&] {
            try {
                return parse_term(tok);
            } catch (const syntax_error& e) {
                throw syntax_error("bad atom '" + std::string(tok) + "'", start + e.position());
            }
        }();
        if (!t.is_leaf()) throw syntax_error("atom '" + std::string(tok) + "' is not a leaf", start);
        out.push_back(std::move(t));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

} // namespace bijenc
