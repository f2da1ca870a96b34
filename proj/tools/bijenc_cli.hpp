#pragma once
// bijenc_cli.hpp - command-line front end over the codecs.
//
// All numbers cross this boundary as decimal text. Results go to `out`,
// one-line diagnostics to `err`; the return value is the exit status.

#include <bijenc/bijenc.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bijenc::cli {

namespace detail {

inline Signature load_signature(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot read signature file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_signature(text.str());
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    if (s.empty()) return parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(s.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) return parts;
        start = comma + 1;
    }
}

inline std::vector<Nat> parse_nat_list(const std::string& s) {
    std::vector<Nat> out;
    for (const auto& p : split_commas(s)) out.push_back(Nat::parse(p));
    return out;
}

template <class Seq>
std::string join(const Seq& xs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << ',';
        first = false;
        os << x;
    }
    return os.str();
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bijective encodings of terms, tuples, lists, strings and parenthesis sequences", "bijenc"};
    app.require_subcommand(1);

    std::function<void()> action;
    std::string command;
    auto on = [&](CLI::App* sub, std::function<void()> f) {
        sub->callback([&action, &command, sub, f] {
            action = f;
            command = sub->get_name();
        });
    };

    std::string sig_path, term_text, nat_text, atoms_text, list_text;
    std::size_t k = 0, bits = 0, count = 1;
    std::uint32_t base = 0;
    std::uint64_t seed = 0, max = 0;

    {
        auto* s = app.add_subcommand("encode-term", "Term -> code over a signature");
        s->add_option("--sig", sig_path, "Signature file")->required();
        s->add_option("term", term_text, "Term text")->required();
        on(s, [&] { out << term2nat(detail::load_signature(sig_path), parse_term(term_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("decode-term", "Code -> term over a signature");
        s->add_option("--sig", sig_path, "Signature file")->required();
        s->add_option("nat", nat_text, "Code")->required();
        on(s, [&] { out << nat2term(detail::load_signature(sig_path), Nat::parse(nat_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("skeleton-encode", "Term -> skeleton code, then atom list");
        s->add_option("term", term_text, "Term text")->required();
        on(s, [&] {
            auto c = term2code(parse_term(term_text));
            out << c.code << '\n' << format_atoms(c.atoms) << '\n';
        });
    }
    {
        auto* s = app.add_subcommand("skeleton-decode", "Skeleton code and atom list -> term");
        s->add_option("nat", nat_text, "Skeleton code")->required();
        s->add_option("--atoms", atoms_text, "Comma-separated atoms")->required();
        on(s, [&] { out << code2term(Nat::parse(nat_text), parse_atoms(atoms_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("inj-encode", "Term -> injective structure code, then atom list");
        s->add_option("term", term_text, "Term text")->required();
        on(s, [&] {
            auto c = term2inj_code(parse_term(term_text));
            out << c.code << '\n' << format_atoms(c.atoms) << '\n';
        });
    }
    {
        auto* s = app.add_subcommand("inj-decode", "Injective structure code and atom list -> term");
        s->add_option("nat", nat_text, "Structure code")->required();
        s->add_option("--atoms", atoms_text, "Comma-separated atoms")->required();
        on(s, [&] { out << inj_code2term(Nat::parse(nat_text), parse_atoms(atoms_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("pars", "Nat -> balanced parentheses");
        s->add_option("nat", nat_text, "Nat")->required();
        on(s, [&] { out << to_string(nat2pars(Nat::parse(nat_text))) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("unpars", "Balanced parentheses -> Nat");
        s->add_option("parens", list_text, "String over '(' and ')'")->required();
        on(s, [&] { out << pars2nat(parse_parens(list_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("listnat", "Comma list of Nats -> Nat");
        s->add_option("list", list_text, "n1,n2,...")->required();
        on(s, [&] { out << nats2nat(detail::parse_nat_list(list_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("natlist", "Nat -> comma list of Nats");
        s->add_option("nat", nat_text, "Nat")->required();
        on(s, [&] { out << detail::join(nat2nats(Nat::parse(nat_text))) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("tuple", "Nat -> k-tuple");
        s->add_option("-k", k, "Tuple arity")->required();
        s->add_option("nat", nat_text, "Nat")->required();
        on(s, [&] { out << detail::join(to_tuple(k, Nat::parse(nat_text))) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("untuple", "k-tuple -> Nat");
        s->add_option("tuple", list_text, "n1,...,nk")->required();
        on(s, [&] { out << from_tuple(detail::parse_nat_list(list_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("bbase", "Nat -> bijective base-b digits, least significant first");
        s->add_option("-b", base, "Base")->required();
        s->add_option("nat", nat_text, "Nat")->required();
        on(s, [&] { out << detail::join(to_bbase(base, Nat::parse(nat_text))) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("unbbase", "Bijective base-b digits -> Nat");
        s->add_option("-b", base, "Base")->required();
        s->add_option("digits", list_text, "d1,d2,...")->required();
        on(s, [&] {
            Digits ds;
            for (const auto& d : detail::parse_nat_list(list_text)) ds.push_back(d.to<std::uint32_t>("unbbase"));
            out << from_bbase(base, ds) << '\n';
        });
    }
    {
        auto* s = app.add_subcommand("atom-encode", "Lowercase word -> Nat");
        s->add_option("word", term_text, "Word over a..z")->required();
        on(s, [&] { out << atom2nat(term_text) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("atom-decode", "Nat -> lowercase word");
        s->add_option("nat", nat_text, "Nat")->required();
        on(s, [&] { out << nat2atom(Nat::parse(nat_text)) << '\n'; });
    }
    {
        auto* s = app.add_subcommand("random-term", "Decode uniformly drawn codes of a given bitsize");
        s->add_option("--sig", sig_path, "Signature file")->required();
        s->add_option("--bits", bits, "Code bitsize")->required();
        s->add_option("--seed", seed, "Seed for std::mt19937_64")->required();
        s->add_option("--count", count, "Number of terms")->capture_default_str();
        on(s, [&] {
            const Signature sig = detail::load_signature(sig_path);
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0; i < count; ++i) out << ranterm(sig, bits, rng) << '\n';
        });
    }
    {
        auto* s = app.add_subcommand("roundtrip", "Check term2nat(nat2term(n)) == n for n in [0, max]");
        s->add_option("--sig", sig_path, "Signature file")->required();
        s->add_option("--max", max, "Largest code checked")->required();
        on(s, [&] {
            const Signature sig = detail::load_signature(sig_path);
            for (std::uint64_t n = 0;; ++n) {
                const Term t = nat2term(sig, Nat(n));
                const Nat back = term2nat(sig, t);
                if (back != Nat(n)) {
                    out << "counterexample " << n << " -> " << t << " -> " << back << '\n';
                    throw error("roundtrip failed at " + std::to_string(n));
                }
                if (n == max) break;
            }
            out << "ok " << Nat(max) + Nat(1) << " checked\n";
        });
    }
    {
        auto* s = app.add_subcommand("stats", "Size statistics of random terms");
        s->add_option("--sig", sig_path, "Signature file")->required();
        s->add_option("--bits", bits, "Code bitsize")->required();
        s->add_option("--seed", seed, "Seed for std::mt19937_64")->required();
        s->add_option("--count", count, "Number of terms")->required();
        on(s, [&] {
            const Signature sig = detail::load_signature(sig_path);
            if (sig.num_funs() == 0) throw domain_error("stats", "signature has no function symbols");
            std::mt19937_64 rng(seed);
            out << "code_bits\tterm_length\tskeleton_length\tratio\n";
            double lo = 0, hi = 0, sum = 0;
            for (std::size_t i = 0; i < count; ++i) {
                const Nat code = random_nat(bits, rng);
                const Term t = nat2term(sig, code);
                const std::size_t len = print_term(t).size();
                const std::size_t skel = term2bitpars(t).parens.size();
                const double ratio = static_cast<double>(code.bit_length()) / static_cast<double>(len);
                lo = i == 0 ? ratio : std::min(lo, ratio);
                hi = i == 0 ? ratio : std::max(hi, ratio);
                sum += ratio;
                out << code.bit_length() << '\t' << len << '\t' << skel << '\t' << std::fixed
                    << std::setprecision(4) << ratio << '\n';
            }
            if (count > 0)
                out << "ratio min=" << lo << " max=" << hi << " mean=" << sum / static_cast<double>(count) << '\n';
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << command << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace bijenc::cli
