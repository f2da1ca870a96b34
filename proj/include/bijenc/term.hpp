#pragma once
// term.hpp - first-order terms, signatures, and their textual forms.
//
// Grammar (whitespace allowed between tokens):
//   term := VAR | CONST | INT | FUNCTOR '(' term (',' term)* ')'
//   VAR  := [A-Z][A-Za-z0-9_]*      CONST, FUNCTOR := [a-z][a-z0-9_]*
//   INT  := [0-9]+
// Deep terms are handled without native recursion throughout.

#include <bijenc/error.hpp>

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bijenc {

class Term {
public:
    enum class Kind { variable, constant, compound };

    static Term var(std::string name) { return Term(Kind::variable, std::move(name), {}); }
    static Term constant(std::string symbol) { return Term(Kind::constant, std::move(symbol), {}); }
    static Term compound(std::string functor, std::vector<Term> args) {
        if (args.empty())
            throw domain_error("compound", "functor '" + functor + "' needs at least one argument");
        return Term(Kind::compound, std::move(functor), std::move(args));
    }

    Term(const Term& other) : kind_(other.kind_), name_(other.name_) {
        std::vector<std::pair<const Term*, Term*>> todo{{&other, this}};
        while (!todo.empty()) {
            auto [src, dst] = todo.back();
            todo.pop_back();
            dst->args_.reserve(src->args_.size());
            for (const auto& a : src->args_) {
                dst->args_.push_back(Term(a.kind_, a.name_, {}));
                todo.emplace_back(&a, &dst->args_.back());
            }
        }
    }
    Term(Term&&) noexcept = default;
    Term& operator=(const Term& other) {
        if (this != &other) *this = Term(other);
        return *this;
    }
    Term& operator=(Term&&) noexcept = default;

    ~Term() {
        if (args_.empty()) return;
        // Tear down iteratively; deep chains would overflow the native stack.
        std::vector<Term> pending = std::move(args_);
        while (!pending.empty()) {
            Term t = std::move(pending.back());
            pending.pop_back();
            for (auto& a : t.args_) pending.push_back(std::move(a));
            t.args_.clear();
        }
    }

    Kind kind() const noexcept { return kind_; }
    bool is_var() const noexcept { return kind_ == Kind::variable; }
    bool is_const() const noexcept { return kind_ == Kind::constant; }
    bool is_compound() const noexcept { return kind_ == Kind::compound; }
    bool is_leaf() const noexcept { return kind_ != Kind::compound; }
    /// A constant written as a non-negative integer literal.
    bool is_integer() const noexcept {
        return kind_ == Kind::constant && !name_.empty() && std::isdigit(static_cast<unsigned char>(name_[0]));
    }

    /// Variable name, constant symbol, or functor.
    const std::string& name() const noexcept { return name_; }
    const std::vector<Term>& args() const noexcept { return args_; }
    std::size_t arity() const noexcept { return args_.size(); }

    friend bool operator==(const Term& a, const Term& b) {
        std::vector<std::pair<const Term*, const Term*>> todo{{&a, &b}};
        while (!todo.empty()) {
            auto [x, y] = todo.back();
            todo.pop_back();
            if (x->kind_ != y->kind_ || x->name_ != y->name_ || x->args_.size() != y->args_.size()) return false;
            for (std::size_t i = 0; i < x->args_.size(); ++i) todo.emplace_back(&x->args_[i], &y->args_[i]);
        }
        return true;
    }

    /// Number of nodes (leaves plus compounds).
    std::size_t size() const {
        std::size_t n = 0;
        std::vector<const Term*> todo{this};
        while (!todo.empty()) {
            const Term* t = todo.back();
            todo.pop_back();
            ++n;
            for (const auto& a : t->args_) todo.push_back(&a);
        }
        return n;
    }

private:
    Term(Kind k, std::string name, std::vector<Term> args)
        : kind_(k), name_(std::move(name)), args_(std::move(args)) {}

    Kind kind_;
    std::string name_;
    std::vector<Term> args_;
};

// ---------------------------------------------------------------------------
// Lexical classes

namespace lex {
inline bool lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool digit(char c) { return c >= '0' && c <= '9'; }
inline bool space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

inline bool is_var_name(std::string_view s) {
    if (s.empty() || !upper(s[0])) return false;
    for (char c : s.substr(1))
        if (!(lower(c) || upper(c) || digit(c) || c == '_')) return false;
    return true;
}

inline bool is_symbol(std::string_view s) {
    if (s.empty() || !lower(s[0])) return false;
    for (char c : s.substr(1))
        if (!(lower(c) || digit(c) || c == '_')) return false;
    return true;
}

inline bool is_integer(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!digit(c)) return false;
    return true;
}
} // namespace lex

// ---------------------------------------------------------------------------
// Printing

inline void print_term(std::ostream& os, const Term& t) {
    // Each entry is a term to print, or a separator when term is null.
    struct Item {
        const Term* term;
        char sep;
    };
    std::vector<Item> todo{{&t, 0}};
    while (!todo.empty()) {
        Item it = todo.back();
        todo.pop_back();
        if (!it.term) {
            os << it.sep;
            continue;
        }
        os << it.term->name();
        if (it.term->is_leaf()) continue;
        os << '(';
        const auto& args = it.term->args();
        todo.push_back({nullptr, ')'});
        for (std::size_t i = args.size(); i-- > 0;) {
            todo.push_back({&args[i], 0});
            if (i > 0) todo.push_back({nullptr, ','});
        }
    }
}

inline std::string print_term(const Term& t) {
    std::ostringstream os;
    print_term(os, t);
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) {
    print_term(os, t);
    return os;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && lex::space(text_[pos_])) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    /// Reads a VAR, CONST/FUNCTOR, or INT token.
    std::string_view word() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (lex::upper(c)) {
            while (pos_ < text_.size() &&
                   (lex::lower(text_[pos_]) || lex::upper(text_[pos_]) || lex::digit(text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
        } else if (lex::lower(c)) {
            while (pos_ < text_.size() && (lex::lower(text_[pos_]) || lex::digit(text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
        } else if (lex::digit(c)) {
            while (pos_ < text_.size() && lex::digit(text_[pos_])) ++pos_;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        return text_.substr(start, pos_ - start);
    }

    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw syntax_error(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Term parse_term(std::string_view text) {
    detail::Lexer lx(text);
    struct Frame {
        std::string functor;
        std::vector<Term> args;
    };
    std::vector<Frame> stack;
    std::optional<Term> done;

    while (!done) {
        const std::string_view w = lx.word();
        std::optional<Term> t;
        if (lex::upper(w[0])) {
            t = Term::var(std::string(w));
        } else if (lex::digit(w[0])) {
            t = Term::constant(std::string(w));
        } else if (lx.peek() == '(') {
            lx.expect('(');
            stack.push_back({std::string(w), {}});
            continue;
        } else {
            t = Term::constant(std::string(w));
        }

        // Attach t, closing every compound whose argument list ends here.
        while (true) {
            if (stack.empty()) {
                done = std::move(t);
                break;
            }
            stack.back().args.push_back(std::move(*t));
            if (lx.peek() == ',') {
                lx.expect(',');
                break;
            }
            lx.expect(')');
            Frame f = std::move(stack.back());
            stack.pop_back();
            t = Term::compound(std::move(f.functor), std::move(f.args));
        }
    }
    if (!lx.at_end()) lx.fail("trailing input after term");
    return std::move(*done);
}

// ---------------------------------------------------------------------------
// Signatures

struct Functor {
    std::string name;
    std::size_t arity;
    friend bool operator==(const Functor&, const Functor&) = default;
};

inline std::string to_string(const Functor& f) { return f.name + "/" + std::to_string(f.arity); }

/// Describes the first violated signature invariant, if any.
inline std::optional<std::string> validate_signature(const std::vector<std::string>& vars,
                                                     const std::vector<std::string>& consts,
                                                     const std::vector<Functor>& funs) {
    if (vars.size() + consts.size() == 0) return "LVC = 0: a signature needs at least one variable or constant";
    std::unordered_map<std::string, int> seen;
    for (const auto& v : vars) {
        if (!lex::is_var_name(v)) return "invalid variable name '" + v + "'";
        if (seen[v]++) return "duplicate variable '" + v + "'";
    }
    seen.clear();
    for (const auto& c : consts) {
        if (!lex::is_symbol(c) && !lex::is_integer(c)) return "invalid constant '" + c + "'";
        if (seen[c]++) return "duplicate constant '" + c + "'";
    }
    seen.clear();
    for (const auto& f : funs) {
        if (!lex::is_symbol(f.name)) return "invalid functor name '" + f.name + "'";
        if (f.arity == 0) return "arity of functor '" + f.name + "' must be at least 1";
        if (seen[to_string(f)]++) return "duplicate functor '" + to_string(f) + "'";
    }
    return std::nullopt;
}

/// Ordered dictionaries of variables, constants and functors. Positions
/// define the code ranges: variables [0, LV), constants [LV, LVC), and
/// functor index modulo LF for compounds.
class Signature {
public:
    Signature(std::vector<std::string> vars, std::vector<std::string> consts, std::vector<Functor> funs)
        : vars_(std::move(vars)), consts_(std::move(consts)), funs_(std::move(funs)) {
        if (auto problem = validate_signature(vars_, consts_, funs_)) throw signature_error(*problem);
        for (std::size_t i = 0; i < vars_.size(); ++i) var_index_.emplace(vars_[i], i);
        for (std::size_t i = 0; i < consts_.size(); ++i) const_index_.emplace(consts_[i], i);
        for (std::size_t i = 0; i < funs_.size(); ++i) fun_index_.emplace(to_string(funs_[i]), i);
    }

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const std::vector<std::string>& consts() const noexcept { return consts_; }
    const std::vector<Functor>& funs() const noexcept { return funs_; }

    std::size_t num_vars() const noexcept { return vars_.size(); }
    std::size_t num_consts() const noexcept { return consts_.size(); }
    std::size_t num_funs() const noexcept { return funs_.size(); }
    std::size_t num_leaves() const noexcept { return vars_.size() + consts_.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const { return find(var_index_, name); }
    std::optional<std::size_t> const_index(const std::string& sym) const { return find(const_index_, sym); }
    std::optional<std::size_t> fun_index(const std::string& name, std::size_t arity) const {
        return find(fun_index_, to_string(Functor{name, arity}));
    }

private:
    static std::optional<std::size_t> find(const std::unordered_map<std::string, std::size_t>& m,
                                           const std::string& key) {
        auto it = m.find(key);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    std::vector<std::string> vars_;
    std::vector<std::string> consts_;
    std::vector<Functor> funs_;
    std::unordered_map<std::string, std::size_t> var_index_;
    std::unordered_map<std::string, std::size_t> const_index_;
    std::unordered_map<std::string, std::size_t> fun_index_;
};

/// Parses the signature file format:
///
///     # comment
///     vars: X Y
///     consts: a b
///     funs: f/2 g/1
///
/// Each key may appear at most once; a missing key means an empty list.
inline Signature parse_signature(std::string_view text) {
    std::vector<std::string> vars, consts;
    std::vector<Functor> funs;
    bool have_vars = false, have_consts = false, have_funs = false;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const std::size_t offset = line_start;
        line_start = line_end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream words{std::string(line)};
        std::string key;
        if (!(words >> key)) continue;
        if (key.back() != ':') throw syntax_error("expected 'vars:', 'consts:' or 'funs:'", offset);
        key.pop_back();

        bool* seen = key == "vars" ? &have_vars : key == "consts" ? &have_consts : key == "funs" ? &have_funs : nullptr;
        if (!seen) throw syntax_error("unknown signature key '" + key + "'", offset);
        if (*seen) throw syntax_error("repeated signature key '" + key + "'", offset);
        *seen = true;

        for (std::string w; words >> w;) {
            if (key == "vars") {
                vars.push_back(w);
            } else if (key == "consts") {
                consts.push_back(w);
            } else {
                const auto slash = w.rfind('/');
                std::size_t arity = 0;
                const char* first = slash == std::string::npos ? w.data() + w.size() : w.data() + slash + 1;
                const char* last = w.data() + w.size();
                auto [ptr, ec] = std::from_chars(first, last, arity);
                if (first == last || ec != std::errc() || ptr != last)
                    throw syntax_error("functor '" + w + "' must be written name/arity", offset);
                funs.push_back({w.substr(0, slash), arity});
            }
        }
    }
    return Signature(std::move(vars), std::move(consts), std::move(funs));
}

} // namespace bijenc
