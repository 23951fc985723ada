#pragma once

// The .halg input format. Line oriented, '#' starts a comment.
//
//   field rational | field prime <p>
//   order degrevlex | order lex
//   vars <name>+
//   ideal <poly> (, <poly>)*
//   module <id> ring
//   module <id> zero
//   module <id> coker [ <row> ; <row> ; ... ] (degrees <d>+)?
//   meta <id> key=value ...
//
// A coker row lists the entries of one row of the presentation matrix; the
// columns are the relations. Row degrees are inferred from homogeneity (each
// connected block starts at degree 0) unless given explicitly.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "halg/verify/runner.hpp"

namespace halg {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_, std::size_t column_ = 0)
        : std::runtime_error(what + " at line " + std::to_string(line_) + (column_ ? ", column " + std::to_string(column_) : "")),
          line(line_), column(column_)
    {}
    std::size_t line;
    std::size_t column;
};

/// A polynomial with rational coefficients, independent of the target field.
struct RawPoly {
    std::map<std::vector<int>, mpq_class> terms;  // exponent vector -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }
    std::optional<int> degree() const
    {
        if (terms.empty()) return std::nullopt;
        int d = 0;
        for (int e : terms.begin()->first) d += e;
        return d;
    }
    bool homogeneous() const
    {
        std::optional<int> d;
        for (const auto& [e, c] : terms) {
            int k = 0;
            for (int x : e) k += x;
            if (d && *d != k) return false;
            d = k;
        }
        return true;
    }
    bool operator==(const RawPoly&) const = default;

    RawPoly& add(const RawPoly& o, const mpq_class& scale = 1)
    {
        for (const auto& [e, c] : o.terms) {
            mpq_class v = scale * c;
            if (auto it = terms.find(e); it != terms.end()) v += it->second;
            if (v == 0) terms.erase(e);
            else terms[e] = v;
        }
        return *this;
    }
    RawPoly mul(const RawPoly& o) const
    {
        RawPoly r;
        for (const auto& [a, ca] : terms)
            for (const auto& [b, cb] : o.terms) {
                std::vector<int> e(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
                RawPoly t;
                t.terms[e] = ca * cb;
                r.add(t);
            }
        return r;
    }
};

struct FieldSpec {
    bool rational = false;
    std::uint64_t prime = 32003;
    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const { return rational ? "rational" : "prime " + std::to_string(prime); }
};

/// "rational", "prime <p>", "prime:<p>" or "<p>".
inline FieldSpec parse_field_spec(const std::string& text)
{
    std::string t = text;
    for (char& c : t)
        if (c == ':') c = ' ';
    std::istringstream in(t);
    std::string w;
    in >> w;
    FieldSpec f;
    if (w == "rational" || w == "QQ") {
        f.rational = true;
        return f;
    }
    if (w == "prime") in >> w;
    try {
        std::size_t used = 0;
        f.prime = std::stoull(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
    } catch (const std::exception&) {
        throw DomainError("unrecognized field '" + text + "'");
    }
    if (!is_prime(f.prime) || f.prime >= (1ull << 31)) throw DomainError("characteristic " + w + " is not a prime below 2^31");
    return f;
}

struct ModuleSpec {
    enum class Kind { ring, zero, coker };
    std::string id;
    Kind kind = Kind::ring;
    std::vector<std::vector<RawPoly>> rows;
    std::vector<int> row_degrees;  // always filled for coker after parsing
    bool explicit_degrees = false;
    std::size_t line = 0;
    bool operator==(const ModuleSpec& o) const
    {
        return id == o.id && kind == o.kind && rows == o.rows && row_degrees == o.row_degrees;
    }
};

struct MetaSpec {
    std::string id;
    std::optional<bool> equidimensional;
    std::optional<int> serre;
    std::map<std::string, std::string> expected;  // echoed, never used as facts
    std::size_t line = 0;
    bool operator==(const MetaSpec& o) const
    {
        return id == o.id && equidimensional == o.equidimensional && serre == o.serre && expected == o.expected;
    }
};

struct CorpusFile {
    std::string name;  // file stem
    std::optional<FieldSpec> field;
    std::optional<TermOrder> order;
    std::vector<std::string> vars;
    std::vector<RawPoly> ideal;
    std::size_t ideal_line = 0;
    std::vector<ModuleSpec> modules;
    std::vector<MetaSpec> metas;

    bool operator==(const CorpusFile& o) const
    {
        return field == o.field && order == o.order && vars == o.vars && ideal == o.ideal && modules == o.modules &&
               metas == o.metas;
    }

    const MetaSpec* meta_for(const std::string& id) const
    {
        for (const auto& m : metas)
            if (m.id == id) return &m;
        return nullptr;
    }
};

namespace parse_detail {

class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t offset, std::size_t line, const std::vector<std::string>& vars)
        : s_(text), line_(line), offset_(offset), vars_(vars)
    {}

    RawPoly parse_all()
    {
        RawPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + i_ + 1); }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    RawPoly constant(const mpq_class& c) const
    {
        RawPoly p;
        if (c != 0) p.terms[std::vector<int>(vars_.size(), 0)] = c;
        return p;
    }

    RawPoly expr()
    {
        RawPoly acc;
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc.add(term(), neg ? -1 : 1);
        for (;;) {
            if (eat('+')) acc.add(term());
            else if (eat('-')) acc.add(term(), -1);
            else break;
        }
        return acc;
    }

    RawPoly term()
    {
        RawPoly acc = power();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc.mul(power());
            } else if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')) {
                acc = acc.mul(power());  // juxtaposition: 3x, x y
            } else {
                break;
            }
        }
        return acc;
    }

    RawPoly power()
    {
        RawPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected exponent");
            const int e = std::stoi(s_.substr(start, i_ - start));
            RawPoly r = constant(1);
            for (int k = 0; k < e; ++k) r = r.mul(base);
            return r;
        }
        return base;
    }

    RawPoly atom()
    {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of polynomial");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            RawPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            mpz_class num(s_.substr(start, i_ - start));
            mpz_class den = 1;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                std::size_t d0 = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                if (d0 == i_) fail("expected denominator");
                den = mpz_class(s_.substr(d0, i_ - d0));
                if (den == 0) fail("zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            return constant(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            const std::string name = s_.substr(start, i_ - start);
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                i_ = start;
                fail("unknown variable '" + name + "'");
            }
            RawPoly p;
            std::vector<int> e(vars_.size(), 0);
            e[static_cast<std::size_t>(it - vars_.begin())] = 1;
            p.terms[e] = 1;
            return p;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::size_t line_;
    std::size_t offset_;
    const std::vector<std::string>& vars_;
};

/// Splits on a separator outside parentheses, keeping offsets.
inline std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, std::size_t offset, char sep)
{
    std::vector<std::pair<std::string, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            out.push_back({s.substr(start, i - start), offset + start});
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return out;
}

inline bool blank(const std::string& s)
{
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

/// Row degrees d_i and column degrees e_j with deg a_ij = e_j - d_i on nonzero entries.
inline std::vector<int> infer_row_degrees(const std::vector<std::vector<RawPoly>>& rows, std::size_t line)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    std::vector<std::optional<int>> rd(r), cd(c);
    for (std::size_t seed = 0; seed < r; ++seed) {
        if (rd[seed]) continue;
        rd[seed] = 0;
        std::vector<std::pair<bool, std::size_t>> stack{{true, seed}};
        std::vector<std::size_t> component_rows{seed};
        while (!stack.empty()) {
            auto [is_row, idx] = stack.back();
            stack.pop_back();
            if (is_row) {
                for (std::size_t j = 0; j < c; ++j) {
                    const auto& p = rows[idx][j];
                    if (p.is_zero()) continue;
                    const int e = *rd[idx] + *p.degree();
                    if (!cd[j]) {
                        cd[j] = e;
                        stack.push_back({false, j});
                    } else if (*cd[j] != e) {
                        throw ParseError("inhomogeneous presentation matrix (column " + std::to_string(j + 1) + ")", line);
                    }
                }
            } else {
                for (std::size_t i = 0; i < r; ++i) {
                    const auto& p = rows[i][idx];
                    if (p.is_zero()) continue;
                    const int d = *cd[idx] - *p.degree();
                    if (!rd[i]) {
                        rd[i] = d;
                        component_rows.push_back(i);
                        stack.push_back({true, i});
                    } else if (*rd[i] != d) {
                        throw ParseError("inhomogeneous presentation matrix (row " + std::to_string(i + 1) + ")", line);
                    }
                }
            }
        }
        int low = 0;
        bool first = true;
        for (std::size_t i : component_rows) {
            low = first ? *rd[i] : std::min(low, *rd[i]);
            first = false;
        }
        for (std::size_t i : component_rows) rd[i] = *rd[i] - low;
    }
    std::vector<int> out;
    for (auto& d : rd) out.push_back(*d);
    return out;
}

inline bool check_degrees(const std::vector<std::vector<RawPoly>>& rows, const std::vector<int>& rd)
{
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    for (std::size_t j = 0; j < c; ++j) {
        std::optional<int> e;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][j].is_zero()) continue;
            const int k = rd[i] + *rows[i][j].degree();
            if (e && *e != k) return false;
            e = k;
        }
    }
    return true;
}

}  // namespace parse_detail

inline CorpusFile parse_corpus(const std::string& text, const std::string& name = "input")
{
    using namespace parse_detail;
    CorpusFile f;
    f.name = name;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool have_vars = false;
    auto need_vars = [&](std::size_t line) {
        if (!have_vars) throw ParseError("'vars' must come first", line);
    };
    auto parse_poly = [&](const std::string& s, std::size_t off, std::size_t line) {
        PolyParser p(s, off, line, f.vars);
        return p.parse_all();
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream words(line);
        std::string kw;
        if (!(words >> kw)) continue;
        const std::size_t rest_at = line.find(kw) + kw.size();
        const std::string rest = line.substr(rest_at);
        if (kw == "field") {
            try {
                f.field = parse_field_spec(rest);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), lineno);
            }
        } else if (kw == "order") {
            std::string o;
            words >> o;
            if (o == "degrevlex") f.order = TermOrder::degrevlex;
            else if (o == "lex") f.order = TermOrder::lex;
            else throw ParseError("unknown term order '" + o + "'", lineno);
        } else if (kw == "vars") {
            if (have_vars) throw ParseError("'vars' given twice", lineno);
            std::string v;
            while (words >> v) {
                if (std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end()) throw ParseError("duplicate variable '" + v + "'", lineno);
                if (!std::isalpha(static_cast<unsigned char>(v[0]))) throw ParseError("bad variable name '" + v + "'", lineno);
                f.vars.push_back(v);
            }
            if (f.vars.empty()) throw ParseError("no variables", lineno);
            if (f.vars.size() > kMaxVariables) throw ParseError("more than " + std::to_string(kMaxVariables) + " variables", lineno);
            have_vars = true;
        } else if (kw == "ideal") {
            need_vars(lineno);
            if (!f.ideal.empty()) throw ParseError("'ideal' given twice", lineno);
            f.ideal_line = lineno;
            for (const auto& [piece, off] : split_top(rest, rest_at, ',')) {
                RawPoly p = parse_poly(piece, off, lineno);
                if (p.is_zero()) continue;
                if (!p.homogeneous()) throw ParseError("inhomogeneous generator", lineno);
                if (*p.degree() < 2) throw ParseError("ideal generator of degree < 2", lineno);
                f.ideal.push_back(std::move(p));
            }
        } else if (kw == "module") {
            need_vars(lineno);
            ModuleSpec m;
            m.line = lineno;
            std::string kind;
            if (!(words >> m.id >> kind)) throw ParseError("expected 'module <id> ring|zero|coker [...]'", lineno);
            for (const auto& other : f.modules)
                if (other.id == m.id) throw ParseError("duplicate module id '" + m.id + "'", lineno);
            if (kind == "ring") {
                m.kind = ModuleSpec::Kind::ring;
            } else if (kind == "zero") {
                m.kind = ModuleSpec::Kind::zero;
            } else if (kind == "coker") {
                m.kind = ModuleSpec::Kind::coker;
                const auto open = line.find('['), close = line.rfind(']');
                if (open == std::string::npos || close == std::string::npos || close < open)
                    throw ParseError("expected '[ ... ]' after coker", lineno);
                const std::string body = line.substr(open + 1, close - open - 1);
                for (const auto& [row, roff] : split_top(body, open + 1, ';')) {
                    if (blank(row)) continue;
                    std::vector<RawPoly> entries;
                    for (const auto& [piece, off] : split_top(row, roff, ',')) {
                        RawPoly p = parse_poly(piece, off, lineno);
                        if (!p.homogeneous()) throw ParseError("inhomogeneous entry", lineno, off + 1);
                        entries.push_back(std::move(p));
                    }
                    if (!m.rows.empty() && entries.size() != m.rows[0].size()) throw ParseError("rows of different lengths", lineno);
                    m.rows.push_back(std::move(entries));
                }
                if (m.rows.empty()) throw ParseError("empty presentation matrix", lineno);
                std::istringstream tail(line.substr(close + 1));
                std::string word;
                if (tail >> word) {
                    if (word != "degrees") throw ParseError("unexpected '" + word + "' after matrix", lineno);
                    int d;
                    while (tail >> d) m.row_degrees.push_back(d);
                    if (m.row_degrees.size() != m.rows.size()) throw ParseError("one degree per row expected", lineno);
                    if (!check_degrees(m.rows, m.row_degrees)) throw ParseError("inhomogeneous presentation matrix for the given degrees", lineno);
                    m.explicit_degrees = true;
                } else {
                    m.row_degrees = infer_row_degrees(m.rows, lineno);
                }
            } else {
                throw ParseError("unknown module kind '" + kind + "'", lineno);
            }
            f.modules.push_back(std::move(m));
        } else if (kw == "meta") {
            MetaSpec meta;
            meta.line = lineno;
            if (!(words >> meta.id)) throw ParseError("expected 'meta <id> key=value ...'", lineno);
            std::string kv;
            while (words >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value, got '" + kv + "'", lineno);
                const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
                if (key == "equidimensional") {
                    if (value != "true" && value != "false") throw ParseError("equidimensional must be true or false", lineno);
                    meta.equidimensional = value == "true";
                } else if (key == "serre_k") {
                    try {
                        meta.serre = std::stoi(value);
                    } catch (const std::exception&) {
                        throw ParseError("serre_k must be an integer", lineno);
                    }
                } else {
                    meta.expected[key] = value;
                }
            }
            f.metas.push_back(std::move(meta));
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno);
        }
    }
    if (!have_vars) throw ParseError("missing 'vars'", lineno ? lineno : 1);
    for (const auto& meta : f.metas) {
        bool found = false;
        for (const auto& m : f.modules) found = found || m.id == meta.id;
        if (!found) throw ParseError("meta for unknown module '" + meta.id + "'", meta.line);
    }
    return f;
}

inline CorpusFile load_corpus_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": no such file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_corpus(buf.str(), path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + std::string(e.what()).substr(0, std::string(e.what()).find(" at line")),
                         e.line, e.column);
    }
}

/// All .halg files under a file or directory, sorted by path.
inline std::vector<std::filesystem::path> corpus_paths(const std::filesystem::path& p)
{
    namespace fs = std::filesystem;
    if (!fs::exists(p)) throw std::runtime_error(p.string() + ": no such file or directory");
    std::vector<fs::path> out;
    if (fs::is_directory(p)) {
        for (const auto& e : fs::recursive_directory_iterator(p))
            if (e.is_regular_file() && e.path().extension() == ".halg") out.push_back(e.path());
        std::sort(out.begin(), out.end());
    } else {
        out.push_back(p);
    }
    return out;
}

inline std::string render_poly(const RawPoly& p, const std::vector<std::string>& vars)
{
    if (p.is_zero()) return "0";
    std::string s;
    // highest exponent vectors first for stable output
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = abs(c);
        const bool neg = sgn(c) < 0;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) s += a.get_str();
        else if (a == 1) s += mono;
        else s += a.get_str() + "*" + mono;
    }
    return s;
}

inline std::string render_corpus(const CorpusFile& f)
{
    std::string s;
    if (f.field) s += "field " + f.field->to_string() + "\n";
    if (f.order) s += "order " + to_string(*f.order) + "\n";
    s += "vars";
    for (const auto& v : f.vars) s += " " + v;
    s += "\n";
    if (!f.ideal.empty()) {
        s += "ideal ";
        for (std::size_t i = 0; i < f.ideal.size(); ++i) s += (i ? ", " : "") + render_poly(f.ideal[i], f.vars);
        s += "\n";
    }
    for (const auto& m : f.modules) {
        s += "module " + m.id + " ";
        if (m.kind == ModuleSpec::Kind::ring) {
            s += "ring";
        } else if (m.kind == ModuleSpec::Kind::zero) {
            s += "zero";
        } else {
            s += "coker [";
            for (std::size_t i = 0; i < m.rows.size(); ++i) {
                s += i ? "; " : "";
                for (std::size_t j = 0; j < m.rows[i].size(); ++j) s += (j ? ", " : "") + render_poly(m.rows[i][j], f.vars);
            }
            s += "] degrees";
            for (int d : m.row_degrees) s += " " + std::to_string(d);
        }
        s += "\n";
    }
    for (const auto& meta : f.metas) {
        s += "meta " + meta.id;
        if (meta.equidimensional) s += std::string(" equidimensional=") + (*meta.equidimensional ? "true" : "false");
        if (meta.serre) s += " serre_k=" + std::to_string(*meta.serre);
        for (const auto& [k, v] : meta.expected) s += " " + k + "=" + v;
        s += "\n";
    }
    return s;
}

template <class F>
Polynomial<F> to_polynomial(const PolyRing<F>& S, const RawPoly& p, std::size_t line)
{
    std::vector<Term<F>> terms;
    for (const auto& [e, c] : p.terms) {
        if constexpr (std::is_same_v<F, PrimeField>) {
            if (c.get_den() % mpz_class(static_cast<unsigned long>(S.field().characteristic())) == 0)
                throw ParseError("coefficient " + c.get_str() + " has a denominator divisible by the characteristic", line);
        }
        terms.push_back({Monomial(e), S.field().from_ratio(c.get_num(), c.get_den())});
    }
    return S.make(std::move(terms));
}

/// Builds the ring and the modules of a corpus file over the field F.
template <class F>
RingGroup<F> instantiate(const CorpusFile& file, const F& field, TermOrder order)
{
    PolyRing<F> S(field, file.vars, order);
    std::vector<Polynomial<F>> ideal;
    for (const auto& p : file.ideal) {
        auto f = to_polynomial(S, p, file.ideal_line);
        if (!f.is_zero()) ideal.push_back(std::move(f));
    }
    RingPtr<F> R = make_ring(S, ideal);
    RingGroup<F> group{file.name, R, {}};
    for (const auto& m : file.modules) {
        Module<F> M;
        if (m.kind == ModuleSpec::Kind::ring) {
            M = Module<F>::free(R, FreeModule::uniform(1));
        } else if (m.kind == ModuleSpec::Kind::zero) {
            M = Module<F>::zero(R);
        } else {
            FreeModule target(m.row_degrees);
            FreeModule source;
            std::vector<Vector<F>> cols;
            const std::size_t ncols = m.rows[0].size();
            for (std::size_t j = 0; j < ncols; ++j) {
                std::vector<VTerm<F>> terms;
                std::optional<int> deg;
                for (std::size_t i = 0; i < m.rows.size(); ++i) {
                    auto f = to_polynomial(R->S(), m.rows[i][j], m.line);
                    if (f.is_zero()) continue;
                    deg = f.degree() + m.row_degrees[i];
                    for (const auto& t : f.terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
                }
                if (!deg) continue;  // zero relation
                source.degrees.push_back(*deg);
                cols.push_back(make_vector(R->S(), std::move(terms)));
            }
            M = Module<F>::cokernel(R, GradedMatrix<F>(std::move(source), std::move(target), std::move(cols)));
        }
        Subject<F> subj{file.name + "/" + m.id, file.name, M, {}, {}};
        if (const auto* meta = file.meta_for(m.id)) {
            subj.equidimensional = meta->equidimensional;
            subj.serre = meta->serre;
        }
        group.subjects.push_back(std::move(subj));
    }
    return group;
}

}  // namespace halg
