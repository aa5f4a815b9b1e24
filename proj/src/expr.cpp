#include "klr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace klr {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw parse_error(pos, std::string("'") + c + "'", what);
    }

    std::string word()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
            ++pos;
        return s.substr(start, pos - start);
    }
    // positive integer, digits required
    long uint_lit(const char* what)
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw parse_error(start, "unsigned integer", what);
        return std::stol(s.substr(start, pos - start));
    }
    long int_lit(const char* what)
    {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-')
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '-'))
            throw parse_error(start, "integer", what);
        return std::stol(s.substr(start, pos - start));
    }
    std::string label_tok()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '~')
            ++pos;
        while (pos < s.size()
               && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '~'))
            throw parse_error(start, "label", "expected a label");
        return s.substr(start, pos - start);
    }
    bool digit_next()
    {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool rat_start()
    {
        skip_ws();
        if (pos >= s.size())
            return false;
        if (std::isdigit(static_cast<unsigned char>(s[pos])))
            return true;
        return s[pos] == '-' && pos + 1 < s.size()
               && std::isdigit(static_cast<unsigned char>(s[pos + 1]));
    }
};

ExprAst parse_expr_impl(Lexer& lx);

Atom parse_atom(Lexer& lx)
{
    Atom a;
    a.offset = (lx.skip_ws(), lx.pos);
    if (lx.rat_start()) {
        a.kind = Atom::Kind::Rational;
        long num = lx.int_lit("rational");
        long den = 1;
        if (lx.accept('/'))
            den = lx.uint_lit("rational denominator");
        if (den == 0)
            throw parse_error(a.offset, "nonzero denominator", "division by zero");
        a.value = Rat(num, den);
        a.value.canonicalize();
        return a;
    }
    if (lx.peek() == '(') {
        lx.expect('(', "factor");
        a.kind = Atom::Kind::Paren;
        a.sub = std::make_shared<ExprAst>(parse_expr_impl(lx));
        lx.expect(')', "closing parenthesis");
        return a;
    }
    const std::string w = lx.word();
    if (w == "e") {
        a.kind = Atom::Kind::Idem;
        lx.expect('(', "idempotent argument list");
        if (!lx.accept(')')) {
            a.labels.push_back(lx.label_tok());
            while (lx.accept(','))
                a.labels.push_back(lx.label_tok());
            lx.expect(')', "closing parenthesis");
        }
        return a;
    }
    if (w == "x" || w == "y" || w == "psi" || w == "Psi") {
        if (!lx.digit_next())
            throw parse_error(lx.pos, "index", "generator '" + w + "' needs an index");
        a.index = static_cast<int>(lx.uint_lit("index"));
        a.kind = (w == "x")     ? Atom::Kind::X
                 : (w == "y")   ? Atom::Kind::Y
                 : (w == "psi") ? Atom::Kind::Psi
                                : Atom::Kind::ThickPsi;
        return a;
    }
    if (w == "E") {
        a.kind = Atom::Kind::ESym;
        lx.expect('[', "E[k,color,j]");
        a.esym_k = static_cast<int>(lx.uint_lit("thick index"));
        lx.expect(',', "comma");
        a.esym_color = lx.label_tok();
        lx.expect(',', "comma");
        a.esym_j = static_cast<int>(lx.uint_lit("symmetric-function index"));
        lx.expect(']', "closing bracket");
        return a;
    }
    if (w.empty())
        throw parse_error(a.offset, "atom", "expected an atom");
    throw error(errc::unknown_atom,
                "'" + w + "' at offset " + std::to_string(a.offset));
}

Atom parse_factor(Lexer& lx)
{
    Atom a = parse_atom(lx);
    if (lx.accept('^')) {
        if (a.kind == Atom::Kind::Rational)
            throw parse_error(lx.pos, "factor", "exponent on a coefficient");
        a.power = static_cast<int>(lx.uint_lit("exponent"));
    }
    return a;
}

ExprTerm parse_term(Lexer& lx)
{
    ExprTerm t;
    t.factors.push_back(parse_factor(lx));
    while (lx.accept('*'))
        t.factors.push_back(parse_factor(lx));
    return t;
}

ExprAst parse_expr_impl(Lexer& lx)
{
    ExprAst ast;
    ast.terms.push_back(parse_term(lx));
    for (;;) {
        if (lx.accept('+')) {
            ast.terms.push_back(parse_term(lx));
        } else if (lx.accept('-')) {
            ExprTerm t = parse_term(lx);
            t.sign = -t.sign;
            ast.terms.push_back(std::move(t));
        } else {
            break;
        }
    }
    return ast;
}

} // namespace

ExprAst parse_expr(const std::string& text)
{
    Lexer lx(text);
    ExprAst ast = parse_expr_impl(lx);
    if (!lx.eof())
        throw parse_error(lx.pos, "'+', '-', '*' or end of input", "trailing input");
    return ast;
}

namespace {

// Applying a subalgebra generator to an arbitrary element: sum the
// generator over all sequence idempotents; orthogonality kills the
// non-matching pieces.
Element apply_thick_atom(const Atom& a, const Element& v, const ThickContextPtr& tc)
{
    Element out = Element::zero(tc->ambient, tc->ambient_strands());
    for (const ThickSeq& s : enumerate_seq(tc)) {
        Element g;
        switch (a.kind) {
        case Atom::Kind::Y:
            if (a.index < 1 || a.index > s.size())
                throw error(errc::index_out_of_range, "y_" + std::to_string(a.index));
            g = y_dot(a.index, s).ambient;
            break;
        case Atom::Kind::ThickPsi:
            if (a.index < 1 || a.index > s.size() - 1)
                throw error(errc::index_out_of_range, "Psi_" + std::to_string(a.index));
            g = thick_crossing(a.index, s).ambient;
            break;
        case Atom::Kind::ESym: {
            const int color = tc->ambient->datum.label_index(a.esym_color);
            g = esym_dot(a.esym_k, color, a.esym_j, s).ambient;
            break;
        }
        default:
            break;
        }
        if (!g.is_zero())
            out += mul(g, v);
    }
    return out;
}

Element eval_idem(const Atom& a, const EvalContext& ctx, bool& used_thick)
{
    bool any_thick = false;
    for (const std::string& l : a.labels)
        if (l.size() >= 2 && l[0] == 'L'
            && std::all_of(l.begin() + 1, l.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            any_thick = true;
    if (!any_thick) {
        Seq seq;
        for (const std::string& l : a.labels)
            seq.push_back(ctx.ambient->datum.label_index(l));
        return idempotent(ctx.ambient, seq);
    }
    if (!ctx.thick)
        throw error(errc::unknown_atom, "thick label without a (lambda,nu) context");
    used_thick = true;
    std::vector<int> entries;
    for (const std::string& l : a.labels) {
        if (l.size() >= 2 && l[0] == 'L'
            && std::all_of(l.begin() + 1, l.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int k = std::stoi(l.substr(1));
            if (k < 1 || k > static_cast<int>(ctx.thick->lambda.size()))
                throw error(errc::unknown_label, "no thick label " + l);
            entries.push_back(-k);
        } else {
            entries.push_back(ctx.ambient->datum.label_index(l));
        }
    }
    ThickSeq s{ctx.thick, entries};
    // membership in Seq(lambda, nu): thick entries in order, solids = nu
    std::vector<int> thicks, solids;
    for (int e : entries)
        (e < 0 ? thicks : solids).push_back(e);
    std::vector<int> want_thicks;
    for (int k = 1; k <= static_cast<int>(ctx.thick->lambda.size()); ++k)
        want_thicks.push_back(-k);
    std::vector<int> want_solids = ctx.thick->nu;
    std::vector<int> got_solids = solids;
    std::sort(want_solids.begin(), want_solids.end());
    std::sort(got_solids.begin(), got_solids.end());
    if (thicks != want_thicks || got_solids != want_solids)
        throw error(errc::unknown_label, "sequence is not a member of Seq(lambda,nu)");
    return seq_idempotent(s).ambient;
}

} // namespace

EvalResult evaluate(const ExprAst& ast, const EvalContext& ctx)
{
    EvalResult res;
    bool have = false;
    for (const ExprTerm& term : ast.terms) {
        // evaluate factors right to left; the running value is the product
        // of everything to the right
        Element value;
        bool have_value = false;
        Rat coeff(term.sign);
        for (std::size_t q = term.factors.size(); q-- > 0;) {
            const Atom& a = term.factors[q];
            switch (a.kind) {
            case Atom::Kind::Rational:
                coeff *= a.value;
                break;
            case Atom::Kind::Idem:
            case Atom::Kind::Paren: {
                Element v;
                if (a.kind == Atom::Kind::Idem) {
                    v = eval_idem(a, ctx, res.used_thick);
                } else {
                    EvalResult sub = evaluate(*a.sub, ctx);
                    res.used_thick |= sub.used_thick;
                    v = std::move(sub.value);
                }
                if (a.power > 1) {
                    const Element base = v;
                    for (int rep = 1; rep < a.power; ++rep)
                        v = mul(v, base);
                }
                if (have_value)
                    value = mul(v, value);
                else {
                    value = std::move(v);
                    have_value = true;
                }
                break;
            }
            case Atom::Kind::X:
            case Atom::Kind::Psi: {
                if (!have_value)
                    throw parse_error(a.offset, "idempotent",
                                      "product is not anchored by an idempotent");
                std::vector<Token> toks(static_cast<std::size_t>(a.power),
                                        a.kind == Atom::Kind::X ? tok_x(a.index)
                                                                : tok_psi(a.index));
                value = apply_word(toks, value);
                break;
            }
            case Atom::Kind::Y:
            case Atom::Kind::ThickPsi:
            case Atom::Kind::ESym: {
                if (!ctx.thick)
                    throw error(errc::unknown_atom,
                                "thick generator without a (lambda,nu) context");
                if (!have_value)
                    throw parse_error(a.offset, "idempotent",
                                      "product is not anchored by an idempotent");
                res.used_thick = true;
                for (int rep = 0; rep < a.power; ++rep)
                    value = apply_thick_atom(a, value, ctx.thick);
                break;
            }
            }
        }
        if (!have_value)
            throw error(errc::syntax_error, "term has no idempotent anchor");
        value *= coeff;
        if (!have) {
            res.value = std::move(value);
            have = true;
        } else {
            res.value += value;
        }
    }
    return res;
}

namespace {

std::string term_body(const BasisDiagram& d, const CartanDatum& datum)
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < d.strands(); ++k) {
        const int e = d.exps[static_cast<std::size_t>(k)];
        if (e == 0)
            continue;
        if (!first)
            os << "*";
        os << "x" << (k + 1);
        if (e > 1)
            os << "^" << e;
        first = false;
    }
    for (int m : d.perm.canonical_word()) {
        if (!first)
            os << "*";
        os << "psi" << m;
        first = false;
    }
    if (!first)
        os << "*";
    os << "e(";
    for (int k = 0; k < d.strands(); ++k) {
        if (k > 0)
            os << ",";
        os << datum.label_name(d.bottom[static_cast<std::size_t>(k)]);
    }
    os << ")";
    return os.str();
}

} // namespace

std::string print_element(const Element& e)
{
    if (e.is_zero())
        return "0";
    struct Row {
        long degree;
        int crossings;
        std::vector<int> perm;
        std::vector<int> exps;
        Seq bottom;
        Rat coeff;
        std::string body;
    };
    std::vector<Row> rows;
    for (const auto& [d, c] : e.terms())
        rows.push_back(Row{d.degree(e.context()->datum), d.perm.length(), d.perm.one_line(),
                           d.exps, d.bottom, c, term_body(d, e.context()->datum)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.crossings != b.crossings)
            return a.crossings > b.crossings;
        if (a.perm != b.perm)
            return a.perm < b.perm;
        if (a.exps != b.exps)
            return a.exps < b.exps;
        return a.bottom < b.bottom;
    });
    std::ostringstream os;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Row& r = rows[k];
        if (k == 0) {
            if (r.coeff == 1)
                os << r.body;
            else
                os << rat_str(r.coeff) << "*" << r.body;
        } else {
            const bool neg = r.coeff < 0;
            const Rat a = neg ? Rat(-r.coeff) : r.coeff;
            os << (neg ? " - " : " + ");
            if (a == 1)
                os << r.body;
            else
                os << rat_str(a) << "*" << r.body;
        }
    }
    return os.str();
}

} // namespace klr
