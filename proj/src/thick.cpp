#include "klr/thick.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace klr {

int ThickLabel::total() const
{
    return std::accumulate(mult.begin(), mult.end(), 0);
}

int ThickContext::ambient_strands() const
{
    int n = static_cast<int>(nu.size());
    for (const ThickLabel& l : lambda)
        n += l.total();
    return n;
}

ThickContextPtr make_thick_context(ContextPtr ambient, std::vector<ThickLabel> lambda,
                                   std::vector<int> nu)
{
    if (!ambient->datum.extended())
        throw error(errc::config_error, "thick context requires an extended datum");
    const int solid = ambient->datum.num_solid();
    for (const ThickLabel& l : lambda) {
        if (static_cast<int>(l.mult.size()) != solid)
            throw error(errc::length_mismatch, "thick label multiplicity vector size");
        for (int m : l.mult)
            if (m < 0)
                throw error(errc::empty_thick_label, "negative multiplicity");
        if (l.total() < 1)
            throw error(errc::empty_thick_label, "thick label must be nonzero");
    }
    for (int a : nu)
        if (a < 0 || a >= solid)
            throw error(errc::unknown_label, "nu entry is not a solid label");
    return std::make_shared<const ThickContext>(
        ThickContext{std::move(ambient), std::move(lambda), std::move(nu)});
}

int ThickSeq::entry_width(int j) const
{
    if (j < 1 || j > size())
        throw error(errc::index_out_of_range, "entry index " + std::to_string(j));
    return is_thick(j) ? ctx->lambda[static_cast<std::size_t>(thick_index(j))].total() : 1;
}

int ThickSeq::offset(int j) const
{
    int off = 0;
    for (int q = 1; q < j; ++q)
        off += entry_width(q);
    return off;
}

Seq ThickSeq::expanded() const
{
    const CartanDatum& d = ctx->ambient->datum;
    Seq out;
    for (int j = 1; j <= size(); ++j) {
        if (!is_thick(j)) {
            out.push_back(solid_label(j));
            continue;
        }
        const ThickLabel& l = ctx->lambda[static_cast<std::size_t>(thick_index(j))];
        for (int c = 0; c < d.num_solid(); ++c)
            for (int rep = 0; rep < l.mult[static_cast<std::size_t>(c)]; ++rep)
                out.push_back(d.bar(c));
    }
    return out;
}

int ThickSeq::thick_position(int k) const
{
    for (int j = 1; j <= size(); ++j)
        if (is_thick(j) && thick_index(j) == k)
            return j;
    throw error(errc::index_out_of_range, "thick label " + std::to_string(k + 1) + " not in sequence");
}

std::string ThickSeq::str() const
{
    std::string out = "(";
    for (int j = 1; j <= size(); ++j) {
        if (j > 1)
            out += ",";
        out += is_thick(j) ? "L" + std::to_string(thick_index(j) + 1)
                           : ctx->ambient->datum.label_name(solid_label(j));
    }
    return out + ")";
}

std::vector<ThickSeq> enumerate_seq(const ThickContextPtr& ctx, bool ordered_nu)
{
    const int m = static_cast<int>(ctx->lambda.size());
    const int ell = static_cast<int>(ctx->nu.size());
    const int total = m + ell;

    std::vector<std::vector<int>> arrangements;
    if (ordered_nu) {
        arrangements.push_back(ctx->nu);
    } else {
        std::vector<int> nu = ctx->nu;
        std::sort(nu.begin(), nu.end());
        do {
            arrangements.push_back(nu);
        } while (std::next_permutation(nu.begin(), nu.end()));
        if (nu.empty())
            arrangements.assign(1, {});
    }

    // choose which slots hold the thick entries
    std::vector<ThickSeq> out;
    std::vector<int> slots(static_cast<std::size_t>(m));
    std::iota(slots.begin(), slots.end(), 0);
    auto emit = [&](const std::vector<int>& thick_slots) {
        for (const auto& arr : arrangements) {
            std::vector<int> entries(static_cast<std::size_t>(total));
            std::size_t at_thick = 0, at_solid = 0;
            for (int pos = 0; pos < total; ++pos) {
                if (at_thick < thick_slots.size()
                    && thick_slots[at_thick] == pos) {
                    entries[static_cast<std::size_t>(pos)] = -static_cast<int>(at_thick) - 1;
                    ++at_thick;
                } else {
                    entries[static_cast<std::size_t>(pos)] = arr[at_solid++];
                }
            }
            out.push_back(ThickSeq{ctx, std::move(entries)});
        }
    };
    // iterate combinations of m slots out of total
    std::vector<int> comb(static_cast<std::size_t>(m));
    std::iota(comb.begin(), comb.end(), 0);
    if (m == 0) {
        emit({});
    } else {
        for (;;) {
            emit(comb);
            int k = m - 1;
            while (k >= 0 && comb[static_cast<std::size_t>(k)] == total - m + k)
                --k;
            if (k < 0)
                break;
            ++comb[static_cast<std::size_t>(k)];
            for (int q = k + 1; q < m; ++q)
                comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ThickElement::operator==(const ThickElement& o) const
{
    return (ctx == o.ctx || (ctx && o.ctx && *ctx == *o.ctx)) && ambient == o.ambient;
}

ThickElement& ThickElement::operator+=(const ThickElement& o)
{
    if (!(ctx == o.ctx || (ctx && o.ctx && *ctx == *o.ctx)))
        throw error(errc::context_mismatch, "adding thick elements over different (lambda,nu)");
    ambient += o.ambient;
    return *this;
}

ThickElement& ThickElement::operator-=(const ThickElement& o)
{
    if (!(ctx == o.ctx || (ctx && o.ctx && *ctx == *o.ctx)))
        throw error(errc::context_mismatch, "subtracting thick elements over different (lambda,nu)");
    ambient -= o.ambient;
    return *this;
}

ThickElement thick_zero(const ThickContextPtr& ctx)
{
    return ThickElement{ctx, Element::zero(ctx->ambient, ctx->ambient_strands())};
}

Element thick_idempotent(const ContextPtr& ambient, const ThickLabel& lam)
{
    if (lam.total() < 1)
        throw error(errc::empty_thick_label, "thick label must be nonzero");
    Element acc = idempotent(ambient, {});
    for (int c = 0; c < ambient->datum.num_solid(); ++c) {
        const int m = lam.mult[static_cast<std::size_t>(c)];
        if (m > 0)
            acc = tensor(acc, nilhecke_en(ambient, m, ambient->datum.bar(c)));
    }
    return acc;
}

ThickElement seq_idempotent(const ThickSeq& s)
{
    Element acc = idempotent(s.ctx->ambient, {});
    for (int j = 1; j <= s.size(); ++j) {
        if (s.is_thick(j))
            acc = tensor(acc, thick_idempotent(s.ctx->ambient,
                                               s.ctx->lambda[static_cast<std::size_t>(s.thick_index(j))]));
        else
            acc = tensor(acc, idempotent(s.ctx->ambient, {s.solid_label(j)}));
    }
    return ThickElement{s.ctx, std::move(acc)};
}

ThickElement y_dot(int j, const ThickSeq& s)
{
    if (j < 1 || j > s.size())
        throw error(errc::index_out_of_range, "y_" + std::to_string(j));
    if (s.is_thick(j))
        return thick_zero(s.ctx);
    const int alpha = s.offset(j) + 1;
    ThickElement e = seq_idempotent(s);
    e.ambient = apply_word({tok_x(alpha)}, e.ambient);
    return e;
}

namespace {

// Sum over d-subsets of vars of the corresponding dot monomials applied to e.
Element esym_times(const std::vector<int>& vars, int d, const Element& e)
{
    Element out = Element::zero(e.context(), e.strands());
    const int n = static_cast<int>(vars.size());
    std::vector<int> comb(static_cast<std::size_t>(d));
    std::iota(comb.begin(), comb.end(), 0);
    if (d == 0)
        return e;
    for (;;) {
        std::vector<Token> toks;
        for (int q : comb)
            toks.push_back(tok_x(vars[static_cast<std::size_t>(q)]));
        out += apply_word(toks, e);
        int k = d - 1;
        while (k >= 0 && comb[static_cast<std::size_t>(k)] == n - d + k)
            --k;
        if (k < 0)
            break;
        ++comb[static_cast<std::size_t>(k)];
        for (int q = k + 1; q < d; ++q)
            comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

std::vector<int> block_vars(const ThickSeq& s, int k, int color)
{
    const ThickLabel& lam = s.ctx->lambda[static_cast<std::size_t>(k - 1)];
    const int pos = s.thick_position(k - 1);
    int start = s.offset(pos);
    for (int c = 0; c < color; ++c)
        start += lam.mult[static_cast<std::size_t>(c)];
    std::vector<int> vars;
    for (int q = 0; q < lam.mult[static_cast<std::size_t>(color)]; ++q)
        vars.push_back(start + q + 1);
    return vars;
}

} // namespace

ThickElement esym_dot(int k, int color, int j, const ThickSeq& s)
{
    if (k < 1 || k > static_cast<int>(s.ctx->lambda.size()))
        throw error(errc::index_out_of_range, "thick label index " + std::to_string(k));
    const CartanDatum& d = s.ctx->ambient->datum;
    if (color < 0 || color >= d.num_solid())
        throw error(errc::unknown_label, "esym color");
    const ThickLabel& lam = s.ctx->lambda[static_cast<std::size_t>(k - 1)];
    if (lam.mult[static_cast<std::size_t>(color)] == 0)
        throw error(errc::color_absent, "lambda_" + std::to_string(k) + " has no "
                                            + d.label_name(color) + " strands");
    if (j < 1 || j > lam.mult[static_cast<std::size_t>(color)])
        throw error(errc::index_out_of_range, "E index " + std::to_string(j));
    ThickElement e = seq_idempotent(s);
    e.ambient = esym_times(block_vars(s, k, color), j, e.ambient);
    return e;
}

bool crossing_defined(int j, const ThickSeq& s)
{
    if (j < 1 || j > s.size() - 1)
        throw error(errc::index_out_of_range, "Psi_" + std::to_string(j));
    return !(s.is_thick(j) && s.is_thick(j + 1));
}

ThickElement thick_crossing(int j, const ThickSeq& s)
{
    if (!crossing_defined(j, s))
        return thick_zero(s.ctx);
    const int off = s.offset(j); // 0-based
    std::vector<Token> word;
    if (!s.is_thick(j) && !s.is_thick(j + 1)) {
        word.push_back(tok_psi(off + 1));
    } else if (s.is_thick(j)) {
        // block at off+1 .. off+B, solid at off+B+1
        const int B = s.entry_width(j);
        for (int q = 0; q < B; ++q)
            word.push_back(tok_psi(off + 1 + q));
    } else {
        // solid at off+1, block at off+2 .. off+B+1
        const int B = s.entry_width(j + 1);
        for (int q = B - 1; q >= 0; --q)
            word.push_back(tok_psi(off + 1 + q));
    }
    ThickElement e = seq_idempotent(s);
    e.ambient = apply_word(word, e.ambient);
    return e;
}

ThickElement thick_mul(const ThickElement& a, const ThickElement& b)
{
    if (!(a.ctx == b.ctx || (a.ctx && b.ctx && *a.ctx == *b.ctx)))
        throw error(errc::context_mismatch, "product of thick elements over different (lambda,nu)");
    return ThickElement{b.ctx, mul(a.ambient, b.ambient)};
}

namespace {

ThickElement esym_or_idem(int k, int color, int j, const ThickSeq& s)
{
    return j == 0 ? seq_idempotent(s) : esym_dot(k, color, j, s);
}

Element dots_applied(const Element& e, int pos, int count)
{
    if (count == 0)
        return e;
    return apply_word(std::vector<Token>(static_cast<std::size_t>(count), tok_x(pos)), e);
}

} // namespace

std::vector<RelationCheck> check_proposition(int eq, const ContextPtr& ambient,
                                             const ThickLabel& lam, int i, int j)
{
    const CartanDatum& d = ambient->datum;
    std::vector<RelationCheck> out;
    auto label = [&](int a) { return d.label_name(a); };
    auto lam_str = [&]() {
        std::string s;
        for (int c = 0; c < d.num_solid(); ++c)
            if (lam.mult[static_cast<std::size_t>(c)] > 0) {
                if (!s.empty())
                    s += "+";
                s += std::to_string(lam.mult[static_cast<std::size_t>(c)]) + "~" + label(c);
            }
        return s;
    };
    auto push = [&](std::string id, const Element& lhs, const Element& rhs) {
        Element res = lhs - rhs;
        out.push_back(RelationCheck{std::move(id), res.is_zero(), std::move(res)});
    };

    if (eq == 19 || eq == 20 || eq == 21) {
        auto tc = make_thick_context(ambient, {lam}, {i});
        const ThickSeq s{tc, {i, -1}};  // (i, lambda)
        const ThickSeq sp{tc, {-1, i}}; // (lambda, i)
        const Element Psi_s = thick_crossing(1, s).ambient;   // e(sp)... psi ... e(s)
        const Element Psi_sp = thick_crossing(1, sp).ambient; // e(s) ... psi ... e(sp)
        const std::string base = "[" + lam_str() + ";" + label(i) + "]";
        if (eq == 19) {
            push("eq19.a" + base, mul(Psi_s, y_dot(1, s).ambient),
                 mul(y_dot(2, sp).ambient, Psi_s));
            push("eq19.b" + base, mul(y_dot(1, s).ambient, Psi_sp),
                 mul(Psi_sp, y_dot(2, sp).ambient));
        } else if (eq == 20) {
            for (int c = 0; c < d.num_solid(); ++c) {
                for (int dd = 1; dd <= lam.mult[static_cast<std::size_t>(c)]; ++dd) {
                    const std::string id = base + "E_" + std::to_string(dd) + "^" + label(c);
                    push("eq20.a" + id, mul(Psi_sp, esym_dot(1, c, dd, sp).ambient),
                         mul(esym_dot(1, c, dd, s).ambient, Psi_sp));
                    push("eq20.b" + id, mul(Psi_s, esym_dot(1, c, dd, s).ambient),
                         mul(esym_dot(1, c, dd, sp).ambient, Psi_s));
                }
            }
        } else {
            const int li = lam.mult[static_cast<std::size_t>(i)];
            const int W = lam.total();
            Element rhs1 = Element::zero(ambient, W + 1);
            Element rhs2 = Element::zero(ambient, W + 1);
            for (int d2 = 0; d2 <= li; ++d2) {
                const int d1 = li - d2;
                const Rat sgn2 = (d2 % 2 == 0) ? Rat(1) : Rat(-1);
                rhs1 += sgn2 * dots_applied(esym_or_idem(1, i, d2, s).ambient, 1, d1);
                const Rat sgn1 = (d1 % 2 == 0) ? Rat(1) : Rat(-1);
                rhs2 += sgn1 * dots_applied(esym_or_idem(1, i, d1, sp).ambient, W + 1, d2);
            }
            push("eq21.first" + base, mul(Psi_sp, Psi_s), rhs1);
            push("eq21.second" + base, mul(Psi_s, Psi_sp), rhs2);
        }
        return out;
    }

    if (eq == 22) {
        auto tc = make_thick_context(ambient, {lam}, {i, j});
        const ThickSeq s0{tc, {i, -1, j}};
        const ThickSeq s1{tc, {-1, i, j}};
        const ThickSeq s2{tc, {-1, j, i}};
        const ThickSeq t1{tc, {i, j, -1}};
        const ThickSeq t2{tc, {j, i, -1}};
        const Element lhsA = mul(thick_crossing(1, s2).ambient,
                                 mul(thick_crossing(2, s1).ambient, thick_crossing(1, s0).ambient));
        const Element lhsB = mul(thick_crossing(2, t2).ambient,
                                 mul(thick_crossing(1, t1).ambient, thick_crossing(2, s0).ambient));
        const int W = lam.total();
        Element rhs = Element::zero(ambient, W + 2);
        if (i == j) {
            const int li = lam.mult[static_cast<std::size_t>(i)];
            for (int a = 0; a <= li - 1; ++a) {
                for (int c = 0; c + a <= li - 1; ++c) {
                    const int b = li - 1 - a - c;
                    const Rat sgn = (c % 2 == 0) ? Rat(1) : Rat(-1);
                    Element term = esym_or_idem(1, i, c, s0).ambient;
                    term = dots_applied(term, 1, a);
                    term = dots_applied(term, W + 2, b);
                    rhs += sgn * term;
                }
            }
        }
        push("eq22[" + lam_str() + ";" + label(i) + "," + label(j) + "]", lhsA - lhsB, rhs);
        return out;
    }

    throw error(errc::index_out_of_range, "no such proposition identity: " + std::to_string(eq));
}

std::vector<SpanGenerator> subalgebra_generators(const ThickContextPtr& ctx, bool ordered_nu)
{
    const CartanDatum& d = ctx->ambient->datum;
    std::vector<SpanGenerator> gens;
    auto add = [&](std::string name, const ThickSeq& bottom, const ThickSeq& top, Element e) {
        if (e.is_zero())
            return;
        const auto deg = degree_of(e);
        gens.push_back(SpanGenerator{std::move(name), std::move(e), bottom.expanded(),
                                     top.expanded(), *deg});
    };
    for (const ThickSeq& s : enumerate_seq(ctx, ordered_nu)) {
        add("e" + s.str(), s, s, seq_idempotent(s).ambient);
        for (int pos = 1; pos <= s.size(); ++pos) {
            if (!s.is_thick(pos))
                add("y" + std::to_string(pos) + s.str(), s, s, y_dot(pos, s).ambient);
        }
        for (int k = 1; k <= static_cast<int>(ctx->lambda.size()); ++k)
            for (int c = 0; c < d.num_solid(); ++c)
                for (int dd = 1; dd <= ctx->lambda[static_cast<std::size_t>(k - 1)]
                                           .mult[static_cast<std::size_t>(c)];
                     ++dd)
                    add("E[" + std::to_string(k) + "," + d.label_name(c) + ","
                            + std::to_string(dd) + "]" + s.str(),
                        s, s, esym_dot(k, c, dd, s).ambient);
        for (int pos = 1; pos + 1 <= s.size(); ++pos) {
            if (!crossing_defined(pos, s))
                continue;
            ThickSeq top = s;
            std::swap(top.entries[static_cast<std::size_t>(pos - 1)],
                      top.entries[static_cast<std::size_t>(pos)]);
            add("Psi" + std::to_string(pos) + s.str(), s, top, thick_crossing(pos, s).ambient);
        }
    }
    return gens;
}

} // namespace klr
