#include "klr/graded.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace klr {

GradedPieceBasis::GradedPieceBasis(ContextPtr ctx, Seq bottom, Seq top, long degree)
    : ctx_(std::move(ctx)), bottom_(std::move(bottom)), top_(std::move(top)), degree_(degree)
{
    diagrams_ = enumerate_piece(ctx_->datum, bottom_, top_, degree_);
    for (std::size_t k = 0; k < diagrams_.size(); ++k)
        index_.emplace(diagrams_[k], k);
}

std::vector<Rat> GradedPieceBasis::coordinatize(const Element& e) const
{
    std::vector<Rat> coords(diagrams_.size(), Rat(0));
    for (const auto& [d, c] : e.terms()) {
        auto it = index_.find(d);
        if (it == index_.end())
            throw error(errc::out_of_piece, "term outside the enumerated graded piece");
        coords[it->second] = c;
    }
    return coords;
}

int rank_of(std::vector<std::vector<Rat>> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t k = row; k < rows.size(); ++k) {
            if (rows[k][col] != 0) {
                pivot = k;
                break;
            }
        }
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t k = row + 1; k < rows.size(); ++k) {
            if (rows[k][col] == 0)
                continue;
            const Rat f = rows[k][col] / rows[row][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[k][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int rank_of_elements(const std::vector<Element>& elems)
{
    const Element* first = nullptr;
    for (const Element& e : elems)
        if (!e.is_zero()) {
            first = &e;
            break;
        }
    if (!first)
        return 0;
    const Seq bottom = first->terms().begin()->first.bottom;
    const Seq top = first->terms().begin()->first.top();
    const auto deg = degree_of(*first);
    if (!deg)
        throw error(errc::mixed_pieces, "rank input is not homogeneous");
    GradedPieceBasis basis(first->context(), bottom, top, *deg);
    std::vector<std::vector<Rat>> rows;
    for (const Element& e : elems) {
        if (e.is_zero())
            continue;
        const auto d = degree_of(e);
        if (!d || *d != *deg)
            throw error(errc::mixed_pieces, "rank inputs span several degrees");
        for (const auto& [dg, c] : e.terms())
            if (dg.bottom != bottom || dg.top() != top)
                throw error(errc::mixed_pieces, "rank inputs span several boundary pairs");
        rows.push_back(basis.coordinatize(e));
    }
    return rank_of(std::move(rows));
}

namespace {

// Compact dedup key; coefficients are canonical so the serialization is
// faithful.
std::string element_key(const Element& e)
{
    std::string key;
    for (const auto& [d, c] : e.terms()) {
        for (int a : d.bottom)
            key += std::to_string(a) + ",";
        key += "|";
        for (int a : d.perm.one_line())
            key += std::to_string(a) + ",";
        key += "|";
        for (int a : d.exps)
            key += std::to_string(a) + ",";
        key += "|" + rat_str(c) + ";";
    }
    return key;
}

} // namespace

std::vector<Chain> enumerate_chains(const std::vector<SpanGenerator>& gens, int max_len)
{
    std::vector<Chain> out;
    std::vector<Chain> frontier;
    std::set<std::string> seen;
    auto push = [&](Chain ch, std::vector<Chain>& into) {
        if (ch.elem.is_zero())
            return;
        // products that coincide as elements span nothing new, and neither
        // do their extensions
        if (!seen.insert(element_key(ch.elem)).second)
            return;
        into.push_back(std::move(ch));
    };
    for (const SpanGenerator& g : gens)
        push({g.elem, g.bottom, g.top, g.degree, 1}, frontier);
    out = frontier;
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Chain> next;
        for (const Chain& ch : frontier) {
            for (const SpanGenerator& g : gens) {
                if (g.elem.is_zero() || g.bottom != ch.top)
                    continue;
                Element prod = mul(g.elem, ch.elem);
                push({std::move(prod), ch.bottom, g.top, ch.degree + g.degree, len}, next);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::vector<Element> algebra_piece(const std::vector<Chain>& chains, const Seq& bottom,
                                   const Seq& top, long degree)
{
    std::vector<Element> out;
    for (const Chain& ch : chains)
        if (ch.bottom == bottom && ch.top == top && ch.degree == degree)
            out.push_back(ch.elem);
    return out;
}

namespace {

struct Boundary {
    Seq bottom, top;
    long degree;
};

// Terms of our generators all share boundary sequences; mixed ones are a
// usage error.
Boundary boundary_of(const Element& e)
{
    const auto deg = degree_of(e);
    if (e.is_zero() || !deg)
        throw error(errc::mixed_pieces, "ideal generator must be homogeneous and nonzero");
    Boundary b{e.terms().begin()->first.bottom, e.terms().begin()->first.top(), *deg};
    for (const auto& [d, c] : e.terms())
        if (d.bottom != b.bottom || d.top() != b.top)
            throw error(errc::mixed_pieces, "ideal generator has mixed boundaries");
    return b;
}

} // namespace

std::vector<Element> ideal_piece(const std::vector<Chain>& chains,
                                 const std::vector<Element>& ideal_gens, const Seq& bottom,
                                 const Seq& top, long degree, int L)
{
    std::vector<Element> out;
    std::set<std::string> seen;
    auto emit = [&](Element e) {
        if (!e.is_zero() && seen.insert(element_key(e)).second)
            out.push_back(std::move(e));
    };
    for (const Element& g : ideal_gens) {
        if (g.is_zero())
            continue;
        const Boundary bg = boundary_of(g);
        // candidate left and right factors, bucketed by boundary; an empty
        // slot stands for the absent factor
        std::vector<const Chain*> us{nullptr};
        std::vector<const Chain*> vs{nullptr};
        for (const Chain& u : chains)
            if (u.length + 1 <= L && u.bottom == bg.top && u.top == top)
                us.push_back(&u);
        for (const Chain& v : chains)
            if (v.length + 1 <= L && v.top == bg.bottom && v.bottom == bottom)
                vs.push_back(&v);
        for (const Chain* u : us) {
            if (u && (u->top != top))
                continue;
            if (!u && bg.top != top)
                continue;
            for (const Chain* v : vs) {
                if (!v && bg.bottom != bottom)
                    continue;
                const int len = 1 + (u ? u->length : 0) + (v ? v->length : 0);
                if (len > L)
                    continue;
                const long deg =
                    bg.degree + (u ? u->degree : 0) + (v ? v->degree : 0);
                if (deg != degree)
                    continue;
                Element w = v ? mul(g, v->elem) : g;
                if (u)
                    w = mul(u->elem, w);
                emit(std::move(w));
            }
        }
    }
    return out;
}

long quotient_dim(const std::vector<Element>& algebra_span,
                  const std::vector<Element>& ideal_span)
{
    std::vector<Element> both = algebra_span;
    both.insert(both.end(), ideal_span.begin(), ideal_span.end());
    return rank_of_elements(both) - rank_of_elements(ideal_span);
}

} // namespace klr
