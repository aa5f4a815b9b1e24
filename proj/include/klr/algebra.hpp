#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/symgroup.hpp"

namespace klr {

// A sequence of label indices, the boundary datum of a diagram.
using Seq = std::vector<int>;

struct Context {
    CartanDatum datum;
    ScalarParams params;

    bool operator==(const Context& o) const { return datum == o.datum && params == o.params; }
};
using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(CartanDatum d, ScalarParams p)
{
    return std::make_shared<const Context>(Context{std::move(d), std::move(p)});
}

/*
  One normal-form diagram x^a psi_w e(i).

  Reading is bottom to top: e(i) fixes the bottom sequence, the crossing part
  is the product of psi's along canonical_word(w) (so strand p of the bottom
  ends at top position w(p)), and the dot exponents a sit at the TOP
  endpoints; exps[k-1] dots on top position k.  The top sequence is
  act(w, bottom).

  deg = sum_k exps[k] * (top_k . top_k) - sum over crossed pairs p<q of
  bottom_p . bottom_q.
*/
struct BasisDiagram {
    Seq bottom;
    Perm perm;
    std::vector<int> exps;

    int strands() const { return static_cast<int>(bottom.size()); }
    Seq top() const { return perm.act(bottom); }
    long degree(const CartanDatum& d) const;

    bool operator==(const BasisDiagram& o) const
    {
        return bottom == o.bottom && perm == o.perm && exps == o.exps;
    }
    bool operator<(const BasisDiagram& o) const
    {
        if (bottom != o.bottom)
            return bottom < o.bottom;
        if (perm != o.perm)
            return perm < o.perm;
        return exps < o.exps;
    }
};

// A finite sum of basis diagrams with nonzero rational coefficients, all on
// the same strand count over one context.  Immutable value semantics; the
// mutating helpers are builders.
class Element {
public:
    Element() = default;
    static Element zero(ContextPtr ctx, int n);

    const ContextPtr& context() const { return ctx_; }
    int strands() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisDiagram, Rat>& terms() const { return terms_; }

    void add(const BasisDiagram& d, const Rat& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rat& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rat& c, Element a) { return a *= c; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    ContextPtr ctx_;
    int n_ = 0;
    std::map<BasisDiagram, Rat> terms_;
};

// Generator tokens for word input, top to bottom; an implicit e(bottom)
// terminates the word.
struct Token {
    enum class Kind { X, Psi };
    Kind kind;
    int pos; // 1-based strand position (X: 1..n, Psi: 1..n-1)
};

inline Token tok_x(int j) { return {Token::Kind::X, j}; }
inline Token tok_psi(int k) { return {Token::Kind::Psi, k}; }

// e(seq)
Element idempotent(ContextPtr ctx, const Seq& seq);
// x_j e(seq)
Element gen_x(ContextPtr ctx, int j, const Seq& seq);
// psi_k e(seq)
Element gen_psi(ContextPtr ctx, int k, const Seq& seq);

// Rewrites an arbitrary generator word into the normal form.  This is the
// engine: dots are pushed to the top with dot-slide corrections, non-reduced
// crossing words are contracted through the quadratic relation, and reduced
// crossing words are carried to their canonical reduced word by braid and
// commutation moves, accumulating the braid correction terms.
Element normalize_word(ContextPtr ctx, const std::vector<Token>& word, const Seq& bottom);

// normalize(word ++ tokens-of(e)) summed over the terms of e.
Element apply_word(const std::vector<Token>& word, const Element& e);

// Product a * b (a stacked on top of b).
Element mul(const Element& a, const Element& b);

// Juxtaposition of diagrams side by side (a to the left of b).
Element tensor(const Element& a, const Element& b);

// Common degree of all terms; nullopt when inhomogeneous.  The zero element
// reports degree 0.
std::optional<long> degree_of(const Element& e);

// psi_w e(seq): the product of psi's along canonical_word(w); always a
// single basis diagram.
Element psi_w(ContextPtr ctx, const Perm& w, const Seq& seq);

// x_1^{n-1} x_2^{n-2} ... x_{n-1} psi_{w_0} e(i,...,i), the nilHecke
// idempotent candidate; it squares to itself exactly when r(label) = 1.
Element nilhecke_en(ContextPtr ctx, int n, int label);

// Independent combinatorial count of basis diagrams with the given boundary
// sequences and degree: pairs (w, a) with act(w, bottom) = top and
// sum_k a_k (top_k . top_k) - sum over inversions of bottom_p . bottom_q = d.
long dim_oracle(const CartanDatum& datum, const Seq& bottom, const Seq& top, long degree);

// The diagrams counted by dim_oracle, in a deterministic order.
std::vector<BasisDiagram> enumerate_piece(const CartanDatum& datum, const Seq& bottom,
                                          const Seq& top, long degree);

} // namespace klr
