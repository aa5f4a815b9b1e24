#pragma once

#include <string>
#include <vector>

#include "klr/algebra.hpp"

namespace klr {

/*
  Exact linear algebra on one graded piece of the ambient algebra: the span
  of basis diagrams with a fixed boundary pair and degree.  Elements of the
  piece coordinatize against the enumerated diagram list; a term outside the
  list signals an engine bug (OutOfPiece).
*/
class GradedPieceBasis {
public:
    GradedPieceBasis(ContextPtr ctx, Seq bottom, Seq top, long degree);

    const std::vector<BasisDiagram>& diagrams() const { return diagrams_; }
    int dimension() const { return static_cast<int>(diagrams_.size()); }
    const Seq& bottom() const { return bottom_; }
    const Seq& top() const { return top_; }
    long degree() const { return degree_; }
    const ContextPtr& context() const { return ctx_; }

    std::vector<Rat> coordinatize(const Element& e) const;

private:
    ContextPtr ctx_;
    Seq bottom_, top_;
    long degree_;
    std::vector<BasisDiagram> diagrams_;
    std::map<BasisDiagram, std::size_t> index_;
};

// Rank of the row span, by exact fraction elimination.  Consumes its input.
int rank_of(std::vector<std::vector<Rat>> rows);

// Rank of a list of homogeneous elements sharing one graded piece; zero
// elements are ignored.  MixedPieces if boundaries or degrees disagree.
int rank_of_elements(const std::vector<Element>& elems);

// A homogeneous spanning generator with its boundary bookkeeping; the unit
// of truncated word enumeration for subalgebra and ideal pieces.
struct SpanGenerator {
    std::string name;
    Element elem;
    Seq bottom, top;
    long degree = 0;
};

// All nonzero products of exactly 1..max_len composable generators.
struct Chain {
    Element elem;
    Seq bottom, top;
    long degree;
    int length;
};
std::vector<Chain> enumerate_chains(const std::vector<SpanGenerator>& gens, int max_len);

// Spanning set of the (bottom, top, degree) piece of the span of generator
// words of length <= cap.
std::vector<Element> algebra_piece(const std::vector<Chain>& chains, const Seq& bottom,
                                   const Seq& top, long degree);

// Spanning set of the same piece of the two-sided ideal generated by
// `ideal_gens`, truncated to sandwich words u g v of total word length <= L
// (u, v words over the subalgebra generators; g counts as one letter).
// Monotone non-decreasing in L.
std::vector<Element> ideal_piece(const std::vector<Chain>& chains,
                                 const std::vector<Element>& ideal_gens, const Seq& bottom,
                                 const Seq& top, long degree, int L);

// rank(algebra span + ideal span) - rank(ideal span): the dimension of the
// algebra piece modulo the truncated ideal.  With the algebra span held
// fixed this is non-increasing as the ideal span grows.
long quotient_dim(const std::vector<Element>& algebra_span,
                  const std::vector<Element>& ideal_span);

} // namespace klr
