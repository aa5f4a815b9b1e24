#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klr/algebra.hpp"
#include "klr/graded.hpp"

namespace klr {

/*
  The thick-strand subalgebra of the ambient algebra over an extended datum.

  A thick label is a nonzero multiplicity vector over the solid colors; it
  expands to a block of barred strands, one contiguous run per color in
  declaration order, carrying the product of per-color nilHecke idempotents.
  Sequences mix the thick labels (in order) with the solid multiset.

  Thick elements carry their ambient expansion eagerly; equality and
  multiplication are ambient.
*/
struct ThickLabel {
    std::vector<int> mult; // per solid color

    int total() const;
    bool operator==(const ThickLabel& o) const { return mult == o.mult; }
};

struct ThickContext {
    ContextPtr ambient;            // extended datum with its parameters
    std::vector<ThickLabel> lambda;
    std::vector<int> nu;           // solid label indices

    int ambient_strands() const;
    bool operator==(const ThickContext& o) const
    {
        return (ambient == o.ambient || (ambient && o.ambient && *ambient == *o.ambient))
               && lambda == o.lambda && nu == o.nu;
    }
};
using ThickContextPtr = std::shared_ptr<const ThickContext>;

// Validates: ambient datum extended, lambda entries nonzero, nu solid.
ThickContextPtr make_thick_context(ContextPtr ambient, std::vector<ThickLabel> lambda,
                                   std::vector<int> nu);

// One member of Seq(lambda, nu): entry >= 0 is a solid label index, entry
// -(k+1) is the k-th thick label (0-based k).
struct ThickSeq {
    ThickContextPtr ctx;
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool is_thick(int j) const { return entries[static_cast<std::size_t>(j - 1)] < 0; }
    int thick_index(int j) const { return -entries[static_cast<std::size_t>(j - 1)] - 1; }
    int solid_label(int j) const { return entries[static_cast<std::size_t>(j - 1)]; }
    int entry_width(int j) const;
    // 0-based ambient offset of entry j (1-based).
    int offset(int j) const;
    Seq expanded() const;
    // position (1-based entry index) of the k-th thick label, 0-based k.
    int thick_position(int k) const;
    std::string str() const;

    bool operator==(const ThickSeq& o) const { return entries == o.entries; }
    bool operator<(const ThickSeq& o) const { return entries < o.entries; }
};

// All of Seq(lambda, nu).  With ordered_nu the solid entries keep the
// declared order of nu; by default they range over the distinct
// arrangements of the nu multiset.
std::vector<ThickSeq> enumerate_seq(const ThickContextPtr& ctx, bool ordered_nu = false);

struct ThickElement {
    ThickContextPtr ctx;
    Element ambient;

    bool is_zero() const { return ambient.is_zero(); }
    bool operator==(const ThickElement& o) const;

    ThickElement& operator+=(const ThickElement& o);
    ThickElement& operator-=(const ThickElement& o);
    friend ThickElement operator+(ThickElement a, const ThickElement& b) { return a += b; }
    friend ThickElement operator-(ThickElement a, const ThickElement& b) { return a -= b; }
};

ThickElement thick_zero(const ThickContextPtr& ctx);

// Product of per-color nilHecke idempotents on the expanded block.
Element thick_idempotent(const ContextPtr& ambient, const ThickLabel& lam);

// e(i) for a mixed sequence: juxtaposition of solid idempotents and thick
// blocks.
ThickElement seq_idempotent(const ThickSeq& s);

// Dot on the j-th entry: x at the expanded position for a solid entry, the
// zero element for a thick one.
ThickElement y_dot(int j, const ThickSeq& s);

// E_{k,j}^{(color)}: j-th elementary symmetric polynomial of the color block
// of the k-th thick label (k, j 1-based), times the sequence idempotent.
ThickElement esym_dot(int k, int color, int j, const ThickSeq& s);

// False exactly for a thick-thick pair, whose crossing is the zero element.
bool crossing_defined(int j, const ThickSeq& s);

// The crossing of entries j, j+1: a single psi for solid-solid, the
// staircase word across the block otherwise, zero for thick-thick.
ThickElement thick_crossing(int j, const ThickSeq& s);

ThickElement thick_mul(const ThickElement& a, const ThickElement& b);

struct RelationCheck {
    std::string id;
    bool ok;
    Element residual; // lhs - rhs
};

// Machine verification of the displayed subalgebra identities: dot slides
// through mixed crossings (19, 20), the double-crossing expansions (21,
// both identities), and the mixed braid identity (22).  `i` and `j` are
// solid labels; j is only used by 22.
std::vector<RelationCheck> check_proposition(int eq, const ContextPtr& ambient,
                                             const ThickLabel& lam, int i, int j);

// The generating set of the subalgebra as spanning generators (sequence
// idempotents, y dots, symmetric dots, crossings), for truncated word
// enumeration.
std::vector<SpanGenerator> subalgebra_generators(const ThickContextPtr& ctx, bool ordered_nu = false);

} // namespace klr
