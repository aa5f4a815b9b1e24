#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "klr/rational.hpp"

namespace klr {

/*
  A Cartan datum: a finite ordered label set with a symmetric bilinear form
  such that every i.i is a positive even integer and 2(i.j)/(i.i) is a
  non-positive integer for i != j.

  Labels are identified by index.  A datum built by extend() doubles the
  label set: indices 0..N-1 are the solid labels in declaration order and
  N..2N-1 are their barred partners (bar(i) = i + N).  Barredness is a tag
  on the index, never a mangled name.
*/
class CartanDatum {
public:
    // Validates and constructs; `form` is the matrix of i.j values.
    static CartanDatum validate(std::vector<std::string> labels,
                                std::vector<std::vector<long>> form);

    // The doubled datum with ib.ib = i.i, ib.i = i.ib = -(i.i)/2, and all
    // other new pairings zero.  Result passes validate().
    CartanDatum extend() const;

    int num_solid() const { return static_cast<int>(names_.size()); }
    int num_labels() const { return static_cast<int>(form_.size()); }
    bool extended() const { return extended_; }

    bool is_barred(int a) const { return a >= num_solid(); }
    int bar(int a) const; // barred partner (both directions); extended only
    int solid_of(int a) const { return is_barred(a) ? a - num_solid() : a; }

    long dot(int a, int b) const { return form_[idx(a)][idx(b)]; }
    // c(a,b) = 2 (a.b) / (a.a), an entry of the generalized Cartan matrix.
    long c(int a, int b) const { return 2 * dot(a, b) / dot(a, a); }

    // Declared name; barred labels render with a '~' prefix.
    std::string label_name(int a) const;
    // Inverse of label_name; throws UnknownLabel.
    int label_index(const std::string& name) const;

    bool operator==(const CartanDatum& o) const
    {
        return names_ == o.names_ && form_ == o.form_ && extended_ == o.extended_;
    }

private:
    CartanDatum() = default;
    std::size_t idx(int a) const;
    void check_invariants() const;

    std::vector<std::string> names_;            // solid labels, declaration order
    std::vector<std::vector<long>> form_;       // over all labels
    bool extended_ = false;
};

/*
  The scalar parameters: units t(a,b), r(a) and coefficients s^{pq}(a,b).
  Missing t and r entries default to 1, missing s entries to 0; s is only
  supported on (a,b,p,q) with p,q > 0 and p(a.a) + q(b.b) = -2(a.b).
*/
struct ScalarParams {
    std::vector<std::vector<Rat>> t;
    std::vector<Rat> r;
    std::map<std::tuple<int, int, int, int>, Rat> s;

    const Rat& t_of(int a, int b) const { return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    const Rat& r_of(int a) const { return r[static_cast<std::size_t>(a)]; }
    Rat s_of(int a, int b, int p, int q) const
    {
        auto it = s.find({a, b, p, q});
        return it == s.end() ? Rat(0) : it->second;
    }
    // All (p,q) with a nonzero coefficient for the pair (a,b).
    std::vector<std::tuple<int, int, Rat>> s_terms(int a, int b) const;

    bool operator==(const ScalarParams& o) const
    {
        return t == o.t && r == o.r && s == o.s;
    }
};

using TMap = std::map<std::pair<int, int>, Rat>;
using RMap = std::map<int, Rat>;
using SMap = std::map<std::tuple<int, int, int, int>, Rat>;

// Checks the constraints (t(i,i) = 1, symmetry at i.j = 0, s symmetry and
// support) and fills in the defaults.
ScalarParams validate_params(const CartanDatum& datum, const TMap& tmap, const RMap& rmap,
                             const SMap& smap);

// The specialization used over an extended datum: t(ib,i) = -1, t(i,ib) = 1,
// t = 1 whenever the form vanishes, r = 1, s = 0.  `residual_t` may only
// supply t(i,j) for solid i,j with i.j < 0; everything else is forced.
ScalarParams specialized_params(const CartanDatum& extended, const TMap& residual_t);

} // namespace klr
