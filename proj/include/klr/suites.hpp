#pragma once

#include <string>
#include <vector>

#include "klr/thick.hpp"

namespace klr {

struct SuiteCase {
    std::string id;
    bool ok;
    std::string witness; // failure detail, empty when ok
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCase> cases;

    bool all_ok() const;
    int failures() const;
    void sort_cases();
};

// The ten defining relations, machine-checked on every sequence over the
// datum and every applicable index, for 0 <= n <= max_n.  The right-hand
// sides are built from dots on idempotents only, independent of the
// rewriting paths being exercised.
SuiteResult run_defining(const ContextPtr& ctx, int max_n);

// The displayed specializations over an extended datum: mixed double
// crossings with their dot corrections, dashed-dashed squares, and the
// braid identities with right-hand side +e, -e or 0.
SuiteResult run_extended(const ContextPtr& ctx);

// e_n^2 = e_n and deg e_n = 0 for 1 <= n <= max_n, every label with
// r(label) = 1; for other labels the square is tested for proportionality
// and the factor reported.
SuiteResult run_nilhecke(const ContextPtr& ctx, int max_n);

// The subalgebra identities for every thick label with total multiplicity
// <= max_total and all solid color choices.
SuiteResult run_proposition(const ContextPtr& ctx, int max_total);

// (ab)c = a(bc) on seeded random triples.
SuiteResult run_assoc(const ContextPtr& ctx, int trials, unsigned seed, int max_n);

// evaluate(parse(print(e))) = e on seeded random elements.
SuiteResult run_roundtrip(const ContextPtr& ctx, int trials, unsigned seed, int max_n);

// Piece-by-piece cross-check of the engine against the combinatorial
// count: basis words are fixed points of normalization, single-generator
// products stay inside their target piece, and the spanned rank equals
// dim_oracle.
SuiteResult run_dim_crosscheck(const ContextPtr& ctx, int max_n, long max_degree);

// Degree additivity of products on seeded random homogeneous pairs.
SuiteResult run_degree_additivity(const ContextPtr& ctx, int trials, unsigned seed, int max_n);

} // namespace klr
