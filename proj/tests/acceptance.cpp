// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are exact throughout; all arithmetic is rational.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "klr/expr.hpp"
#include "klr/graded.hpp"
#include "klr/suites.hpp"

using namespace klr;

namespace {

ContextPtr plain_ctx(std::vector<std::string> labels, std::vector<std::vector<long>> form,
                     const SMap& smap = {})
{
    CartanDatum d = CartanDatum::validate(std::move(labels), std::move(form));
    ScalarParams p = validate_params(d, {}, {}, smap);
    return make_context(std::move(d), std::move(p));
}

ContextPtr extended_ctx(std::vector<std::string> labels, std::vector<std::vector<long>> form)
{
    CartanDatum d = CartanDatum::validate(std::move(labels), std::move(form)).extend();
    ScalarParams p = specialized_params(d, {});
    return make_context(std::move(d), std::move(p));
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string first_failure(const SuiteResult& r)
{
    for (const SuiteCase& c : r.cases)
        if (!c.ok)
            return c.id + (c.witness.empty() ? "" : ": " + c.witness);
    return "";
}

Outcome merge(const std::vector<SuiteResult>& results)
{
    std::size_t cases = 0;
    for (const SuiteResult& r : results) {
        cases += r.cases.size();
        if (!r.all_ok())
            return {false, "first failure: " + first_failure(r)};
    }
    return {true, std::to_string(cases) + " cases"};
}

Outcome criterion_defining()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_defining(plain_ctx({"1"}, {{2}}), 3));
    rs.push_back(run_defining(plain_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 3));
    rs.push_back(run_defining(extended_ctx({"1"}, {{2}}), 3));
    rs.push_back(run_defining(extended_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 3));
    rs.push_back(run_defining(plain_ctx({"1", "2"}, {{2, -2}, {-2, 2}},
                                        {{{0, 1, 1, 1}, Rat(1)}, {{1, 0, 1, 1}, Rat(1)}}),
                              3));
    return merge(rs);
}

Outcome criterion_extended()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_extended(extended_ctx({"1"}, {{2}})));
    rs.push_back(run_extended(extended_ctx({"1", "2"}, {{2, -1}, {-1, 2}})));
    return merge(rs);
}

Outcome criterion_nilhecke()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_nilhecke(plain_ctx({"1"}, {{2}}), 4));
    return merge(rs);
}

Outcome criterion_proposition()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_proposition(extended_ctx({"1"}, {{2}}), 3));
    rs.push_back(run_proposition(extended_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 3));
    return merge(rs);
}

Outcome criterion_dim()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_dim_crosscheck(plain_ctx({"1"}, {{2}}), 3, 8));
    rs.push_back(run_dim_crosscheck(plain_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 3, 8));
    return merge(rs);
}

Outcome criterion_fuzz()
{
    std::vector<SuiteResult> rs;
    rs.push_back(run_assoc(plain_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 100, 20240801, 3));
    rs.push_back(run_assoc(extended_ctx({"1"}, {{2}}), 100, 20240802, 3));
    rs.push_back(run_roundtrip(plain_ctx({"1", "2"}, {{2, -1}, {-1, 2}}), 200, 20240803, 3));
    return merge(rs);
}

Outcome criterion_seq_counts()
{
    // (a) one thick label, one solid: 2 interleavings
    auto e1 = extended_ctx({"1"}, {{2}});
    auto tc_a = make_thick_context(e1, {ThickLabel{{1}}}, {0});
    if (enumerate_seq(tc_a).size() != 2)
        return {false, "expected 2 sequences for lambda=(L1), nu=(1)"};
    // (b) two thick labels, three distinct solids: C(5,2) * 3! = 60
    auto a3 = extended_ctx({"1", "2", "3"},
                           {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    auto tc_b = make_thick_context(
        a3, {ThickLabel{{1, 0, 0}}, ThickLabel{{0, 1, 0}}}, {0, 1, 2});
    if (enumerate_seq(tc_b).size() != 60)
        return {false, "expected 60 sequences for lambda=(L1,L2), nu=(1,2,3), got "
                           + std::to_string(enumerate_seq(tc_b).size())};
    // (c) one thick label, nu = (1,1): 3 distinct sequences
    auto tc_c = make_thick_context(e1, {ThickLabel{{1}}}, {0, 0});
    if (enumerate_seq(tc_c).size() != 3)
        return {false, "expected 3 sequences for lambda=(L1), nu=(1,1)"};
    return {true, "3 fixtures"};
}

Outcome criterion_quotient()
{
    auto ctx = extended_ctx({"1"}, {{2}});
    auto tc = make_thick_context(ctx, {ThickLabel{{2}}}, {0});
    const auto gens = subalgebra_generators(tc);
    const auto chains = enumerate_chains(gens, 4);
    const auto seqs = enumerate_seq(tc);

    std::vector<Element> ideal;
    for (const ThickSeq& s : seqs) {
        ideal.push_back(esym_dot(1, 0, 1, s).ambient);
        ideal.push_back(esym_dot(1, 0, 2, s).ambient);
        if (!s.is_thick(1))
            ideal.push_back(seq_idempotent(s).ambient);
    }

    int pieces = 0;
    for (const ThickSeq& sl : seqs) {
        for (const ThickSeq& sr : seqs) {
            for (long deg = 0; deg <= 6; ++deg) {
                const auto alg = algebra_piece(chains, sr.expanded(), sl.expanded(), deg);
                long prev = -1;
                for (int L = 1; L <= 3; ++L) {
                    const auto idl =
                        ideal_piece(chains, ideal, sr.expanded(), sl.expanded(), deg, L);
                    const long q = quotient_dim(alg, idl);
                    if (L > 1 && q > prev) {
                        std::ostringstream os;
                        os << "quotient grew from " << prev << " to " << q << " at piece "
                           << sl.str() << "<-" << sr.str() << " d=" << deg << " L=" << L;
                        return {false, os.str()};
                    }
                    prev = q;
                }
                ++pieces;
            }
        }
    }
    return {true, std::to_string(pieces) + " pieces, L in {1,2,3}"};
}

} // namespace

int main()
{
    struct Criterion {
        int num;
        const char* title;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, "defining relations (1)-(10), five data, n <= 3, exact", criterion_defining},
        {2, "extended-datum specializations (17)-(18), exact", criterion_extended},
        {3, "nilHecke idempotency e_n^2 = e_n, deg 0, n <= 4", criterion_nilhecke},
        {4, "subalgebra identities (19)-(22), |lambda_k| <= 3, exact", criterion_proposition},
        {5, "graded dimensions match the combinatorial oracle, n <= 3, d <= 8",
         criterion_dim},
        {6, "associativity fuzz (200 triples) and parser round-trip (200)", criterion_fuzz},
        {7, "Seq(lambda,nu) enumeration counts (3 fixtures)", criterion_seq_counts},
        {8, "quotient dimensions non-increasing in the truncation length", criterion_quotient},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out{false, "exception"};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.num << ": " << c.title
                  << " (" << out.detail << ") [" << std::fixed << std::setprecision(1) << secs
                  << "s]" << std::endl;
    }
    return all ? 0 : 1;
}
