#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "klr/config.hpp"
#include "klr/expr.hpp"
#include "klr/graded.hpp"
#include "klr/suites.hpp"

namespace {

using klr::errc;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_config = 3;

int exit_code_for(const klr::error& e)
{
    switch (e.code()) {
    case errc::syntax_error:
    case errc::unknown_atom:
    case errc::index_out_of_range:
    case errc::length_mismatch:
        return exit_usage;
    case errc::config_error:
        return exit_config;
    default:
        return exit_config;
    }
}

json suite_json(const klr::SuiteResult& res, unsigned seed, bool with_seed)
{
    json cases = json::array();
    for (const klr::SuiteCase& c : res.cases) {
        json jc{{"id", c.id}, {"ok", c.ok}};
        if (!c.witness.empty())
            jc["witness"] = c.witness;
        cases.push_back(std::move(jc));
    }
    json out{{"version", 1},
             {"suite", res.suite},
             {"cases", std::move(cases)},
             {"failures", res.failures()},
             {"pass", res.all_ok()}};
    if (with_seed)
        out["seed"] = seed;
    return out;
}

void print_suite_text(const klr::SuiteResult& res)
{
    for (const klr::SuiteCase& c : res.cases) {
        if (c.ok)
            std::cout << "ok   " << c.id
                      << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
        else
            std::cout << "FAIL " << c.id << "  " << c.witness << "\n";
    }
    std::cout << res.suite << ": " << (res.cases.size() - static_cast<std::size_t>(res.failures()))
              << "/" << res.cases.size() << " cases pass\n";
}

struct QuotientRow {
    std::string left, right;
    long degree;
    long rank, ideal_rank, quotient;
    int truncation_L;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computation in quiver Hecke algebras over arbitrary Cartan data,\n"
                 "their extended data, and the thick-strand subalgebras."};
    app.require_subcommand(1);

    std::string config_path;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file")->required();
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    // normalize
    std::string expr_text;
    CLI::App* cmd_normalize = app.add_subcommand("normalize", "parse, evaluate and print an expression");
    add_common(cmd_normalize);
    cmd_normalize->add_option("--expr", expr_text, "expression text")->required();

    // check
    std::string suite_name;
    int opt_n = 3;
    int opt_max_total = 3;
    int opt_trials = 200;
    unsigned opt_seed = 20240801;
    CLI::App* cmd_check = app.add_subcommand("check", "run a relation suite");
    add_common(cmd_check);
    cmd_check->add_option("--suite", suite_name, "defining|extended|proposition|nilhecke|assoc|roundtrip|dim")
        ->required();
    cmd_check->add_option("--n", opt_n, "strand bound (defining, nilhecke, assoc, dim)");
    cmd_check->add_option("--max-total", opt_max_total, "thick multiplicity bound (proposition)");
    cmd_check->add_option("--trials", opt_trials, "number of random trials (assoc, roundtrip)");
    cmd_check->add_option("--seed", opt_seed, "random seed for fuzz suites");
    long opt_maxdeg = 8;
    cmd_check->add_option("--max-degree", opt_maxdeg, "degree bound (dim)");

    // dim
    std::string left_str, right_str;
    long dim_maxdeg = 8;
    CLI::App* cmd_dim = app.add_subcommand("dim", "graded dimension table: oracle vs engine rank");
    add_common(cmd_dim);
    cmd_dim->add_option("--left", left_str, "bottom sequence, comma-separated labels")->required();
    cmd_dim->add_option("--right", right_str, "top sequence, comma-separated labels")->required();
    cmd_dim->add_option("--max-degree", dim_maxdeg, "largest degree to tabulate");

    // en
    std::string en_label;
    int en_n = 2;
    CLI::App* cmd_en = app.add_subcommand("en", "the nilHecke idempotent e_n and its square");
    add_common(cmd_en);
    cmd_en->add_option("--label", en_label, "strand label")->required();
    cmd_en->add_option("--n", en_n, "number of strands");

    // seq
    bool seq_ordered = false;
    CLI::App* cmd_seq = app.add_subcommand("seq", "enumerate Seq(lambda,nu)");
    add_common(cmd_seq);
    cmd_seq->add_flag("--ordered-nu", seq_ordered, "keep the declared order of nu");

    // quotient
    long q_maxdeg = 6;
    int q_lmax = 3;
    int q_alg_cap = 4;
    bool q_no_esym = false;
    bool q_no_left_solid = false;
    std::vector<std::string> q_extra;
    CLI::App* cmd_quotient = app.add_subcommand("quotient", "graded quotient dimension table");
    add_common(cmd_quotient);
    cmd_quotient->add_option("--max-degree", q_maxdeg, "largest degree to tabulate");
    cmd_quotient->add_option("--L-max", q_lmax, "largest ideal truncation length");
    cmd_quotient->add_option("--alg-cap", q_alg_cap, "word-length cap for the subalgebra span");
    cmd_quotient->add_flag("--no-esym", q_no_esym, "drop the symmetric-function ideal generators");
    cmd_quotient->add_flag("--no-left-solid", q_no_left_solid,
                           "drop the left-solid idempotent ideal generators");
    cmd_quotient->add_option("--extra-gen", q_extra,
                             "additional ideal generator (expression; repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    // KLR_THREADS caps suite parallelism; execution is single-threaded at
    // these scales, which satisfies any cap, but reject nonsense values.
    if (const char* threads = std::getenv("KLR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(threads, &end, 10);
        if (end == threads || v < 1) {
            std::cerr << "ConfigError: KLR_THREADS must be a positive integer\n";
            return exit_config;
        }
    }

    try {
        const klr::LoadedConfig cfg = klr::load_config(config_path);

        if (*cmd_normalize) {
            const klr::EvalContext ectx{cfg.ctx, cfg.thick};
            const klr::EvalResult r = klr::evaluate(klr::parse_expr(expr_text), ectx);
            const std::string printed = klr::print_element(r.value);
            const auto deg = klr::degree_of(r.value);
            if (as_json) {
                json out{{"version", 1}, {"normal_form", printed}};
                if (deg)
                    out["degree"] = *deg;
                else
                    out["degree"] = nullptr;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << printed << "\n";
                if (deg)
                    std::cout << "degree: " << *deg << "\n";
                else
                    std::cout << "degree: inhomogeneous\n";
            }
            return exit_ok;
        }

        if (*cmd_check) {
            klr::SuiteResult res;
            bool seeded = false;
            if (suite_name == "defining") {
                res = klr::run_defining(cfg.ctx, opt_n);
            } else if (suite_name == "extended") {
                res = klr::run_extended(cfg.ctx);
            } else if (suite_name == "proposition") {
                res = klr::run_proposition(cfg.ctx, opt_max_total);
            } else if (suite_name == "nilhecke") {
                res = klr::run_nilhecke(cfg.ctx, opt_n);
            } else if (suite_name == "assoc") {
                res = klr::run_assoc(cfg.ctx, opt_trials, opt_seed, std::min(opt_n, 3));
                seeded = true;
            } else if (suite_name == "roundtrip") {
                res = klr::run_roundtrip(cfg.ctx, opt_trials, opt_seed, std::min(opt_n, 3));
                seeded = true;
            } else if (suite_name == "dim") {
                res = klr::run_dim_crosscheck(cfg.ctx, opt_n, opt_maxdeg);
            } else {
                std::cerr << "SyntaxError: unknown suite '" << suite_name << "'\n";
                return exit_usage;
            }
            if (as_json)
                std::cout << suite_json(res, opt_seed, seeded).dump() << "\n";
            else
                print_suite_text(res);
            return res.all_ok() ? exit_ok : exit_check_failed;
        }

        auto parse_seq = [&](const std::string& text) {
            klr::Seq out;
            std::size_t at = 0;
            while (at <= text.size()) {
                const std::size_t comma = text.find(',', at);
                const std::string piece =
                    text.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
                if (!piece.empty())
                    out.push_back(cfg.ctx->datum.label_index(piece));
                if (comma == std::string::npos)
                    break;
                at = comma + 1;
            }
            return out;
        };

        if (*cmd_dim) {
            const klr::Seq left = parse_seq(left_str);
            const klr::Seq right = parse_seq(right_str);
            if (left.size() != right.size())
                throw klr::error(errc::length_mismatch, "boundary lengths differ");
            json rows = json::array();
            bool agree = true;
            for (long deg = 0; deg <= dim_maxdeg; ++deg) {
                const long oracle = klr::dim_oracle(cfg.ctx->datum, left, right, deg);
                std::vector<klr::Element> span;
                for (const klr::BasisDiagram& dg :
                     klr::enumerate_piece(cfg.ctx->datum, left, right, deg)) {
                    klr::Element e = klr::Element::zero(cfg.ctx, static_cast<int>(left.size()));
                    e.add(dg, klr::Rat(1));
                    span.push_back(std::move(e));
                }
                const int rank = klr::rank_of_elements(span);
                agree = agree && rank == oracle;
                if (as_json)
                    rows.push_back(json{{"degree", deg}, {"oracle", oracle}, {"rank", rank}});
                else
                    std::cout << "d=" << deg << "  oracle=" << oracle << "  rank=" << rank
                              << (rank == oracle ? "" : "  MISMATCH") << "\n";
            }
            if (as_json)
                std::cout << json{{"version", 1}, {"rows", rows}, {"pass", agree}}.dump() << "\n";
            return agree ? exit_ok : exit_check_failed;
        }

        if (*cmd_en) {
            const int label = cfg.ctx->datum.label_index(en_label);
            const klr::Element en = klr::nilhecke_en(cfg.ctx, en_n, label);
            const klr::Element sq = klr::mul(en, en);
            const auto deg = klr::degree_of(en);
            const bool idem = sq == en;
            if (as_json) {
                json out{{"version", 1},
                         {"e_n", klr::print_element(en)},
                         {"degree", deg ? json(*deg) : json(nullptr)},
                         {"idempotent", idem}};
                if (!idem)
                    out["square"] = klr::print_element(sq);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << klr::print_element(en) << "\n";
                std::cout << "degree: " << (deg ? std::to_string(*deg) : "inhomogeneous") << "\n";
                if (idem)
                    std::cout << "e_n^2 = e_n\n";
                else
                    std::cout << "e_n^2 = " << klr::print_element(sq) << "\n";
            }
            return exit_ok;
        }

        if (*cmd_seq) {
            if (!cfg.thick)
                throw klr::error(errc::config_error, "seq needs 'lambda' and 'nu' in the config");
            const auto seqs = klr::enumerate_seq(cfg.thick, seq_ordered || cfg.nu_ordered);
            if (as_json) {
                json arr = json::array();
                for (const klr::ThickSeq& s : seqs)
                    arr.push_back(s.str());
                std::cout << json{{"version", 1}, {"count", seqs.size()}, {"sequences", arr}}.dump()
                          << "\n";
            } else {
                for (const klr::ThickSeq& s : seqs)
                    std::cout << s.str() << "\n";
                std::cout << "count: " << seqs.size() << "\n";
            }
            return exit_ok;
        }

        if (*cmd_quotient) {
            if (!cfg.thick)
                throw klr::error(errc::config_error,
                                 "quotient needs 'lambda' and 'nu' in the config");
            const auto gens = klr::subalgebra_generators(cfg.thick, cfg.nu_ordered);
            const auto chains = klr::enumerate_chains(gens, q_alg_cap);
            // Theorem-2 style ideal generators: the symmetric-function dots
            // and the idempotents whose leftmost entry is solid; cyclotomic
            // generators are not guessed and enter via --extra-gen.
            std::vector<klr::Element> ideal;
            const auto seqs = klr::enumerate_seq(cfg.thick, cfg.nu_ordered);
            if (!q_no_esym)
                for (const klr::ThickSeq& s : seqs)
                    for (int k = 1; k <= static_cast<int>(cfg.thick->lambda.size()); ++k)
                        for (int c = 0; c < cfg.ctx->datum.num_solid(); ++c)
                            for (int j = 1; j <= cfg.thick->lambda[static_cast<std::size_t>(k - 1)]
                                                      .mult[static_cast<std::size_t>(c)];
                                 ++j)
                                ideal.push_back(klr::esym_dot(k, c, j, s).ambient);
            if (!q_no_left_solid)
                for (const klr::ThickSeq& s : seqs)
                    if (!s.is_thick(1))
                        ideal.push_back(klr::seq_idempotent(s).ambient);
            for (const std::string& text : q_extra) {
                const klr::EvalContext ectx{cfg.ctx, cfg.thick};
                ideal.push_back(klr::evaluate(klr::parse_expr(text), ectx).value);
            }

            json rows = json::array();
            for (const klr::ThickSeq& sl : seqs) {
                for (const klr::ThickSeq& sr : seqs) {
                    for (long deg = 0; deg <= q_maxdeg; ++deg) {
                        const auto alg =
                            klr::algebra_piece(chains, sr.expanded(), sl.expanded(), deg);
                        if (alg.empty())
                            continue;
                        const long rank = klr::rank_of_elements(alg);
                        // quotient dims are reported per truncation length;
                        // two consecutive agreements count as converged
                        std::vector<long> dims;
                        for (int L = 1; L <= q_lmax; ++L) {
                            const auto idl = klr::ideal_piece(chains, ideal, sr.expanded(),
                                                              sl.expanded(), deg, L);
                            const long ideal_rank = klr::rank_of_elements(idl);
                            const long q = klr::quotient_dim(alg, idl);
                            dims.push_back(q);
                            const std::size_t m = dims.size();
                            const bool converged =
                                m >= 3 && dims[m - 1] == dims[m - 2] && dims[m - 2] == dims[m - 3];
                            if (as_json) {
                                rows.push_back(json{{"piece",
                                                     {{"left", sl.str()},
                                                      {"right", sr.str()},
                                                      {"degree", deg}}},
                                                    {"rank", rank},
                                                    {"ideal_rank", ideal_rank},
                                                    {"quotient", q},
                                                    {"truncation_L", L},
                                                    {"converged", converged}});
                            } else {
                                std::cout << "piece " << sl.str() << " <- " << sr.str()
                                          << " d=" << deg << "  rank=" << rank
                                          << "  ideal=" << ideal_rank << "  quotient=" << q
                                          << "  L=" << L
                                          << (converged ? "  (converged)" : "") << "\n";
                            }
                        }
                    }
                }
            }
            if (as_json)
                std::cout << json{{"version", 1}, {"rows", rows}}.dump() << "\n";
            return exit_ok;
        }
    } catch (const klr::parse_error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const klr::error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_ok;
}
