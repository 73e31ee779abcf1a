// gkwb: exact-arithmetic workbench for the algebra
//   A = k<x,y,z | [x,y] = [y,z] = 1, [x,z] = -x*y - y*z>
// and its family A_n: normal forms, confluence checking, growth tables and
// growth-rate estimates, identity suites, and constructive simplicity
// certificates.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkwb/corpus.hpp"
#include "gkwb/errors.hpp"
#include "gkwb/growth.hpp"
#include "gkwb/operators.hpp"
#include "gkwb/parallel.hpp"
#include "gkwb/parser.hpp"
#include "gkwb/simplicity.hpp"

namespace {

using namespace gkwb;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
}

struct SystemChoice {
    std::string algebra = "A";
    std::string rules_file;  // wins over --algebra when set

    std::optional<Presentation> pres;  // only for algebra selectors
    std::optional<RuleSystem> rules;

    void load() {
        if (!rules_file.empty()) {
            rules = rules_from_text(read_file(rules_file));
        } else {
            pres = Presentation::from_selector(algebra);
            rules = pres->rules();
        }
    }
    const GensPtr& gens() const { return rules->gens(); }
};

int cmd_reduce(SystemChoice& sys, const std::string& expr, const std::string& file,
               unsigned long step_budget) {
    sys.load();
    if (step_budget) sys.rules->set_step_budget(step_budget);
    std::vector<std::string> inputs;
    if (!expr.empty()) inputs.push_back(expr);
    if (!file.empty()) {
        std::istringstream in(read_file(file));
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            inputs.push_back(line);
        }
    }
    if (inputs.empty()) throw UsageError("reduce needs --expr or --file");
    for (const auto& text : inputs) {
        Poly p = parse_expr(text, sys.gens());
        std::cout << normal_form(p, *sys.rules).to_string() << '\n';
    }
    return exit_ok;
}

int cmd_groebner_check(SystemChoice& sys) {
    sys.load();
    auto report = confluence_check(*sys.rules);
    const auto& gens = *sys.gens();
    for (const auto& pr : report.pairs) {
        std::cout << "pair (f" << pr.pair.rule_a + 1 << ", f" << pr.pair.rule_b + 1 << ") "
                  << (pr.pair.kind == CriticalPair::Kind::overlap ? "overlap" : "inclusion")
                  << " at " << word_to_string(pr.pair.overlap_word, gens)
                  << ": s-poly = " << pr.s_poly.to_string()
                  << ", residual = " << pr.residual.to_string() << '\n';
    }
    std::cout << report.pairs.size() << " pair(s), "
              << (report.all_reduce_to_zero ? "all reduce to 0" : "NONZERO residual present")
              << '\n';
    return report.all_reduce_to_zero ? exit_ok : exit_math_failure;
}

int cmd_growth(const std::string& algebra, unsigned long max_n, bool bruteforce,
               const std::string& csv_path, std::optional<unsigned> bruteforce_budget) {
    Presentation pres = Presentation::from_selector(algebra);
    GrowthTable table = growth_table(pres, max_n, bruteforce, bruteforce_budget);
    if (!csv_path.empty()) {
        std::ostringstream out;
        write_growth_csv(out, table, pres);
        write_file(csv_path, out.str());
        std::cout << "wrote " << table.rows.size() << " rows to " << csv_path << '\n';
        return exit_ok;
    }
    std::cout << "n\tdim_counted\tdim_bruteforce\n";
    for (const auto& row : table.rows) {
        std::cout << row.n << '\t' << row.dim_counted.get_str() << '\t';
        if (row.dim_bruteforce)
            std::cout << *row.dim_bruteforce;
        else
            std::cout << '-';
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_gk_estimate(const std::string& algebra, unsigned max_log2, const std::string& method) {
    Presentation pres = Presentation::from_selector(algebra);
    GkMethod m;
    if (method == "doubling_ratio")
        m = GkMethod::doubling_ratio;
    else if (method == "loglog_tail")
        m = GkMethod::loglog_tail;
    else
        throw UsageError("unknown method '" + method + "'");
    auto table = counting_table_pow2(pres, max_log2);
    GkReport report = gk_estimate(table, m);
    std::cout << "algebra " << pres.selector() << ", method " << method << ", n_used "
              << report.n_used << "\nestimate " << report.estimate << " in ["
              << report.interval_lo << ", " << report.interval_hi << "]\n";
    return exit_ok;
}

int cmd_lemma_check(const std::string& algebra, int suite, unsigned max, unsigned max_p,
                    const std::string& out_path) {
    Presentation pres = Presentation::from_selector(algebra);
    IdentityReport report = identity_suite(suite, max, max_p, pres);
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"params", f.params}, {"detail", f.detail}});
    nlohmann::json j{{"lemma", report.suite},
                     {"max", max},
                     {"cases", report.cases},
                     {"failures", std::move(failures)},
                     {"all_pass", report.all_pass()}};
    std::string text = j.dump(2) + "\n";
    if (!out_path.empty())
        write_file(out_path, text);
    else
        std::cout << text;
    return report.all_pass() ? exit_ok : exit_math_failure;
}

void print_outcome(const ReduceOutcome& outcome, bool trace) {
    if (trace) {
        for (const auto& step : outcome.trace.steps) {
            std::cout << "  " << step.tag.token() << " -> " << step.intermediate;
            if (step.kernel_bidegree)
                std::cout << "   [deg_y=" << step.kernel_bidegree->first
                          << ", deg_xz=" << step.kernel_bidegree->second << "]";
            std::cout << '\n';
        }
    }
    std::cout << "steps " << outcome.cert.steps.size() << ", final scalar "
              << outcome.cert.final_scalar.to_string() << '\n';
}

int cmd_simplicity(const std::string& algebra, const std::string& expr, bool with_oracle,
                   unsigned deg_bound, const std::string& cert_path, std::size_t corpus,
                   unsigned corpus_max_deg, std::uint64_t seed, unsigned jobs, bool trace) {
    Presentation pres = Presentation::from_selector(algebra);

    if (corpus > 0) {
        auto elements = make_corpus(pres, corpus, corpus_max_deg, seed);
        std::vector<std::string> errors(elements.size());
        std::vector<char> ok(elements.size(), 0);
        parallel_for(elements.size(), jobs, [&](std::size_t i) {
            try {
                auto outcome = reduce_to_scalar(elements[i], pres);
                std::string mismatch;
                if (!outcome.ok) {
                    errors[i] = outcome.message;
                } else if (!verify_certificate(outcome.cert, pres, &mismatch)) {
                    errors[i] = "verifier rejected: " + mismatch;
                } else if (with_oracle &&
                           !ideal_membership_oracle(elements[i], pres, deg_bound).contains_one) {
                    errors[i] = "oracle did not find 1 in the ideal";
                } else {
                    ok[i] = 1;
                }
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        });
        std::size_t passed = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (ok[i]) {
                ++passed;
            } else {
                std::cout << "FAIL " << elements[i].to_string() << ": " << errors[i] << '\n';
            }
        }
        std::cout << passed << "/" << elements.size() << " corpus elements reduced and verified";
        if (with_oracle) std::cout << " (oracle agreed)";
        std::cout << '\n';
        return passed == elements.size() ? exit_ok : exit_math_failure;
    }

    if (expr.empty()) throw UsageError("simplicity needs --expr or --corpus");
    Poly w = pres.nf(parse_expr(expr, pres.gens()));
    auto outcome = reduce_to_scalar(w, pres);
    if (!outcome.ok) {
        std::cout << "theory violation: " << outcome.message << '\n';
        return exit_math_failure;
    }
    std::string mismatch;
    if (!verify_certificate(outcome.cert, pres, &mismatch)) {
        std::cout << "verifier rejected the certificate: " << mismatch << '\n';
        return exit_math_failure;
    }
    print_outcome(outcome, trace);
    if (with_oracle) {
        auto oracle = ideal_membership_oracle(w, pres, deg_bound);
        std::cout << "oracle (deg bound " << deg_bound
                  << "): " << (oracle.contains_one ? "1 in ideal" : "1 NOT found") << ", rank "
                  << oracle.rank << '\n';
        if (!oracle.contains_one) return exit_math_failure;
    }
    if (!cert_path.empty()) {
        write_file(cert_path, certificate_to_json(outcome.cert).dump(2) + "\n");
        std::cout << "certificate written to " << cert_path << '\n';
    }
    return exit_ok;
}

int cmd_verify_cert(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, true, true);
    if (!j.contains("algebra") || !j["algebra"].is_string())
        throw UsageError("certificate JSON is missing a string 'algebra' field");
    Presentation pres = Presentation::from_selector(j["algebra"].get<std::string>());
    Certificate cert = certificate_from_json(j, pres);
    std::string mismatch;
    if (verify_certificate(cert, pres, &mismatch)) {
        std::cout << "certificate ok: input " << cert.input.to_string() << " reduces to "
                  << cert.final_scalar.to_string() << " in " << cert.steps.size() << " steps\n";
        return exit_ok;
    }
    std::cout << "certificate INVALID: " << mismatch << '\n';
    return exit_math_failure;
}

int cmd_oracle(const std::string& algebra, const std::string& expr, unsigned deg_bound,
               bool show_witness, std::size_t pair_budget) {
    Presentation pres = Presentation::from_selector(algebra);
    Poly w = pres.nf(parse_expr(expr, pres.gens()));
    auto outcome = ideal_membership_oracle(w, pres, deg_bound, pair_budget);
    std::cout << (outcome.contains_one ? "1 in ideal" : "1 NOT found") << " (deg bound "
              << deg_bound << ", " << outcome.rows_inserted << " rows, rank " << outcome.rank
              << ")\n";
    if (outcome.contains_one && show_witness) {
        for (const auto& [a, b, c] : outcome.witness)
            std::cout << "  " << c.to_string() << " * (" << word_to_string(a, *pres.gens())
                      << ") * w * (" << word_to_string(b, *pres.gens()) << ")\n";
    }
    return outcome.contains_one ? exit_ok : exit_math_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact noncommutative-algebra workbench for the A family"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "normal form of an expression");
    SystemChoice reduce_sys;
    std::string reduce_expr, reduce_file;
    unsigned long reduce_budget = 0;
    reduce->add_option("--algebra", reduce_sys.algebra, "A or An:<n>")->capture_default_str();
    reduce->add_option("--rules", reduce_sys.rules_file, "rule file instead of a built-in algebra");
    reduce->add_option("--expr", reduce_expr, "expression to reduce");
    reduce->add_option("--file", reduce_file, "element file, one expression per line");
    reduce->add_option("--step-budget", reduce_budget, "rewrite step cap (default 10^7)");

    // groebner-check
    auto* groebner = app.add_subcommand("groebner-check", "critical pairs and confluence");
    SystemChoice groebner_sys;
    groebner->add_option("--algebra", groebner_sys.algebra, "A or An:<n>")->capture_default_str();
    groebner->add_option("--rules", groebner_sys.rules_file, "rule file to check");

    // growth
    auto* growth = app.add_subcommand("growth", "filtration dimension table");
    std::string growth_algebra = "A", growth_csv;
    unsigned long growth_max_n = 7;
    bool growth_bruteforce = false;
    std::optional<unsigned> growth_budget;
    growth->add_option("--algebra", growth_algebra, "A or An:<n>")->capture_default_str();
    growth->add_option("--max-n", growth_max_n, "largest filtration level")->capture_default_str();
    growth->add_flag("--bruteforce", growth_bruteforce, "verify counts by exact span ranks");
    growth->add_option("--bruteforce-max-n", growth_budget,
                       "raise the brute-force budget (default 7 for A, 4 for An)");
    growth->add_option("--csv", growth_csv, "write CSV to this path");

    // gk-estimate
    auto* gk = app.add_subcommand("gk-estimate", "growth-rate estimate from counted dimensions");
    std::string gk_algebra = "A", gk_method = "doubling_ratio";
    unsigned gk_max_log2 = 21;
    gk->add_option("--algebra", gk_algebra, "A or An:<n>")->capture_default_str();
    gk->add_option("--method", gk_method, "doubling_ratio or loglog_tail")->capture_default_str();
    gk->add_option("--max-log2", gk_max_log2, "counting table up to n = 2^this")
        ->capture_default_str();

    // lemma-check
    auto* lemma = app.add_subcommand("lemma-check", "bounded-exhaustive identity suites");
    std::string lemma_algebra = "A", lemma_out;
    int lemma_suite = 2;
    unsigned lemma_max = 8, lemma_max_p = 2;
    lemma->add_option("--lemma", lemma_suite, "suite number: 2, 4, 5, 6 or 7")->required();
    lemma->add_option("--max", lemma_max, "sweep bound")->capture_default_str();
    lemma->add_option("--max-p", lemma_max_p, "y-degree bound where applicable")
        ->capture_default_str();
    lemma->add_option("--algebra", lemma_algebra, "A or An:<n>")->capture_default_str();
    lemma->add_option("--out", lemma_out, "write the JSON report to this path");

    // simplicity
    auto* simp = app.add_subcommand("simplicity", "reduce elements to nonzero scalars");
    std::string simp_algebra = "A", simp_expr, simp_cert;
    bool simp_oracle = false, simp_trace = false;
    unsigned simp_deg_bound = 4;
    std::size_t simp_corpus = 0;
    unsigned simp_corpus_deg = 3;
    std::uint64_t simp_seed = 20240817;
    unsigned simp_jobs = default_jobs();
    simp->add_option("--algebra", simp_algebra, "A or An:<n>")->capture_default_str();
    simp->add_option("--expr", simp_expr, "element to certify");
    simp->add_flag("--oracle", simp_oracle, "cross-check with the membership oracle");
    simp->add_option("--deg-bound", simp_deg_bound, "oracle context degree bound")
        ->capture_default_str();
    simp->add_option("--emit-cert", simp_cert, "write the certificate JSON to this path");
    simp->add_option("--corpus", simp_corpus, "run a random corpus of this size instead");
    simp->add_option("--max-deg", simp_corpus_deg, "corpus element degree bound")
        ->capture_default_str();
    simp->add_option("--seed", simp_seed, "corpus seed")->capture_default_str();
    simp->add_option("--jobs", simp_jobs, "worker threads (GKWB_JOBS fallback)")
        ->capture_default_str();
    simp->add_flag("--trace", simp_trace, "print the reduction trace");

    // verify-cert
    auto* verify = app.add_subcommand("verify-cert", "replay a certificate JSON file");
    std::string verify_path;
    verify->add_option("cert", verify_path, "certificate file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force ideal membership of 1");
    std::string oracle_algebra = "A", oracle_expr;
    unsigned oracle_bound = 4;
    bool oracle_witness = false;
    std::size_t oracle_budget = 50'000;
    oracle->add_option("--algebra", oracle_algebra, "A or An:<n>")->capture_default_str();
    oracle->add_option("--expr", oracle_expr, "element generating the ideal")->required();
    oracle->add_option("--deg-bound", oracle_bound, "context degree bound")->capture_default_str();
    oracle->add_flag("--witness", oracle_witness, "print an explicit combination");
    oracle->add_option("--budget", oracle_budget, "context pair budget")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*reduce) return cmd_reduce(reduce_sys, reduce_expr, reduce_file, reduce_budget);
        if (*groebner) return cmd_groebner_check(groebner_sys);
        if (*growth)
            return cmd_growth(growth_algebra, growth_max_n, growth_bruteforce, growth_csv,
                              growth_budget);
        if (*gk) return cmd_gk_estimate(gk_algebra, gk_max_log2, gk_method);
        if (*lemma)
            return cmd_lemma_check(lemma_algebra, lemma_suite, lemma_max, lemma_max_p, lemma_out);
        if (*simp)
            return cmd_simplicity(simp_algebra, simp_expr, simp_oracle, simp_deg_bound, simp_cert,
                                  simp_corpus, simp_corpus_deg, simp_seed, simp_jobs, simp_trace);
        if (*verify) return cmd_verify_cert(verify_path);
        if (*oracle)
            return cmd_oracle(oracle_algebra, oracle_expr, oracle_bound, oracle_witness,
                              oracle_budget);
        throw UsageError("no subcommand");
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return exit_budget;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const TheoryViolation& e) {
        std::cerr << "theory violation: " << e.what() << '\n';
        return exit_math_failure;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_math_failure;
    }
}
