#ifndef RTMLV_CLI_HPP
#define RTMLV_CLI_HPP

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtmlv/laws.hpp"
#include "rtmlv/mlv.hpp"
#include "rtmlv/parse.hpp"
#include "rtmlv/products.hpp"
#include "rtmlv/rtm.hpp"

namespace rtmlv {

namespace clidetail {

using nlohmann::json;

inline json relation_json(int r, const Relation& rel) {
    json terms = json::array();
    for (const auto& [w, c] : rel.output.terms()) {
        MLVIndex ix = word_to_index(w);
        terms.push_back({{"k", ix.k}, {"j", ix.j}, {"coeff", rational_str(c)}});
    }
    return {{"r", r},
            {"forest", to_text(rel.forest)},
            {"input_word", to_text(rel.input)},
            {"relation", terms}};
}

inline json report_json(const LawReport& rep) {
    json fails = json::array();
    for (const LawFailure& f : rep.failures)
        fails.push_back({{"case", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"law", rep.law}, {"cases", rep.cases}, {"failures", fails}, {"ms", rep.ms}};
}

inline json kernel_json(const KernelReport& rep) {
    return {{"sum_re", rep.sum.real()},
            {"sum_im", rep.sum.imag()},
            {"bound", rep.bound},
            {"pass", rep.pass},
            {"N", rep.n}};
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace clidetail

// The whole front end, callable in-process. Returns the exit code:
// 0 success, 1 failed check or law counterexample, 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using clidetail::json;

    CLI::App app{"exact rooted-tree-map calculus over twisted word algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    int r = 1;
    bool as_json = false;
    app.add_option("--r", r, "modulus r of the twist group")->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string forest_text, word_text, index_text, suite_text, mutate_label, variant = "both";
    std::vector<std::string> polys;
    int s_twist = 0;
    int max_forest = -1, max_word = -1;
    long max_terms = 100000;
    double tol = 1e-3;
    std::uint64_t seed = 0;
    bool use_oracle = false, run_check = false;

    auto* cmd_coproduct = app.add_subcommand("coproduct", "coproduct of a forest sum");
    cmd_coproduct->add_option("--forest", forest_text)->required();

    auto* cmd_antipode = app.add_subcommand("antipode", "antipode of a forest sum");
    cmd_antipode->add_option("--forest", forest_text)->required();

    auto* cmd_rtm = app.add_subcommand("rtm-apply", "apply a forest map to a word polynomial");
    cmd_rtm->add_option("--forest", forest_text)->required();
    cmd_rtm->add_option("--word", word_text)->required();

    auto* cmd_fpoly = app.add_subcommand("fpoly", "F-polynomial of a forest sum");
    cmd_fpoly->add_option("--forest", forest_text)->required();

    auto* cmd_gpoly = app.add_subcommand("gpoly", "G-polynomial of a forest sum");
    cmd_gpoly->add_option("--forest", forest_text)->required();

    auto* cmd_harmonic = app.add_subcommand("harmonic", "harmonic product of two polynomials");
    cmd_harmonic->add_option("--poly", polys, "operands (give twice)")->expected(2);

    auto* cmd_diamond =
        app.add_subcommand("diamond", "diamond product; the left operand has modulus 1");
    cmd_diamond->add_option("--s", s_twist, "twist exponent")->capture_default_str();
    cmd_diamond->add_option("--poly", polys, "left then right operand")->expected(2);
    cmd_diamond->add_flag("--oracle", use_oracle, "use the harmonic closed form");

    auto* cmd_relations = app.add_subcommand("relations", "emit kernel relation families");
    cmd_relations->add_option("--max-forest", max_forest, "sweep forest degrees 1..D");
    cmd_relations->add_option("--max-word", max_word, "sweep word weights 1..W");
    cmd_relations->add_option("--variant", variant, "direct | tau-conjugate | both")
        ->capture_default_str();
    cmd_relations->add_flag("--check", run_check, "numerically test every relation");
    cmd_relations->add_option("--max-terms", max_terms)->capture_default_str();
    cmd_relations->add_option("--tol", tol)->capture_default_str();

    auto* cmd_eval = app.add_subcommand("eval", "evaluate one L-value index numerically");
    cmd_eval->add_option("--index", index_text, "k1,..,kl;j1,..,jl")->required();
    cmd_eval->add_option("--max-terms", max_terms)->capture_default_str();
    cmd_eval->add_option("--tol", tol)->capture_default_str();

    auto* cmd_check = app.add_subcommand("check", "test a polynomial against the kernel");
    cmd_check->add_option("--poly", polys, "admissible polynomial")->expected(1);
    cmd_check->add_option("--max-terms", max_terms)->capture_default_str();
    cmd_check->add_option("--tol", tol)->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "run identity suites");
    cmd_verify->add_option("--suite", suite_text, "comma list of law names, or 'all'")
        ->required();
    cmd_verify->add_option("--max-forest", max_forest, "override forest degree cap");
    cmd_verify->add_option("--max-word", max_word, "override word degree cap");
    cmd_verify->add_option("--seed", seed, "override sampling seed");
    cmd_verify->add_option("--mutate", mutate_label,
                           "activate a labelled fault (harness self-test)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_coproduct->parsed()) {
            TensorSum t = coproduct(parse_forest(forest_text));
            if (as_json) {
                json terms = json::array();
                for (const auto& [k, c] : t.terms())
                    terms.push_back({{"left", to_text(k.first)},
                                     {"right", to_text(k.second)},
                                     {"coeff", rational_str(c)}});
                out << json{{"result", terms}}.dump() << "\n";
            } else {
                out << to_text(t) << "\n";
            }
        } else if (cmd_antipode->parsed()) {
            ForestSum s = antipode(parse_forest(forest_text));
            if (as_json)
                out << json{{"result", to_text(s)}}.dump() << "\n";
            else
                out << to_text(s) << "\n";
        } else if (cmd_rtm->parsed()) {
            RtmContext ctx(r);
            NCPoly res = ctx.apply(parse_forest(forest_text), parse_word_poly(word_text, r));
            if (as_json)
                out << json{{"result", to_text(res)}}.dump() << "\n";
            else
                out << to_text(res) << "\n";
        } else if (cmd_fpoly->parsed() || cmd_gpoly->parsed()) {
            RtmContext ctx(1);
            ForestSum f = parse_forest(forest_text);
            NCPoly res = cmd_fpoly->parsed() ? ctx.f_poly(f) : ctx.g_poly(f);
            if (as_json)
                out << json{{"result", to_text(res)}}.dump() << "\n";
            else
                out << to_text(res) << "\n";
        } else if (cmd_harmonic->parsed()) {
            NCPoly res = harmonic(parse_word_poly(polys[0], r), parse_word_poly(polys[1], r));
            if (as_json)
                out << json{{"result", to_text(res)}}.dump() << "\n";
            else
                out << to_text(res) << "\n";
        } else if (cmd_diamond->parsed()) {
            RootIndex s(s_twist, r);
            NCPoly v = parse_word_poly(polys[0], 1);
            NCPoly w = parse_word_poly(polys[1], r);
            NCPoly res = use_oracle ? diamond_oracle(s, v, w) : diamond(s, v, w);
            if (as_json)
                out << json{{"result", to_text(res)}}.dump() << "\n";
            else
                out << to_text(res) << "\n";
        } else if (cmd_relations->parsed()) {
            if (max_forest < 1) max_forest = 1;
            if (max_word < 1) max_word = 2;
            std::vector<RelationVariant> variants;
            if (variant == "direct") {
                variants = {RelationVariant::direct};
            } else if (variant == "tau-conjugate") {
                variants = {RelationVariant::tau_conjugate};
            } else if (variant == "both") {
                variants = {RelationVariant::direct, RelationVariant::tau_conjugate};
            } else {
                err << "unknown variant: " << variant << "\n";
                return 2;
            }
            RtmContext ctx(r);
            EvalOptions opts;
            opts.max_terms = max_terms;
            opts.tolerance = tol;
            bool all_pass = true;
            json arr = json::array();
            for (RelationVariant v : variants)
                for (int d = 1; d <= max_forest; ++d)
                    for (int wt = 1; wt <= max_word; ++wt)
                        for (const Relation& rel : generate_relations(ctx, d, wt, v)) {
                            json obj = clidetail::relation_json(r, rel);
                            obj["variant"] =
                                v == RelationVariant::direct ? "direct" : "tau-conjugate";
                            if (run_check) {
                                KernelReport kr = check_kernel(rel.output, opts);
                                all_pass = all_pass && kr.pass;
                                obj["check"] = clidetail::kernel_json(kr);
                            }
                            if (as_json) {
                                arr.push_back(obj);
                            } else {
                                out << (v == RelationVariant::direct ? "direct" : "tau") << " d="
                                    << d << " " << to_text(rel.forest) << " : "
                                    << to_text(rel.input) << " -> " << to_text(rel.output);
                                if (run_check)
                                    out << (obj["check"]["pass"].get<bool>() ? "  [pass]"
                                                                             : "  [FAIL]");
                                out << "\n";
                            }
                        }
            if (as_json) out << arr.dump() << "\n";
            if (run_check && !all_pass) return 1;
        } else if (cmd_eval->parsed()) {
            EvalOptions opts;
            opts.max_terms = max_terms;
            opts.tolerance = tol;
            EvalResult res = evaluate_L(parse_index(index_text, r), opts);
            if (as_json)
                out << json{{"value_re", res.value.real()},
                            {"value_im", res.value.imag()},
                            {"error", res.error_estimate},
                            {"N", opts.max_terms}}
                           .dump()
                    << "\n";
            else
                out << res.value.real() << (res.value.imag() < 0 ? " - " : " + ")
                    << std::abs(res.value.imag()) << "i  (+/- " << res.error_estimate << ")\n";
        } else if (cmd_check->parsed()) {
            EvalOptions opts;
            opts.max_terms = max_terms;
            opts.tolerance = tol;
            KernelReport rep = check_kernel(parse_word_poly(polys[0], r), opts);
            if (as_json)
                out << clidetail::kernel_json(rep).dump() << "\n";
            else
                out << (rep.pass ? "pass" : "FAIL") << "  |sum| = " << std::abs(rep.sum)
                    << "  bound = " << rep.bound << "  N = " << rep.n << "\n";
            if (!rep.pass) return 1;
        } else if (cmd_verify->parsed()) {
            std::vector<std::string> names = suite_text == "all"
                                                 ? all_law_names()
                                                 : clidetail::split_list(suite_text);
            SweepOverrides over;
            if (app.count("--r")) {
                // --r gives the top of the swept range
                std::vector<int> rs;
                for (int i = 1; i <= r; ++i) rs.push_back(i);
                over.r_values = rs;
            }
            if (max_forest >= 0) over.max_forest = max_forest;
            if (max_word >= 0) over.max_word = max_word;
            if (cmd_verify->count("--seed")) over.seed = seed;
            MutationGuard guard(mutation_from_label(mutate_label));
            bool ok = true;
            json arr = json::array();
            for (const std::string& name : names) {
                LawReport rep = run_law(name, over);
                ok = ok && rep.ok();
                if (as_json) {
                    arr.push_back(clidetail::report_json(rep));
                } else {
                    out << rep.law << ": cases=" << rep.cases
                        << " failures=" << rep.failures.size() << " (" << rep.ms << " ms)\n";
                    for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i) {
                        const LawFailure& f = rep.failures[i];
                        out << "  case " << f.input << "\n    lhs = " << f.lhs
                            << "\n    rhs = " << f.rhs << "\n";
                    }
                }
            }
            if (as_json) out << arr.dump() << "\n";
            if (!ok) return 1;
        }
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const TwistOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownLaw& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownMutation& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rtmlv

#endif
