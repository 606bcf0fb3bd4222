// rthopf -- exact-arithmetic workbench for the Hopf algebra of rooted trees.
//
// Subcommands: count, list, eval, report, check.  All output is
// deterministic for fixed inputs.  Exit codes: 0 ok, 1 usage or parse
// error, 2 witness or mismatch found, 3 resource bound exceeded.

#include "rthopf/checks.hpp"
#include "rthopf/drinfeld.hpp"
#include "rthopf/enumeration.hpp"
#include "rthopf/errors.hpp"
#include "rthopf/expr.hpp"
#include "rthopf/pairing.hpp"
#include "rthopf/structure.hpp"
#include "rthopf/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using json = nlohmann::ordered_json;
using namespace rthopf;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitWitness = 2;
constexpr int kExitBound = 3;

constexpr int kHardDegreeCap = 12;

// desk-scale caps; past these the answer is exit code 3, not a long wait
constexpr int kCountCap = 64;
constexpr int kListCap = 14;
constexpr int kReportDegreeCap = 8;
constexpr int kPairingCap = 5;
constexpr int kDoubleLevelCap = 4;

void require_desk_scale(long value, long cap, const char* what) {
    if (value > cap) {
        throw BoundError(std::string(what) + " exceeds the desk-scale cap of " +
                         std::to_string(cap));
    }
}

json helem_json(const HElem& x) {
    json terms = json::array();
    for (const auto& [f, c] : x.terms()) {
        terms.push_back(json{{"coeff", c.str()}, {"forest", f.str()}});
    }
    return terms;
}

json tensor_json(const TensorElem& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms()) {
        terms.push_back(json{{"coeff", c.str()}, {"left", k.first.str()}, {"right", k.second.str()}});
    }
    return terms;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CountOptions {
    int nmax = 10;
    int r = 0;
    bool has_r = false;
    std::string mode = "corrected";
    bool mode_explicit = false;
    bool verify = false;
    bool inject_fault = false;
    std::string format = "text";
};

int run_count(const CountOptions& opt) {
    require_desk_scale(opt.nmax, kCountCap, "count --nmax");
    const BranchMode mode =
        opt.mode == "paper-literal" ? BranchMode::paper_literal : BranchMode::corrected;
    const std::optional<int> r = opt.has_r ? std::optional<int>(opt.r) : std::nullopt;

    struct Row {
        int n;
        BigCount value;
        std::optional<BigCount> oracle;
        bool match = true;
        bool diverges = false; // paper-literal vs corrected
    };
    std::vector<Row> rows;
    std::optional<std::pair<int, std::pair<BigCount, BigCount>>> first_divergence;
    for (int n = 1; n <= opt.nmax; ++n) {
        Row row;
        row.n = n;
        row.value = r ? count_branch_trees(*r, n, mode) : count_trees(n);
        if (opt.inject_fault && n == opt.nmax) row.value += 1;
        if (r && mode == BranchMode::paper_literal) {
            const BigCount corrected = count_branch_trees(*r, n, BranchMode::corrected);
            row.diverges = row.value != corrected;
            if (row.diverges && !first_divergence)
                first_divergence = {n, {row.value, corrected}};
        }
        if (opt.verify) {
            row.oracle = r ? oracle_count_branch(*r, n) : oracle_count(n);
            row.match = row.value == *row.oracle;
        }
        rows.push_back(std::move(row));
    }

    bool mismatch = false;
    for (const Row& row : rows) mismatch = mismatch || !row.match;

    if (opt.format == "json") {
        json out = json::array();
        for (const Row& row : rows) {
            json j{{"n", row.n}};
            if (r) {
                j["r"] = *r;
                j["mode"] = opt.mode;
            }
            j["a"] = row.value.get_str();
            if (r && mode == BranchMode::paper_literal) j["diverges"] = row.diverges;
            if (opt.verify) {
                j["oracle"] = row.oracle->get_str();
                j["match"] = row.match;
            }
            out.push_back(std::move(j));
        }
        emit(out);
    } else {
        if (r && !opt.mode_explicit) std::cout << "# mode: corrected (default)\n";
        std::cout << (r ? "n r mode a_r(n)" : "n a(n)");
        if (opt.verify) std::cout << " oracle match";
        std::cout << "\n";
        for (const Row& row : rows) {
            std::cout << row.n;
            if (r) std::cout << " " << *r << " " << opt.mode;
            std::cout << " " << row.value.get_str();
            if (row.diverges) std::cout << " *";
            if (opt.verify) std::cout << " " << row.oracle->get_str() << " "
                                      << (row.match ? "ok" : "MISMATCH");
            std::cout << "\n";
        }
        if (first_divergence) {
            std::cout << "# * diverges from corrected mode; first divergence at (r=" << *r
                      << ", n=" << first_divergence->first
                      << "): paper-literal " << first_divergence->second.first.get_str()
                      << " vs corrected " << first_divergence->second.second.get_str() << "\n";
        }
    }
    return mismatch ? kExitWitness : kExitOk;
}

int run_list(int n, const std::string& format) {
    require_desk_scale(n, kListCap, "list --n");
    const auto& trees = generate_trees(n);
    if (format == "dot") {
        for (std::size_t i = 0; i < trees.size(); ++i) {
            std::cout << to_dot(trees[i], "t" + std::to_string(i));
        }
    } else if (format == "json") {
        json out = json::array();
        for (const Tree& t : trees) out.push_back(t.str());
        emit(out);
    } else {
        for (const Tree& t : trees) std::cout << t.str() << "\n";
    }
    return kExitOk;
}

int run_eval(const std::string& text, const std::string& format, int bound) {
    const ExprPtr e = parse_expr(text);
    const EvalValue v = eval_expr(*e, bound);
    if (format == "json") {
        if (std::holds_alternative<HElem>(v)) emit(helem_json(std::get<HElem>(v)));
        else emit(tensor_json(std::get<TensorElem>(v)));
    } else {
        std::cout << render(v) << "\n";
    }
    return kExitOk;
}

// ---- report ----

json defect_rows_json(const std::vector<DefectRow>& rows) {
    json out = json::array();
    for (const DefectRow& row : rows) {
        out.push_back(json{{"degree", row.degree},
                           {"dim_total", row.dim_total},
                           {"dim_generated", row.dim_generated},
                           {"defect", row.defect}});
    }
    return out;
}

int report_primitives(int nmax, Variant variant) {
    require_desk_scale(nmax, kReportDegreeCap, "report --nmax");
    json rows = json::array();
    for (int n = 1; n <= nmax; ++n) {
        const GradedBasis b = primitive_basis(n, variant);
        json basis = json::array();
        for (const HElem& p : b.elems) basis.push_back(to_string(p));
        rows.push_back(json{{"degree", n},
                            {"dim", static_cast<int>(b.elems.size())},
                            {"basis", std::move(basis)}});
    }
    json out{{"report", "primitives"},
             {"variant", variant == Variant::full ? "full" : "ladder"},
             {"rows", std::move(rows)}};
    if (variant == Variant::full) {
        // grafting words in the primitives, both nesting conventions
        json words = json::array();
        for (int n = 1; n <= nmax; ++n) {
            const GradedBasis right = top_monomial_basis(n, Nesting::right);
            const GradedBasis left = top_monomial_basis(n, Nesting::left);
            words.push_back(json{{"degree", n},
                                 {"words", static_cast<int>(right.elems.size())},
                                 {"right_nested_basis", right.is_basis},
                                 {"left_nested_basis", left.is_basis}});
        }
        out["word_bases"] = std::move(words);
    }
    emit(out);
    return kExitOk;
}

int report_generated(int nmax, Variant variant) {
    require_desk_scale(nmax, kReportDegreeCap, "report --nmax");
    emit(json{{"report", "generated-by-primitives"},
              {"variant", variant == Variant::full ? "full" : "ladder"},
              {"rows", defect_rows_json(primitively_generated_report(variant, nmax))}});
    return kExitOk;
}

int report_integrals(int nmax) {
    require_desk_scale(nmax, kReportDegreeCap, "report --nmax");
    json rows = json::array();
    bool all = true;
    for (int n = 0; n <= nmax; ++n) {
        const bool inj = integral_injectivity(n);
        all = all && inj;
        rows.push_back(json{{"degree", n}, {"injective", inj}});
    }
    emit(json{{"report", "integrals"},
              {"nmax", nmax},
              {"status", all ? "all-injective" : "witness"},
              {"rows", std::move(rows)}});
    return all ? kExitOk : kExitWitness;
}

int report_pairing(int bound) {
    require_desk_scale(bound, kPairingCap, "report --pairing-bound");
    bool witness_found = false;
    json out{{"report", "pairing"}, {"bound", bound}};

    const PsiMultResult pm = check_psi_multiplicative(bound);
    if (pm.pass) {
        out["psi_multiplicative"] = json{{"status", "pass"}};
    } else {
        witness_found = true;
        out["psi_multiplicative"] =
            json{{"status", "witness"},
                 {"w1", pm.witness->w1.str()},
                 {"w2", pm.witness->w2.str()},
                 {"h", pm.witness->h.str()},
                 {"lhs", pm.witness->lhs.str()},
                 {"rhs", pm.witness->rhs.str()}};
    }

    if (const auto phi = witness_phi_not_algebraic(bound)) {
        witness_found = true;
        out["phi_algebraic"] = json{{"status", "witness"}, {"x", phi->x.str()},
                                    {"y", phi->y.str()},  {"w", phi->w.str()},
                                    {"lhs", phi->lhs.str()}, {"rhs", phi->rhs.str()}};
    } else {
        out["phi_algebraic"] = json{{"status", "no-witness"}};
    }

    if (const auto psc = witness_psi_not_coalgebraic(bound)) {
        witness_found = true;
        out["psi_coalgebraic"] = json{{"status", "witness"},  {"w", psc->w.str()},
                                      {"h1", psc->h1.str()},  {"h2", psc->h2.str()},
                                      {"lhs", psc->lhs.str()}, {"rhs", psc->rhs.str()}};
    } else {
        out["psi_coalgebraic"] = json{{"status", "no-witness"}};
    }

    const GlPairingResult gl = check_gl_matches_pairing(bound);
    if (gl.pass) {
        out["gl_pairing"] = json{{"status", "pass"}};
    } else {
        witness_found = true;
        out["gl_pairing"] = json{{"status", "witness"},    {"f", gl.witness->f.str()},
                                 {"g", gl.witness->g.str()}, {"h", gl.witness->h.str()},
                                 {"lhs", gl.witness->lhs.str()}, {"rhs", gl.witness->rhs.str()}};
    }

    json ranks = json::array();
    for (int n = 1; n <= bound; ++n) {
        std::vector<QVector> imgs;
        for (const ZWord& w : all_words(n)) imgs.push_back(psi(w, bound).coords(n));
        QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(forest_basis(n).size()),
                                  static_cast<Eigen::Index>(imgs.size()));
        for (std::size_t j = 0; j < imgs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = imgs[j];
        ranks.push_back(json{{"degree", n},
                             {"rank", static_cast<int>(rank(m))},
                             {"dim", static_cast<int>(forest_basis(n).size())}});
    }
    out["psi_rank"] = std::move(ranks);

    json dd = json::array();
    for (int n = 0; n <= bound; ++n)
        dd.push_back(json{{"degree", n}, {"full_rank", check_double_dual(n)}});
    out["double_dual"] = std::move(dd);

    json images = json::array();
    for (int n = 0; n <= std::min(bound, 2); ++n) {
        for (const ZWord& w : all_words(n)) {
            images.push_back(json{{"word", w.str()},
                                  {"functional", json::parse(to_json_string(psi(w, bound)))}});
        }
    }
    out["psi_images"] = std::move(images);

    emit(out);
    return witness_found ? kExitWitness : kExitOk;
}

int report_double(int level, int mmax, const std::string& which) {
    require_desk_scale(level, kDoubleLevelCap, "report --level");
    bool witness_found = false;
    json out = json::array();
    const bool all = which == "all";

    const LegsModeSelection sel = select_legs_mode<TreeModel>(std::min(level, 3));
    const LegsMode mode = sel.selected.value_or(LegsMode::a_order);
    auto mode_name = [](LegsMode m) { return m == LegsMode::a_order ? "a-order" : "hg-order"; };

    if (all || which == "assoc") {
        out.push_back(json{{"check", "legs-mode"},
                           {"level", level},
                           {"status", sel.selected ? "pass" : "witness"},
                           {"a_order", sel.a_order.pass ? "pass" : "fail"},
                           {"hg_order", sel.hg_order.pass ? "pass" : "fail"},
                           {"selected", mode_name(mode)}});
        witness_found = witness_found || !sel.selected;

        const EmbedReport units = check_double_unit_laws<TreeModel>(std::min(level, 3), mode);
        out.push_back(json{{"check", "unit-laws"},
                           {"level", level},
                           {"status", units.pass ? "pass" : "witness"},
                           {"witness", units.witness}});
        const EmbedReport emb = check_double_embeddings<TreeModel>(std::min(level, 3), mode);
        out.push_back(json{{"check", "embeddings"},
                           {"level", level},
                           {"status", emb.pass ? "pass" : "witness"},
                           {"witness", emb.witness}});
        witness_found = witness_found || !units.pass || !emb.pass;
    }
    if (all || which == "basis") {
        const bool same =
            r_matrix(level, BasisMode::forest).elem == r_matrix(level, BasisMode::top_monomial).elem;
        out.push_back(
            json{{"check", "r-basis-independence"}, {"level", level}, {"status", same ? "pass" : "witness"}});
        witness_found = witness_found || !same;
    }
    if (all || which == "locality") {
        bool ok = true;
        for (int m = 0; m <= level; ++m) ok = ok && check_r_locality(level, m);
        out.push_back(json{{"check", "r-locality"}, {"level", level}, {"status", ok ? "pass" : "witness"}});
        witness_found = witness_found || !ok;
    }
    if (all || which == "intertwine") {
        const IntertwineReport r = check_intertwine(level, std::min(mmax, level), mode);
        json j{{"check", "intertwine"}, {"level", level}, {"mmax", r.mmax},
               {"status", r.pass ? "pass" : "witness"}};
        if (!r.pass) {
            j["witness"] = json{{"x", r.witness->x.first.str() + " |> " + r.witness->x.second.str()},
                                {"lhs", r.witness->lhs.str()},
                                {"rhs", r.witness->rhs.str()}};
        }
        out.push_back(std::move(j));
        witness_found = witness_found || !r.pass;
    }
    if (all || which == "qybe") {
        const QybeReport q = check_qybe(level, mode);
        json j{{"check", "qybe"}, {"level", level}, {"status", q.pass ? "pass" : "witness"}};
        if (!q.pass) j["witness"] = q.witness->second.str();
        out.push_back(std::move(j));
        witness_found = witness_found || !q.pass;
    }

    emit(out);
    return witness_found ? kExitWitness : kExitOk;
}

int run_check(const std::string& suite, int wmax, int nmax, int weight, int samples,
              std::uint64_t seed, std::optional<int> r, const std::string& mode_str) {
    SweepReport rep;
    json j{{"check", suite}};
    if (suite == "hopf") {
        require_desk_scale(wmax, 8, "check --wmax");
        rep = check_hopf_axioms(wmax);
        j["wmax"] = wmax;
    } else if (suite == "coproduct") {
        require_desk_scale(wmax, 10, "check --wmax");
        rep = check_coproduct_oracles(wmax);
        j["wmax"] = wmax;
    } else if (suite == "pairing") {
        require_desk_scale(wmax, kPairingCap, "check --wmax");
        rep = check_pairing_recursion(wmax);
        j["wmax"] = wmax;
    } else if (suite == "grading") {
        require_desk_scale(wmax, 8, "check --wmax");
        rep = check_grading(wmax);
        j["wmax"] = wmax;
    } else if (suite == "trees") {
        require_desk_scale(weight, kListCap, "check --weight");
        rep = check_tree_canonicalization(weight, samples, seed);
        j["weight"] = weight;
        j["samples"] = samples;
        j["seed"] = seed;
    } else if (suite == "count") {
        const BranchMode mode =
            mode_str == "paper-literal" ? BranchMode::paper_literal : BranchMode::corrected;
        const auto rows = verify_counts(nmax, r, mode);
        for (const CountRow& row : rows) {
            if (!row.match) {
                rep.pass = false;
                rep.failed_check = "count vs oracle";
                rep.witness = "n=" + std::to_string(row.n) + " computed=" +
                              row.computed.get_str() + " oracle=" + row.oracle.get_str();
                break;
            }
        }
        j["nmax"] = nmax;
        if (r) j["r"] = *r;
    } else {
        std::cerr << "error: unknown check suite '" << suite << "'\n";
        return kExitUsage;
    }
    j["status"] = rep.pass ? "pass" : "witness";
    if (!rep.pass) {
        j["failed"] = rep.failed_check;
        j["witness"] = rep.witness;
    }
    emit(j);
    return rep.pass ? kExitOk : kExitWitness;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the Hopf algebra of rooted trees"};
    app.require_subcommand(1);

    std::string format = "text";
    int bound = 8;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--bound", bound, "degree bound for evaluation (hard cap 12)");
    app.add_option("--seed", seed, "seed for randomized property suites");
    app.fallthrough();

    CountOptions count_opt;
    CLI::App* count = app.add_subcommand("count", "tree class counts by weight");
    count->add_option("--nmax", count_opt.nmax, "largest weight")->required();
    CLI::Option* ropt = count->add_option("--r", count_opt.r, "bound the fertility by r");
    CLI::Option* mopt = count->add_option("--mode", count_opt.mode, "branch recurrence mode")
                            ->check(CLI::IsMember({"corrected", "paper-literal"}));
    count->add_flag("--verify", count_opt.verify, "compare against the brute-force oracle");
    count->add_flag("--inject-recurrence-fault", count_opt.inject_fault)->group("");

    int list_n = 1;
    CLI::App* list = app.add_subcommand("list", "canonical trees of a given weight");
    list->add_option("--n", list_n, "weight")->required();

    std::string eval_text;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", eval_text, "expression")->required();

    std::string report_kind;
    int report_nmax = 5;
    int report_level = 3;
    int report_mmax = 2;
    int report_bound = 4;
    std::string report_variant = "full";
    std::string report_check = "all";
    CLI::App* report = app.add_subcommand("report", "analysis reports (JSON)");
    report->add_option("kind", report_kind,
                       "primitives | generated-by-primitives | integrals | pairing | double")
        ->required();
    report->add_option("--nmax", report_nmax, "largest degree");
    report->add_option("--variant", report_variant)->check(CLI::IsMember({"full", "ladder"}));
    report->add_option("--level", report_level, "double level n");
    report->add_option("--mmax", report_mmax, "intertwine element size bound");
    report->add_option("--check", report_check,
                       "double sub-check: assoc, basis, locality, intertwine, qybe, all");
    report->add_option("--pairing-bound", report_bound, "pairing sweep bound");

    std::string check_suite;
    int check_wmax = 5;
    int check_nmax = 10;
    int check_weight = 10;
    int check_samples = 200;
    int check_r = 0;
    std::string check_mode = "corrected";
    CLI::App* check = app.add_subcommand("check", "verification sweeps");
    check->add_option("suite", check_suite, "hopf | coproduct | pairing | grading | trees | count")
        ->required();
    check->add_option("--wmax", check_wmax, "weight bound");
    check->add_option("--nmax", check_nmax, "count rows");
    check->add_option("--weight", check_weight, "max random tree weight");
    check->add_option("--samples", check_samples, "random samples");
    CLI::Option* check_ropt = check->add_option("--r", check_r, "fertility bound");
    check->add_option("--mode", check_mode)->check(CLI::IsMember({"corrected", "paper-literal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (bound > kHardDegreeCap) {
        std::cerr << "error: --bound exceeds the hard cap of " << kHardDegreeCap << "\n";
        return kExitBound;
    }

    try {
        if (count->parsed()) {
            count_opt.has_r = ropt->count() > 0;
            count_opt.mode_explicit = mopt->count() > 0;
            count_opt.format = format;
            if (!count_opt.has_r && count_opt.mode_explicit) {
                std::cerr << "error: --mode requires --r\n";
                return kExitUsage;
            }
            return run_count(count_opt);
        }
        if (list->parsed()) return run_list(list_n, format);
        if (eval->parsed()) return run_eval(eval_text, format, bound);
        if (report->parsed()) {
            const Variant variant = report_variant == "ladder" ? Variant::ladder : Variant::full;
            auto matches = [&](const std::string& full) {
                return !report_kind.empty() && full.rfind(report_kind, 0) == 0;
            };
            if (matches("primitives")) return report_primitives(report_nmax, variant);
            if (matches("generated-by-primitives")) return report_generated(report_nmax, variant);
            if (matches("integrals")) return report_integrals(report_nmax);
            if (matches("pairing")) return report_pairing(report_bound);
            if (matches("double")) return report_double(report_level, report_mmax, report_check);
            std::cerr << "error: unknown report kind '" << report_kind << "'\n";
            return kExitUsage;
        }
        if (check->parsed()) {
            return run_check(check_suite, check_wmax, check_nmax, check_weight, check_samples,
                             seed, check_ropt->count() ? std::optional<int>(check_r) : std::nullopt,
                             check_mode);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
