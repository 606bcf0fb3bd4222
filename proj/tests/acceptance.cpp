// Acceptance suite: one line per criterion, all comparisons exact.
// Verdict artifacts land in acceptance_artifacts/ under the working
// directory.  Exit code = number of failed criteria.

#include "rthopf/checks.hpp"
#include "rthopf/drinfeld.hpp"
#include "rthopf/enumeration.hpp"
#include "rthopf/pairing.hpp"
#include "rthopf/structure.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace rthopf;
using json = nlohmann::ordered_json;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = seconds_since(start);
    if (ok) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", number, label.c_str(), secs);
    } else {
        ++failures;
        std::printf("FAIL criterion %d: %s (%.2fs)%s%s\n", number, label.c_str(), secs,
                    error.empty() ? "" : " -- ", error.c_str());
    }
    std::fflush(stdout);
}

void archive(const std::string& name, const json& content) {
    std::filesystem::create_directories("acceptance_artifacts");
    std::ofstream out("acceptance_artifacts/" + name);
    out << content.dump(2) << "\n";
}

struct CliResult {
    std::string output;
    int code = -1;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string cmd = std::string(RTHOPF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json pairing_verdicts(int bound) {
    json out{{"bound", bound}};
    out["psi_multiplicative"] = check_psi_multiplicative(bound).pass ? "pass" : "witness";
    const auto phi = witness_phi_not_algebraic(bound);
    out["phi_algebraic"] =
        phi ? json{{"status", "witness"}, {"x", phi->x.str()}, {"y", phi->y.str()},
                   {"w", phi->w.str()}, {"lhs", phi->lhs.str()}, {"rhs", phi->rhs.str()}}
            : json{{"status", "no-witness"}};
    const auto psc = witness_psi_not_coalgebraic(bound);
    out["psi_coalgebraic"] =
        psc ? json{{"status", "witness"}, {"w", psc->w.str()}, {"h1", psc->h1.str()},
                   {"h2", psc->h2.str()}, {"lhs", psc->lhs.str()}, {"rhs", psc->rhs.str()}}
            : json{{"status", "no-witness"}};
    const GlPairingResult gl = check_gl_matches_pairing(bound);
    out["gl_pairing"] =
        gl.pass ? json{{"status", "pass"}}
                : json{{"status", "witness"}, {"f", gl.witness->f.str()},
                       {"g", gl.witness->g.str()}, {"h", gl.witness->h.str()},
                       {"lhs", gl.witness->lhs.str()}, {"rhs", gl.witness->rhs.str()}};
    return out;
}

json double_verdicts() {
    json out = json::array();
    const LegsModeSelection sel = select_legs_mode<TreeModel>(3);
    const LegsMode mode = sel.selected.value_or(LegsMode::a_order);
    out.push_back(json{{"check", "legs-mode"},
                       {"level", 3},
                       {"status", sel.selected ? "pass" : "witness"},
                       {"a_order", sel.a_order.pass},
                       {"hg_order", sel.hg_order.pass}});
    for (int n = 1; n <= 3; ++n) {
        for (int mm = 0; mm <= std::min(2, n); ++mm) {
            const IntertwineReport r = check_intertwine(n, mm, mode);
            out.push_back(json{{"check", "intertwine"},
                               {"level", n},
                               {"mmax", mm},
                               {"status", r.pass ? "pass" : "witness"}});
        }
    }
    for (int n = 0; n <= 3; ++n) {
        const QybeReport q = check_qybe(n, mode);
        out.push_back(
            json{{"check", "qybe"}, {"level", n}, {"status", q.pass ? "pass" : "witness"}});
    }
    return out;
}

} // namespace

int main() {
    criterion(1, "tree counts match the brute-force generator for n = 1..12", [] {
        const auto start = std::chrono::steady_clock::now();
        if (count_trees(2) != 1 || count_trees(3) != 2 || count_trees(4) != 4) return false;
        for (int n = 1; n <= 12; ++n) {
            if (count_trees(n) != oracle_count(n)) return false;
        }
        return seconds_since(start) < 30.0;
    });

    criterion(2, "branch counts: corrected mode matches the filtered oracle;"
                 " the literal mode first diverges at (r=1, n=3)", [] {
        for (int r = 1; r <= 3; ++r) {
            for (int n = 1; n <= 10; ++n) {
                if (count_branch_trees(r, n, BranchMode::corrected) != oracle_count_branch(r, n))
                    return false;
            }
        }
        for (int n = 1; n <= 10; ++n) {
            if (count_branch_trees(1, n, BranchMode::corrected) != 1) return false;
        }
        const auto d = branch_divergence_scan(3, 10);
        return d && d->r == 1 && d->n == 3 && d->literal == 2 && d->oracle == 1;
    });

    criterion(3, "Hopf axioms hold on all forests of weight <= 5", [] {
        const auto start = std::chrono::steady_clock::now();
        return check_hopf_axioms(5).pass && seconds_since(start) < 60.0;
    });

    criterion(4, "cut and root-grafting coproducts agree on all trees of weight <= 6",
              [] { return check_coproduct_oracles(6).pass; });

    criterion(5, "graded dimensions, primitive dimensions (1,1,1,2,3), grafting-word bases", [] {
        for (int n = 0; n <= 8; ++n) {
            if (BigCount(static_cast<unsigned long>(forest_basis(n).size())) !=
                count_trees(n + 1))
                return false;
        }
        const std::vector<std::size_t> dims{1, 1, 1, 2, 3};
        for (int n = 1; n <= 5; ++n) {
            if (primitive_basis(n).elems.size() != dims[static_cast<std::size_t>(n - 1)])
                return false;
        }
        if (top_monomial_basis(4, Nesting::right).elems.size() != 9) return false;
        for (int n = 1; n <= 5; ++n) {
            const bool right = top_monomial_basis(n, Nesting::right).is_basis;
            const bool left = top_monomial_basis(n, Nesting::left).is_basis;
            if (!right && !left) return false;
        }
        return true;
    });

    criterion(6, "generated-by-primitives defect at degree 3 is 1; ladder table archived", [] {
        const auto full = primitively_generated_report(Variant::full, 3);
        if (full[2].dim_total != 4 || full[2].dim_generated != 3 || full[2].defect != 1)
            return false;
        const auto ladd = primitively_generated_report(Variant::ladder, 5);
        json rows = json::array();
        for (const DefectRow& row : ladd) {
            rows.push_back(json{{"degree", row.degree},
                                {"dim_total", row.dim_total},
                                {"dim_generated", row.dim_generated},
                                {"defect", row.defect}});
        }
        archive("ladder_defects.json", json{{"report", "generated-by-primitives"},
                                            {"variant", "ladder"},
                                            {"rows", rows}});
        return true;
    });

    criterion(7, "multiplication by l1 is injective on H_(n) for n <= 6", [] {
        for (int n = 0; n <= 6; ++n) {
            if (!integral_injectivity(n)) return false;
        }
        return true;
    });

    criterion(8, "pairing: recursion identity, Psi multiplicative, full rank,"
                 " witness searches archived", [] {
        if (!check_pairing_recursion(4).pass) return false;
        if (!check_psi_multiplicative(4).pass) return false;
        for (int n = 1; n <= 4; ++n) {
            std::vector<QVector> imgs;
            for (const ZWord& w : all_words(n)) imgs.push_back(psi(w).coords(n));
            QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(forest_basis(n).size()),
                                      static_cast<Eigen::Index>(imgs.size()));
            for (std::size_t j = 0; j < imgs.size(); ++j)
                m.col(static_cast<Eigen::Index>(j)) = imgs[j];
            if (rank(m) != static_cast<Eigen::Index>(forest_basis(n).size())) return false;
        }
        const json first = pairing_verdicts(4);
        const json second = pairing_verdicts(4); // reproducible
        if (first.dump() != second.dump()) return false;
        archive("pairing_verdicts.json", first);
        return true;
    });

    criterion(9, "double: associativity, unit laws, embeddings, R locality and"
                 " basis independence, intertwine and QYBE archived", [] {
        const auto start = std::chrono::steady_clock::now();
        const LegsModeSelection sel = select_legs_mode<TreeModel>(3);
        if (!sel.selected) return false;
        const LegsMode mode = *sel.selected;
        if (!check_double_unit_laws<TreeModel>(3, mode).pass) return false;
        if (!check_double_embeddings<TreeModel>(3, mode).pass) return false;
        for (int n = 0; n <= 4; ++n) {
            for (int m = 0; m <= n; ++m) {
                if (!check_r_locality(n, m)) return false;
            }
        }
        for (int n = 0; n <= 4; ++n) {
            if (r_matrix(n, BasisMode::forest).elem != r_matrix(n, BasisMode::top_monomial).elem)
                return false;
        }
        const json first = double_verdicts();
        const json second = double_verdicts();
        if (first.dump() != second.dump()) return false;
        archive("double_verdicts.json", first);
        return seconds_since(start) < 300.0;
    });

    criterion(10, "CLI golden outputs are byte-exact and --verify flips on a fault", [] {
        const CliResult count = run_cli("count --nmax 4");
        if (count.output != "n a(n)\n1 1\n2 1\n3 2\n4 4\n" || count.code != 0) return false;
        const CliResult ladders = run_cli("count --r 1 --nmax 6 --mode corrected");
        if (ladders.code != 0 ||
            ladders.output.find("6 1 corrected 1\n") == std::string::npos)
            return false;
        const CliResult lit = run_cli("count --r 1 --nmax 3 --mode paper-literal");
        if (lit.code != 0 || lit.output.find("3 1 paper-literal 2 *\n") == std::string::npos)
            return false;
        const CliResult ls = run_cli("list --n 3");
        if (ls.output != "((()))\n(()())\n" || ls.code != 0) return false;
        const CliResult graft = run_cli("eval \"graft((), (()))\"");
        if (graft.output != "1/2*((())) + 1/2*(()())\n" || graft.code != 0) return false;
        const CliResult anti = run_cli("eval \"antipode((()))\"");
        if (anti.output != "-1*(()) + 1*().()\n" || anti.code != 0) return false;
        const CliResult cop = run_cli("eval \"coproduct(())\"");
        if (cop.output != "1*()\xE2\x8A\x97""1 + 1*1\xE2\x8A\x97()\n" || cop.code != 0)
            return false;
        if (run_cli("count --nmax 8 --verify").code != 0) return false;
        if (run_cli("count --nmax 8 --verify --inject-recurrence-fault").code != 2) return false;
        return true;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return failures;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
