#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hookcoh/admissible.hpp"
#include "hookcoh/bott.hpp"
#include "hookcoh/bounds.hpp"
#include "hookcoh/degeneracy.hpp"
#include "hookcoh/extremal.hpp"
#include "hookcoh/flags.hpp"
#include "hookcoh/grassmann.hpp"
#include "hookcoh/partition.hpp"
#include "hookcoh/verify.hpp"

using json = nlohmann::json;
using namespace hookcoh;

namespace {

enum class Format { ascii, json_fmt, tsv };

Format parse_format(const std::string& text) {
    if (text == "ascii") return Format::ascii;
    if (text == "json") return Format::json_fmt;
    if (text == "tsv") return Format::tsv;
    throw CLI::ValidationError("--format must be ascii, json or tsv");
}

json to_json(const Partition& p) { return json(p.parts()); }

std::string join_ints(const std::vector<int>& v, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void emit(Format fmt, const json& doc, const std::string& ascii_text,
          const std::string& tsv_text) {
    switch (fmt) {
        case Format::json_fmt: std::cout << doc.dump(2) << "\n"; break;
        case Format::ascii: std::cout << ascii_text; break;
        case Format::tsv: std::cout << tsv_text; break;
    }
}

std::vector<FlagFactor> parse_factors(const std::string& text) {
    std::vector<FlagFactor> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--factors entries must look like s:l");
        out.push_back(FlagFactor{std::stoi(tok.substr(0, colon)),
                                 std::stoi(tok.substr(colon + 1))});
    }
    if (out.empty()) throw CLI::ValidationError("--factors must not be empty");
    return out;
}

struct GroupLine {
    int p, q;
    Partition lambda;
    std::vector<int> weight;
};

std::vector<GroupLine> snow_groups(int r, int e, int l) {
    std::vector<GroupLine> lines;
    for (const AdmissibleRecord& rec : enumerate_admissible(r, l, e - r))
        lines.push_back(GroupLine{static_cast<int>(rec.p), static_cast<int>(rec.q),
                                  rec.lambda, snow_weight(rec, e)});
    std::sort(lines.begin(), lines.end(), [](const GroupLine& a, const GroupLine& b) {
        return std::tie(a.p, a.q, a.lambda) < std::tie(b.p, b.q, b.lambda);
    });
    return lines;
}

int run_verify(const std::string& suite, const std::string& tables, Format fmt) {
    std::vector<std::pair<std::string, Report>> reports;
    const bool all = suite.empty();
    if (all || suite == "bijection") reports.emplace_back("bijection", suite_bijection());
    if (all || suite == "snow-vs-bott")
        reports.emplace_back("snow-vs-bott", suite_snow_vs_bott());
    if (all || suite == "pmax") reports.emplace_back("pmax", suite_pmax());
    if (all || suite == "tables") reports.emplace_back("tables", suite_tables(tables));
    if (all || suite == "lr-identities")
        reports.emplace_back("lr-identities", suite_lr_identities());
    if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);

    bool ok = true;
    json doc;
    doc["suites"] = json::array();
    std::string text;
    for (const auto& [name, report] : reports) {
        const bool passed = report.all_passed();
        ok = ok && passed;
        json s;
        s["name"] = name;
        s["passed"] = passed;
        s["checks"] = report.checks.size();
        s["failures"] = json::array();
        text += std::string(passed ? "PASS" : "FAIL") + " " + name + " (" +
                std::to_string(report.checks.size()) + " checks)\n";
        for (const Check& c : report.checks)
            if (!c.passed) {
                s["failures"].push_back(c.name + ": " + c.message);
                text += "  failed: " + c.name + ": " + c.message + "\n";
            }
        doc["suites"].push_back(s);
    }
    emit(fmt, doc, text, text);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition combinatorics, Grassmannian line-bundle cohomology tables "
                 "and vanishing-bound calculators"};
    app.require_subcommand(1);
    std::string format_text = "ascii";
    app.add_option("--format", format_text, "output format: ascii, json or tsv")
        ->capture_default_str();

    // hooks
    auto* cmd_hooks = app.add_subcommand("hooks", "hook numbers of a partition");
    std::string hooks_partition;
    bool hooks_diagram = false;
    cmd_hooks->add_option("partition", hooks_partition, "partition, e.g. 4,2,1")->required();
    cmd_hooks->add_flag("--diagram", hooks_diagram, "draw the Young diagram");

    // admissible
    auto* cmd_adm = app.add_subcommand("admissible", "enumerate l-admissible partitions");
    int adm_r = 0, adm_l = 0;
    std::optional<int> adm_width;
    cmd_adm->add_option("--r", adm_r, "row budget")->required();
    cmd_adm->add_option("--l", adm_l, "forbidden hook number")->required();
    cmd_adm->add_option("--width", adm_width, "bound on the first part");

    // hat
    auto* cmd_hat = app.add_subcommand("hat", "inverse of the h_minus bijection");
    std::string hat_nu;
    int hat_l = 0, hat_r = 0;
    cmd_hat->add_option("--nu", hat_nu, "profile partition")->required();
    cmd_hat->add_option("--l", hat_l)->required();
    cmd_hat->add_option("--r", hat_r)->required();

    // cohomology
    auto* cmd_coh = app.add_subcommand("cohomology", "H^{p,q}(G(r,e), O(l)) table");
    int coh_r = 0, coh_e = 0, coh_l = 0;
    bool coh_oracle = false;
    cmd_coh->add_option("--r", coh_r)->required();
    cmd_coh->add_option("--e", coh_e)->required();
    cmd_coh->add_option("--l", coh_l)->required();
    cmd_coh->add_flag("--oracle", coh_oracle, "cross-check against the Bott oracle");

    // pmax
    auto* cmd_pmax = app.add_subcommand("pmax", "maximal weight of an admissible partition");
    int pm_r = 0, pm_n = 0, pm_l = 0;
    bool pm_brute = false;
    cmd_pmax->add_option("--r", pm_r)->required();
    cmd_pmax->add_option("--n", pm_n)->required();
    cmd_pmax->add_option("--l", pm_l)->required();
    cmd_pmax->add_flag("--brute", pm_brute, "cross-check against brute force");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "vanishing bound calculators");
    cmd_bounds->require_subcommand(1);
    long long b_n = 0, b_p = 0, b_q = 0, b_sigma = 0, b_a = 1, b_e = 0, b_k = 0;
    long long br_a = 0, br_b = 0, br_c = 0, br_d = 0, br_r = 1, br_s = 1;
    auto* bounds_q = cmd_bounds->add_subcommand("q", "bound Q(p, sigma)");
    bounds_q->add_option("--n", b_n)->required();
    bounds_q->add_option("--p", b_p)->required();
    bounds_q->add_option("--sigma", b_sigma)->required();
    bounds_q->add_option("--a", b_a)->required();
    bounds_q->add_option("--e", b_e)->required();
    bounds_q->add_option("--k", b_k)->required();
    auto* bounds_p = cmd_bounds->add_subcommand("p", "bound P(q, sigma)");
    bounds_p->add_option("--n", b_n)->required();
    bounds_p->add_option("--q", b_q)->required();
    bounds_p->add_option("--sigma", b_sigma)->required();
    bounds_p->add_option("--a", b_a)->required();
    bounds_p->add_option("--e", b_e)->required();
    bounds_p->add_option("--k", b_k)->required();
    auto* bounds_c = cmd_bounds->add_subcommand("combined", "combined vanishing predicate");
    bounds_c->add_option("--n", b_n)->required();
    bounds_c->add_option("--p", b_p)->required();
    bounds_c->add_option("--q", b_q)->required();
    bounds_c->add_option("--sigma", b_sigma)->required();
    bounds_c->add_option("--a", b_a)->required();
    bounds_c->add_option("--e", b_e)->required();
    bounds_c->add_option("--k", b_k)->required();
    auto* bounds_b = cmd_bounds->add_subcommand("bracket", "bracket-pair bound");
    bounds_b->add_option("--a", br_a)->required();
    bounds_b->add_option("--b", br_b)->required();
    bounds_b->add_option("--c", br_c)->required();
    bounds_b->add_option("--d", br_d)->required();
    bounds_b->add_option("--r", br_r)->required();
    bounds_b->add_option("--s", br_s)->required();

    // flag
    auto* cmd_flag = app.add_subcommand("flag", "flag-product cohomology and envelopes");
    int fl_r = 0, fl_e = 0;
    std::string fl_factors;
    std::optional<int> fl_p, fl_q;
    cmd_flag->add_option("--r", fl_r)->required();
    cmd_flag->add_option("--e", fl_e)->required();
    cmd_flag->add_option("--factors", fl_factors, "comma-separated s:l pairs")->required();
    cmd_flag->add_option("--p", fl_p);
    cmd_flag->add_option("--q", fl_q);

    // resolution
    auto* cmd_res = app.add_subcommand("resolution", "symmetric degeneracy resolution terms");
    int res_e = 0, res_k = 0;
    std::optional<long long> res_i;
    cmd_res->add_option("--e", res_e)->required();
    cmd_res->add_option("--k", res_k)->required();
    cmd_res->add_option("--i", res_i);

    // rho
    auto* cmd_rho = app.add_subcommand("rho", "expected dimension n - t(e-k)");
    long long rho_n = 0;
    int rho_e = 0, rho_k = 0;
    cmd_rho->add_option("--n", rho_n)->required();
    cmd_rho->add_option("--e", rho_e)->required();
    cmd_rho->add_option("--k", rho_k)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run property suites");
    std::string verify_suite;
    std::string verify_tables_path = default_table_path();
    cmd_verify->add_option("suite", verify_suite,
                           "bijection, snow-vs-bott, pmax, tables or lr-identities");
    cmd_verify->add_option("--tables", verify_tables_path, "q0 table fixture path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(format_text);

        if (*cmd_hooks) {
            const Partition p = parse_partition(hooks_partition);
            const auto table = p.hook_table();
            json doc;
            doc["partition"] = to_json(p);
            doc["hooks"] = table;
            std::string text, tsv;
            for (const auto& row : table) {
                text += join_ints(row, ' ') + "\n";
                tsv += join_ints(row, '\t') + "\n";
            }
            if (hooks_diagram) {
                std::string diagram;
                for (const auto& row : table) {
                    diagram += "+";
                    for (std::size_t j = 0; j < row.size(); ++j) diagram += "---+";
                    diagram += "\n|";
                    for (int h : row) {
                        std::string cell = std::to_string(h);
                        while (cell.size() < 3) cell = " " + cell + (cell.size() < 3 ? " " : "");
                        diagram += cell.substr(0, 3) + "|";
                    }
                    diagram += "\n";
                }
                if (!table.empty()) {
                    diagram += "+";
                    for (int j = 0; j < p.part(p.length()); ++j) diagram += "---+";
                    diagram += "\n";
                }
                text = diagram;
            }
            emit(fmt, doc, text, tsv);
            return 0;
        }

        if (*cmd_adm) {
            const auto records = enumerate_admissible(adm_r, adm_l, adm_width);
            json doc;
            doc["r"] = adm_r;
            doc["l"] = adm_l;
            if (adm_width) doc["width"] = *adm_width;
            doc["records"] = json::array();
            std::string text, tsv;
            for (const AdmissibleRecord& rec : records) {
                json jr;
                jr["lambda"] = to_json(rec.lambda);
                jr["h_minus"] = rec.h_minus;
                jr["v_minus"] = rec.v_minus;
                jr["p"] = rec.p;
                jr["q"] = rec.q;
                doc["records"].push_back(jr);
                text += rec.lambda.to_string() + "  p=" + std::to_string(rec.p) +
                        " q=" + std::to_string(rec.q) + "  h-=" + join_ints(rec.h_minus) +
                        " v-=" + join_ints(rec.v_minus) + "\n";
                tsv += rec.lambda.cli_string() + "\t" + std::to_string(rec.p) + "\t" +
                       std::to_string(rec.q) + "\t" + join_ints(rec.h_minus) + "\t" +
                       join_ints(rec.v_minus) + "\n";
            }
            text += "total " + std::to_string(records.size()) + "\n";
            emit(fmt, doc, text, tsv);
            return 0;
        }

        if (*cmd_hat) {
            const Partition nu = parse_partition(hat_nu);
            const Partition lam = hat(nu, hat_l, hat_r);
            const auto [p, q] = pq_of(nu, hat_l, hat_r);
            json doc;
            doc["nu"] = to_json(nu);
            doc["l"] = hat_l;
            doc["r"] = hat_r;
            doc["lambda"] = to_json(lam);
            doc["p"] = p;
            doc["q"] = q;
            emit(fmt, doc, lam.cli_string() + "\n",
                 lam.cli_string() + "\t" + std::to_string(p) + "\t" + std::to_string(q) + "\n");
            return 0;
        }

        if (*cmd_coh) {
            const auto lines = snow_groups(coh_r, coh_e, coh_l);
            json doc;
            doc["r"] = coh_r;
            doc["e"] = coh_e;
            doc["l"] = coh_l;
            doc["groups"] = json::array();
            std::string text, tsv;
            for (const GroupLine& g : lines) {
                json jg;
                jg["p"] = g.p;
                jg["q"] = g.q;
                jg["weights"] = json::array({g.weight});
                jg["lambda"] = to_json(g.lambda);
                doc["groups"].push_back(jg);
                text += "p=" + std::to_string(g.p) + " q=" + std::to_string(g.q) +
                        "  lambda=" + g.lambda.to_string() + "  weight=" +
                        join_ints(g.weight) + "\n";
                tsv += std::to_string(g.p) + "\t" + std::to_string(g.q) + "\t" +
                       g.lambda.cli_string() + "\t" + join_ints(g.weight) + "\n";
            }
            int code = 0;
            if (coh_oracle) {
                const bool match =
                    cohomology_table(coh_r, coh_e, coh_l) == oracle_table(coh_r, coh_e, coh_l);
                doc["oracle_match"] = match;
                text += match ? "oracle agrees\n" : "ORACLE MISMATCH\n";
                tsv += std::string("oracle\t") + (match ? "match" : "mismatch") + "\n";
                if (!match) code = 1;
            }
            emit(fmt, doc, text, tsv);
            return code;
        }

        if (*cmd_pmax) {
            const MaximizeResult res = maximize(pm_r, pm_n, pm_l);
            json doc;
            doc["r"] = pm_r;
            doc["n"] = pm_n;
            doc["l"] = pm_l;
            doc["pmax"] = res.pmax;
            doc["params"] = {{"a", res.params.a},
                             {"alpha", res.params.alpha},
                             {"beta", res.params.beta},
                             {"c", res.params.c},
                             {"gamma", res.params.gamma}};
            doc["fixpoint_nu"] = to_json(res.fixpoint_nu);
            doc["fixpoint_lambda"] = to_json(res.fixpoint_lambda);
            std::string text = "pmax " + std::to_string(res.pmax) + "\n" +
                               "lambda " + res.fixpoint_lambda.to_string() + "\n" +
                               "params a=" + std::to_string(res.params.a) +
                               " alpha=" + std::to_string(res.params.alpha) +
                               " beta=" + std::to_string(res.params.beta) +
                               " c=" + std::to_string(res.params.c) +
                               " gamma=" + std::to_string(res.params.gamma) + "\n";
            std::string tsv = std::to_string(res.pmax) + "\t" +
                              res.fixpoint_lambda.cli_string() + "\n";
            int code = 0;
            if (pm_brute) {
                const long long brute = brute_force_pmax(pm_r, pm_n, pm_l);
                doc["brute"] = brute;
                text += "brute " + std::to_string(brute) +
                        (brute == res.pmax ? " (agrees)\n" : " MISMATCH\n");
                if (brute != res.pmax) code = 1;
            }
            emit(fmt, doc, text, tsv);
            return code;
        }

        if (*cmd_bounds) {
            long long value = 0;
            bool is_bool = false;
            bool flag_value = false;
            std::string kind;
            if (*bounds_q) {
                kind = "q";
                value = bound_q(b_n, b_p, b_sigma, b_a, b_e, b_k);
            } else if (*bounds_p) {
                kind = "p";
                value = bound_p(b_n, b_q, b_sigma, b_a, b_e, b_k);
            } else if (*bounds_c) {
                kind = "combined";
                is_bool = true;
                flag_value = vanishes(b_n, b_p, b_q, b_sigma, b_a, b_e, b_k);
            } else {
                kind = "bracket";
                value = bracket_pair_bound(br_a, br_b, br_c, br_d, br_r, br_s);
            }
            json doc;
            doc["kind"] = kind;
            if (is_bool)
                doc["vanishes"] = flag_value;
            else
                doc["value"] = value;
            const std::string text =
                is_bool ? std::string(flag_value ? "vanishes\n" : "not covered\n")
                        : std::to_string(value) + "\n";
            emit(fmt, doc, text, text);
            return 0;
        }

        if (*cmd_flag) {
            const auto factors = parse_factors(fl_factors);
            const Envelopes env = envelopes(fl_r, factors);
            json doc;
            doc["r"] = fl_r;
            doc["e"] = fl_e;
            doc["factors"] = json::array();
            for (const FlagFactor& f : factors)
                doc["factors"].push_back({{"s", f.s}, {"l", f.l}});
            doc["p_max"] = env.p_max;
            doc["q_max"] = env.q_max;
            std::string text = "P_max " + std::to_string(env.p_max) + "\nQ_max " +
                               std::to_string(env.q_max) + "\n";
            std::string tsv =
                std::to_string(env.p_max) + "\t" + std::to_string(env.q_max) + "\n";
            if (fl_p && fl_q) {
                try {
                    const auto group =
                        product_flag_cohomology(fl_e, fl_r, factors, *fl_p, *fl_q);
                    if (group) {
                        doc["group"] = {{"sigma", group->sigma},
                                        {"multiplicity", group->multiplicity}};
                        doc["group"]["splittings"] = group->alpha_splittings;
                        text += "sigma " + std::to_string(group->sigma) + " multiplicity " +
                                std::to_string(group->multiplicity) + "\n";
                        for (const auto& split : group->alpha_splittings)
                            text += "  alphas " + join_ints(split) + "\n";
                        tsv += std::to_string(group->sigma) + "\t" +
                               std::to_string(group->multiplicity) + "\n";
                    } else {
                        doc["group"] = nullptr;
                        text += "zero group\n";
                        tsv += "zero\n";
                    }
                } catch (const validity_window_error&) {
                    doc["group"] = "outside_validity_window";
                    text += "outside the validity window (formula not asserted)\n";
                    tsv += "outside_validity_window\n";
                }
            }
            emit(fmt, doc, text, tsv);
            return 0;
        }

        if (*cmd_res) {
            json doc;
            doc["e"] = res_e;
            doc["k"] = res_k;
            doc["terms"] = json::array();
            std::string text, tsv;
            const long long top = triangle(res_e - res_k);
            const long long lo = res_i.value_or(0);
            const long long hi = res_i.value_or(top);
            for (long long i = lo; i <= hi; ++i) {
                for (const ResolutionTerm& term : resolution_terms(res_e, res_k, i)) {
                    json jt;
                    jt["i"] = term.i;
                    jt["lambda"] = to_json(term.lambda);
                    jt["twist"] = term.twist;
                    doc["terms"].push_back(jt);
                    text += "i=" + std::to_string(term.i) + "  lambda=" +
                            term.lambda.to_string() + "  twist=" +
                            std::to_string(term.twist) + "\n";
                    tsv += std::to_string(term.i) + "\t" + term.lambda.cli_string() + "\t" +
                           std::to_string(term.twist) + "\n";
                }
            }
            emit(fmt, doc, text, tsv);
            return 0;
        }

        if (*cmd_rho) {
            const long long value = rho(rho_n, rho_e, rho_k);
            json doc;
            doc["n"] = rho_n;
            doc["e"] = rho_e;
            doc["k"] = rho_k;
            doc["rho"] = value;
            emit(fmt, doc, std::to_string(value) + "\n", std::to_string(value) + "\n");
            return 0;
        }

        if (*cmd_verify) return run_verify(verify_suite, verify_tables_path, fmt);
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
