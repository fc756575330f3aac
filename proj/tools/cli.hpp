#pragma once

// Command-line front end. `run` never prints; main() picks between the JSON
// payload and the plain-text rendering.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wreath/wreath.hpp"

namespace wreath::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kVerification = 3 };

struct CommandResult {
    int exit_code = kOk;
    Json payload;
    std::string human;
    bool json_only = false;  // --json was given

    bool ok() const noexcept { return exit_code == kOk; }

    std::string output() const { return json_only || exit_code == kComputation ? payload.dump() + "\n" : human; }
};

namespace detail {

inline CommandResult error_result(int code, const std::string& error_code, const std::string& message) {
    CommandResult r;
    r.exit_code = code;
    r.payload = Json{{"status", "error"}, {"code", error_code}, {"message", message}};
    r.human = "error: " + message + "\n";
    return r;
}

inline Json tableau_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) rows.push_back(Json(r));
    return rows;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

}  // namespace detail

/// Parses and executes one command; args excludes the program name.
inline CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Specht-module branching multiplicities for wreath products of symmetric groups", "wreath"};
    app.require_subcommand(1);
    bool json_only = false;
    app.add_flag("--json", json_only, "Print only the JSON payload");

    std::function<CommandResult()> action;
    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_flag("--json", json_only, "Print only the JSON payload");
        return s;
    };

    // partitions <m>
    int part_m = 0;
    auto* c_partitions = sub("partitions", "List the partitions of m in descending lexicographic order");
    c_partitions->add_option("m", part_m, "Integer to partition")->required()->check(CLI::NonNegativeNumber);
    c_partitions->callback([&] {
        action = [&] {
            CommandResult r;
            Json list = Json::array();
            for (const auto& p : enumerate_partitions(part_m)) list.push_back(to_json(p));
            r.payload = list;
            r.human = list.dump() + "\n";
            return r;
        };
    });

    // dim --partition p
    std::string dim_partition;
    auto* c_dim = sub("dim", "Dimension of a Specht module (hook length formula)");
    c_dim->add_option("--partition", dim_partition, "Partition, e.g. [3,2]")->required();
    c_dim->callback([&] {
        action = [&] {
            const auto p = parse_partition(dim_partition);
            const Count d = specht_dimension(p);
            CommandResult r;
            r.payload = Json{{"partition", to_json(p)}, {"dimension", d}};
            r.human = "dim S^" + to_string(p) + " = " + std::to_string(d) + "\n";
            return r;
        };
    });

    // lr --lambda --alpha --beta
    std::string lr_lambda, lr_alpha, lr_beta;
    auto* c_lr = sub("lr", "Littlewood-Richardson coefficient c^lambda_{alpha,beta}");
    c_lr->add_option("--lambda", lr_lambda)->required();
    c_lr->add_option("--alpha", lr_alpha)->required();
    c_lr->add_option("--beta", lr_beta)->required();
    c_lr->callback([&] {
        action = [&] {
            const auto l = parse_partition(lr_lambda), a = parse_partition(lr_alpha), b = parse_partition(lr_beta);
            const Count c = lr_coefficient(l, a, b);
            CommandResult r;
            r.payload = Json{{"lambda", to_json(l)}, {"alpha", to_json(a)}, {"beta", to_json(b)}, {"coefficient", c}};
            r.human = "c^" + to_string(l) + "_{" + to_string(a) + "," + to_string(b) + "} = " + std::to_string(c) + "\n";
            return r;
        };
    });

    // lr-multi --lambda --parts p;p;...
    std::string lm_lambda, lm_parts;
    auto* c_lr_multi = sub("lr-multi", "Generalized coefficient c(lambda; alpha^1,...,alpha^t)");
    c_lr_multi->add_option("--lambda", lm_lambda)->required();
    c_lr_multi->add_option("--parts", lm_parts, "Semicolon-separated partitions, e.g. [1];[1]")->required();
    c_lr_multi->callback([&] {
        action = [&] {
            const auto l = parse_partition(lm_lambda);
            const auto parts = parse_partition_list(lm_parts);
            const Count c = lr_multi(l, parts);
            Json pj = Json::array();
            std::vector<std::string> ps;
            for (const auto& p : parts) {
                pj.push_back(to_json(p));
                ps.push_back(to_string(p));
            }
            CommandResult r;
            r.payload = Json{{"lambda", to_json(l)}, {"parts", pj}, {"coefficient", c}};
            r.human = "c(" + to_string(l) + "; " + detail::join(ps, ",") + ") = " + std::to_string(c) + "\n";
            return r;
        };
    });

    // young-layer <m>
    int layer_m = 1;
    auto* c_layer = sub("young-layer", "Layers m and m-1 of the Young graph with their edges");
    c_layer->add_option("m", layer_m)->required()->check(CLI::PositiveNumber);
    c_layer->callback([&] {
        action = [&] {
            const auto layer = young_layer(layer_m);
            Json upper = Json::array(), lower = Json::array(), edges = Json::array(), adj = Json::array();
            for (const auto& p : layer.upper) upper.push_back(to_json(p));
            for (const auto& p : layer.lower) lower.push_back(to_json(p));
            for (const auto& e : layer.edges) edges.push_back(Json::array({e.upper + 1, e.lower + 1}));
            std::ostringstream h;
            for (std::size_t i = 0; i < layer.adjacency.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < layer.adjacency.cols(); ++j) row.push_back(layer.adjacency.at(i, j));
                adj.push_back(row);
            }
            h << "upper (" << layer.upper.size() << "): ";
            for (const auto& p : layer.upper) h << to_string(p) << ' ';
            h << "\nlower (" << layer.lower.size() << "): ";
            for (const auto& p : layer.lower) h << to_string(p) << ' ';
            h << "\nedges (" << layer.edges.size() << "):\n";
            for (const auto& e : layer.edges)
                h << "  " << to_string(layer.upper[e.upper]) << " -- " << to_string(layer.lower[e.lower]) << "\n";
            CommandResult r;
            r.payload = Json{{"m", layer_m}, {"upper", upper}, {"lower", lower}, {"edges", edges}, {"adjacency", adj}};
            r.human = h.str();
            return r;
        };
    });

    // labellings -m --lambda --nu
    int lab_m = 1;
    std::string lab_lambda, lab_nu;
    auto* c_lab = sub("labellings", "Good labellings of Y_m(lambda, nu) and their coefficients M(L)");
    c_lab->add_option("-m", lab_m)->required()->check(CLI::PositiveNumber);
    c_lab->add_option("--lambda", lab_lambda)->required();
    c_lab->add_option("--nu", lab_nu)->required();
    c_lab->callback([&] {
        action = [&] {
            const auto layer = young_layer(lab_m);
            const auto lambda = parse_multipartition(lab_lambda), nu = parse_multipartition(lab_nu);
            Json list = Json::array();
            std::ostringstream h;
            Count total = 0;
            for (const auto& L : enumerate_good_labellings(layer, lambda, nu)) {
                const Count c = labelling_coefficient(L);
                total = checked_add(total, c);
                Json labels = Json::array();
                h << "M(L) = " << c << ":";
                for (std::size_t e = 0; e < layer.edges.size(); ++e) {
                    const auto& edge = layer.edges[e];
                    labels.push_back(Json{{"upper", to_json(layer.upper[edge.upper])},
                                          {"lower", to_json(layer.lower[edge.lower])},
                                          {"label", to_json(L.labels[e])}});
                    h << "  " << to_string(layer.upper[edge.upper]) << "-" << to_string(layer.lower[edge.lower])
                      << ":" << to_string(L.labels[e]);
                }
                h << "\n";
                list.push_back(Json{{"labels", labels}, {"coefficient", c}});
            }
            h << "total = " << total << "\n";
            CommandResult r;
            r.payload = Json{{"m", lab_m}, {"lambda", to_json(lambda)}, {"nu", to_json(nu)}, {"labellings", list},
                             {"total", total}};
            r.human = h.str();
            return r;
        };
    });

    auto render_map = [](const MultiplicityMap& map) {
        std::string out;
        for (const auto& [key, mult] : map.sorted_entries()) out += to_string(key) + "  " + std::to_string(mult) + "\n";
        return out;
    };

    // branch-first -m --lambda [--method]
    int bf_m = 1;
    std::string bf_lambda, bf_method = "matrices";
    auto* c_bf = sub("branch-first", "Restriction from S_m wr S_n to S_{m-1} wr S_n");
    c_bf->add_option("-m", bf_m)->required()->check(CLI::PositiveNumber);
    c_bf->add_option("--lambda", bf_lambda)->required();
    c_bf->add_option("--method", bf_method)->check(CLI::IsMember({"labellings", "matrices", "both"}));
    c_bf->callback([&] {
        action = [&] {
            const auto lambda = parse_multipartition(bf_lambda);
            CommandResult r;
            if (bf_method == "both") {
                const auto a = branch_first(bf_m, lambda, BranchMethod::Matrices);
                const auto b = branch_first(bf_m, lambda, BranchMethod::Labellings);
                r.payload = multiplicities_to_json(bf_m, Rule::First, lambda, a);
                r.payload["agree"] = a == b;
                r.human = render_map(a);
                if (!(a == b)) {
                    r.exit_code = kVerification;
                    r.human += "labelling and matrix formulations disagree\n";
                }
                return r;
            }
            const auto method = bf_method == "labellings" ? BranchMethod::Labellings : BranchMethod::Matrices;
            const auto map = branch_first(bf_m, lambda, method);
            r.payload = multiplicities_to_json(bf_m, Rule::First, lambda, map);
            r.human = render_map(map);
            return r;
        };
    });

    // branch-second -m --lambda
    int bs_m = 1;
    std::string bs_lambda;
    auto* c_bs = sub("branch-second", "Restriction from S_m wr S_n to S_m wr S_{n-1}");
    c_bs->add_option("-m", bs_m)->required()->check(CLI::NonNegativeNumber);
    c_bs->add_option("--lambda", bs_lambda)->required();
    c_bs->callback([&] {
        action = [&] {
            const auto lambda = parse_multipartition(bs_lambda);
            const auto map = branch_second(bs_m, lambda);
            CommandResult r;
            r.payload = multiplicities_to_json(bs_m, Rule::Second, lambda, map);
            r.human = render_map(map);
            return r;
        };
    });

    // wreath-dim -m --lambda
    int wd_m = 1;
    std::string wd_lambda;
    auto* c_wd = sub("wreath-dim", "Dimension of the Specht module S^lambda of S_m wr S_n");
    c_wd->add_option("-m", wd_m)->required()->check(CLI::NonNegativeNumber);
    c_wd->add_option("--lambda", wd_lambda)->required();
    c_wd->callback([&] {
        action = [&] {
            const auto lambda = parse_multipartition(wd_lambda);
            const Count d = wreath_specht_dimension(wd_m, lambda);
            CommandResult r;
            r.payload = Json{{"m", wd_m}, {"lambda", to_json(lambda)}, {"dimension", d}};
            r.human = "dim S^" + to_string(lambda) + " = " + std::to_string(d) + "\n";
            return r;
        };
    });

    // cosets --gamma --alpha
    std::string dc_gamma, dc_alpha;
    auto* c_dc = sub("cosets", "(S_gamma, S_alpha)-double coset representatives from weakly increasing tableaux");
    c_dc->add_option("--gamma", dc_gamma)->required();
    c_dc->add_option("--alpha", dc_alpha)->required();
    c_dc->callback([&] {
        action = [&] {
            const auto gamma = parse_composition(dc_gamma), alpha = parse_composition(dc_alpha);
            const auto sys = double_coset_reps(gamma, alpha);
            Json reps = Json::array();
            std::ostringstream h;
            for (std::size_t k = 0; k < sys.reps.size(); ++k) {
                reps.push_back(Json{{"cycles", to_cycle_string(sys.reps[k])}, {"tableau", detail::tableau_json(sys.tableaux[k])}});
                h << to_cycle_string(sys.reps[k]) << "\n" << render(sys.tableaux[k]) << "\n";
            }
            CommandResult r;
            r.payload = Json{{"gamma", to_string(gamma)}, {"alpha", to_string(alpha)}, {"representatives", reps}};
            r.human = h.str();
            return r;
        };
    });

    // rho --sizes
    std::string rho_sizes;
    auto* c_rho = sub("rho", "The rho_i system of (S_gamma, S_{n-1})-double coset representatives");
    c_rho->add_option("--sizes", rho_sizes, "Size composition |lambda|, e.g. (3,1,0,2,3)")->required();
    c_rho->callback([&] {
        action = [&] {
            const auto sizes = parse_composition(rho_sizes);
            const int n = sizes.size();
            const auto standard = standard_tableau(Composition{n - 1, 1}, sizes);
            Json reps = Json::array();
            std::vector<std::string> cyc;
            std::ostringstream h;
            for (const auto& [i, rho] : rho_cosets(sizes)) {
                const auto t = act_on_tableau(standard, rho);
                reps.push_back(Json{{"index", i}, {"cycles", to_cycle_string(rho)}, {"tableau", detail::tableau_json(t)}});
                cyc.push_back(to_cycle_string(rho));
                h << "rho_" << i << " = " << to_cycle_string(rho) << "\n" << render(t);
            }
            h << "representatives: " << detail::join(cyc, ",") << "\n";
            CommandResult r;
            r.payload = Json{{"sizes", to_string(sizes)}, {"representatives", reps}};
            r.human = h.str();
            return r;
        };
    });

    // verify --suite [--max-m --max-n]
    std::string suite;
    int max_m = -1, max_n = -1;
    auto* c_verify = sub("verify", "Run an exhaustive verification suite");
    c_verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"lr-oracle", "cosets", "dimensions-first", "dimensions-second", "labelling-equivalence",
                               "stabilizers", "length-lemma"}));
    c_verify->add_option("--max-m", max_m)->check(CLI::PositiveNumber);
    c_verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
    c_verify->callback([&] {
        action = [&] {
            auto pick = [](int given, int fallback) { return given >= 0 ? given : fallback; };
            SuiteReport rep;
            if (suite == "lr-oracle") rep = verify_lr_oracle(pick(max_n, 8));
            else if (suite == "cosets") rep = verify_cosets(pick(max_n, 6));
            else if (suite == "stabilizers") rep = verify_stabilizers(pick(max_n, 6));
            else if (suite == "length-lemma") rep = verify_length_lemma(pick(max_n, 6));
            else if (suite == "labelling-equivalence") rep = verify_labelling_equivalence(pick(max_m, 4), pick(max_n, 4));
            else if (suite == "dimensions-first") rep = verify_dimensions(Rule::First, 1, pick(max_m, 4), pick(max_n, 5));
            else rep = verify_dimensions(Rule::Second, 1, pick(max_m, 5), pick(max_n, 6));
            Json details = Json::array();
            for (std::size_t k = 0; k < rep.failures.size() && k < 20; ++k) details.push_back(rep.failures[k]);
            CommandResult r;
            r.payload = Json{{"suite", rep.name},
                             {"checked", rep.checked},
                             {"failures", rep.failures.size()},
                             {"failure_details", details}};
            std::ostringstream h;
            h << rep.name << ": " << rep.checked << " instances checked, " << rep.failures.size() << " failures\n";
            for (const auto& f : rep.failures) h << "  FAIL " << f << "\n";
            r.human = h.str();
            if (!rep.ok()) r.exit_code = kVerification;
            return r;
        };
    });

    std::vector<const char*> argv{"wreath"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.human = app.help();
        r.payload = Json{{"help", r.human}};
        return r;
    } catch (const CLI::ParseError& e) {
        auto r = detail::error_result(kUsage, "usage", e.what());
        r.human = std::string("error: ") + e.what() + "\n\n" + app.help();
        return r;
    }

    CommandResult result;
    try {
        result = action();
    } catch (const Error& e) {
        result = detail::error_result(kComputation, e.code(), e.what());
    } catch (const std::exception& e) {
        result = detail::error_result(kComputation, "internal", e.what());
    }
    result.json_only = json_only;
    return result;
}

}  // namespace wreath::cli
