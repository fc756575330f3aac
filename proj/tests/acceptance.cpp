// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "wreath/wreath.hpp"

using namespace wreath;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from_reports(std::initializer_list<SuiteReport> reports) {
    Outcome o;
    for (const auto& r : reports) {
        o.detail += (o.detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.checked) + " checked/" +
                    std::to_string(r.failures.size()) + " failed";
        if (!r.ok()) {
            o.ok = false;
            o.detail += " [" + r.failures.front() + "]";
        }
    }
    return o;
}

Outcome branch_first_example() {
    const auto r = cli::run({"branch-first", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--json"});
    Outcome o{false, "nu=[[3],[2,1]] not found"};
    if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
    for (const auto& e : r.payload["multiplicities"])
        if (e["nu"].dump() == "[[3],[2,1]]") o = {e["mult"] == 1, "mult=" + e["mult"].dump()};
    return o;
}

Outcome labelling_equivalence() {
    SuiteReport report{"labelling-equivalence"};
    for (int m = 2; m <= 4; ++m) {
        const auto layer = young_layer(m);
        for (int n = 1; n <= 4; ++n)
            for (const auto& lambda : enumerate_multipartitions(n, int(layer.upper.size())))
                for (const auto& nu : enumerate_multipartitions(n, int(layer.lower.size())))
                    report.check(labelling_multiplicity(layer, lambda, nu) ==
                                     matrix_multiplicity(layer.adjacency, lambda, nu),
                                 "m=" + std::to_string(m) + " lambda=" + to_string(lambda) + " nu=" + to_string(nu));
    }
    return from_reports({report});
}

Outcome specht_consistency() {
    SuiteReport report{"specht-dimension"};
    for (int m = 0; m <= 8; ++m)
        for (const auto& p : enumerate_partitions(m)) {
            const Count hook = specht_dimension(p);
            report.check(hook == oracle::standard_tableaux(p), "brute force " + to_string(p));
            if (m <= 7)
                report.check(hook == lr_multi(p, std::vector<Partition>(m, Partition{1})), "lr_multi " + to_string(p));
        }
    return from_reports({report});
}

Outcome coset_machinery() {
    SuiteReport listed{"rho-listed-cosets"};
    const Composition sizes{3, 1, 0, 2, 3};
    const auto cosets = brute_force_double_cosets(sizes, {8, 1}, 9);
    std::set<int> expected, got;
    for (const char* c : {"e", "(6,9,8,7)", "(4,9,8,7,6,5)", "(3,9,8,7,6,5,4)"}) expected.insert(cosets.coset_of(parse_cycles(c, 9)));
    for (const auto& [i, rho] : rho_cosets(sizes)) got.insert(cosets.coset_of(rho));
    std::set<int> from_tableaux;
    for (const auto& rep : double_coset_reps(sizes, {8, 1}).reps) from_tableaux.insert(cosets.coset_of(rep));
    listed.check(expected.size() == 4 && cosets.cosets.size() == 4, "four distinct double cosets");
    listed.check(got == expected, "rho_i hit the listed double cosets");
    listed.check(from_tableaux == expected, "tableau representatives hit the listed double cosets");
    return from_reports({verify_cosets(6), verify_stabilizers(6), verify_length_lemma(6), listed});
}

Outcome m_one_degeneration() {
    SuiteReport report{"m=1"};
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            MultiplicityMap expected;
            for (const auto& d : removable_boxes(p)) expected.add(Multipartition{{d}}, 1);
            report.check(branch_second(1, n, Multipartition{{p}}) == expected, to_string(p));
        }
    return from_reports({report});
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"branch-first-example", 1, branch_first_example},
        {"labelling-matrix-equivalence", 120, labelling_equivalence},
        {"first-rule-dimensions", 300, [] { return from_reports({verify_dimensions(Rule::First, 2, 4, 5)}); }},
        {"second-rule-dimensions", 120, [] { return from_reports({verify_dimensions(Rule::Second, 2, 5, 6)}); }},
        {"lr-oracle", 180, [] { return from_reports({verify_lr_oracle(8)}); }},
        {"specht-dimension", 60, specht_consistency},
        {"coset-machinery", 300, coset_machinery},
        {"m1-degeneration", 1, m_one_degeneration},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("%s %d %s (%.2fs, limit %.0fs) %s%s\n", pass ? "PASS" : "FAIL", index, c.name, secs,
                    c.limit_seconds, o.detail.c_str(), in_time ? "" : " [time limit exceeded]");
    }
    return failed ? 1 : 0;
}
