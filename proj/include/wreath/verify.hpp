#pragma once

// Exhaustive verification suites. Each returns the number of instances
// checked and a description of every failure; an empty failure list means
// the identity held everywhere in range.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wreath/branching.hpp"
#include "wreath/double_coset.hpp"
#include "wreath/littlewood_richardson.hpp"
#include "wreath/notation.hpp"
#include "wreath/partition.hpp"
#include "wreath/permutation.hpp"
#include "wreath/schur_oracle.hpp"

namespace wreath {

struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }

    void check(bool condition, const std::string& what) {
        ++checked;
        if (!condition) failures.push_back(what);
    }
};

/// LR rule against the Schur-polynomial product for |alpha| + |beta| <= max_total.
inline SuiteReport verify_lr_oracle(int max_total = 8) {
    SuiteReport report{"lr-oracle"};
    for (int total = 0; total <= max_total; ++total) {
        const auto lambdas = enumerate_partitions(total);
        for (int a = 0; a <= total; ++a)
            for (const auto& alpha : enumerate_partitions(a))
                for (const auto& beta : enumerate_partitions(total - a)) {
                    const auto expansion = schur_product_oracle(alpha, beta, std::max(max_total, kDefaultSchurOracleBound));
                    for (const auto& lambda : lambdas) {
                        auto it = expansion.find(lambda);
                        const Count expected = it == expansion.end() ? 0 : it->second;
                        const Count got = lr_coefficient(lambda, alpha, beta);
                        report.check(got == expected, "c^" + to_string(lambda) + "_{" + to_string(alpha) + "," +
                                                          to_string(beta) + "} = " + std::to_string(got) +
                                                          ", oracle " + std::to_string(expected));
                    }
                }
    }
    return report;
}

namespace detail {

/// Compositions used for the coset suites: all compositions with positive
/// parts, plus those with zero parts and at most three entries when n <= 4.
inline std::vector<Composition> coset_test_compositions(int n) {
    auto out = enumerate_strict_compositions(n);
    if (n <= 4)
        for (int len = 1; len <= 3; ++len)
            for (const auto& c : enumerate_compositions(n, len)) {
                const auto& p = c.parts();
                if (std::find(p.begin(), p.end(), 0) != p.end()) out.push_back(c);
            }
    return out;
}

}  // namespace detail

/// Tableau-indexed double coset representatives and the rho_i system
/// against exhaustive orbit closure, for n <= max_n.
inline SuiteReport verify_cosets(int max_n = 6) {
    SuiteReport report{"cosets"};
    for (int n = 1; n <= max_n; ++n) {
        const auto comps = detail::coset_test_compositions(n);
        for (const auto& gamma : comps)
            for (const auto& alpha : comps) {
                const std::string tag = "gamma=" + to_string(gamma) + " alpha=" + to_string(alpha);
                const auto sys = double_coset_reps(gamma, alpha);
                const auto oracle = brute_force_double_cosets(gamma, alpha, max_n);
                std::set<int> hit;
                for (const auto& rep : sys.reps) hit.insert(oracle.coset_of(rep));
                const auto standard = standard_tableau(alpha, gamma);
                bool acts = true;
                for (std::size_t k = 0; k < sys.reps.size(); ++k)
                    acts = acts && act_on_tableau(standard, sys.reps[k]) == sys.tableaux[k];
                Count total = 0;
                for (const auto& c : oracle.cosets) total += c.size();
                report.check(sys.reps.size() == oracle.cosets.size() && hit.size() == sys.reps.size() && acts &&
                                 total == factorial(unsigned(n)),
                             tag + ": " + std::to_string(sys.reps.size()) + " reps vs " +
                                 std::to_string(oracle.cosets.size()) + " cosets");
            }

        // rho_i for every size composition |lambda| of length p(m), m = 1..5.
        const Composition hook{n - 1, 1};
        for (int r : {1, 2, 3, 5, 7})
            for (const auto& sizes : enumerate_compositions(n, r)) {
                const auto oracle = brute_force_double_cosets(sizes, hook, max_n);
                const auto rhos = rho_cosets(sizes);
                const auto standard = standard_tableau(hook, sizes);
                std::set<int> hit;
                bool rows_ok = true;
                for (const auto& [i, rho] : rhos) {
                    hit.insert(oracle.coset_of(rho));
                    const auto t = act_on_tableau(standard, rho);
                    // weakly increasing first row, entry i in the second row
                    auto top = t.row(0);
                    rows_ok = rows_ok && std::is_sorted(top.begin(), top.end()) && t.row(1)[0] == i;
                }
                report.check(rhos.size() == oracle.cosets.size() && hit.size() == rhos.size() && rows_ok,
                             "rho sizes=" + to_string(sizes) + ": " + std::to_string(rhos.size()) + " rho vs " +
                                 std::to_string(oracle.cosets.size()) + " cosets");
            }
    }
    return report;
}

/// Stab(tau^alpha_gamma sigma) == sigma^-1 S_gamma sigma, over all sigma and
/// theta in S_n, all compositions gamma, alpha with positive parts.
inline SuiteReport verify_stabilizers(int max_n = 6) {
    SuiteReport report{"stabilizers"};
    for (int n = 1; n <= max_n; ++n) {
        const auto perms = all_permutations(n);
        const auto comps = enumerate_strict_compositions(n);
        for (const auto& gamma : comps) {
            const auto block = young_blocks(gamma);
            for (const auto& alpha : comps) {
                const auto standard = standard_tableau(alpha, gamma);
                for (const auto& sigma : perms) {
                    const auto moved = act_on_tableau(standard, sigma);
                    const auto& e = moved.entries();
                    const auto& s = sigma.images();
                    const auto sinv = sigma.inverse();
                    const auto& si = sinv.images();
                    bool agree = true;
                    for (const auto& theta : perms) {
                        const auto& th = theta.images();
                        // theta fixes the tableau iff every entry lands on an equal entry
                        bool fixes = true;
                        for (int i = 0; i < n && fixes; ++i) fixes = e[th[i] - 1] == e[i];
                        // sigma theta sigma^-1 in S_gamma iff it preserves the blocks
                        bool conj = true;
                        for (int i = 0; i < n && conj; ++i) conj = block[si[th[s[i] - 1] - 1] - 1] == block[i];
                        if (fixes != conj) {
                            agree = false;
                            break;
                        }
                    }
                    report.check(agree, "gamma=" + to_string(gamma) + " alpha=" + to_string(alpha) +
                                            " sigma=" + to_cycle_string(sigma));
                }
            }
        }
    }
    return report;
}

/// For every sigma in S_n and descent j of sigma^-1, len(sigma (j,j+1)) is
/// len(sigma) - 1. Also checks that elements of minimal length in their left
/// S_alpha-coset send tau^alpha_gamma to a tableau with weakly increasing rows.
inline SuiteReport verify_length_lemma(int max_n = 6) {
    SuiteReport report{"length-lemma"};
    for (int n = 1; n <= max_n; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& sigma : perms)
            for (int j : descents(sigma.inverse())) {
                const auto moved = sigma * Permutation::transposition(n, j, j + 1);
                report.check(length(moved) == length(sigma) - 1,
                             "sigma=" + to_cycle_string(sigma) + " j=" + std::to_string(j));
            }

        const auto comps = enumerate_strict_compositions(n);
        for (const auto& alpha : comps) {
            // Left coset sigma S_alpha is determined by the blocks of the images.
            const auto block = young_blocks(alpha);
            std::map<std::vector<int>, int> min_len;
            for (const auto& sigma : perms) {
                std::vector<int> key;
                for (int v : sigma.images()) key.push_back(block[v - 1]);
                auto [it, inserted] = min_len.emplace(key, length(sigma));
                if (!inserted) it->second = std::min(it->second, length(sigma));
            }
            for (const auto& gamma : comps) {
                const auto standard = standard_tableau(alpha, gamma);
                for (const auto& sigma : perms) {
                    std::vector<int> key;
                    for (int v : sigma.images()) key.push_back(block[v - 1]);
                    if (length(sigma) != min_len[key]) continue;
                    const auto t = act_on_tableau(standard, sigma);
                    bool rows_ok = true;
                    for (std::size_t r = 0; r < alpha.length(); ++r) {
                        auto row = t.row(r);
                        rows_ok = rows_ok && std::is_sorted(row.begin(), row.end());
                    }
                    report.check(rows_ok, "minimal sigma=" + to_cycle_string(sigma) + " alpha=" + to_string(alpha) +
                                              " gamma=" + to_string(gamma));
                }
            }
        }
    }
    return report;
}

/// Good-labelling sum == multipartition-matrix sum for every lambda, nu.
inline SuiteReport verify_labelling_equivalence(int max_m = 4, int max_n = 4) {
    SuiteReport report{"labelling-equivalence"};
    for (int m = 1; m <= max_m; ++m) {
        const auto layer = young_layer(m);
        for (int n = 0; n <= max_n; ++n) {
            const auto nus = enumerate_multipartitions(n, int(layer.lower.size()));
            for (const auto& lambda : enumerate_multipartitions(n, int(layer.upper.size())))
                for (const auto& nu : nus) {
                    const Count via_labels = labelling_multiplicity(layer, lambda, nu);
                    const Count via_matrices = matrix_multiplicity(layer.adjacency, lambda, nu);
                    report.check(via_labels == via_matrices,
                                 "m=" + std::to_string(m) + " lambda=" + to_string(lambda) + " nu=" + to_string(nu) +
                                     ": labellings " + std::to_string(via_labels) + ", matrices " +
                                     std::to_string(via_matrices));
                }
        }
    }
    return report;
}

/// Dimension identity for one of the branching rules over m in
/// [min_m, max_m] and n in [1, max_n].
inline SuiteReport verify_dimensions(Rule rule, int min_m, int max_m, int max_n) {
    SuiteReport report{rule == Rule::First ? "dimensions-first" : "dimensions-second"};
    for (int m = min_m; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            const auto r = verify_branch_dimensions(m, n, rule);
            report.checked += r.checked;
            for (const auto& f : r.failures)
                report.failures.push_back("m=" + std::to_string(m) + " lambda=" + to_string(f.lambda) + ": expected " +
                                          std::to_string(f.expected) + ", got " + std::to_string(f.got));
        }
    return report;
}

}  // namespace wreath
