#pragma once

// Double cosets S_gamma \ S_n / S_alpha of Young subgroups, indexed by
// tableaux of shape alpha and type gamma with weakly increasing rows.

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "wreath/checked.hpp"
#include "wreath/error.hpp"
#include "wreath/partition.hpp"
#include "wreath/permutation.hpp"
#include "wreath/tableau.hpp"

namespace wreath {

/// Block index (0-based) of each point 1..n under the composition gamma;
/// result[i-1] is the block containing i.
inline std::vector<int> young_blocks(const Composition& gamma) {
    std::vector<int> block;
    for (std::size_t b = 0; b < gamma.length(); ++b)
        for (int k = 0; k < gamma.parts()[b]; ++k) block.push_back(int(b));
    return block;
}

/// sigma lies in the Young subgroup S_gamma iff it preserves every block.
inline bool in_young_subgroup(const Permutation& sigma, const Composition& gamma) {
    if (gamma.size() != sigma.degree()) throw Error("degree_mismatch", "composition size differs from degree");
    auto block = young_blocks(gamma);
    for (int i = 1; i <= sigma.degree(); ++i)
        if (block[i - 1] != block[sigma(i) - 1]) return false;
    return true;
}

/// tau^alpha_gamma: boxes in order receive gamma_1 ones, gamma_2 twos, ...
inline Tableau standard_tableau(const Composition& alpha, const Composition& gamma) {
    if (alpha.size() != gamma.size()) throw Error("size_mismatch", "shape and type have different sizes");
    std::vector<int> entries;
    for (std::size_t v = 0; v < gamma.length(); ++v) entries.insert(entries.end(), gamma.parts()[v], int(v) + 1);
    return Tableau(alpha, std::move(entries));
}

/// W^alpha_gamma: tableaux of shape alpha, type gamma, weakly increasing
/// rows; lexicographic in box order.
inline std::vector<Tableau> enumerate_weakly_increasing(const Composition& alpha, const Composition& gamma) {
    if (alpha.size() != gamma.size()) throw Error("size_mismatch", "shape and type have different sizes");
    std::vector<Tableau> out;
    const int n = alpha.size();
    std::vector<bool> row_start(n, false);
    {
        int pos = 0;
        for (int p : alpha.parts()) {
            if (p > 0) row_start[pos] = true;
            pos += p;
        }
    }
    std::vector<int> remaining = gamma.parts();
    std::vector<int> fill(n, 0);
    auto rec = [&](auto&& self, int b) -> void {
        if (b == n) {
            out.emplace_back(alpha, fill);
            return;
        }
        int lo = row_start[b] ? 1 : fill[b - 1];
        for (int v = lo; v <= int(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            fill[b] = v;
            self(self, b + 1);
            ++remaining[v - 1];
        }
    };
    rec(rec, 0);
    return out;
}

/// Some sigma with act(tau^alpha_gamma, sigma) == target: the k-th
/// occurrence of each value in the standard filling goes to the k-th
/// occurrence of that value in the target.
inline Permutation permutation_to(const Tableau& standard, const Tableau& target) {
    const auto& src = standard.entries();
    const auto& dst = target.entries();
    if (src.size() != dst.size()) throw Error("size_mismatch", "tableaux differ in size");
    int max_value = 0;
    for (int v : src) max_value = std::max(max_value, v);
    for (int v : dst) max_value = std::max(max_value, v);
    std::vector<std::vector<int>> slots(max_value + 1);
    for (std::size_t i = dst.size(); i-- > 0;) slots[dst[i]].push_back(int(i) + 1);
    std::vector<int> img(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto& s = slots[src[i]];
        if (s.empty()) throw Error("size_mismatch", "tableaux have different types");
        img[i] = s.back();
        s.pop_back();
    }
    return Permutation(std::move(img));
}

struct CosetSystem {
    Composition gamma;
    Composition alpha;
    std::vector<Permutation> reps;
    std::vector<Tableau> tableaux;  // tableaux[k] == act(standard, reps[k])
};

/// One representative per tableau in W^alpha_gamma. These form a complete
/// non-redundant system of (S_gamma, S_alpha)-double coset representatives.
inline CosetSystem double_coset_reps(const Composition& gamma, const Composition& alpha) {
    CosetSystem sys{gamma, alpha, {}, enumerate_weakly_increasing(alpha, gamma)};
    const Tableau standard = standard_tableau(alpha, gamma);
    sys.reps.reserve(sys.tableaux.size());
    for (const auto& t : sys.tableaux) sys.reps.push_back(permutation_to(standard, t));
    return sys;
}

struct RhoCoset {
    int index;  // i, 1-based component index with |lambda^i| > 0
    Permutation rho;
};

/// rho_i = (b_i, n, n-1, ..., b_i + 1) with b_i = |lambda^1| + ... + |lambda^i|,
/// or the identity when b_i = n; one entry per nonempty component.
inline std::vector<RhoCoset> rho_cosets(const Composition& sizes) {
    const int n = sizes.size();
    if (n < 1) throw Error("invalid_argument", "rho cosets need n >= 1");
    std::vector<RhoCoset> out;
    int b = 0;
    for (std::size_t i = 0; i < sizes.length(); ++i) {
        b += sizes.parts()[i];
        if (sizes.parts()[i] == 0) continue;
        if (b == n) {
            out.push_back({int(i) + 1, Permutation::identity(n)});
        } else {
            std::vector<int> cyc{b};
            for (int k = n; k > b; --k) cyc.push_back(k);
            out.push_back({int(i) + 1, Permutation::from_cycles(n, {cyc})});
        }
    }
    return out;
}

inline std::vector<RhoCoset> rho_cosets(const Multipartition& lambda) { return rho_cosets(lambda.size_composition()); }

// ---------------------------------------------------------------------------
// Exhaustive oracle

/// Lehmer-code rank of a permutation in lexicographic order, 0-based.
inline std::size_t permutation_rank(const std::vector<int>& images) {
    const std::size_t n = images.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (images[j] < images[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

/// All elements of S_n in lexicographic order of their one-line form.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto img = Permutation::identity(n).images();
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

struct DoubleCosetPartition {
    int n = 0;
    std::vector<std::vector<Permutation>> cosets;  // each sorted; ordered by least element
    std::vector<int> coset_by_rank;                 // permutation_rank -> coset index

    int coset_of(const Permutation& sigma) const { return coset_by_rank.at(permutation_rank(sigma.images())); }
};

inline constexpr int kDefaultOracleBound = 7;

/// Partition S_n into (S_gamma, S_alpha)-double cosets by orbit closure
/// under left multiplication by the Coxeter generators of S_gamma and right
/// multiplication by those of S_alpha.
inline DoubleCosetPartition brute_force_double_cosets(const Composition& gamma, const Composition& alpha,
                                                      int bound = kDefaultOracleBound) {
    const int n = gamma.size();
    if (alpha.size() != n) throw Error("size_mismatch", "compositions have different sizes");
    if (n > bound) throw Error("oracle_bound_exceeded", "oracle bound exceeded");

    // Adjacent transpositions (j, j+1) lying inside a block.
    auto generators = [&](const Composition& c) {
        auto block = young_blocks(c);
        std::vector<int> js;
        for (int j = 1; j < n; ++j)
            if (block[j - 1] == block[j]) js.push_back(j);
        return js;
    };
    const auto left_gens = generators(gamma);
    const auto right_gens = generators(alpha);

    DoubleCosetPartition result;
    result.n = n;
    const auto elements = all_permutations(n);
    result.coset_by_rank.assign(elements.size(), -1);

    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (result.coset_by_rank[start] >= 0) continue;
        const int id = int(result.cosets.size());
        std::vector<Permutation> members;
        std::deque<std::vector<int>> queue{elements[start].images()};
        result.coset_by_rank[start] = id;
        while (!queue.empty()) {
            auto img = std::move(queue.front());
            queue.pop_front();
            auto visit = [&](std::vector<int> next) {
                auto r = permutation_rank(next);
                if (result.coset_by_rank[r] < 0) {
                    result.coset_by_rank[r] = id;
                    queue.push_back(std::move(next));
                }
            };
            for (int j : left_gens) {
                // s_j * sigma: positions j and j+1 swap their images.
                auto next = img;
                std::swap(next[j - 1], next[j]);
                visit(std::move(next));
            }
            for (int j : right_gens) {
                // sigma * s_j: values j and j+1 swap.
                auto next = img;
                for (int& v : next) {
                    if (v == j) v = j + 1;
                    else if (v == j + 1) v = j;
                }
                visit(std::move(next));
            }
            members.emplace_back(std::move(img));
        }
        std::sort(members.begin(), members.end());
        result.cosets.push_back(std::move(members));
    }
    return result;
}

}  // namespace wreath
