#pragma once

// Branching multiplicities for Specht modules of S_m wr S_n restricted to
// S_{m-1} wr S_n (first rule) and S_m wr S_{n-1} (second rule).
//
// The first rule is computed two ways: as a sum over multipartition
// matrices (the general filtration formula specialised to the adjacency
// matrix of the Young graph layer) and as a sum over good labellings of
// that layer. The two are in bijection and must agree term for term.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/checked.hpp"
#include "wreath/error.hpp"
#include "wreath/littlewood_richardson.hpp"
#include "wreath/notation.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// ---------------------------------------------------------------------------
// Young graph layer

struct Edge {
    int upper;  // 0-based index into YoungLayer::upper
    int lower;  // 0-based index into YoungLayer::lower
    auto operator<=>(const Edge&) const = default;
};

/// Partitions of m (upper) and m-1 (lower), both in descending lex order,
/// joined when the lower one is the upper one minus a box.
struct YoungLayer {
    int m = 0;
    std::vector<Partition> upper;
    std::vector<Partition> lower;
    std::vector<Edge> edges;  // sorted by (upper, lower)
    IntegerMatrix adjacency;  // upper.size() x lower.size(), 0/1

    /// Edge indices touching upper node i, by ascending lower index.
    std::vector<std::vector<int>> at_upper;
    /// Edge indices touching lower node j, by ascending upper index.
    std::vector<std::vector<int>> at_lower;
};

inline YoungLayer young_layer(int m) {
    if (m < 1) throw Error("invalid_argument", "young_layer needs m >= 1");
    YoungLayer layer;
    layer.m = m;
    layer.upper = enumerate_partitions(m);
    layer.lower = enumerate_partitions(m - 1);
    layer.adjacency = IntegerMatrix(layer.upper.size(), layer.lower.size(), 0);
    for (std::size_t i = 0; i < layer.upper.size(); ++i)
        for (const auto& theta : removable_boxes(layer.upper[i])) {
            auto it = std::find(layer.lower.begin(), layer.lower.end(), theta);
            layer.adjacency.at(i, it - layer.lower.begin()) = 1;
        }
    layer.at_upper.resize(layer.upper.size());
    layer.at_lower.resize(layer.lower.size());
    for (std::size_t i = 0; i < layer.upper.size(); ++i)
        for (std::size_t j = 0; j < layer.lower.size(); ++j)
            if (layer.adjacency.at(i, j)) {
                int e = int(layer.edges.size());
                layer.edges.push_back({int(i), int(j)});
                layer.at_upper[i].push_back(e);
                layer.at_lower[j].push_back(e);
            }
    return layer;
}

// ---------------------------------------------------------------------------
// Transport enumeration: non-negative integer matrices with prescribed row
// and column sums, supported on the cells where `support` is nonzero.

inline std::vector<IntegerMatrix> enumerate_transports(const IntegerMatrix& support, const std::vector<int>& row_sums,
                                                       const std::vector<int>& col_sums) {
    const std::size_t s = support.rows(), t = support.cols();
    std::vector<IntegerMatrix> out;
    if (row_sums.size() != s || col_sums.size() != t)
        throw Error("size_mismatch", "row/column sums do not match the matrix dimensions");
    long total_r = 0, total_c = 0;
    for (int v : row_sums) total_r += v;
    for (int v : col_sums) total_c += v;
    if (total_r != total_c) return out;

    // Capacity left in each column after rows > i: used to prune rows that
    // would leave a later column impossible to fill.
    IntegerMatrix cur(s, t, 0);
    std::vector<int> budget = col_sums;

    auto feasible_tail = [&](std::size_t next_row) {
        // Every remaining column budget must be reachable from the rows left.
        for (std::size_t j = 0; j < t; ++j) {
            if (budget[j] == 0) continue;
            long reach = 0;
            for (std::size_t i = next_row; i < s; ++i)
                if (support.at(i, j)) reach += row_sums[i];
            if (reach < budget[j]) return false;
        }
        return true;
    };

    auto fill_row = [&](auto&& self, std::size_t i, std::size_t j, int left) -> void {
        if (i == s) {
            out.push_back(cur);
            return;
        }
        if (j == t) {
            if (left == 0 && feasible_tail(i + 1)) self(self, i + 1, 0, i + 1 < s ? row_sums[i + 1] : 0);
            return;
        }
        if (!support.at(i, j)) {
            self(self, i, j + 1, left);
            return;
        }
        int hi = std::min(left, budget[j]);
        // Descending so the first matrix found puts mass as early as possible.
        for (int v = hi; v >= 0; --v) {
            cur.at(i, j) = v;
            budget[j] -= v;
            self(self, i, j + 1, left - v);
            budget[j] += v;
        }
        cur.at(i, j) = 0;
    };
    if (s == 0) {
        if (total_c == 0) out.push_back(cur);
        return out;
    }
    fill_row(fill_row, 0, 0, row_sums[0]);
    return out;
}

// ---------------------------------------------------------------------------
// Good labellings

struct GoodLabelling {
    std::shared_ptr<const YoungLayer> layer;
    Multipartition lambda;
    Multipartition nu;
    std::vector<Partition> labels;  // labels[e] labels layer->edges[e]
};

namespace detail {

inline void check_layer_shapes(const YoungLayer& layer, const Multipartition& lambda, const Multipartition& nu) {
    if (lambda.length() != layer.upper.size())
        throw Error("component_count_mismatch", "lambda must have one component per partition of m");
    if (nu.length() != layer.lower.size())
        throw Error("component_count_mismatch", "nu must have one component per partition of m-1");
    if (lambda.size() != nu.size()) throw Error("size_mismatch", "lambda and nu have different sizes");
}

/// Cartesian product of partitions of the given sizes, descending lex.
template <class Visit>
void for_each_labelling(const std::vector<int>& sizes, Visit&& visit) {
    std::vector<std::vector<Partition>> lists;
    for (int s : sizes) lists.push_back(enumerate_partitions(s));
    std::vector<Partition> cur(sizes.size());
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == lists.size()) {
            visit(cur);
            return;
        }
        for (const auto& p : lists[k]) {
            cur[k] = p;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<int> edge_sizes_from_flow(const YoungLayer& layer, const IntegerMatrix& flow) {
    std::vector<int> sizes;
    sizes.reserve(layer.edges.size());
    for (const auto& e : layer.edges) sizes.push_back(flow.at(e.upper, e.lower));
    return sizes;
}

/// M(L) from raw pieces, so callers can avoid building GoodLabelling values.
inline Count labelling_coefficient(const YoungLayer& layer, const Multipartition& lambda, const Multipartition& nu,
                                   const std::vector<Partition>& labels) {
    Count product = 1;
    std::vector<Partition> args;
    for (std::size_t i = 0; i < layer.upper.size(); ++i) {
        args.clear();
        for (int e : layer.at_upper[i]) args.push_back(labels[e]);
        Count c = lr_multi(lambda.components[i], args);
        if (c == 0) return 0;
        product = checked_mul(product, c);
    }
    for (std::size_t j = 0; j < layer.lower.size(); ++j) {
        args.clear();
        for (int e : layer.at_lower[j]) args.push_back(labels[e]);
        Count c = lr_multi(nu.components[j], args);
        if (c == 0) return 0;
        product = checked_mul(product, c);
    }
    return product;
}

}  // namespace detail

/// All good labellings of Y_m(lambda, nu): first the edge-size flows, then
/// every choice of partition of each edge size.
inline std::vector<GoodLabelling> enumerate_good_labellings(const YoungLayer& layer, const Multipartition& lambda,
                                                            const Multipartition& nu) {
    detail::check_layer_shapes(layer, lambda, nu);
    auto shared = std::make_shared<const YoungLayer>(layer);
    std::vector<GoodLabelling> out;
    const auto rows = lambda.size_composition().parts();
    const auto cols = nu.size_composition().parts();
    for (const auto& flow : enumerate_transports(layer.adjacency, rows, cols))
        detail::for_each_labelling(detail::edge_sizes_from_flow(layer, flow), [&](const std::vector<Partition>& labels) {
            out.push_back({shared, lambda, nu, labels});
        });
    return out;
}

/// M(L): product over all nodes of lr_multi(node partition, incident labels),
/// incident edges taken in ascending order of the opposite endpoint.
inline Count labelling_coefficient(const GoodLabelling& L) {
    return detail::labelling_coefficient(*L.layer, L.lambda, L.nu, L.labels);
}

// ---------------------------------------------------------------------------
// Multipartition matrices

/// Mat(L; alpha x beta): s x t matrices of multipartitions, entry (i,j)
/// having exactly L_ij components, with integer row sums alpha and column
/// sums beta.
inline std::vector<MultipartitionMatrix> mat_lambda(const IntegerMatrix& L, const Composition& alpha,
                                                    const Composition& beta) {
    if (alpha.length() != L.rows() || beta.length() != L.cols())
        throw Error("size_mismatch", "alpha/beta lengths must match the matrix dimensions");
    if (alpha.size() != beta.size()) throw Error("size_mismatch", "alpha and beta have different sizes");
    std::vector<MultipartitionMatrix> out;
    const std::size_t s = L.rows(), t = L.cols();
    for (const auto& sizes : enumerate_transports(L, alpha.parts(), beta.parts())) {
        std::vector<std::vector<Multipartition>> choices(s * t);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < t; ++j)
                choices[i * t + j] = L.at(i, j) == 0 ? std::vector<Multipartition>{Multipartition{}}
                                                     : enumerate_multipartitions(sizes.at(i, j), L.at(i, j));
        MultipartitionMatrix cur(s, t);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == s * t) {
                out.push_back(cur);
                return;
            }
            for (const auto& mp : choices[k]) {
                cur.at(k / t, k % t) = mp;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// R_i: components of the entries along row i (1-based), empty partitions
/// dropped.
inline std::vector<Partition> row_tuple(const MultipartitionMatrix& M, std::size_t i) {
    if (i < 1 || i > M.rows()) throw Error("invalid_argument", "row index out of range");
    std::vector<Partition> out;
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (const auto& p : M.at(i - 1, j).components)
            if (!p.empty()) out.push_back(p);
    return out;
}

/// C_j: components of the entries down column j (1-based), empty partitions
/// dropped.
inline std::vector<Partition> col_tuple(const MultipartitionMatrix& M, std::size_t j) {
    if (j < 1 || j > M.cols()) throw Error("invalid_argument", "column index out of range");
    std::vector<Partition> out;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (const auto& p : M.at(i, j - 1).components)
            if (!p.empty()) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicity maps

/// Multipartition -> positive multiplicity. Zero entries are never stored.
class MultiplicityMap {
public:
    void add(const Multipartition& key, Count value) {
        if (value == 0) return;
        auto [it, inserted] = entries_.emplace(key, value);
        if (!inserted) it->second = checked_add(it->second, value);
    }

    Count at(const Multipartition& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::map<Multipartition, Count>& entries() const noexcept { return entries_; }

    /// Output order: descending lex on the concatenated parts, ties broken
    /// by descending lex on the component sizes.
    std::vector<std::pair<Multipartition, Count>> sorted_entries() const {
        std::vector<std::pair<Multipartition, Count>> v(entries_.begin(), entries_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            auto fa = concat_multicomposition(a.first), fb = concat_multicomposition(b.first);
            if (fa != fb) return fa > fb;
            return a.first.size_composition() > b.first.size_composition();
        });
        return v;
    }

    bool operator==(const MultiplicityMap&) const = default;

private:
    std::map<Multipartition, Count> entries_;
};

/// Multiplicities of S^nu(X_1..X_t) in a filtration of S^eta(Y_1..Y_s) when
/// each Y_i is filtered by the X_j with multiplicities A_ij.
inline MultiplicityMap filtration_multiplicities(const IntegerMatrix& A, const Multipartition& eta, std::size_t t) {
    if (A.rows() != eta.length() || A.cols() != t)
        throw Error("size_mismatch", "A must be s x t with s the number of components of eta");
    MultiplicityMap result;
    const int n = eta.size();
    const Composition row_sizes = eta.size_composition();
    std::vector<std::vector<Partition>> partitions_of;
    for (int k = 0; k <= n; ++k) partitions_of.push_back(enumerate_partitions(k));

    for (const auto& col_sizes : enumerate_compositions(n, int(t))) {
        for (const auto& M : mat_lambda(A, row_sizes, col_sizes)) {
            Count row_product = 1;
            for (std::size_t i = 1; i <= M.rows() && row_product; ++i)
                row_product = checked_mul(row_product, lr_multi(eta.components[i - 1], row_tuple(M, i)));
            if (row_product == 0) continue;

            // For each column, the partitions nu^j with nonzero c(nu^j; C_j).
            std::vector<std::vector<std::pair<Partition, Count>>> options(t);
            bool dead = false;
            for (std::size_t j = 0; j < t && !dead; ++j) {
                auto args = col_tuple(M, j + 1);
                for (const auto& p : partitions_of[col_sizes.parts()[j]])
                    if (Count c = lr_multi(p, args)) options[j].emplace_back(p, c);
                dead = options[j].empty();
            }
            if (dead) continue;

            std::vector<Partition> nu(t);
            auto rec = [&](auto&& self, std::size_t j, Count acc) -> void {
                if (j == t) {
                    result.add(Multipartition(nu), acc);
                    return;
                }
                for (const auto& [p, c] : options[j]) {
                    nu[j] = p;
                    self(self, j + 1, checked_mul(acc, c));
                }
            };
            rec(rec, 0, row_product);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Branching rules

enum class BranchMethod { Matrices, Labellings };

inline std::size_t partition_count(int m) { return enumerate_partitions(m).size(); }

/// Restriction from S_m wr S_n to S_{m-1} wr S_n.
inline MultiplicityMap branch_first(int m, const Multipartition& lambda,
                                    BranchMethod method = BranchMethod::Matrices) {
    const YoungLayer layer = young_layer(m);
    if (lambda.length() != layer.upper.size())
        throw Error("component_count_mismatch", "lambda must have one component per partition of m");
    if (method == BranchMethod::Matrices) return filtration_multiplicities(layer.adjacency, lambda, layer.lower.size());

    MultiplicityMap result;
    const int n = lambda.size();
    const auto rows = lambda.size_composition().parts();
    for (const auto& col_sizes : enumerate_compositions(n, int(layer.lower.size()))) {
        auto flows = enumerate_transports(layer.adjacency, rows, col_sizes.parts());
        if (flows.empty()) continue;
        for (const auto& nu : enumerate_multipartitions_with_sizes(col_sizes)) {
            Count sum = 0;
            for (const auto& flow : flows)
                detail::for_each_labelling(detail::edge_sizes_from_flow(layer, flow),
                                           [&](const std::vector<Partition>& labels) {
                                               sum = checked_add(sum, detail::labelling_coefficient(layer, lambda, nu, labels));
                                           });
            result.add(nu, sum);
        }
    }
    return result;
}

/// Sum of M(L) over all good labellings of Y_m(lambda, nu).
inline Count labelling_multiplicity(const YoungLayer& layer, const Multipartition& lambda, const Multipartition& nu) {
    detail::check_layer_shapes(layer, lambda, nu);
    Count sum = 0;
    for (const auto& flow :
         enumerate_transports(layer.adjacency, lambda.size_composition().parts(), nu.size_composition().parts()))
        detail::for_each_labelling(detail::edge_sizes_from_flow(layer, flow), [&](const std::vector<Partition>& labels) {
            sum = checked_add(sum, detail::labelling_coefficient(layer, lambda, nu, labels));
        });
    return sum;
}

/// Sum over Mat(A; |lambda| x |nu|) of prod c(lambda^i; R_i) * prod c(nu^j; C_j),
/// evaluated for a single nu.
inline Count matrix_multiplicity(const IntegerMatrix& A, const Multipartition& lambda, const Multipartition& nu) {
    Count sum = 0;
    for (const auto& M : mat_lambda(A, lambda.size_composition(), nu.size_composition())) {
        Count term = 1;
        for (std::size_t i = 1; i <= M.rows() && term; ++i)
            term = checked_mul(term, lr_multi(lambda.components[i - 1], row_tuple(M, i)));
        for (std::size_t j = 1; j <= M.cols() && term; ++j)
            term = checked_mul(term, lr_multi(nu.components[j - 1], col_tuple(M, j)));
        sum = checked_add(sum, term);
    }
    return sum;
}

/// dim S^lambda for S_m wr S_n:
///   n! / prod |lambda^i|!  *  prod dim(S^{mu^i})^{|lambda^i|} * dim(S^{lambda^i})
/// with mu^1 > mu^2 > ... the partitions of m. m = 0 is allowed (S_0 wr S_n = S_n).
inline Count wreath_specht_dimension(int m, const Multipartition& lambda) {
    if (m < 0) throw Error("invalid_argument", "m must be non-negative");
    const auto mus = enumerate_partitions(m);
    if (lambda.length() != mus.size())
        throw Error("component_count_mismatch", "lambda must have one component per partition of m");
    Count dim = 1;
    int placed = 0;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const int size = lambda.components[i].size();
        placed += size;
        dim = checked_mul(dim, binomial(unsigned(placed), unsigned(size)));
        dim = checked_mul(dim, checked_pow(specht_dimension(mus[i]), unsigned(size)));
        dim = checked_mul(dim, specht_dimension(lambda.components[i]));
    }
    return dim;
}

/// Restriction from S_m wr S_n to S_m wr S_{n-1}: remove one box from one
/// component lambda^i, with multiplicity dim S^{mu^i}.
inline MultiplicityMap branch_second(int m, const Multipartition& lambda) {
    if (m < 0) throw Error("invalid_argument", "m must be non-negative");
    const auto mus = enumerate_partitions(m);
    if (lambda.length() != mus.size())
        throw Error("component_count_mismatch", "lambda must have one component per partition of m");
    if (lambda.size() == 0) throw Error("invalid_argument", "second branching rule needs n >= 1");
    MultiplicityMap result;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (lambda.components[i].empty()) continue;
        const Count mult = specht_dimension(mus[i]);
        for (const auto& delta_i : removable_boxes(lambda.components[i])) {
            Multipartition delta = lambda;
            delta.components[i] = delta_i;
            result.add(delta, mult);
        }
    }
    return result;
}

inline MultiplicityMap branch_second(int m, int n, const Multipartition& lambda) {
    if (n != lambda.size()) throw Error("size_mismatch", "n does not match the size of lambda");
    return branch_second(m, lambda);
}

// ---------------------------------------------------------------------------
// Dimension checks

enum class Rule { First, Second };

inline const char* rule_name(Rule r) { return r == Rule::First ? "first" : "second"; }

struct DimensionFailure {
    Multipartition lambda;
    Count expected;  // wreath_specht_dimension(m, lambda)
    Count got;       // sum of mult * dim over the restriction
};

struct DimensionReport {
    int m = 0;
    int n = 0;
    Rule rule = Rule::First;
    std::size_t checked = 0;
    std::vector<DimensionFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// For every p(m)-multipartition lambda of n, restriction must preserve
/// dimension: sum over the branching of mult * dim equals dim S^lambda.
inline DimensionReport verify_branch_dimensions(int m, int n, Rule rule) {
    DimensionReport report{m, n, rule, 0, {}};
    const int r = int(partition_count(m));
    for (const auto& lambda : enumerate_multipartitions(n, r)) {
        const Count expected = wreath_specht_dimension(m, lambda);
        Count got = 0;
        if (rule == Rule::First) {
            const auto map = branch_first(m, lambda);
            for (const auto& [nu, mult] : map.entries())
                got = checked_add(got, checked_mul(mult, wreath_specht_dimension(m - 1, nu)));
        } else {
            if (n == 0) continue;
            const auto map = branch_second(m, lambda);
            for (const auto& [delta, mult] : map.entries())
                got = checked_add(got, checked_mul(mult, wreath_specht_dimension(m, delta)));
        }
        ++report.checked;
        if (got != expected) report.failures.push_back({lambda, expected, got});
    }
    return report;
}

// ---------------------------------------------------------------------------
// JSON

/// {"m":..,"n":..,"rule":..,"lambda":..,"multiplicities":[{"nu":..,"mult":..},..]}
inline Json multiplicities_to_json(int m, Rule rule, const Multipartition& lambda,
                                             const MultiplicityMap& map) {
    Json doc;
    Json entries = Json::array();
    for (const auto& [nu, mult] : map.sorted_entries()) {
        Json e;
        e["nu"] = to_json(nu);
        e["mult"] = mult;
        entries.push_back(e);
    }
    doc["m"] = m;
    doc["n"] = lambda.size();
    doc["rule"] = rule_name(rule);
    doc["lambda"] = to_json(lambda);
    doc["multiplicities"] = entries;
    return doc;
}

}  // namespace wreath
