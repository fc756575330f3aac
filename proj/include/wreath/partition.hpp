#pragma once

// Integer partitions and the value types built from them. Everything here
// is immutable once constructed.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "wreath/checked.hpp"
#include "wreath/error.hpp"

namespace wreath {

/// A finite sequence of non-negative integers. Zero parts are kept.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw Error("invalid_argument", "composition parts must be non-negative");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based, as in the usual notation gamma_i.
    int operator[](std::size_t i) const { return parts_.at(i - 1); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the partition of 0. Trailing zeros passed to the constructor are dropped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw Error("invalid_argument", "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw Error("invalid_argument", "partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; parts past the end read as 0.
    int operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    Composition as_composition() const { return Composition(parts_); }

    /// Lexicographic order, comparing part by part with absent parts read as
    /// 0. Because parts are positive this is plain sequence comparison.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// True when the diagram of `inner` lies inside the diagram of `outer`.
inline bool fits_inside(const Composition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 1; i <= inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

struct Multipartition {
    std::vector<Partition> components;

    Multipartition() = default;
    Multipartition(std::initializer_list<Partition> c) : components(c) {}
    explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}

    std::size_t length() const noexcept { return components.size(); }

    int size() const noexcept {
        int s = 0;
        for (const auto& p : components) s += p.size();
        return s;
    }

    /// |ul lambda|: the composition of component sizes.
    Composition size_composition() const {
        std::vector<int> sizes;
        sizes.reserve(components.size());
        for (const auto& p : components) sizes.push_back(p.size());
        return Composition(std::move(sizes));
    }

    const Partition& operator[](std::size_t i) const { return components.at(i - 1); }

    auto operator<=>(const Multipartition&) const = default;
};

/// Rectangular grid, row-major.
template <class T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
    Grid(std::size_t rows, std::size_t cols, std::vector<T> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (cells_.size() != rows_ * cols_)
            throw Error("invalid_argument", "matrix must be rectangular");
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    // 0-based
    const T& at(std::size_t i, std::size_t j) const { return cells_.at(i * cols_ + j); }
    T& at(std::size_t i, std::size_t j) { return cells_.at(i * cols_ + j); }

    const std::vector<T>& cells() const noexcept { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

using IntegerMatrix = Grid<int>;
using MultipartitionMatrix = Grid<Multipartition>;

inline IntegerMatrix make_integer_matrix(const std::vector<std::vector<int>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<int> cells;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error("invalid_argument", "matrix must be rectangular");
        for (int v : r) {
            if (v < 0) throw Error("invalid_argument", "matrix entries must be non-negative");
            cells.push_back(v);
        }
    }
    return IntegerMatrix(rows.size(), cols, std::move(cells));
}

// ---------------------------------------------------------------------------
// Enumeration

/// All partitions of m in strictly decreasing lexicographic order, from (m)
/// down to (1^m). m = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(int m) {
    if (m < 0) throw Error("invalid_argument", "cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first with the largest next part tried first gives descending
    // lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

/// Weak compositions of n with exactly k parts, in descending lexicographic
/// order. k = 0 yields one (empty) composition iff n = 0.
inline std::vector<Composition> enumerate_compositions(int n, int k) {
    std::vector<Composition> out;
    if (n < 0 || k < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 0) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        int lo = slots == 1 ? remaining : 0;
        for (int p = remaining; p >= lo; --p) {
            cur.push_back(p);
            self(self, remaining - p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

/// Compositions of n with all parts positive, descending lexicographic order.
inline std::vector<Composition> enumerate_strict_compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = remaining; p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// All multipartitions of n with exactly k components: first the size
/// composition (descending lex), then the Cartesian product of partition
/// lists in descending lex order.
inline std::vector<Multipartition> enumerate_multipartitions(int n, int k) {
    std::vector<Multipartition> out;
    std::vector<std::vector<Partition>> by_size;
    for (int s = 0; s <= std::max(n, 0); ++s) by_size.push_back(enumerate_partitions(s));
    for (const auto& sizes : enumerate_compositions(n, k)) {
        std::vector<Partition> cur;
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == sizes.length()) {
                out.emplace_back(cur);
                return;
            }
            for (const auto& p : by_size[sizes.parts()[idx]]) {
                cur.push_back(p);
                self(self, idx + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// Multipartitions with a prescribed size composition, same order as above.
inline std::vector<Multipartition> enumerate_multipartitions_with_sizes(const Composition& sizes) {
    std::vector<Multipartition> out;
    std::vector<std::vector<Partition>> lists;
    for (int s : sizes.parts()) lists.push_back(enumerate_partitions(s));
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == lists.size()) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& p : lists[idx]) {
            cur.push_back(p);
            self(self, idx + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Single-partition operations

/// Partitions obtained from lambda by removing one box, ordered by the row
/// the box was removed from.
inline std::vector<Partition> removable_boxes(const Partition& lambda) {
    if (lambda.empty()) throw Error("no_removable_boxes", "no removable boxes");
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        // Row i has a removable corner iff the row below is strictly shorter.
        int below = i + 1 < p.size() ? p[i + 1] : 0;
        if (p[i] > below) {
            auto q = p;
            --q[i];
            out.emplace_back(std::move(q));
        }
    }
    return out;
}

/// Hook length of the box in (0-based) row i, column j.
inline int hook_length(const Partition& lambda, int i, int j) {
    const auto& p = lambda.parts();
    int arm = p[i] - j - 1;
    int leg = 0;
    for (std::size_t r = i + 1; r < p.size() && p[r] > j; ++r) ++leg;
    return arm + leg + 1;
}

/// Dimension of the Specht module S^lambda by the hook length formula.
inline Count specht_dimension(const Partition& lambda) {
    // n! / prod(hooks), accumulated as a running exact quotient: multiply in
    // 1..n and divide out hooks whenever they divide evenly, then finish.
    // Using 128-bit intermediates keeps this exact well beyond n = 20.
    using Wide = unsigned __int128;
    const int n = lambda.size();
    std::vector<int> hooks;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) hooks.push_back(hook_length(lambda, int(i), j));
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    Wide acc = 1;
    std::size_t next_hook = 0;
    const Wide limit = ~Wide(0) / Wide(n > 0 ? n : 1);
    for (int k = 2; k <= n; ++k) {
        if (acc > limit) throw Error("overflow", "Specht dimension exceeds 128-bit intermediate range");
        acc *= Wide(k);
        while (next_hook < hooks.size() && acc % Wide(hooks[next_hook]) == 0) acc /= Wide(hooks[next_hook++]);
    }
    for (; next_hook < hooks.size(); ++next_hook) acc /= Wide(hooks[next_hook]);
    if (acc > Wide(~Count(0))) throw Error("overflow", "Specht dimension does not fit in 64 bits");
    return Count(acc);
}

/// [gamma]_i: decrement the i-th (1-based) part, keeping the length.
inline Composition remove_part_at(const Composition& gamma, std::size_t i) {
    if (i < 1 || i > gamma.length())
        throw Error("invalid_argument", "part index out of range");
    if (gamma[i] == 0) throw Error("part_not_removable", "part not removable");
    auto parts = gamma.parts();
    --parts[i - 1];
    return Composition(std::move(parts));
}

/// Concatenate the parts of a sequence of compositions (or partitions).
template <class Shape>
Composition concat_multicomposition(const std::vector<Shape>& components) {
    std::vector<int> parts;
    for (const auto& c : components) parts.insert(parts.end(), c.parts().begin(), c.parts().end());
    return Composition(std::move(parts));
}

inline Composition concat_multicomposition(const Multipartition& mp) {
    return concat_multicomposition(mp.components);
}

}  // namespace wreath
