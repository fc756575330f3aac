#pragma once

// Littlewood-Richardson coefficients c^lambda_{alpha,beta} by the LR rule and
// the multi-argument coefficients c(lambda; alpha^1, ..., alpha^t) built from
// them by peeling off one argument at a time.

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "wreath/checked.hpp"
#include "wreath/partition.hpp"
#include "wreath/tableau.hpp"

namespace wreath {

/// Number of semistandard skew tableaux of shape lambda \ alpha and type
/// beta whose reverse reading word is a lattice word. Zero when alpha does
/// not fit in lambda or the sizes disagree.
///
/// Boxes are filled in reverse reading order, so the lattice condition is
/// checked on every prefix as the word grows and dead branches are cut early.
inline Count lr_coefficient(const Partition& lambda, const Partition& alpha, const Partition& beta) {
    if (!fits_inside(alpha.as_composition(), lambda)) return 0;
    if (beta.size() != lambda.size() - alpha.size()) return 0;
    if (beta.empty()) return 1;

    const SkewShape shape(lambda, alpha.as_composition());
    struct Box {
        int right;  // index of the box to the right (filled earlier), or -1
        int above;  // index of the nearest box above in the same column, or -1
    };
    std::vector<Box> boxes;
    {
        const int width = lambda.parts()[0];
        std::vector<int> last_in_column(width, -1);
        for (std::size_t i = 0; i < shape.rows(); ++i) {
            for (int c = shape.row_end(i) - 1; c >= shape.row_start(i); --c) {
                int idx = int(boxes.size());
                boxes.push_back({c + 1 < shape.row_end(i) ? idx - 1 : -1, last_in_column[c]});
            }
            // Columns are updated after the whole row so "above" never points
            // into the current row.
            int idx = int(boxes.size()) - 1;
            for (int c = shape.row_start(i); c < shape.row_end(i); ++c) last_in_column[c] = idx--;
        }
    }

    const int max_entry = int(beta.length());
    const auto& target = beta.parts();
    std::vector<int> used(max_entry, 0);
    std::vector<int> fill(boxes.size(), 0);
    Count total = 0;

    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == boxes.size()) {
            total = checked_add(total, 1);
            return;
        }
        int lo = 1, hi = max_entry;
        if (boxes[b].above >= 0) lo = fill[boxes[b].above] + 1;
        if (boxes[b].right >= 0) hi = std::min(hi, fill[boxes[b].right]);
        for (int v = lo; v <= hi; ++v) {
            if (used[v - 1] == target[v - 1]) continue;
            if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;  // lattice prefix
            ++used[v - 1];
            fill[b] = v;
            self(self, b + 1);
            --used[v - 1];
        }
    };
    rec(rec, 0);
    return total;
}

/// c(lambda; parts) following the defining recursion literally, with no
/// caching and no reordering of the arguments:
///   t = 0: 1 iff lambda is empty
///   t = 1: 1 iff parts == (lambda)
///   t = 2: c^lambda_{parts[0], parts[1]}
///   t > 2: sum over beta |- |lambda| - |parts[0]| of
///          c^lambda_{parts[0], beta} * c(beta; parts[1..])
inline Count lr_multi_direct(const Partition& lambda, const std::vector<Partition>& parts) {
    int total_size = 0;
    for (const auto& p : parts) total_size += p.size();
    if (parts.empty()) return lambda.empty() ? 1 : 0;
    if (parts.size() == 1) return parts[0] == lambda ? 1 : 0;
    if (total_size != lambda.size()) return 0;
    if (parts.size() == 2) return lr_coefficient(lambda, parts[0], parts[1]);
    const std::vector<Partition> rest(parts.begin() + 1, parts.end());
    Count sum = 0;
    for (const auto& beta : enumerate_partitions(lambda.size() - parts[0].size())) {
        Count c = lr_coefficient(lambda, parts[0], beta);
        if (c == 0) continue;
        sum = checked_add(sum, checked_mul(c, lr_multi_direct(beta, rest)));
    }
    return sum;
}

namespace detail {

/// Process-wide memo for lr_multi, keyed on (lambda, canonical argument
/// list). Readers share the lock; a miss computes outside the lock, so two
/// threads may race to insert the same (identical) value.
class LrCache {
public:
    using Key = std::pair<Partition, std::vector<Partition>>;

    static LrCache& instance() {
        static LrCache cache;
        return cache;
    }

    bool lookup(const Key& key, Count& value) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        value = it->second;
        return true;
    }

    void store(Key key, Count value) {
        std::unique_lock lock(mutex_);
        map_.emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Count> map_;
};

inline Count lr_multi_canonical(const Partition& lambda, const std::vector<Partition>& parts) {
    if (parts.empty()) return lambda.empty() ? 1 : 0;
    if (parts.size() == 1) return parts[0] == lambda ? 1 : 0;
    if (parts.size() == 2) return lr_coefficient(lambda, parts[0], parts[1]);

    LrCache::Key key{lambda, parts};
    Count cached;
    if (LrCache::instance().lookup(key, cached)) return cached;

    // peel off the lexicographically greatest argument
    const Partition& first = parts.back();
    const std::vector<Partition> rest(parts.begin(), parts.end() - 1);
    Count sum = 0;
    for (const auto& beta : enumerate_partitions(lambda.size() - first.size())) {
        Count c = lr_coefficient(lambda, first, beta);
        if (c == 0) continue;
        sum = checked_add(sum, checked_mul(c, lr_multi_canonical(beta, rest)));
    }
    LrCache::instance().store(std::move(key), sum);
    return sum;
}

}  // namespace detail

/// c(lambda; parts), memoized on a canonical argument list: empty partitions
/// dropped, the rest sorted. lr_multi_direct computes the same value without
/// reordering or caching.
inline Count lr_multi(const Partition& lambda, std::vector<Partition> parts) {
    int total_size = 0;
    for (const auto& p : parts) total_size += p.size();
    if (total_size != lambda.size()) return 0;
    std::erase_if(parts, [](const Partition& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end());
    return detail::lr_multi_canonical(lambda, parts);
}

}  // namespace wreath
