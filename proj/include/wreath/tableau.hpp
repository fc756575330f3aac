#pragma once

// Young and skew tableaux, plus the word combinatorics behind the
// Littlewood-Richardson rule.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "wreath/error.hpp"
#include "wreath/partition.hpp"

namespace wreath {

/// A filling of the Young diagram of a composition (empty rows allowed).
/// Entries are stored in box-number order: left to right along each row,
/// top row first. Box numbers are 1-based positions in that order.
class Tableau {
public:
    Tableau() = default;
    Tableau(Composition shape, std::vector<int> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (int(entries_.size()) != shape_.size())
            throw Error("size_mismatch", "tableau entry count does not match its shape");
        for (int e : entries_)
            if (e <= 0) throw Error("invalid_argument", "tableau entries must be positive");
        offsets_.reserve(shape_.length() + 1);
        for (int p : shape_.parts()) offsets_.push_back(offsets_.back() + p);
    }

    static Tableau from_rows(Composition shape, const std::vector<std::vector<int>>& rows) {
        if (rows.size() != shape.length())
            throw Error("size_mismatch", "row count does not match shape length");
        std::vector<int> flat;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (int(rows[i].size()) != shape.parts()[i])
                throw Error("size_mismatch", "row length does not match shape");
            flat.insert(flat.end(), rows[i].begin(), rows[i].end());
        }
        return Tableau(std::move(shape), std::move(flat));
    }

    /// Shape read off the row lengths.
    static Tableau from_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<int> shape;
        for (const auto& r : rows) shape.push_back(int(r.size()));
        return from_rows(Composition(std::move(shape)), rows);
    }

    const Composition& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t box_count() const noexcept { return entries_.size(); }

    /// 0-based row index.
    std::span<const int> row(std::size_t i) const {
        return std::span<const int>(entries_).subspan(offsets_.at(i), offsets_.at(i + 1) - offsets_.at(i));
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < shape_.length(); ++i) {
            auto r = row(i);
            out.emplace_back(r.begin(), r.end());
        }
        return out;
    }

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && entries_ == o.entries_; }
    auto operator<=>(const Tableau& o) const {
        if (auto c = shape_ <=> o.shape_; c != 0) return c;
        return entries_ <=> o.entries_;
    }

private:
    Composition shape_;
    std::vector<int> entries_;
    std::vector<int> offsets_{0};
};

/// outer \ inner, where inner lies wholly inside outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Composition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!fits_inside(inner_, outer_))
            throw Error("invalid_argument", "inner shape does not lie inside the outer shape");
    }
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const noexcept { return outer_; }
    const Composition& inner() const noexcept { return inner_; }
    std::size_t rows() const noexcept { return outer_.length(); }

    /// First occupied column of row i (0-based row and column).
    int row_start(std::size_t i) const { return i < inner_.length() ? inner_.parts()[i] : 0; }
    int row_end(std::size_t i) const { return outer_.parts()[i]; }
    int row_length(std::size_t i) const { return row_end(i) - row_start(i); }

    int box_count() const {
        int s = 0;
        for (std::size_t i = 0; i < rows(); ++i) s += row_length(i);
        return s;
    }

    bool contains(std::size_t i, int col) const { return i < rows() && col >= row_start(i) && col < row_end(i); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Composition inner_;
};

/// Rows hold only the occupied boxes; row i's entries sit in absolute
/// columns row_start(i) .. row_end(i)-1.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.rows())
            throw Error("size_mismatch", "row count does not match skew shape");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (int(rows_[i].size()) != shape_.row_length(i))
                throw Error("size_mismatch", "row length does not match skew shape");
            for (int e : rows_[i])
                if (e <= 0) throw Error("invalid_argument", "tableau entries must be positive");
        }
    }

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Entry at absolute (row, column); the box must be in the shape.
    int at(std::size_t i, int col) const { return rows_[i][col - shape_.row_start(i)]; }

    bool operator==(const SkewTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// ---------------------------------------------------------------------------

namespace detail {

inline Composition content_of(const std::vector<int>& values) {
    int max_entry = 0;
    for (int v : values) max_entry = std::max(max_entry, v);
    std::vector<int> counts(max_entry, 0);
    for (int v : values) ++counts[v - 1];
    return Composition(std::move(counts));
}

}  // namespace detail

/// gamma_i = number of entries equal to i, up to the largest entry.
inline Composition content_type(const Tableau& t) { return detail::content_of(t.entries()); }

inline Composition content_type(const SkewTableau& t) {
    std::vector<int> all;
    for (const auto& r : t.rows()) all.insert(all.end(), r.begin(), r.end());
    return detail::content_of(all);
}

/// Rows weakly increase; each column, read top to bottom over the boxes
/// actually present, strictly increases.
inline bool is_semistandard(const SkewTableau& t) {
    const auto& sh = t.shape();
    const int width = sh.rows() ? sh.outer().parts()[0] : 0;
    std::vector<int> last_in_column(width, 0);  // 0 = nothing seen yet
    for (std::size_t i = 0; i < sh.rows(); ++i) {
        const auto& row = t.rows()[i];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0 && row[k] < row[k - 1]) return false;
            int col = sh.row_start(i) + int(k);
            if (last_in_column[col] != 0 && row[k] <= last_in_column[col]) return false;
            last_in_column[col] = row[k];
        }
    }
    return true;
}

inline bool is_semistandard(const Tableau& t) {
    int width = 0;
    for (int p : t.shape().parts()) width = std::max(width, p);
    std::vector<int> last_in_column(width, 0);
    for (std::size_t i = 0; i < t.shape().length(); ++i) {
        auto row = t.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0 && row[k] < row[k - 1]) return false;
            if (last_in_column[k] != 0 && row[k] <= last_in_column[k]) return false;
            last_in_column[k] = row[k];
        }
    }
    return true;
}

/// Rows top to bottom, each read right to left.
inline std::vector<int> reverse_reading_word(const SkewTableau& t) {
    std::vector<int> w;
    for (const auto& r : t.rows()) w.insert(w.end(), r.rbegin(), r.rend());
    return w;
}

/// Every prefix contains at least as many i's as (i+1)'s, for all i.
inline bool is_lattice_word(std::span<const int> word) {
    std::vector<int> counts;
    for (int v : word) {
        if (v <= 0) throw Error("invalid_argument", "lattice words have positive entries");
        if (int(counts.size()) < v) counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
    return true;
}

/// All semistandard skew tableaux of the given shape and type, in
/// lexicographic order of the row-major filling. Entries range over
/// 1..length(type); a size mismatch gives no tableaux.
inline std::vector<SkewTableau> enumerate_skew_ssyt(const SkewShape& shape, const Composition& type) {
    std::vector<SkewTableau> out;
    if (shape.box_count() != type.size()) return out;

    struct Box {
        std::size_t row;
        int col;
        int left;   // index of the box to the left in the same row, or -1
        int above;  // index of the nearest box above in the same column, or -1
    };
    std::vector<Box> boxes;
    {
        const int width = shape.rows() ? shape.outer().parts()[0] : 0;
        std::vector<int> last_in_column(width, -1);
        for (std::size_t i = 0; i < shape.rows(); ++i)
            for (int c = shape.row_start(i); c < shape.row_end(i); ++c) {
                int idx = int(boxes.size());
                boxes.push_back({i, c, c > shape.row_start(i) ? idx - 1 : -1, last_in_column[c]});
                last_in_column[c] = idx;
            }
    }

    const int max_entry = int(type.length());
    std::vector<int> remaining = type.parts();
    std::vector<int> fill(boxes.size(), 0);

    auto emit = [&]() {
        std::vector<std::vector<int>> rows(shape.rows());
        for (std::size_t b = 0; b < boxes.size(); ++b) rows[boxes[b].row].push_back(fill[b]);
        out.emplace_back(shape, std::move(rows));
    };

    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == boxes.size()) {
            emit();
            return;
        }
        int lo = 1;
        if (boxes[b].left >= 0) lo = std::max(lo, fill[boxes[b].left]);
        if (boxes[b].above >= 0) lo = std::max(lo, fill[boxes[b].above] + 1);
        for (int v = lo; v <= max_entry; ++v) {
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

/// One text line per row, space separated, '.' for removed inner boxes.
inline std::string render(const SkewTableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.shape().rows(); ++i) {
        std::string line;
        for (int c = 0; c < t.shape().row_start(i); ++c) line += line.empty() ? "." : " .";
        for (int v : t.rows()[i]) line += (line.empty() ? "" : " ") + std::to_string(v);
        out += line + "\n";
    }
    return out;
}

inline std::string render(const Tableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.shape().length(); ++i) {
        std::string line;
        for (int v : t.row(i)) line += (line.empty() ? "" : " ") + std::to_string(v);
        out += line + "\n";
    }
    return out;
}

}  // namespace wreath
