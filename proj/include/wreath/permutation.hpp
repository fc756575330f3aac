#pragma once

// Permutations of {1..n} acting on the right: (i)(sigma pi) = ((i)sigma)pi.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/error.hpp"
#include "wreath/tableau.hpp"

namespace wreath {

class Permutation {
public:
    Permutation() = default;

    /// One-line form: images[i-1] = (i)sigma.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > int(images_.size()) || seen[v])
                throw Error("invalid_argument", "images do not form a permutation");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img), Unchecked{});
    }

    /// The transposition (a, b) in S_n.
    static Permutation transposition(int n, int a, int b) {
        auto img = identity(n).images_;
        std::swap(img.at(a - 1), img.at(b - 1));
        return Permutation(std::move(img), Unchecked{});
    }

    /// Product of cycles applied left to right, e.g. {{1,12,3,6},{5,7,13}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation result = identity(n);
        for (const auto& cyc : cycles) {
            std::vector<int> img = identity(n).images_;
            std::vector<bool> used(n + 1, false);
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int a = cyc[k];
                if (a < 1 || a > n || used[a]) throw Error("invalid_argument", "bad cycle");
                used[a] = true;
                img[a - 1] = cyc[(k + 1) % cyc.size()];
            }
            result = result * Permutation(std::move(img), Unchecked{});
        }
        return result;
    }

    int degree() const noexcept { return int(images_.size()); }
    const std::vector<int>& images() const noexcept { return images_; }

    /// (i)sigma for 1-based i.
    int operator()(int i) const { return images_.at(i - 1); }

    /// Right-action product: apply *this first, then other.
    Permutation operator*(const Permutation& other) const {
        if (degree() != other.degree()) throw Error("degree_mismatch", "permutation degrees differ");
        std::vector<int> img(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) img[i] = other.images_[images_[i] - 1];
        return Permutation(std::move(img), Unchecked{});
    }

    Permutation inverse() const {
        std::vector<int> img(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i] - 1] = int(i) + 1;
        return Permutation(std::move(img), Unchecked{});
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != int(i) + 1) return false;
        return true;
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element; fixed points omitted.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size() + 1, false);
        for (int i = 1; i <= degree(); ++i) {
            if (seen[i] || images_[i - 1] == i) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = images_[j - 1]) {
                seen[j] = true;
                cyc.push_back(j);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// Number of inversions: pairs i < j with (i)sigma > (j)sigma.
inline int length(const Permutation& sigma) {
    const auto& img = sigma.images();
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv;
}

/// All j (1 <= j < n) with (j)sigma > (j+1)sigma.
inline std::vector<int> descents(const Permutation& sigma) {
    std::vector<int> out;
    const auto& img = sigma.images();
    for (std::size_t j = 1; j < img.size(); ++j)
        if (img[j - 1] > img[j]) out.push_back(int(j));
    return out;
}

/// Cycle notation; the identity prints as "e".
inline std::string to_cycle_string(const Permutation& sigma) {
    auto cyc = sigma.cycles();
    if (cyc.empty()) return "e";
    std::string out;
    for (const auto& c : cyc) {
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(c[k]);
        }
        out += ')';
    }
    return out;
}

/// Parses "(1,12,3,6)(5,7,13)(8,10)" or "e" as an element of S_n. Cycles
/// compose left to right.
inline Permutation parse_cycles(std::string_view text, int n) {
    auto fail = [&]() -> Error { return Error("parse_error", "cannot parse cycles: '" + std::string(text) + "'"); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "e" || s.empty()) return Permutation::identity(n);
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw fail();
        std::size_t close = s.find(')', pos);
        if (close == std::string::npos) throw fail();
        std::vector<int> cyc;
        std::string num;
        for (std::size_t k = pos + 1; k <= close; ++k) {
            char c = s[k];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (c == ',' || c == ')') {
                if (num.empty()) throw fail();
                cyc.push_back(std::stoi(num));
                num.clear();
            } else {
                throw fail();
            }
        }
        cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    return Permutation::from_cycles(n, cycles);
}

/// tau sigma: the entry in box i moves to box (i)sigma. This is a right
/// action: act(act(t, s), p) == act(t, s * p).
inline Tableau act_on_tableau(const Tableau& tau, const Permutation& sigma) {
    if (int(tau.box_count()) != sigma.degree())
        throw Error("degree_mismatch", "permutation degree does not match the number of boxes");
    std::vector<int> moved(tau.box_count());
    const auto& src = tau.entries();
    for (std::size_t i = 0; i < src.size(); ++i) moved[sigma.images()[i] - 1] = src[i];
    return Tableau(tau.shape(), std::move(moved));
}

}  // namespace wreath
