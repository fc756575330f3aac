#pragma once

// Text notation shared by the CLI and the JSON output:
//   partition       [2,1]        (empty partition: [])
//   composition     (3,1,0,2,3)  (empty composition: ())
//   multipartition  [[2],[1,1],[1,1]]

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreath/error.hpp"
#include "wreath/partition.hpp"

namespace wreath {

/// Insertion-ordered JSON, so emitted documents keep their key order.
using Json = nlohmann::ordered_json;

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

inline Json parse_json_array(std::string_view text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error("parse_error", std::string("cannot parse ") + what + ": '" + std::string(text) + "'");
    return j;
}

inline std::vector<int> ints_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw Error("parse_error", std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw Error("parse_error", std::string(what) + " must contain integers only");
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const Partition& p) { return "[" + detail::join_ints(p.parts()) + "]"; }

inline std::string to_string(const Composition& c) { return "(" + detail::join_ints(c.parts()) + ")"; }

inline std::string to_string(const Multipartition& mp) {
    std::string out = "[";
    for (std::size_t i = 0; i < mp.components.size(); ++i) {
        if (i) out += ',';
        out += to_string(mp.components[i]);
    }
    return out + "]";
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Multipartition& mp) {
    Json j = Json::array();
    for (const auto& p : mp.components) j.push_back(to_json(p));
    return j;
}

inline Partition partition_from_json(const Json& j) {
    return Partition(detail::ints_from_json(j, "partition"));
}

inline Multipartition multipartition_from_json(const Json& j) {
    if (!j.is_array()) throw Error("parse_error", "multipartition must be an array of partitions");
    Multipartition mp;
    for (const auto& e : j) mp.components.push_back(partition_from_json(e));
    return mp;
}

inline Partition parse_partition(std::string_view text) {
    return partition_from_json(detail::parse_json_array(text, "partition"));
}

inline Multipartition parse_multipartition(std::string_view text) {
    return multipartition_from_json(detail::parse_json_array(text, "multipartition"));
}

/// Accepts "(3,1,0,2,3)"; surrounding whitespace is ignored.
inline Composition parse_composition(std::string_view text) {
    auto fail = [&]() -> Error {
        return Error("parse_error", "cannot parse composition: '" + std::string(text) + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail();
    std::string body = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw fail();
            for (char c : item)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
            parts.push_back(std::stoi(item));
        }
        if (body.back() == ',') throw fail();
    }
    return Composition(std::move(parts));
}

/// "p;p;..." list of partitions, e.g. "[1];[1]". An empty string is the
/// empty tuple.
inline std::vector<Partition> parse_partition_list(std::string_view text) {
    std::vector<Partition> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(';', start);
        out.push_back(parse_partition(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace wreath
