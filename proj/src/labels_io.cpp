// Copyright 2026 The stanceval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stanceval/labels_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "stanceval/error.hpp"

namespace stanceval {

namespace {

using nlohmann::json;

constexpr std::string_view kRumourEvalMember = "subtaskaenglish";
constexpr std::size_t kMaxListedIds = 10;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(first, last - first + 1);
}

LabeledSet parse_tsv(std::istream& in, std::string source) {
    LabeledSet::Entries entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line.front() == '#') continue;

        const auto tabs = std::count(line.begin(), line.end(), '\t');
        if (tabs != 1) {
            throw parse_error(fmt::format("{}:{}: expected exactly one tab separating id and label, found {}",
                                          source, line_no, tabs));
        }
        const auto tab = line.find('\t');
        const auto id = std::string(trim(std::string_view(line).substr(0, tab)));
        const auto label = canonical_label(std::string_view(line).substr(tab + 1));
        if (id.empty()) throw parse_error(fmt::format("{}:{}: empty instance id", source, line_no));
        if (label.empty()) throw parse_error(fmt::format("{}:{}: empty label for id '{}'", source, line_no, id));
        if (!entries.emplace(id, label).second) {
            throw duplicate_error(fmt::format("{}:{}: duplicate instance id '{}'", source, line_no, id));
        }
    }
    if (in.bad()) throw parse_error(fmt::format("{}: read failure", source));
    if (entries.empty()) throw degenerate_error(fmt::format("{}: no labelled instances", source));
    return LabeledSet(std::move(source), std::move(entries));
}

LabeledSet::Entries entries_from_object(const json& object, const std::string& source,
                                        std::string_view where) {
    if (!object.is_object()) {
        throw parse_error(fmt::format("{}: {} must be a JSON object mapping ids to labels", source, where));
    }
    LabeledSet::Entries entries;
    for (const auto& [id, value] : object.items()) {
        if (!value.is_string()) {
            throw parse_error(fmt::format("{}: {}[\"{}\"] must be a string label, got {}", source, where, id,
                                          value.type_name()));
        }
        if (trim(id).empty()) throw parse_error(fmt::format("{}: {} contains an empty id", source, where));
        const auto label = canonical_label(value.get<std::string>());
        if (label.empty()) throw parse_error(fmt::format("{}: {}[\"{}\"] is an empty label", source, where, id));
        entries.emplace(std::string(trim(id)), label);
    }
    return entries;
}

LabeledSet parse_json(std::istream& in, LabelFormat format, std::string source) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw parse_error(fmt::format("{}: read failure", source));

    // nlohmann keeps the last of duplicated keys, so ids are checked while parsing.
    const std::size_t id_depth = format == LabelFormat::JsonMap ? 1 : 2;
    std::string top_key;
    std::set<std::string> seen;
    json::parser_callback_t check_ids = [&](int depth, json::parse_event_t event, json& parsed) {
        if (event != json::parse_event_t::key) return true;
        const auto key = parsed.get<std::string>();
        if (depth == 1) top_key = key;
        const bool is_id = static_cast<std::size_t>(depth) == id_depth &&
                           (format == LabelFormat::JsonMap || top_key == kRumourEvalMember);
        if (is_id && !seen.insert(std::string(trim(key))).second) {
            throw duplicate_error(fmt::format("{}: duplicate instance id '{}'", source, key));
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(text, check_ids);
    } catch (const json::parse_error& e) {
        throw parse_error(fmt::format("{}: byte {}: {}", source, e.byte, e.what()));
    }

    LabeledSet::Entries entries;
    if (format == LabelFormat::JsonMap) {
        entries = entries_from_object(doc, source, "top-level value");
    } else {
        if (!doc.is_object()) throw parse_error(fmt::format("{}: top-level value must be a JSON object", source));
        const auto it = doc.find(kRumourEvalMember);
        if (it == doc.end()) {
            throw parse_error(fmt::format("{}: missing member \"{}\"", source, kRumourEvalMember));
        }
        entries = entries_from_object(*it, source, fmt::format("member \"{}\"", kRumourEvalMember));
    }
    if (entries.empty()) throw degenerate_error(fmt::format("{}: no labelled instances", source));
    return LabeledSet(std::move(source), std::move(entries));
}

std::string list_ids(const std::vector<std::string>& ids) {
    const auto shown = std::min(ids.size(), kMaxListedIds);
    auto out = fmt::format("{}", fmt::join(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(shown), ", "));
    if (ids.size() > shown) out += fmt::format(", ... ({} more)", ids.size() - shown);
    return out;
}

}  // namespace

LabelFormat parse_label_format(std::string_view name) {
    if (name == "tsv") return LabelFormat::Tsv;
    if (name == "json-map") return LabelFormat::JsonMap;
    if (name == "rumoureval2019") return LabelFormat::RumourEval2019;
    throw config_error(fmt::format("unknown label format '{}' (expected tsv, json-map or rumoureval2019)", name));
}

std::string_view to_string(LabelFormat format) noexcept {
    switch (format) {
        case LabelFormat::Tsv: return "tsv";
        case LabelFormat::JsonMap: return "json-map";
        case LabelFormat::RumourEval2019: return "rumoureval2019";
    }
    return "tsv";
}

LabeledSet::LabeledSet(std::string source, Entries entries) : source_(std::move(source)) {
    if (entries.empty()) throw degenerate_error(fmt::format("{}: labelled set is empty", source_));
    for (auto& [id, label] : entries) {
        if (id.empty()) throw parse_error(fmt::format("{}: empty instance id", source_));
        if (trim(id) != id || id.find_first_of("\t\r\n") != std::string::npos) {
            throw parse_error(fmt::format("{}: instance id '{}' has surrounding whitespace or a control character",
                                          source_, id));
        }
        auto canonical = canonical_label(label);
        if (canonical.empty()) throw parse_error(fmt::format("{}: empty label for id '{}'", source_, id));
        entries_.emplace_hint(entries_.end(), id, std::move(canonical));
    }
}

LabeledSet parse_labels(std::istream& in, LabelFormat format, std::string source) {
    if (format == LabelFormat::Tsv) return parse_tsv(in, std::move(source));
    return parse_json(in, format, std::move(source));
}

LabeledSet parse_labels(const std::filesystem::path& path, LabelFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(fmt::format("{}: cannot open file", path.string()));
    return parse_labels(in, format, path.string());
}

std::string to_tsv(const LabeledSet& set) {
    std::string out;
    for (const auto& [id, label] : set.entries()) out += fmt::format("{}\t{}\n", id, label);
    return out;
}

std::string to_json_map(const LabeledSet& set) {
    json object = json::object();
    for (const auto& [id, label] : set.entries()) object[id] = label;
    return object.dump(2) + "\n";
}

AlignMode parse_align_mode(std::string_view name) {
    if (name == "strict") return AlignMode::Strict;
    if (name == "intersect") return AlignMode::Intersect;
    throw config_error(fmt::format("unknown alignment mode '{}' (expected strict or intersect)", name));
}

std::string_view to_string(AlignMode mode) noexcept {
    return mode == AlignMode::Strict ? "strict" : "intersect";
}

AlignedPairs align(const LabeledSet& gold, const LabeledSet& pred, const LabelSchema& schema, AlignMode mode) {
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    AlignedPairs out;

    // Both maps iterate in ascending id order, so a merge walk finds the differences.
    auto g = gold.entries().begin();
    auto p = pred.entries().begin();
    const auto g_end = gold.entries().end();
    const auto p_end = pred.entries().end();
    while (g != g_end || p != p_end) {
        if (p == p_end || (g != g_end && g->first < p->first)) {
            missing.push_back(g->first);
            ++g;
        } else if (g == g_end || p->first < g->first) {
            extra.push_back(p->first);
            ++p;
        } else {
            out.ids.push_back(g->first);
            out.gold.push_back(g->second);
            out.pred.push_back(p->second);
            ++g;
            ++p;
        }
    }
    out.missing_in_pred = missing.size();
    out.extra_in_pred = extra.size();

    if (mode == AlignMode::Strict && (!missing.empty() || !extra.empty())) {
        std::string msg = fmt::format("{} does not cover the ids of {}: {} missing, {} extra",
                                      pred.source(), gold.source(), missing.size(), extra.size());
        if (!missing.empty()) msg += fmt::format("; missing: {}", list_ids(missing));
        if (!extra.empty()) msg += fmt::format("; extra: {}", list_ids(extra));
        throw alignment_error(msg);
    }
    if (out.ids.empty()) {
        throw alignment_error(fmt::format("{} and {} have no instance ids in common", gold.source(), pred.source()));
    }

    for (std::size_t i = 0; i < out.ids.size(); ++i) {
        if (!schema.index_of(out.gold[i])) {
            throw schema_error(fmt::format("{}: id '{}' has label '{}', which is not in the schema ({})",
                                           gold.source(), out.ids[i], out.gold[i], fmt::join(schema.classes(), ", ")));
        }
        if (!schema.index_of(out.pred[i])) {
            throw schema_error(fmt::format("{}: id '{}' has label '{}', which is not in the schema ({})",
                                           pred.source(), out.ids[i], out.pred[i], fmt::join(schema.classes(), ", ")));
        }
    }
    return out;
}

ClassDistribution class_distribution(const LabeledSet& labels, const LabelSchema& schema) {
    std::vector<std::uint64_t> counts(schema.size(), 0);
    for (const auto& [id, label] : labels.entries()) {
        const auto index = schema.index_of(label);
        if (!index) {
            throw schema_error(fmt::format("{}: id '{}' has label '{}', which is not in the schema ({})",
                                           labels.source(), id, label, fmt::join(schema.classes(), ", ")));
        }
        ++counts[*index];
    }
    ClassDistribution dist;
    dist.source = labels.source();
    dist.total = labels.size();
    for (std::size_t c = 0; c < schema.size(); ++c) {
        dist.classes.push_back({schema.name(c), counts[c],
                                static_cast<double>(counts[c]) / static_cast<double>(dist.total)});
    }
    return dist;
}

}  // namespace stanceval
