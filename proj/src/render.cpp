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

#include "stanceval/render.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include "json.hpp"

#include "stanceval/error.hpp"

namespace stanceval {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string fixed3(double v) { return fmt::format("{:.3f}", v); }

std::string cell(double value, int rank) { return fmt::format("{} ({})", fixed3(value), rank); }

std::string beta_key(double beta) { return fmt::format("{}", beta); }

// ---------------------------------------------------------------------------
// Escaping

std::string markdown_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string latex_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': case '%': case '$': case '#': case '_': case '{': case '}':
                out += '\\';
                out += ch;
                break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SVG heatmaps

struct HeatmapPanel {
    std::string title;
    std::vector<std::string> classes;
    std::vector<std::vector<double>> shade;         // row-normalized, drives the colour
    std::vector<std::vector<std::string>> labels;   // cell annotation
};

constexpr int kCell = 64;
constexpr int kTitleHeight = 28;
constexpr int kColumnLabelHeight = 22;
constexpr int kPanelGap = 24;
constexpr int kMargin = 12;

// White to dark blue.
std::string shade_colour(double p) {
    p = std::clamp(p, 0.0, 1.0);
    auto mix = [p](int from, int to) { return static_cast<int>(std::lround(from + p * (to - from))); };
    return fmt::format("#{:02x}{:02x}{:02x}", mix(255, 8), mix(255, 48), mix(255, 107));
}

std::string heatmap_svg(const std::vector<HeatmapPanel>& panels) {
    std::size_t longest = 4;
    std::size_t widest = 0;
    for (const auto& panel : panels) {
        widest = std::max(widest, panel.classes.size());
        for (const auto& cls : panel.classes) longest = std::max(longest, cls.size());
    }
    const int label_width = static_cast<int>(longest) * 8 + 16;
    int width = kMargin * 2 + label_width + static_cast<int>(widest) * kCell;
    for (const auto& panel : panels) {
        width = std::max(width, kMargin * 2 + static_cast<int>(panel.title.size()) * 8);
    }
    int height = kMargin;
    for (const auto& panel : panels) {
        height += kTitleHeight + kColumnLabelHeight + static_cast<int>(panel.classes.size()) * kCell + kPanelGap;
    }
    height = std::max(height, kMargin * 2 + kTitleHeight);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        width, height);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", width, height);

    int y = kMargin;
    for (const auto& panel : panels) {
        const auto k = static_cast<int>(panel.classes.size());
        const int grid_x = kMargin + label_width;
        out += "<g class=\"heatmap\">\n";
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"14\" font-weight=\"bold\">{}</text>\n", kMargin,
                           y + 18, xml_escape(panel.title));
        y += kTitleHeight;
        for (int p = 0; p < k; ++p) {
            out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                               grid_x + p * kCell + kCell / 2, y + 15, xml_escape(panel.classes[p]));
        }
        y += kColumnLabelHeight;
        for (int g = 0; g < k; ++g) {
            out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", grid_x - 6,
                               y + g * kCell + kCell / 2 + 4, xml_escape(panel.classes[g]));
            for (int p = 0; p < k; ++p) {
                const double value = panel.shade[g][p];
                const int cx = grid_x + p * kCell;
                const int cy = y + g * kCell;
                out += fmt::format(
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#999999\"/>\n", cx, cy,
                    kCell, kCell, shade_colour(value));
                out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"{}\">{}</text>\n",
                                   cx + kCell / 2, cy + kCell / 2 + 4, value > 0.5 ? "#ffffff" : "#000000",
                                   xml_escape(panel.labels[g][p]));
            }
        }
        y += k * kCell + kPanelGap;
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

HeatmapPanel panel_for(std::string title, const std::vector<std::string>& classes,
                       const std::vector<std::vector<std::uint64_t>>& counts,
                       const std::vector<std::vector<double>>& proportions, bool annotate_counts) {
    HeatmapPanel panel{std::move(title), classes, proportions, {}};
    for (std::size_t g = 0; g < classes.size(); ++g) {
        auto& row = panel.labels.emplace_back();
        for (std::size_t p = 0; p < classes.size(); ++p) {
            row.push_back(annotate_counts ? fmt::format("{}", counts[g][p]) : fmt::format("{:.2f}", proportions[g][p]));
        }
    }
    return panel;
}

std::vector<std::vector<double>> normalize_rows(const std::vector<std::vector<std::uint64_t>>& counts) {
    std::vector<std::vector<double>> out;
    for (const auto& row : counts) {
        std::uint64_t sum = 0;
        for (auto v : row) sum += v;
        auto& dst = out.emplace_back(row.size(), 0.0);
        if (sum == 0) continue;
        for (std::size_t i = 0; i < row.size(); ++i) {
            dst[i] = static_cast<double>(row[i]) / static_cast<double>(sum);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ranked tables

std::string table_markdown(const RankedTable& table) {
    std::string out = "| System |";
    for (auto col : kMetricColumns) out += fmt::format(" {} |", column_title(col));
    out += "\n|---|";
    for (std::size_t i = 0; i < kMetricColumns.size(); ++i) out += "---:|";
    out += "\n";
    for (const auto& row : table.rows) {
        out += fmt::format("| {} |", markdown_escape(row.report.system));
        for (auto col : kMetricColumns) out += fmt::format(" {} |", cell(column_value(row.report, col), row.rank(col)));
        out += "\n";
    }
    if (!table.dropped.empty()) {
        out += "\nDropped systems:\n\n";
        for (const auto& d : table.dropped) out += fmt::format("- {}: {}\n", markdown_escape(d.name), d.reason);
    }
    if (!table.notes.empty()) {
        out += "\nNotes:\n\n";
        for (const auto& note : table.notes) out += fmt::format("- {}\n", note);
    }
    return out;
}

std::string table_csv(const RankedTable& table) {
    std::string out = "name";
    for (auto col : kMetricColumns) out += fmt::format(",{0},{0}_rank", column_key(col));
    out += "\n";
    for (const auto& row : table.rows) {
        out += csv_field(row.report.system);
        for (auto col : kMetricColumns) out += fmt::format(",{},{}", fixed3(column_value(row.report, col)), row.rank(col));
        out += "\n";
    }
    return out;
}

std::string table_latex(const RankedTable& table) {
    std::string out = "\\begin{tabular}{l|c|c|c|c|c|c}\n\\hline\n";
    for (auto col : kMetricColumns) out += fmt::format(" & {}", latex_escape(column_title(col)));
    out += " \\\\ \\hline\n";
    for (const auto& row : table.rows) {
        out += latex_escape(row.report.system);
        for (auto col : kMetricColumns) out += fmt::format(" & {}", cell(column_value(row.report, col), row.rank(col)));
        out += " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

ordered_json confusion_json(const std::vector<std::vector<std::uint64_t>>& counts,
                            const std::optional<std::vector<std::vector<double>>>& normalized) {
    ordered_json out;
    out["counts"] = counts;
    out["row_normalized"] = normalized ? ordered_json(*normalized) : ordered_json(nullptr);
    return out;
}

std::string table_json(const RankedTable& table) {
    ordered_json meta;
    meta["gold"] = table.gold;
    meta["scheme"] = table.scheme;
    meta["mode"] = std::string(to_string(table.mode));
    meta["classes"] = table.classes;
    meta["weights"] = table.weights;
    meta["betas"] = table.betas;
    meta["dropped"] = ordered_json::array();
    for (const auto& d : table.dropped) meta["dropped"].push_back({{"name", d.name}, {"reason", d.reason}});
    meta["notes"] = table.notes;

    ordered_json systems = ordered_json::array();
    for (const auto& row : table.rows) {
        const auto& r = row.report;
        ordered_json metrics;
        ordered_json ranks;
        for (auto col : kMetricColumns) {
            metrics[std::string(column_key(col))] = column_value(r, col);
            ranks[std::string(column_key(col))] = row.rank(col);
        }
        ordered_json per_class = ordered_json::array();
        for (const auto& c : r.rates.classes) {
            ordered_json fbeta;
            for (std::size_t i = 0; i < r.rates.betas.size(); ++i) fbeta[beta_key(r.rates.betas[i])] = c.fbeta[i];
            per_class.push_back({{"name", c.name},
                                 {"precision", c.precision},
                                 {"recall", c.recall},
                                 {"fpr", c.false_positive_rate},
                                 {"fbeta", fbeta}});
        }
        ordered_json fbeta = ordered_json::array();
        for (const auto& f : r.fbeta) fbeta.push_back({{"beta", f.beta}, {"macro", f.macro}, {"weighted", f.weighted}});

        ordered_json entry;
        entry["name"] = r.system;
        entry["metrics"] = metrics;
        entry["ranks"] = ranks;
        entry["alignment"] = {{"evaluated", r.confusion.total()},
                              {"missing_in_pred", row.missing_in_pred},
                              {"extra_in_pred", row.extra_in_pred}};
        entry["per_class"] = per_class;
        entry["fbeta"] = fbeta;
        entry["confusion"] = confusion_json(r.confusion.counts(), r.confusion.row_normalized());
        systems.push_back(entry);
    }
    ordered_json doc;
    doc["meta"] = meta;
    doc["systems"] = systems;
    return doc.dump(2) + "\n";
}

std::string table_svg(const RankedTable& table) {
    std::vector<HeatmapPanel> panels;
    for (const auto& row : table.rows) {
        const auto& cm = row.report.confusion;
        panels.push_back(panel_for(fmt::format("{} (rows: gold, columns: predicted)", row.report.system),
                                   cm.schema().classes(), cm.counts(), cm.row_normalized(), false));
    }
    return heatmap_svg(panels);
}

// ---------------------------------------------------------------------------
// Confusion reports

std::string matrix_markdown(const ConfusionReport& report) {
    auto block = [&](auto&& format_cell) {
        std::string out = "| gold / predicted |";
        for (const auto& cls : report.classes) out += fmt::format(" {} |", markdown_escape(cls));
        out += "\n|---|";
        for (std::size_t i = 0; i < report.classes.size(); ++i) out += "---:|";
        out += "\n";
        for (std::size_t g = 0; g < report.classes.size(); ++g) {
            out += fmt::format("| {} |", markdown_escape(report.classes[g]));
            for (std::size_t p = 0; p < report.classes.size(); ++p) out += fmt::format(" {} |", format_cell(g, p));
            out += "\n";
        }
        return out;
    };
    std::string out = fmt::format("Confusion matrix: {}\n\nCounts:\n\n", markdown_escape(report.system));
    out += block([&](std::size_t g, std::size_t p) { return fmt::format("{}", report.counts[g][p]); });
    if (report.row_normalized) {
        out += "\nRow-normalized:\n\n";
        out += block([&](std::size_t g, std::size_t p) { return fixed3((*report.row_normalized)[g][p]); });
    }
    return out;
}

std::string matrix_csv(const ConfusionReport& report) {
    std::string out = "gold";
    for (const auto& cls : report.classes) out += "," + csv_field(cls);
    out += "\n";
    for (std::size_t g = 0; g < report.classes.size(); ++g) {
        out += csv_field(report.classes[g]);
        for (std::size_t p = 0; p < report.classes.size(); ++p) {
            out += "," + (report.row_normalized ? fixed3((*report.row_normalized)[g][p])
                                                : fmt::format("{}", report.counts[g][p]));
        }
        out += "\n";
    }
    return out;
}

std::string matrix_latex(const ConfusionReport& report) {
    std::string out = fmt::format("\\begin{{tabular}}{{l|{}}}\n\\hline\n", std::string(report.classes.size(), 'c'));
    for (const auto& cls : report.classes) out += " & " + latex_escape(cls);
    out += " \\\\ \\hline\n";
    for (std::size_t g = 0; g < report.classes.size(); ++g) {
        out += latex_escape(report.classes[g]);
        for (std::size_t p = 0; p < report.classes.size(); ++p) {
            out += " & " + (report.row_normalized ? fixed3((*report.row_normalized)[g][p])
                                                  : fmt::format("{}", report.counts[g][p]));
        }
        out += " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

std::string matrix_json(const ConfusionReport& report) {
    ordered_json doc;
    doc["name"] = report.system;
    doc["classes"] = report.classes;
    doc["confusion"] = confusion_json(report.counts, report.row_normalized);
    return doc.dump(2) + "\n";
}

std::string matrix_svg(const ConfusionReport& report) {
    const auto proportions = report.row_normalized ? *report.row_normalized : normalize_rows(report.counts);
    return heatmap_svg({panel_for(fmt::format("{} (rows: gold, columns: predicted)", report.system), report.classes,
                                  report.counts, proportions, !report.row_normalized.has_value())});
}

// ---------------------------------------------------------------------------
// Class distributions

std::string percent(double fraction) { return fmt::format("{:.0f}%", fraction * 100.0); }

std::string dist_markdown(const ClassDistribution& dist) {
    std::string out = "| Class | Count | Fraction | Percent |\n|---|---:|---:|---:|\n";
    for (const auto& c : dist.classes) {
        out += fmt::format("| {} | {} | {} | {} |\n", markdown_escape(c.name), c.count, fixed3(c.fraction),
                           percent(c.fraction));
    }
    out += fmt::format("| total | {} | 1.000 | 100% |\n", dist.total);
    return out;
}

std::string dist_csv(const ClassDistribution& dist) {
    std::string out = "class,count,fraction,percent\n";
    for (const auto& c : dist.classes) {
        out += fmt::format("{},{},{},{}\n", csv_field(c.name), c.count, fixed3(c.fraction), percent(c.fraction));
    }
    return out;
}

std::string dist_latex(const ClassDistribution& dist) {
    std::string out = "\\begin{tabular}{l|cc}\n\\hline\n & count & percent \\\\ \\hline\n";
    for (const auto& c : dist.classes) {
        out += fmt::format("{} & {} & {} \\\\\n", latex_escape(c.name), c.count,
                           latex_escape(percent(c.fraction)));
    }
    out += fmt::format("\\hline\ntotal & {} & 100\\% \\\\\n\\hline\n\\end{{tabular}}\n", dist.total);
    return out;
}

std::string dist_json(const ClassDistribution& dist) {
    ordered_json doc;
    doc["source"] = dist.source;
    doc["total"] = dist.total;
    doc["classes"] = ordered_json::array();
    for (const auto& c : dist.classes) {
        doc["classes"].push_back({{"name", c.name}, {"count", c.count}, {"fraction", c.fraction}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg") return OutputFormat::Svg;
    throw config_error(fmt::format("unknown output format '{}' (expected markdown, csv, latex, json or svg)", name));
}

std::string_view to_string(OutputFormat format) noexcept {
    switch (format) {
        case OutputFormat::Markdown: return "markdown";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
        case OutputFormat::Json: return "json";
        case OutputFormat::Svg: return "svg";
    }
    return "markdown";
}

std::string render(const RankedTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return table_markdown(table);
        case OutputFormat::Csv: return table_csv(table);
        case OutputFormat::Latex: return table_latex(table);
        case OutputFormat::Json: return table_json(table);
        case OutputFormat::Svg: return table_svg(table);
    }
    throw config_error("unsupported output format");
}

std::string render(const ConfusionReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return matrix_markdown(report);
        case OutputFormat::Csv: return matrix_csv(report);
        case OutputFormat::Latex: return matrix_latex(report);
        case OutputFormat::Json: return matrix_json(report);
        case OutputFormat::Svg: return matrix_svg(report);
    }
    throw config_error("unsupported output format");
}

std::string render(const ClassDistribution& dist, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return dist_markdown(dist);
        case OutputFormat::Csv: return dist_csv(dist);
        case OutputFormat::Latex: return dist_latex(dist);
        case OutputFormat::Json: return dist_json(dist);
        case OutputFormat::Svg: break;
    }
    throw config_error(fmt::format("class distributions cannot be rendered as {}", to_string(format)));
}

}  // namespace stanceval
