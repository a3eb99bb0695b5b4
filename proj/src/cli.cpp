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

#include "stanceval/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include "CLI11.hpp"

#include "stanceval/baselines.hpp"
#include "stanceval/evalsuite.hpp"
#include "stanceval/labels_io.hpp"
#include "stanceval/metrics.hpp"
#include "stanceval/render.hpp"

namespace stanceval::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
    std::string gold;
    std::string gold_format = "tsv";
    std::vector<std::string> preds;
    std::string pred_format = "tsv";
    std::string schema;
    std::string scheme = "paper";
    std::string weights;
    std::vector<double> betas = kDefaultBetas;
    std::string mode = "strict";
    std::string normalize = "row";
    std::string format = "markdown";
    std::string out;
    bool lenient = false;
};

LabelSchema make_schema(const Config& cfg) {
    if (cfg.schema.empty()) return LabelSchema::rumoureval();
    std::vector<std::string> classes;
    std::string_view rest = cfg.schema;
    while (true) {
        const auto comma = rest.find(',');
        classes.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return LabelSchema(std::move(classes));
}

WeightScheme make_scheme(const Config& cfg, const LabelSchema& schema) {
    if (!cfg.weights.empty()) {
        auto scheme = parse_inline_weights(cfg.weights);
        scheme.for_schema(schema);
        return scheme;
    }
    return WeightSchemeRegistry().resolve(cfg.scheme, schema);
}

EvalOptions make_options(const Config& cfg) {
    return {
        .mode = parse_align_mode(cfg.mode),
        .policy = cfg.lenient ? AbsentClassPolicy::Lenient : AbsentClassPolicy::Strict,
        .betas = cfg.betas,
    };
}

/// "name=path", or a bare path named after its file stem.
SystemEntry load_system(const std::string& spec, LabelFormat format) {
    const auto eq = spec.find('=');
    std::string name;
    fs::path path;
    if (eq == std::string::npos || eq == 0 || fs::exists(spec)) {
        path = spec;
        name = path.stem().string();
    } else {
        name = spec.substr(0, eq);
        path = spec.substr(eq + 1);
    }
    return {std::move(name), parse_labels(path, format)};
}

std::vector<SystemEntry> load_systems(const Config& cfg) {
    const auto format = parse_label_format(cfg.pred_format);
    std::vector<SystemEntry> systems;
    for (const auto& spec : cfg.preds) systems.push_back(load_system(spec, format));
    return systems;
}

LabeledSet load_gold(const Config& cfg) { return parse_labels(fs::path(cfg.gold), parse_label_format(cfg.gold_format)); }

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw config_error(fmt::format("cannot open output file '{}'", cfg.out));
    file << text;
    if (!file.flush()) throw config_error(fmt::format("failed writing output file '{}'", cfg.out));
}

int cmd_score(const Config& cfg, std::ostream& out) {
    const auto format = parse_output_format(cfg.format);
    const auto schema = make_schema(cfg);
    const auto scheme = make_scheme(cfg, schema);
    const auto options = make_options(cfg);
    const auto gold = load_gold(cfg);
    const auto systems = load_systems(cfg);
    // A lone system would otherwise surface as an empty evaluation.
    align(gold, systems.front().predictions, schema, options.mode);
    const auto table = evaluate_all(gold, systems, scheme, schema, options);
    emit(cfg, render(table, format), out);
    return kExitOk;
}

int cmd_rank(const Config& cfg, std::ostream& out) {
    const auto format = parse_output_format(cfg.format);
    const auto schema = make_schema(cfg);
    const auto scheme = make_scheme(cfg, schema);
    const auto options = make_options(cfg);
    const auto gold = load_gold(cfg);
    const auto systems = load_systems(cfg);
    const auto table = evaluate_all(gold, systems, scheme, schema, options);
    emit(cfg, render(table, format), out);
    return table.dropped.empty() ? kExitOk : kExitPartial;
}

int cmd_baselines(const Config& cfg, std::ostream& out) {
    const auto format = parse_output_format(cfg.format);
    const auto schema = make_schema(cfg);
    const auto scheme = make_scheme(cfg, schema);
    const auto options = make_options(cfg);
    const auto gold = load_gold(cfg);

    std::vector<SystemEntry> systems;
    std::vector<std::string> notes;
    for (auto& baseline : baseline_suite(gold, schema)) {
        if (baseline.spec.kind == BaselineSpec::Kind::Majority) {
            notes.push_back(fmt::format("majority class predicts '{}'", baseline.spec.label));
            if (baseline.spec.has_tie()) {
                notes.push_back(fmt::format("majority tie between {}; the first schema class wins",
                                            fmt::join(baseline.spec.tied, ", ")));
            }
        }
        systems.push_back({baseline.spec.display_name(), std::move(baseline.predictions)});
    }
    auto table = evaluate_all(gold, systems, scheme, schema, options);
    table.notes = std::move(notes);
    emit(cfg, render(table, format), out);
    return kExitOk;
}

int cmd_confmat(const Config& cfg, std::ostream& out) {
    const auto format = parse_output_format(cfg.format);
    const auto schema = make_schema(cfg);
    const auto normalize = parse_normalize(cfg.normalize);
    const auto mode = parse_align_mode(cfg.mode);
    const auto gold = load_gold(cfg);
    const auto systems = load_systems(cfg);
    emit(cfg, render(confmat_report(gold, systems.front(), schema, normalize, mode), format), out);
    return kExitOk;
}

int cmd_dist(const Config& cfg, std::ostream& out) {
    const auto format = parse_output_format(cfg.format);
    const auto schema = make_schema(cfg);
    const auto gold = load_gold(cfg);
    emit(cfg, render(class_distribution(gold, schema), format), out);
    return kExitOk;
}

void add_gold(CLI::App& cmd, Config& cfg) {
    cmd.add_option("--gold", cfg.gold, "Gold label file")->required();
    cmd.add_option("--gold-format", cfg.gold_format, "tsv, json-map or rumoureval2019")->capture_default_str();
    cmd.add_option("--schema", cfg.schema, "Comma-separated class names in order (default: support,deny,query,comment)");
    cmd.add_option("--format", cfg.format, "markdown, csv, latex, json or svg")->capture_default_str();
    cmd.add_option("--out", cfg.out, "Write output to this file instead of standard output");
}

void add_preds(CLI::App& cmd, Config& cfg, bool many) {
    auto* opt = cmd.add_option("--pred", cfg.preds, many ? "Prediction file as name=path (repeatable)"
                                                         : "Prediction file as name=path or path")
                    ->required();
    if (!many) opt->expected(1);
    cmd.add_option("--pred-format", cfg.pred_format, "tsv, json-map or rumoureval2019")->capture_default_str();
    cmd.add_option("--mode", cfg.mode, "strict or intersect")->capture_default_str();
}

void add_scoring(CLI::App& cmd, Config& cfg) {
    auto* scheme = cmd.add_option("--scheme", cfg.scheme, "paper, mama-edha, upv or uniform")->capture_default_str();
    auto* weights = cmd.add_option("--weights", cfg.weights, "Inline weights, e.g. support=0.4,deny=0.4,query=0.15,comment=0.05");
    scheme->excludes(weights);
    cmd.add_option("--beta", cfg.betas, "Beta values for per-class F-beta in json output")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_flag("--lenient", cfg.lenient, "Score classes without gold instances with recall 0 instead of failing");
}

void print_error(const Streams& streams, const std::string& message) {
    if (streams.color) {
        streams.err << "\x1b[1;31merror:\x1b[0m " << message << "\n";
    } else {
        streams.err << "error: " << message << "\n";
    }
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Duplicate:
        case ErrorKind::Schema:
        case ErrorKind::Degenerate:
            return kExitParse;
        case ErrorKind::Alignment:
        case ErrorKind::EmptyEvaluation:
            return kExitAlignment;
        case ErrorKind::Configuration:
        case ErrorKind::AbsentClass:
            return kExitConfig;
    }
    return kExitInternal;
}

int run(const std::vector<std::string>& args, Streams streams) {
    Config cfg;
    CLI::App app{"Class-weighted evaluation of imbalanced multi-class classifiers", "stanceval"};
    app.require_subcommand(1);

    auto* score = app.add_subcommand("score", "Score one prediction file");
    add_gold(*score, cfg);
    add_preds(*score, cfg, false);
    add_scoring(*score, cfg);

    auto* rank = app.add_subcommand("rank", "Score and rank several prediction files");
    add_gold(*rank, cfg);
    add_preds(*rank, cfg, true);
    add_scoring(*rank, cfg);

    auto* baselines = app.add_subcommand("baselines", "Score the majority and constant-class baselines");
    add_gold(*baselines, cfg);
    add_scoring(*baselines, cfg);

    auto* confmat = app.add_subcommand("confmat", "Confusion matrix of one prediction file");
    add_gold(*confmat, cfg);
    add_preds(*confmat, cfg, false);
    confmat->add_option("--normalize", cfg.normalize, "none or row")->capture_default_str();

    auto* dist = app.add_subcommand("dist", "Class distribution of the gold file");
    add_gold(*dist, cfg);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, streams.out, streams.err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, streams.out, streams.err);
    } catch (const CLI::ParseError& e) {
        print_error(streams, e.what());
        streams.err << "Run with --help for more information.\n";
        return kExitConfig;
    }

    try {
        if (score->parsed()) return cmd_score(cfg, streams.out);
        if (rank->parsed()) return cmd_rank(cfg, streams.out);
        if (baselines->parsed()) return cmd_baselines(cfg, streams.out);
        if (confmat->parsed()) return cmd_confmat(cfg, streams.out);
        if (dist->parsed()) return cmd_dist(cfg, streams.out);
    } catch (const Error& e) {
        print_error(streams, fmt::format("{}: {}", to_string(e.kind()), e.what()));
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        print_error(streams, e.what());
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace stanceval::cli
