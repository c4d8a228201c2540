// funcwalk: generate, classify, and render two-dimensional functional walks.

#include "funcwalk/classify.hpp"
#include "funcwalk/notation.hpp"
#include "funcwalk/render.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

namespace {

using namespace funcwalk;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitStrictUnknown = 1;
constexpr int kExitInputError = 2;

int default_decimals() {
    const char* env = std::getenv("FUNCWALK_DECIMALS");
    if (env == nullptr) {
        return 4;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 || value > 17) {
        throw std::invalid_argument("FUNCWALK_DECIMALS must be an integer in [1, 17]");
    }
    return static_cast<int>(value);
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    std::random_device rd;
    const fs::path tmp = target.string() + ".tmp-" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) {
            fs::remove(tmp);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_atomic(out_path, text);
    }
}

bool has_unknown(const Classification& c) {
    return c.bounded.verdict == Boundedness::Unknown ||
           c.converging.verdict == Convergence::Unknown;
}

json walk_header(const WalkSpec& spec) {
    return json{{"notation", spec.label}, {"m", spec.m}, {"n0", spec.start_index}};
}

struct GenArgs {
    std::string walk;
    std::size_t steps = 0;
    int start_index = 1;
    double scale = 1.0;
    std::string format = "json";
    ClassifyOptions opts;
};

int run_gen(const GenArgs& args) {
    const WalkSpec spec = parse_walk_notation(args.walk, args.start_index);
    if (args.format == "csv") {
        std::string out = "x,y\n";
        char row[80];
        for (const Vec2& p : vertices_float(spec, args.steps, args.scale)) {
            std::snprintf(row, sizeof(row), "%.17g,%.17g\n", p.x, p.y);
            out += row;
        }
        emit(out, "");
        return kExitOk;
    }
    const Classification classification = classify_all(spec, args.opts);
    emit(to_json(spec, args.steps, classification, args.scale).text, "");
    return kExitOk;
}

struct ClassifyArgs {
    std::string walk;
    int start_index = 1;
    bool strict = false;
    ClassifyOptions opts;
};

int run_classify(const ClassifyArgs& args) {
    const WalkSpec spec = parse_walk_notation(args.walk, args.start_index);
    const Classification classification = classify_all(spec, args.opts);
    json doc = walk_header(spec);
    doc["classification"] = json::parse(classification_json(classification));
    std::cout << doc.dump(2) << "\n";
    if (args.strict && has_unknown(classification)) {
        return kExitStrictUnknown;
    }
    return kExitOk;
}

struct RenderArgs {
    std::string walk;
    std::optional<std::size_t> steps;
    std::string format;
    std::string out_path;
    int start_index = 0;
    double scale = 1.0;
    std::optional<int> decimals;
    std::optional<std::size_t> tail_edges;
    bool solid_only = false;
    double padding = 0.5;
};

int run_render(const RenderArgs& args) {
    const WalkSpec spec = parse_walk_notation(args.walk, args.start_index);
    RenderStyle style;
    style.scale = args.scale;
    style.decimals = args.decimals ? *args.decimals : default_decimals();
    style.tail_edges = args.tail_edges;
    style.padding = args.padding;
    if (args.solid_only) {
        style.dotted_tail = false;
        style.repetition_figure = false;
    }
    std::size_t steps = 60;
    if (args.steps) {
        steps = *args.steps;
    } else if (const auto period = repetition_index(spec)) {
        steps = 3 * *period;
    }
    const RenderDocument doc = args.format == "svg" ? to_svg(spec, steps, style)
                                                    : to_tikz(spec, steps, style);
    emit(doc.text, args.out_path);
    return kExitOk;
}

struct SweepArgs {
    std::string f_text;
    std::string g_text = "1";
    std::string family_text;
    std::string range_text;
    int start_index = 1;
    bool strict = false;
    ClassifyOptions opts;
};

std::pair<long, long> parse_range(const std::string& text) {
    const std::size_t sep = text.find("..");
    if (sep == std::string::npos) {
        throw std::invalid_argument("--param-range expects A..B");
    }
    const long lo = std::stol(text.substr(0, sep));
    const long hi = std::stol(text.substr(sep + 2));
    if (hi < lo) {
        throw std::invalid_argument("--param-range expects A <= B");
    }
    return {lo, hi};
}

int run_sweep(const SweepArgs& args) {
    const ExprAst f = parse_expr(args.f_text);
    const ExprAst g = parse_expr(args.g_text);
    const ExprAst family = parse_expr(args.family_text, 'k');
    if (!family.integer_class()) {
        throw std::invalid_argument("--m-family must not contain division");
    }
    const auto [lo, hi] = parse_range(args.range_text);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);

    // validate the family before spawning workers
    std::vector<unsigned> moduli(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Int m = family.eval_int(lo + static_cast<long>(i));
        if (m < 1 || m > 10000) {
            throw std::invalid_argument("m-family value " + m.str() + " at k=" +
                                        std::to_string(lo + static_cast<long>(i)) +
                                        " is outside [1, 10000]");
        }
        moduli[i] = m.convert_to<unsigned>();
    }

    std::vector<std::string> rows(count);
    std::vector<std::string> errors(count);
    std::atomic<bool> unknown_seen{false};
    std::atomic<std::size_t> next{0};
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    const WalkSpec spec = make_walk(f, g, moduli[i], args.start_index);
                    const Classification c = classify_all(spec, args.opts);
                    if (has_unknown(c)) {
                        unknown_seen = true;
                    }
                    json row = walk_header(spec);
                    row["param"] = lo + static_cast<long>(i);
                    row["classification"] = json::parse(classification_json(c));
                    rows[i] = row.dump();
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::string& error : errors) {
        if (!error.empty()) {
            throw std::runtime_error(error);
        }
    }
    // rows print in parameter order no matter how workers interleaved
    std::string out;
    for (const std::string& row : rows) {
        out += row;
        out += '\n';
    }
    emit(out, "");
    return args.strict && unknown_seen ? kExitStrictUnknown : kExitOk;
}

struct CompareArgs {
    std::string walk_a;
    std::string walk_b;
    std::string mode = "equal";
    int start_index = 1;
    ClassifyOptions opts;
};

int run_compare(const CompareArgs& args) {
    const WalkSpec a = parse_walk_notation(args.walk_a, args.start_index);
    const WalkSpec b = parse_walk_notation(args.walk_b, args.start_index);
    json doc;
    doc["left"] = a.label;
    doc["right"] = b.label;
    doc["mode"] = args.mode;
    if (args.mode == "equal") {
        const EqualityResult r = walks_equal(a, b, args.opts);
        switch (r.verdict) {
            case WalkEquality::Equal:
                doc["verdict"] = "equal";
                break;
            case WalkEquality::NotEqual:
                doc["verdict"] = "not-equal";
                break;
            case WalkEquality::EqualUpToHorizon:
                doc["verdict"] = "equal-up-to-horizon";
                break;
        }
        doc["differing_index"] = r.differing_index ? json(*r.differing_index) : json(nullptr);
    } else {
        const EquivalenceResult r = walks_equivalent(a, b, args.opts);
        doc["equivalent"] = r.offset.has_value();
        doc["j"] = r.offset ? json(rational_string(*r.offset)) : json(nullptr);
        doc["j_value"] = r.offset ? json(to_double(*r.offset)) : json(nullptr);
        doc["complete"] = r.complete;
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

void add_classify_options(CLI::App* cmd, ClassifyOptions& opts) {
    cmd->add_option("--horizon", opts.horizon, "Float-step budget for numeric scans")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", opts.tolerance, "Numeric zero/agreement tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--figure-tolerance", opts.figure_tolerance,
                    "Allowed tail radial variation for the convergence test")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tail-window", opts.tail_window, "Trailing window for the convergence test")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate, classify, and render two-dimensional functional walks"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate vertices as JSON or CSV");
    gen_cmd->add_option("walk", gen.walk, "Walk notation, e.g. \"<n^2 | 1/n>_5\"")->required();
    gen_cmd->add_option("--steps", gen.steps, "Number of edges to generate")->required();
    gen_cmd->add_option("--start-index", gen.start_index, "First edge index (0 or 1)")
        ->check(CLI::Range(0, 1));
    gen_cmd->add_option("--scale", gen.scale, "Multiplier applied to every edge length")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    add_classify_options(gen_cmd, gen.opts);

    ClassifyArgs classify;
    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a walk as JSON");
    classify_cmd->add_option("walk", classify.walk, "Walk notation")->required();
    classify_cmd->add_option("--start-index", classify.start_index, "First edge index (0 or 1)")
        ->check(CLI::Range(0, 1));
    classify_cmd->add_flag("--strict", classify.strict,
                           "Exit with status 1 when any verdict is unknown");
    add_classify_options(classify_cmd, classify.opts);

    RenderArgs render;
    CLI::App* render_cmd = app.add_subcommand("render", "Render a walk as SVG or TikZ");
    render_cmd->add_option("walk", render.walk, "Walk notation")->required();
    render_cmd->add_option("--steps", render.steps,
                           "Solid path length; defaults to 3 repetition periods or 60 edges");
    render_cmd->add_option("--format", render.format, "Output format")
        ->required()
        ->check(CLI::IsMember({"svg", "tikz"}));
    render_cmd->add_option("--out", render.out_path, "Write atomically to this file");
    render_cmd->add_option("--start-index", render.start_index, "First edge index (0 or 1)")
        ->check(CLI::Range(0, 1));
    render_cmd->add_option("--scale", render.scale, "Multiplier applied to every edge length")
        ->check(CLI::PositiveNumber);
    render_cmd->add_option("--decimals", render.decimals,
                           "Coordinate rounding; FUNCWALK_DECIMALS overrides the default of 4")
        ->check(CLI::Range(1, 17));
    render_cmd->add_option("--tail-edges", render.tail_edges,
                           "Dotted continuation length for open walks");
    render_cmd->add_flag("--solid-only", render.solid_only, "Suppress dotted elements");
    render_cmd->add_option("--padding", render.padding, "Canvas padding (svg)")
        ->check(CLI::NonNegativeNumber);

    SweepArgs sweep;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Classify a family of walks over a parameter range");
    sweep_cmd->add_option("--f", sweep.f_text, "Direction function f(n)")->required();
    sweep_cmd->add_option("--g", sweep.g_text, "Edge length function g(n), default 1");
    sweep_cmd->add_option("--m-family", sweep.family_text, "Modulus as a function of k, e.g. 4*k+2")
        ->required();
    sweep_cmd->add_option("--param-range", sweep.range_text, "Inclusive parameter range A..B")
        ->required();
    sweep_cmd->add_option("--start-index", sweep.start_index, "First edge index (0 or 1)")
        ->check(CLI::Range(0, 1));
    sweep_cmd->add_flag("--strict", sweep.strict,
                        "Exit with status 1 when any row has an unknown verdict");
    add_classify_options(sweep_cmd, sweep.opts);

    CompareArgs compare;
    CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two walks");
    compare_cmd->add_option("walk1", compare.walk_a, "Left walk notation")->required();
    compare_cmd->add_option("walk2", compare.walk_b, "Right walk notation")->required();
    compare_cmd->add_option("--mode", compare.mode, "Comparison mode")
        ->check(CLI::IsMember({"equal", "equivalent"}));
    compare_cmd->add_option("--start-index", compare.start_index, "First edge index (0 or 1)")
        ->check(CLI::Range(0, 1));
    add_classify_options(compare_cmd, compare.opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
        if (classify_cmd->parsed()) {
            return run_classify(classify);
        }
        if (render_cmd->parsed()) {
            return run_render(render);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
