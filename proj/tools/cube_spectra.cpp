// cube-spectra: command-line front end for the cubespec library.
//
// Every command prints one JSON document by default (--format json), or a
// flat TSV / human-readable rendering of the same data. Exit codes: 0 ok,
// 1 selftest failure, 2 bad input or violated precondition, 3 search budget
// exhausted, 64 unknown command.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubespec/bounds.hpp"
#include "cubespec/compress.hpp"
#include "cubespec/family.hpp"
#include "cubespec/hamming.hpp"
#include "cubespec/io.hpp"
#include "cubespec/kernels.hpp"
#include "cubespec/partition.hpp"
#include "cubespec/search.hpp"
#include "cubespec/spectral.hpp"
#include "cubespec/subcubes.hpp"
#include "cubespec/walks.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace cubespec;

namespace {

constexpr int kExitSelftest = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

const std::vector<std::string> kCommands = {"lambda1", "hamming",   "bounds",        "compress", "count-cubes",
                                            "search",  "partition", "regen-goldens", "selftest"};

struct Common {
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
};

void add_common(CLI::App& app, Common& c) {
    app.add_option("--format", c.format, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}))
        ->capture_default_str();
    app.add_option("--output", c.output, "write the report here instead of stdout");
    app.add_option("--seed", c.seed, "seed for randomized suites")->capture_default_str();
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json family_json(const VertexFamily& f) {
    json out = json::array();
    for (Vertex v : f) out.push_back(v.to_string());
    return out;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return g17(v.get<double>());
    return v.dump();
}

void render_tsv(std::ostream& out, const json& doc) {
    if (doc.contains("rows") && doc["rows"].is_array() && !doc["rows"].empty()) {
        const auto& rows = doc["rows"];
        bool first = true;
        for (const auto& [key, _] : rows.front().items()) {
            out << (first ? "" : "\t") << key;
            first = false;
        }
        out << '\n';
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                out << (first ? "" : "\t") << scalar_text(value);
                first = false;
            }
            out << '\n';
        }
        return;
    }
    std::string header, values;
    for (const auto& [key, value] : doc.items()) {
        header += (header.empty() ? "" : "\t") + key;
        values += (values.empty() ? "" : "\t") + scalar_text(value);
    }
    out << header << '\n' << values << '\n';
}

void render_human(std::ostream& out, const json& doc, const std::string& indent = "") {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_human(out, value, indent + "  ");
        } else {
            out << indent << key << ": " << scalar_text(value) << '\n';
        }
    }
}

void emit(const Common& c, const json& doc) {
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw precondition_error("cannot write " + c.output);
    }
    std::ostream& out = c.output.empty() ? std::cout : file;
    if (c.format == "tsv")
        render_tsv(out, doc);
    else if (c.format == "human")
        render_human(out, doc);
    else
        out << doc.dump(2) << '\n';
}

json spectral_json(const SpectralResult& r) {
    return {{"lambda1", r.lambda1},          {"error_bound", r.error_bound},
            {"method", std::string(to_string(r.method))}, {"iterations", r.iterations},
            {"residual_inf", r.residual_inf}, {"converged", r.converged}};
}

// ---------------------------------------------------------------- lambda1

int cmd_lambda1(int argc, char** argv) {
    CLI::App app{"Largest adjacency eigenvalue of an induced subgraph"};
    Common c;
    add_common(app, c);
    std::string path, method = "auto";
    double tol = 1e-10;
    bool with_vector = false;
    app.add_option("--family", path, "family file")->required();
    app.add_option("--tol", tol)->capture_default_str();
    app.add_option("--method", method)->check(CLI::IsMember({"auto", "power", "dense"}))->capture_default_str();
    app.add_flag("--vector", with_vector, "include the Perron vector");
    CLI11_PARSE(app, argc, argv);

    const auto family = read_family_file(path);
    SpectralResult r;
    if (method == "power")
        r = lambda1(family, {tol});
    else if (method == "dense")
        r = lambda1_dense(family);
    else
        r = lambda1_auto(family, tol);
    json doc = {{"command", "lambda1"}, {"d", family.dimension()}, {"n", family.size()}};
    doc.update(spectral_json(r));
    if (with_vector) {
        json vec = json::object();
        for (const auto& [v, w] : r.eigenvector.entries()) vec[v.to_string()] = w;
        doc["eigenvector"] = vec;
    }
    emit(c, doc);
    return r.converged ? 0 : kExitBudget;
}

json hamming_bounds_row(std::uint64_t d, unsigned i) {
    const auto exact = hamming_lambda1_exact(d, i).lambda1;
    json row = {{"d", d}, {"i", i}, {"exact", exact}, {"upper", hamming_upper_bound(d, i)},
                {"level", 2.0 * std::sqrt(static_cast<double>(i) * static_cast<double>(d))}};
    double best_walk = 0.0;
    for (unsigned k = 1; k < i; ++k) best_walk = std::max(best_walk, hamming_walk_lower_bound(d, i, k));
    row["walk_lower"] = best_walk;
    // The closed forms d-2 at i = d/2-1 and d-4 at i = d/2-√d.
    std::string claimed = "-";
    if (d % 2 == 0 && 2ull * (i + 1) == d) claimed = g17(static_cast<double>(d) - 2);
    const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    if (d % 2 == 0 && root * root == d && 2ull * (i + root) == d) claimed = g17(static_cast<double>(d) - 4);
    row["claimed_closed_form"] = claimed;
    return row;
}

// ---------------------------------------------------------------- hamming

int cmd_hamming(int argc, char** argv) {
    CLI::App app{"λ₁ of the Hamming ball H_d^i"};
    Common c;
    add_common(app, c);
    std::uint64_t d = 0;
    unsigned radius = 0;
    bool exact = false, power = false, weights = false, bounds = false, constants = false;
    double tol = 1e-10;
    app.add_option("--d", d)->required();
    app.add_option("--i", radius)->required();
    app.add_flag("--exact", exact, "reduced level system (the default)");
    app.add_flag("--bounds", bounds, "add the walk lower bound and the level/upper bounds");
    app.add_flag("--constants", constants, "add the limit constant for radius i and lambda1/sqrt(d)");
    app.add_flag("--power", power, "also run power iteration on the materialized ball");
    app.add_flag("--weights", weights, "report per-level eigenvector weights relative to the centre");
    app.add_option("--tol", tol, "power-iteration tolerance")->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    (void)exact;

    const auto sol = hamming_lambda1_exact(d, radius);
    json doc = {{"command", "hamming"},
                {"d", d},
                {"i", radius},
                {"size", hamming_ball_size(static_cast<unsigned>(std::min<std::uint64_t>(d, 64)), radius)},
                {"lambda1", sol.lambda1},
                {"error_bound", sol.error_bound},
                {"residual_inf", sol.residual_inf},
                {"method", "reduced-tridiagonal"}};
    if (d > 64) doc.erase("size");
    if (radius >= 1 && 2ull * radius <= d) doc["upper_bound"] = hamming_upper_bound(d, radius);
    if (weights) doc["level_weights"] = sol.relative_level_weights();
    if (bounds) {
        if (radius < 1 || 2ull * radius > d) throw precondition_error("--bounds needs 1 <= i <= d/2");
        auto row = hamming_bounds_row(d, radius);
        doc["bounds"] = {{"walk_lower", row["walk_lower"]}, {"upper", row["upper"]}, {"level", row["level"]}};
    }
    if (constants) {
        if (radius < 1) throw precondition_error("--constants needs i >= 1");
        doc["limit_constant"] = limit_constant(radius);
        doc["scaled_lambda1"] = sol.lambda1 / std::sqrt(static_cast<double>(d));
    }
    if (power) {
        if (d > 64 || hamming_ball_size(static_cast<unsigned>(d), radius) > kMaxMaterializedFamily)
            throw precondition_error("ball too large to materialize for --power");
        doc["power"] = spectral_json(lambda1(hamming_ball(static_cast<unsigned>(d), radius), {tol}));
    }
    emit(c, doc);
    return 0;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(int argc, char** argv) {
    CLI::App app{"Upper and lower bounds on λ₁"};
    Common c;
    add_common(app, c);
    std::optional<std::uint64_t> d;
    std::optional<unsigned> radius;
    std::string path;
    unsigned k = 2;
    app.add_option("--d", d, "Hamming-ball dimension");
    app.add_option("--i", radius, "Hamming-ball radius");
    app.add_option("--family", path, "family file (classical and trace bounds)");
    app.add_option("--k", k, "walk length parameter for the trace bound")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    json doc = {{"command", "bounds"}};
    if (!path.empty()) {
        const auto family = read_family_file(path);
        const auto exact = lambda1_auto(family);
        const auto cb = classic_bounds(family);
        const auto lb = level_bound(family);
        const auto walk = walk_trace_bound(family, k);
        const auto pc = count_p2_c4(family);
        doc["d"] = family.dimension();
        doc["n"] = family.size();
        doc["lambda1"] = exact.lambda1;
        doc["edges"] = cb.edges;
        doc["brualdi_hoffman"] = cb.brualdi_hoffman;
        doc["stanley"] = cb.stanley;
        doc["fms"] = cb.fms;
        doc["nosal"] = cb.nosal;
        doc["level_bound"] = lb.value;
        doc["level_bound_applicable"] = lb.applicable;
        doc["walk_k"] = k;
        doc["walk_half_trace"] = walk.half_trace;
        doc["walk_bound"] = walk.value;
        doc["paths2"] = pc.paths2;
        doc["cycles4"] = pc.cycles4;
        doc["fourth_moment"] = pc.fourth_moment();
        doc["cycle_bound_holds"] = pc.cycle_bound_holds;
        doc["edge_bound_holds"] = pc.edge_bound_holds;
    } else {
        if (!d || !radius) throw precondition_error("bounds needs --family or both --d and --i");
        doc.update(hamming_bounds_row(*d, *radius));
    }
    emit(c, doc);
    return 0;
}

// ---------------------------------------------------------------- compress

int cmd_compress(int argc, char** argv) {
    CLI::App app{"Apply down and shift compressions until fixed"};
    Common c;
    add_common(app, c);
    std::string family_path, vector_path, write_path, in_path, kind = "family", log_path;
    bool check_only = false;
    auto* fam = app.add_option("--family", family_path, "family file");
    auto* vec = app.add_option("--vector", vector_path, "weight-vector file");
    auto* in = app.add_option("--in", in_path, "input file, read as --kind");
    fam->excludes(vec);
    in->excludes(fam)->excludes(vec);
    app.add_option("--kind", kind, "how to read --in")->check(CLI::IsMember({"family", "vector"}))->capture_default_str();
    app.add_flag("--check", check_only, "only report whether the input is already compressed");
    app.add_option("--write", write_path, "write the compressed result in the input's text format");
    app.add_option("--log", log_path, "write the applied steps as a JSON array");
    CLI11_PARSE(app, argc, argv);
    if (!in_path.empty()) (kind == "family" ? family_path : vector_path) = in_path;
    if (family_path.empty() == vector_path.empty()) throw precondition_error("give exactly one of --family, --vector");

    json doc = {{"command", "compress"}};
    auto describe = [](const CompressedCheck& chk) {
        return json{{"compressed", chk.compressed},
                    {"violation", chk.violation ? json(chk.violation->to_string()) : json(nullptr)}};
    };
    auto steps_json = [](const auto& run) {
        json steps = json::array();
        for (const auto& s : run.steps) steps.push_back(s.to_string());
        return steps;
    };
    if (!family_path.empty()) {
        const auto family = read_family_file(family_path);
        doc["input"] = describe(is_compressed(family));
        if (!check_only) {
            const auto run = fully_compress(family);
            doc["steps"] = steps_json(run);
            doc["sweeps"] = run.sweeps;
            doc["family"] = family_json(run.result);
            if (!write_path.empty()) {
                std::ofstream out(write_path);
                write_family(out, run.result);
            }
        }
    } else {
        const auto v = read_vector_file(vector_path);
        doc["input"] = describe(is_compressed(v));
        doc["rayleigh_before"] = rayleigh(v);
        if (!check_only) {
            const auto run = fully_compress(v);
            doc["steps"] = steps_json(run);
            doc["sweeps"] = run.sweeps;
            doc["rayleigh_after"] = rayleigh(run.result);
            json weights = json::object();
            for (const auto& [s, w] : run.result.entries()) weights[s.to_string()] = w;
            doc["vector"] = weights;
            if (!write_path.empty()) {
                std::ofstream out(write_path);
                write_vector(out, run.result);
            }
        }
    }
    if (!log_path.empty()) {
        std::ofstream log(log_path);
        if (!log) throw precondition_error("cannot write " + log_path);
        log << (doc.contains("steps") ? doc["steps"] : json::array()).dump(2) << '\n';
    }
    emit(c, doc);
    return 0;
}

// ---------------------------------------------------------------- count-cubes

int cmd_count_cubes(int argc, char** argv) {
    CLI::App app{"Count d'-dimensional subcubes"};
    Common c;
    add_common(app, c);
    std::string path;
    std::optional<std::uint64_t> initial;
    unsigned dprime = 0;
    bool bounds = false;
    app.add_option("--family", path, "family file");
    app.add_option("--initial", initial, "size of an initial segment in binary order");
    app.add_option("--dprime", dprime, "subcube dimension")->required();
    app.add_flag("--bounds", bounds, "also print the smooth and integer closed-form bounds");
    CLI11_PARSE(app, argc, argv);
    if (path.empty() == !initial.has_value()) throw precondition_error("give exactly one of --family, --initial");

    json doc = {{"command", "count-cubes"}, {"dprime", dprime}};
    std::uint64_t n = 0;
    if (initial) {
        n = *initial;
        doc["n"] = n;
        doc["count"] = initial_count(n, dprime).count;
    } else {
        const auto family = read_family_file(path);
        n = family.size();
        doc["n"] = n;
        doc["d"] = family.dimension();
        doc["count"] = count_subcubes(family, dprime).count;
        doc["initial_count"] = initial_count(n, dprime).count;
    }
    if (bounds && n >= 1) {
        doc["smooth_bound"] = subcube_bound_smooth(n, dprime);
        doc["integer_bound"] = subcube_bound_integer(n, dprime);
    }
    emit(c, doc);
    return 0;
}

// ---------------------------------------------------------------- search

json search_json(const SearchResult& r) {
    json ties = json::array();
    for (const auto& f : r.maximizers) ties.push_back(family_json(f));
    json runners = json::array();
    for (const auto& rf : r.runner_ups) runners.push_back({{"lambda1", rf.lambda1}, {"family", family_json(rf.family)}});
    return {{"n", r.n},
            {"d", r.d},
            {"best_lambda1", r.best_lambda1},
            {"maximizer", family_json(r.maximizer)},
            {"maximizers", ties},
            {"runner_ups", runners},
            {"search_space_size", r.search_space_size},
            {"restricted", r.restricted},
            {"partial", r.partial}};
}

int cmd_search(int argc, char** argv) {
    CLI::App app{"Exact maximum of λ₁ over n-vertex induced subgraphs of Q_d"};
    Common c;
    add_common(app, c);
    std::uint64_t n = 0, budget = 0;
    unsigned d = 0;
    SearchOptions opts;
    bool oracle = false;
    std::string write_path;
    app.add_option("--n", n)->required();
    app.add_option("--d", d)->required();
    app.add_option("--tol", opts.tol)->capture_default_str();
    app.add_option("--top", opts.top_k)->capture_default_str();
    app.add_option("--budget", budget, "maximum families evaluated (0 = unlimited)")->capture_default_str();
    app.add_flag("--oracle", oracle, "cross-check against brute force over all n-subsets");
    app.add_option("--write-maximizer", write_path, "write the first maximizer as a family file");
    CLI11_PARSE(app, argc, argv);
    opts.budget = budget;

    const auto result = max_lambda1(n, d, opts);
    json doc = {{"command", "search"}};
    doc.update(search_json(result));
    if (oracle) {
        const auto o = brute_force_max_lambda1(n, d);
        doc["oracle"] = {{"best_lambda1", o.best_lambda1},
                         {"maximizer", family_json(o.maximizer)},
                         {"subsets_tried", o.subsets_tried},
                         {"ties_found", o.ties_found},
                         {"agrees", std::abs(o.best_lambda1 - result.best_lambda1) <= 1e-8}};
    }
    if (!write_path.empty()) {
        std::ofstream out(write_path);
        write_family(out, result.maximizer);
    }
    emit(c, doc);
    return result.partial ? kExitBudget : 0;
}

// ---------------------------------------------------------------- partition

json level_json(const std::vector<std::vector<Vertex>>& levels) {
    json out = json::array();
    for (const auto& level : levels) {
        json l = json::array();
        for (Vertex v : level) l.push_back(v.to_string());
        out.push_back(l);
    }
    return out;
}

json certificate_json(const PartitionCertificate& cert, const PartitionReport* report) {
    json balls = json::array();
    for (const auto& b : cert.star_balls) {
        json members = json::array();
        for (Vertex v : b.members) members.push_back(v.to_string());
        balls.push_back({{"k", b.k}, {"centre", b.centre.to_string()}, {"members", members}});
    }
    json doc = {{"epsilon", cert.epsilon},
                {"threshold", cert.threshold()},
                {"d", cert.d},
                {"M", cert.M},
                {"core_nonempty", cert.core_nonempty},
                {"m", cert.m},
                {"B", cert.B},
                {"A", level_json(cert.A)},
                {"C", level_json(cert.C)},
                {"D", level_json(cert.D)},
                {"E", level_json(cert.E)},
                {"star_balls", balls},
                {"part_flags", cert.part_flags}};
    if (report) {
        doc["verification"] = {{"passed", report->passed()},
                               {"parts", report->parts},
                               {"assertions", report->assertions},
                               {"degree_checks_applicable", report->degree_checks_applicable},
                               {"failures", report->failures}};
    }
    return doc;
}

int cmd_partition(int argc, char** argv) {
    CLI::App app{"Heavy-vertex partition certificate of a compressed family"};
    Common c;
    add_common(app, c);
    std::string path, preset;
    std::optional<double> epsilon;
    double alpha = 1.0;
    bool verify = false;
    app.add_option("--family", path, "compressed family file")->required();
    auto* eps_opt = app.add_option("--epsilon", epsilon);
    auto* preset_opt = app.add_option("--preset", preset)->check(CLI::IsMember({"sec51", "sec52", "sec6"}));
    eps_opt->excludes(preset_opt);
    app.add_option("--alpha", alpha, "alpha for the sec52 preset")->capture_default_str();
    app.add_flag("--verify", verify, "check every part and assertion");
    CLI11_PARSE(app, argc, argv);

    const auto family = read_family_file(path);
    double eps = 0.0;
    if (epsilon)
        eps = *epsilon;
    else if (!preset.empty())
        eps = preset_epsilon(parse_epsilon_preset(preset), family.size(), family.dimension(), alpha);
    else
        throw precondition_error("give --epsilon or --preset");
    const auto cert = build_partition(family, eps);
    std::optional<PartitionReport> report;
    if (verify) report = verify_partition(cert, family);
    json doc = {{"command", "partition"}, {"n", family.size()}};
    if (!preset.empty()) doc["preset"] = preset;
    doc.update(certificate_json(cert, report ? &*report : nullptr));
    emit(c, doc);
    return 0;
}

// ---------------------------------------------------------------- goldens

using Table = std::vector<std::vector<std::string>>;

void write_table(const fs::path& path, const std::vector<std::string>& header, const Table& rows) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot write " + path.string());
    for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "\t" : "") << header[k];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "\t" : "") << row[k];
        out << '\n';
    }
}

std::string flags(const auto& bits) {
    std::string s;
    for (bool b : bits) s += b ? '1' : '0';
    return s;
}

void golden_hamming(const fs::path& dir) {
    Table rows;
    for (unsigned d = 4; d <= 20; ++d)
        for (unsigned i = 0; i <= d / 2; ++i) {
            const auto sol = hamming_lambda1_exact(d, i);
            rows.push_back({std::to_string(d), std::to_string(i), std::to_string(hamming_ball_size(d, i)),
                            g17(sol.lambda1)});
        }
    write_table(dir / "hamming-table.tsv", {"d", "i", "size", "lambda1"}, rows);
}

void golden_bounds(const fs::path& dir) {
    Table rows;
    for (unsigned d : {6u, 8u, 16u, 32u, 64u})
        for (unsigned i = 1; i <= d / 2; ++i) {
            const auto row = hamming_bounds_row(d, i);
            rows.push_back({std::to_string(d), std::to_string(i), g17(row["walk_lower"]), g17(row["exact"]),
                            g17(row["upper"]), g17(row["level"]), row["claimed_closed_form"].get<std::string>()});
        }
    write_table(dir / "bounds-table.tsv", {"d", "i", "walk_lower", "exact", "upper", "level", "claimed_closed_form"},
                rows);
}

void golden_search(const fs::path& dir) {
    Table rows;
    for (std::uint64_t n = 2; n <= 12; ++n) {
        const auto d = static_cast<unsigned>(n - 1);
        const auto r = max_lambda1(n, d);
        rows.push_back({std::to_string(n), std::to_string(d), g17(r.best_lambda1),
                        g17(std::sqrt(static_cast<double>(n - 1))), std::to_string(r.maximizers.size()),
                        std::to_string(r.search_space_size), r.maximizer.to_string()});
    }
    write_table(dir / "search-table.tsv",
                {"n", "d", "best_lambda1", "star_lambda1", "maximizers", "search_space", "maximizer"}, rows);
}

void golden_partition(const fs::path& dir) {
    Table rows;
    auto add = [&](const std::string& name, const VertexFamily& f, double eps) {
        const auto cert = build_partition(f, eps);
        const auto report = verify_partition(cert, f);
        std::string ms;
        for (auto m : cert.m) ms += (ms.empty() ? "" : ",") + std::to_string(m);
        rows.push_back({name, std::to_string(f.size()), g17(eps), std::to_string(cert.M),
                        cert.core_nonempty ? "1" : "0", ms, flags(report.parts), flags(report.assertions)});
    };
    add("hamming(8,1)", hamming_ball(8, 1), 0.5);
    add("hamming(12,2)", hamming_ball(12, 2), 0.5);
    add("hamming(64,1)", hamming_ball(64, 1), preset_epsilon(EpsilonPreset::sec6, hamming_ball_size(64, 1), 64));
    add("initial(40,16)", initial_segment(40, 16), 0.3);
    add("initial(100,20)", initial_segment(100, 20), 0.5);
    add("star(10,12)", hamming_ball(12, 1), preset_epsilon(EpsilonPreset::sec51, 13, 12));
    add("full(4)", full_cube(4), 0.25);
    write_table(dir / "partition-certs.tsv",
                {"family", "n", "epsilon", "M", "core_nonempty", "m", "parts", "assertions"}, rows);
}

int cmd_regen_goldens(int argc, char** argv) {
    CLI::App app{"Regenerate golden tables"};
    Common c;
    add_common(app, c);
    std::string suite = "all", dir = "tests/goldens";
    app.add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "hamming-table", "bounds-table", "search-table", "partition-certs"}))
        ->capture_default_str();
    app.add_option("--dir", dir)->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(dir);
    json written = json::array();
    auto run = [&](const std::string& name, void (*fn)(const fs::path&)) {
        if (suite == "all" || suite == name) {
            fn(dir);
            written.push_back(name);
        }
    };
    run("hamming-table", golden_hamming);
    run("bounds-table", golden_bounds);
    run("search-table", golden_search);
    run("partition-certs", golden_partition);
    emit(c, {{"command", "regen-goldens"}, {"dir", dir}, {"suites", written}});
    return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(int argc, char** argv) {
    CLI::App app{"Quick internal consistency checks"};
    Common c;
    add_common(app, c);
    CLI11_PARSE(app, argc, argv);

    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, bool ok) {
        checks.push_back({{"check", name}, {"ok", ok}});
        all = all && ok;
    };
    check("hamming(6,2) = 4", std::abs(hamming_lambda1_exact(6, 2).lambda1 - 4.0) < 1e-9);
    check("limit_constant(2) = sqrt(3)", std::abs(limit_constant(2) - std::sqrt(3.0)) < 1e-10);
    check("initial_count(6,1) = 7", initial_count(6, 1).count == 7);
    check("search n=4 gives the 4-cycle", std::abs(max_lambda1(4, 4).best_lambda1 - 2.0) < 1e-9);
    {
        const auto f = hamming_ball(10, 2);
        check("power vs reduced on H_10^2",
              std::abs(lambda1(f).lambda1 - hamming_lambda1_exact(10, 2).lambda1) < 1e-8);
    }
    {
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> a(257), b(257);
        for (auto& x : a) x = u(rng);
        for (auto& x : b) x = u(rng);
        const auto& s = simd::scalar_kernels();
        const auto& k = simd::active_kernels();
        check(std::string("dot kernel agreement (") + std::string(k.name) + ")",
              std::abs(s.dot(a.data(), b.data(), a.size()) - k.dot(a.data(), b.data(), a.size())) < 1e-12);
    }
    {
        const auto f = hamming_ball(8, 1);
        check("partition of H_8^1 verifies", verify_partition(build_partition(f, 0.5), f).passed());
    }
    emit(c, {{"command", "selftest"}, {"kernels", std::string(simd::active_kernels().name)}, {"passed", all},
             {"checks", checks}});
    return all ? 0 : kExitSelftest;
}

void usage(std::ostream& out) {
    out << "usage: cube-spectra <command> [options]\n\ncommands:\n";
    for (const auto& cmd : kCommands) out << "  " << cmd << '\n';
    out << "\nrun 'cube-spectra <command> --help' for the options of a command\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        usage(std::cout);
        return 0;
    }
    static const std::map<std::string, int (*)(int, char**)> table = {
        {"lambda1", cmd_lambda1},         {"hamming", cmd_hamming},     {"bounds", cmd_bounds},
        {"compress", cmd_compress},       {"count-cubes", cmd_count_cubes}, {"search", cmd_search},
        {"partition", cmd_partition},     {"regen-goldens", cmd_regen_goldens}, {"selftest", cmd_selftest}};
    const auto it = table.find(command);
    if (it == table.end()) {
        std::cerr << "cube-spectra: unknown command '" << command << "'\n\n";
        usage(std::cerr);
        return kExitUsage;
    }
    // Subcommand parsers see "cube-spectra <command>" as their program name.
    std::string program = std::string(argv[0]) + " " + command;
    std::vector<char*> args{program.data()};
    for (int k = 2; k < argc; ++k) args.push_back(argv[k]);
    try {
        const int rc = it->second(static_cast<int>(args.size()), args.data());
        // CLI11_PARSE returns CLI11's own codes for parse errors; map them to
        // the precondition exit code (help/version exit 0).
        return rc > kExitBudget && rc != kExitUsage ? kExitPrecondition : rc;
    } catch (const precondition_error& e) {
        std::cerr << "cube-spectra: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::overflow_error& e) {
        std::cerr << "cube-spectra: " << e.what() << '\n';
        return kExitPrecondition;
    }
}
