// friezekit command line: builds periodic infinite friezes from quiddity
// sequences and punctured-disc / strip triangulations, computes entries by
// several independent routes, applies gluing and cutting, and verifies the
// structural properties. All commands read stdin or --file and emit
// deterministic JSON (sorted keys, canonical arc order, counts as decimal
// strings).

#include <CLI11.hpp>

#include "frieze/frieze_view.hpp"
#include "frieze/json_io.hpp"
#include "frieze/labeling.hpp"
#include "frieze/matchings.hpp"
#include "frieze/ops.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace frieze;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadObject = 3;
constexpr int kExitResourceLimit = 4;

struct CliError {
    int code;
    json detail;
};

[[noreturn]] void fail(int code, json detail) { throw CliError{code, std::move(detail)}; }

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json read_json_input(const std::string& inline_text, const std::string& file) {
    std::string text = inline_text;
    if (text.empty()) {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) fail(kExitBadInput, {{"error", "cannot open file"}, {"file", file}});
            text = slurp(in);
        } else {
            text = slurp(std::cin);
        }
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) fail(kExitBadInput, {{"error", "malformed JSON input"}});
    return parsed;
}

QuiddityData parse_quiddity(const json& j) {
    try {
        return quiddity_from_json(j);
    } catch (const std::exception& e) {
        fail(kExitBadInput, {{"error", e.what()}});
    }
}

DiscTriangulation parse_disc(const json& j) {
    DiscTriangulation t{0, {}};
    try {
        t = disc_from_json(j);
    } catch (const std::exception& e) {
        fail(kExitBadInput, {{"error", e.what()}});
    }
    if (!is_triangulation(t.n, t.arcs)) {
        fail(kExitBadObject, {{"error", "not a triangulation of the punctured disc"}});
    }
    return t;
}

StripTriangulation parse_strip(const json& j) {
    try {
        return strip_from_json(j);
    } catch (const json::exception& e) {
        fail(kExitBadInput, {{"error", e.what()}});
    } catch (const std::exception& e) {
        fail(kExitBadObject, {{"error", e.what()}});
    }
}

StripVertex parse_vertex(const std::string& text, bool allow_upper) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        fail(kExitBadInput, {{"error", "vertex must look like i:k"}, {"got", text}});
    }
    try {
        long long i = std::stoll(text.substr(0, colon));
        long long k = std::stoll(text.substr(colon + 1));
        if (i == 0) {
            if (!allow_upper) fail(kExitBadInput, {{"error", "vertex must lie on the lower boundary"}});
            return StripVertex::upper(k);
        }
        return StripVertex::lower(i, k);
    } catch (const std::invalid_argument&) {
        fail(kExitBadInput, {{"error", "vertex must look like i:k"}, {"got", text}});
    } catch (const std::out_of_range&) {
        fail(kExitBadInput, {{"error", "vertex out of range"}, {"got", text}});
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Rendering

struct RenderSpec {
    long long rows = 8;
    long long columns = 0;   // 0: one period
    std::string format = "json";
};

std::string render_ascii(const FriezeView& view, long long rows, long long columns) {
    std::vector<std::vector<std::string>> cells;
    size_t width = 1;
    for (long long t = 0; t < rows; ++t) {
        std::vector<std::string> row;
        for (long long i = 1; i <= columns; ++i) {
            row.push_back(to_decimal(view.entry(i, i + t - 2)));
            width = std::max(width, row.back().size());
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream out;
    for (long long t = 0; t < rows; ++t) {
        std::string line(static_cast<size_t>(2 * t), ' ');
        for (long long i = 0; i < columns; ++i) {
            std::string cell = cells[static_cast<size_t>(t)][static_cast<size_t>(i)];
            cell.resize(width + 2, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

int render_frieze(const QuiddityData& q, const RenderSpec& spec) {
    long long columns = spec.columns > 0 ? spec.columns : q.n();
    ValidationReport report = validate_to_depth(q, spec.rows);
    if (!report.valid) {
        fail(kExitBadInput, {{"error", "quiddity does not generate a positive frieze"},
                             {"i", report.first_violation->i},
                             {"j", report.first_violation->j}});
    }
    FriezeView view(q);
    if (spec.format == "ascii-diamond") {
        std::cout << render_ascii(view, spec.rows, columns);
        return kExitOk;
    }
    if (spec.format == "csv") {
        for (long long t = 0; t < spec.rows; ++t) {
            for (long long i = 1; i <= columns; ++i) {
                std::cout << (i > 1 ? "," : "") << to_decimal(view.entry(i, i + t - 2));
            }
            std::cout << "\n";
        }
        return kExitOk;
    }
    json rows = json::array();
    for (long long t = 0; t < spec.rows; ++t) {
        json row = json::array();
        for (long long i = 1; i <= columns; ++i) row.push_back(to_decimal(view.entry(i, i + t - 2)));
        rows.push_back(std::move(row));
    }
    emit({{"n", q.n()},
          {"quiddity", quiddity_to_json(q)},
          {"row_start", -2},
          {"columns", columns},
          {"rows", rows}});
    return kExitOk;
}

// ---------------------------------------------------------------------------
// frieze verify: the consolidated check runner

std::optional<DiscTriangulation> realize_quiddity(const QuiddityData& q, long long bound) {
    if (q.n() > bound) return std::nullopt;
    for (const DiscTriangulation& t : enumerate_triangulations(q.n(), bound)) {
        if (quiddity_of(t).equivalent(q)) return t;
    }
    return std::nullopt;
}

int run_verify(const json& input, std::vector<std::string> checks, long long depth,
               long long bound) {
    std::optional<DiscTriangulation> tri;
    QuiddityData q({1});
    if (input.is_array()) {
        q = parse_quiddity(input);
    } else if (input.contains("arcs") && input.contains("n") &&
               !input.at("arcs").empty() && input.at("arcs").front().contains("from")) {
        StripTriangulation strip = parse_strip(input);
        tri = psi(strip);
        q = quiddity_of(*tri);
    } else {
        tri = parse_disc(input);
        q = quiddity_of(*tri);
    }
    if (checks.empty()) {
        checks = {"unimodular", "arithmetic", "matchings", "labels", "bijection"};
    }

    if (!tri) tri = realize_quiddity(q, bound);
    const char* unrealized = "no disc triangulation realizes this quiddity";

    json out;
    bool failed = false;
    for (const std::string& name : checks) {
        json entry;
        if (name == "unimodular") {
            entry["status"] = verify_unimodular(q, depth) ? "pass" : "fail";
        } else if (name == "arithmetic") {
            ArithmeticReport report = check_arithmetic(q, q.n(), std::max<long long>(2, depth / 2));
            entry["status"] = report.pass ? "pass" : "fail";
            if (!report.pass) {
                entry["first_violation"] = {{"i", (*report.first_violation)[0]},
                                            {"k", (*report.first_violation)[1]},
                                            {"l", (*report.first_violation)[2]}};
            }
        } else if (name == "matchings" || name == "labels" || name == "bijection") {
            if (!tri) {
                entry["status"] = "skipped";
                entry["reason"] = unrealized;
            } else {
                StripTriangulation strip = phi(*tri);
                if (name == "matchings") {
                    entry["status"] = verify_matching_theorem(strip, depth) ? "pass" : "fail";
                } else if (name == "labels") {
                    bool ok = true;
                    FriezeView view(q);
                    for (long long i = 1; i <= q.n() && ok; ++i) {
                        for (long long j = i - 2; j <= i + depth && ok; ++j) {
                            ok = entry_via_labels(strip, i, j) == view.entry(i, j);
                        }
                    }
                    entry["status"] = ok ? "pass" : "fail";
                } else {
                    bool ok = psi(strip) == *tri && quiddity_of_strip(strip) == quiddity_of(*tri);
                    entry["status"] = ok ? "pass" : "fail";
                }
            }
        } else {
            fail(kExitBadInput, {{"error", "unknown check"}, {"check", name}});
        }
        failed |= entry["status"] == "fail";
        out[name] = std::move(entry);
    }
    emit({{"checks", out}, {"depth", depth}});
    return failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------

json triangle_to_json(const Triangle& tri, long long n) {
    json lows = json::array();
    for (long long p : tri.lows) {
        StripVertex v = lower_at(p, n);
        lows.push_back({{"i", v.i}, {"k", v.k}});
    }
    switch (tri.kind) {
        case Triangle::Kind::LowerFan:
            return {{"kind", "lower"}, {"vertices", lows}};
        case Triangle::Kind::UpperFan:
            return {{"kind", "fan"}, {"upper", tri.upper_k}, {"vertices", lows}};
        default:
            return {{"kind", "quad"}, {"upper", tri.upper_k}, {"vertices", lows}};
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of periodic infinite friezes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    long long rows = 8;
    long long depth = 12;
    long long jobs = 1;
    long long limit = 0;
    app.add_option("--format", format, "output format: json, ascii-diamond, csv")
        ->capture_default_str();
    app.add_option("--rows", rows, "rows to render / validate")->capture_default_str();
    app.add_option("--depth", depth, "verification depth")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for enumeration payloads")
        ->capture_default_str();
    app.add_option("--limit", limit, "override size limits (enumeration bound, window cap)");

    std::string file;
    app.add_option("--file", file, "read input from a file instead of stdin");

    // ---- frieze ----------------------------------------------------------
    CLI::App* frieze_cmd = app.add_subcommand("frieze", "periodic friezes from quiddity rows");
    std::string quiddity_arg;
    long long opt_i = 0;
    long long opt_j = 0;
    long long columns = 0;
    CLI::App* frieze_gen = frieze_cmd->add_subcommand("gen", "render a frieze");
    frieze_gen->add_option("quiddity", quiddity_arg, "quiddity JSON array");
    frieze_gen->add_option("--columns", columns, "columns to render (default: one period)");
    CLI::App* frieze_entry = frieze_cmd->add_subcommand("entry", "single entry m_ij");
    frieze_entry->add_option("quiddity", quiddity_arg, "quiddity JSON array");
    frieze_entry->add_option("-i", opt_i, "row index i")->required();
    frieze_entry->add_option("-j", opt_j, "column index j")->required();
    CLI::App* frieze_verify = frieze_cmd->add_subcommand("verify", "run structural checks");
    std::vector<std::string> checks;
    frieze_verify->add_option("input", quiddity_arg, "quiddity or triangulation JSON");
    frieze_verify->add_option("--checks", checks,
                              "subset of unimodular,arithmetic,matchings,labels,bijection")
        ->delimiter(',');

    // ---- ops -------------------------------------------------------------
    CLI::App* ops_cmd = app.add_subcommand("ops", "gluing and cutting");
    long long opt_k = 0;
    CLI::App* ops_glue = ops_cmd->add_subcommand("glue", "glue above (a_k, a_k+1) in a window");
    ops_glue->add_option("window", quiddity_arg, "window JSON {values, offset}");
    ops_glue->add_option("-k", opt_k, "left index of the glued pair")->required();
    CLI::App* ops_cut = ops_cmd->add_subcommand("cut", "cut above a_k = 1 in a window");
    ops_cut->add_option("window", quiddity_arg, "window JSON {values, offset}");
    ops_cut->add_option("-k", opt_k, "index of the entry 1")->required();
    CLI::App* ops_nglue = ops_cmd->add_subcommand("nglue", "periodicity-preserving glue");
    ops_nglue->add_option("quiddity", quiddity_arg, "quiddity JSON array");
    ops_nglue->add_option("-k", opt_k, "glue position in 1..n")->required();
    CLI::App* ops_ncut = ops_cmd->add_subcommand("ncut", "periodicity-preserving cut");
    ops_ncut->add_option("quiddity", quiddity_arg, "quiddity JSON array");
    ops_ncut->add_option("-k", opt_k, "cut position with a_k = 1")->required();

    // ---- tri -------------------------------------------------------------
    CLI::App* tri_cmd = app.add_subcommand("tri", "punctured-disc triangulations");
    CLI::App* tri_quiddity = tri_cmd->add_subcommand("quiddity", "quiddity sequence of a triangulation");
    tri_quiddity->add_option("triangulation", quiddity_arg, "triangulation JSON");
    CLI::App* tri_frieze = tri_cmd->add_subcommand("frieze", "render the associated frieze");
    tri_frieze->add_option("triangulation", quiddity_arg, "triangulation JSON");
    tri_frieze->add_option("--columns", columns, "columns to render (default: one period)");
    long long enum_n = 0;
    CLI::App* tri_enum = tri_cmd->add_subcommand("enum", "stream all triangulations of S_n^1");
    tri_enum->add_option("n", enum_n, "number of boundary vertices")->required();
    long long opt_x = 0;
    CLI::App* tri_cut = tri_cmd->add_subcommand("cut", "remove the ear at a special vertex");
    tri_cut->add_option("triangulation", quiddity_arg, "triangulation JSON");
    tri_cut->add_option("-x", opt_x, "special vertex")->required();
    CLI::App* tri_glue = tri_cmd->add_subcommand("glue", "insert an ear after vertex i");
    tri_glue->add_option("triangulation", quiddity_arg, "triangulation JSON");
    tri_glue->add_option("-i", opt_i, "vertex i (new vertex lands between i and i+1)")->required();

    // ---- strip -----------------------------------------------------------
    CLI::App* strip_cmd = app.add_subcommand("strip", "periodic strip triangulations");
    CLI::App* strip_phi = strip_cmd->add_subcommand("phi", "lift a disc triangulation");
    strip_phi->add_option("triangulation", quiddity_arg, "disc triangulation JSON");
    CLI::App* strip_psi = strip_cmd->add_subcommand("psi", "project back to the disc");
    strip_psi->add_option("strip", quiddity_arg, "strip triangulation JSON");
    CLI::App* strip_domains = strip_cmd->add_subcommand("domains", "fundamental domains");
    strip_domains->add_option("strip", quiddity_arg, "strip triangulation JSON");

    // ---- match -----------------------------------------------------------
    CLI::App* match_cmd = app.add_subcommand("match", "matchings between vertices and triangles");
    std::string from_arg;
    std::string to_arg;
    CLI::App* match_count_cmd = match_cmd->add_subcommand("count", "matching number of a window");
    match_count_cmd->add_option("strip", quiddity_arg, "strip triangulation JSON");
    match_count_cmd->add_option("--from", from_arg, "window start i:k")->required();
    match_count_cmd->add_option("--to", to_arg, "window end i:k")->required();
    CLI::App* match_list_cmd = match_cmd->add_subcommand("list", "all matchings of a window");
    match_list_cmd->add_option("strip", quiddity_arg, "strip triangulation JSON");
    match_list_cmd->add_option("--from", from_arg, "window start i:k")->required();
    match_list_cmd->add_option("--to", to_arg, "window end i:k")->required();
    CLI::App* match_verify_cmd =
        match_cmd->add_subcommand("verify", "matching numbers against frieze entries");
    match_verify_cmd->add_option("strip", quiddity_arg, "strip triangulation JSON");

    // ---- label -----------------------------------------------------------
    CLI::App* label_cmd = app.add_subcommand("label", "vertex labels along the strip");
    std::string start_arg;
    CLI::App* label_run = label_cmd->add_subcommand("run", "labels around a starting vertex");
    label_run->add_option("strip", quiddity_arg, "strip triangulation JSON");
    label_run->add_option("--start", start_arg, "starting vertex i:k (0:k for the puncture)")
        ->required();
    CLI::App* label_entry = label_cmd->add_subcommand("entry", "frieze entry via labels");
    label_entry->add_option("strip", quiddity_arg, "strip triangulation JSON");
    label_entry->add_option("-i", opt_i, "row index i")->required();
    label_entry->add_option("-j", opt_j, "column index j")->required();
    CLI::App* label_diffs = label_cmd->add_subcommand("diffs", "common differences matrix");
    label_diffs->add_option("strip", quiddity_arg, "strip triangulation JSON");

    for (CLI::App* group : {frieze_cmd, ops_cmd, tri_cmd, strip_cmd, match_cmd, label_cmd}) {
        group->fallthrough();
        group->require_subcommand(1);
        for (CLI::App* sub : group->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (frieze_gen->parsed()) {
            QuiddityData q = parse_quiddity(read_json_input(quiddity_arg, file));
            return render_frieze(q, {rows, columns, format});
        }
        if (frieze_entry->parsed()) {
            QuiddityData q = parse_quiddity(read_json_input(quiddity_arg, file));
            std::string value = to_decimal(entry(q, opt_i, opt_j));
            emit({{"i", opt_i}, {"j", opt_j}, {"value", value}});
            return kExitOk;
        }
        if (frieze_verify->parsed()) {
            long long bound = limit > 0 ? limit : 7;
            return run_verify(read_json_input(quiddity_arg, file), checks, depth, bound);
        }
        if (ops_glue->parsed() || ops_cut->parsed()) {
            json in = read_json_input(quiddity_arg, file);
            WindowRow w;
            try {
                for (const json& e : in.at("values")) w.values.push_back(int_from_json(e));
                w.offset = in.value("offset", 0LL);
            } catch (const std::exception& e) {
                fail(kExitBadInput, {{"error", e.what()}});
            }
            WindowRow out = ops_glue->parsed() ? glue_window(w, opt_k) : cut_window(w, opt_k);
            json values = json::array();
            for (const Int& v : out.values) values.push_back(int_to_json(v));
            emit({{"values", values}, {"offset", out.offset}});
            return kExitOk;
        }
        if (ops_nglue->parsed() || ops_ncut->parsed()) {
            QuiddityData q = parse_quiddity(read_json_input(quiddity_arg, file));
            QuiddityData out = ops_nglue->parsed() ? n_glue(q, opt_k) : n_cut(q, opt_k);
            emit(quiddity_to_json(out));
            return kExitOk;
        }
        if (tri_quiddity->parsed()) {
            DiscTriangulation t = parse_disc(read_json_input(quiddity_arg, file));
            emit(quiddity_to_json(quiddity_of(t)));
            return kExitOk;
        }
        if (tri_frieze->parsed()) {
            DiscTriangulation t = parse_disc(read_json_input(quiddity_arg, file));
            return render_frieze(quiddity_of(t), {rows, columns, format});
        }
        if (tri_enum->parsed()) {
            long long bound = limit > 0 ? limit : 7;
            std::vector<DiscTriangulation> all = enumerate_triangulations(enum_n, bound);
            std::vector<std::string> lines(all.size());
            auto payload = [&](size_t idx) {
                const DiscTriangulation& t = all[idx];
                json j = disc_to_json(t);
                j["quiddity"] = quiddity_to_json(quiddity_of(t));
                j["bridging"] = bridging_count(t);
                return j.dump();
            };
            if (jobs > 1) {
                std::vector<std::future<void>> workers;
                std::atomic<size_t> next{0};
                for (long long w = 0; w < jobs; ++w) {
                    workers.push_back(std::async(std::launch::async, [&]() {
                        for (size_t idx = next++; idx < all.size(); idx = next++) {
                            lines[idx] = payload(idx);
                        }
                    }));
                }
                for (auto& worker : workers) worker.get();
            } else {
                for (size_t idx = 0; idx < all.size(); ++idx) lines[idx] = payload(idx);
            }
            for (const std::string& line : lines) std::cout << line << "\n";
            return kExitOk;
        }
        if (tri_cut->parsed()) {
            DiscTriangulation t = parse_disc(read_json_input(quiddity_arg, file));
            emit(disc_to_json(cut_triangle(t, opt_x)));
            return kExitOk;
        }
        if (tri_glue->parsed()) {
            DiscTriangulation t = parse_disc(read_json_input(quiddity_arg, file));
            emit(disc_to_json(glue_triangle(t, opt_i)));
            return kExitOk;
        }
        if (strip_phi->parsed()) {
            DiscTriangulation t = parse_disc(read_json_input(quiddity_arg, file));
            emit(strip_to_json(phi(t)));
            return kExitOk;
        }
        if (strip_psi->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            emit(disc_to_json(psi(strip)));
            return kExitOk;
        }
        if (strip_domains->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            json domains = json::array();
            for (const FundamentalDomain& d : fundamental_domains(strip)) {
                StripVertex lo = lower_at(d.lo, strip.n());
                StripVertex hi = lower_at(d.hi, strip.n());
                domains.push_back({{"base", d.base_vertex},
                                   {"from", {{"i", lo.i}, {"k", lo.k}}},
                                   {"to", {{"i", hi.i}, {"k", hi.k}}}});
            }
            emit({{"count", domains.size()}, {"domains", domains}});
            return kExitOk;
        }
        if (match_count_cmd->parsed() || match_list_cmd->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            StripVertex vs = parse_vertex(from_arg, false);
            StripVertex ve = parse_vertex(to_arg, false);
            if (match_count_cmd->parsed()) {
                long long cap = limit > 0 ? limit : kDefaultCountingWindow;
                std::string count = to_decimal(matching_count(strip, vs, ve, cap));
                emit({{"from", from_arg}, {"to", to_arg}, {"count", count}});
                return kExitOk;
            }
            long long cap = limit > 0 ? limit : enumeration_window_limit();
            std::vector<Matching> all = enumerate_matchings(strip, vs, ve, cap);
            json list = json::array();
            for (const Matching& m : all) {
                json tuple = json::array();
                for (const Triangle& tri : m.triangles) {
                    tuple.push_back(triangle_to_json(tri, strip.n()));
                }
                list.push_back(std::move(tuple));
            }
            emit({{"from", from_arg},
                  {"to", to_arg},
                  {"count", to_decimal(Int(all.size()))},
                  {"matchings", list}});
            return kExitOk;
        }
        if (match_verify_cmd->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            bool ok = verify_matching_theorem(strip, depth);
            emit({{"check", "matchings"}, {"depth", depth}, {"status", ok ? "pass" : "fail"}});
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (label_run->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            StripVertex start = parse_vertex(start_arg, true);
            long long span = rows;
            long long anchor = start.is_upper ? 1 : position_of(start, strip.n());
            LabelMap labels = labels_from(strip, start, anchor - span, anchor + span);
            json right = json::array();
            json left = json::array();
            for (long long p = anchor; p <= anchor + span; ++p) {
                right.push_back(int_to_json(labels.at_position(p)));
            }
            for (long long p = anchor; p >= anchor - span; --p) {
                left.push_back(int_to_json(labels.at_position(p)));
            }
            json out = {{"start", start_arg},
                        {"upper", int_to_json(*labels.upper)},
                        {"right", right},
                        {"left", left}};
            if (format == "ascii-diamond" || format == "ascii") {
                std::ostringstream sketch;
                sketch << "upper: " << to_decimal(*labels.upper) << "\n";
                for (long long p = anchor - span; p <= anchor + span; ++p) {
                    StripVertex v = lower_at(p, strip.n());
                    sketch << v.i << ":" << v.k << "=" << to_decimal(labels.at_position(p))
                           << (p == anchor ? "*" : "") << (p < anchor + span ? " " : "");
                }
                sketch << "\n";
                std::cout << sketch.str();
            } else {
                emit(out);
            }
            return kExitOk;
        }
        if (label_entry->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            std::string value = to_decimal(entry_via_labels(strip, opt_i, opt_j));
            emit({{"i", opt_i}, {"j", opt_j}, {"value", value}});
            return kExitOk;
        }
        if (label_diffs->parsed()) {
            StripTriangulation strip = parse_strip(read_json_input(quiddity_arg, file));
            json labels = json::array();
            for (const Int& v : puncture_labels(strip)) labels.push_back(int_to_json(v));
            json matrix = json::array();
            for (const auto& row : common_differences(strip)) {
                json r = json::array();
                for (const Int& v : row) r.push_back(int_to_json(v));
                matrix.push_back(std::move(r));
            }
            emit({{"bridging", bridging_count(strip)},
                  {"puncture_labels", labels},
                  {"differences", matrix}});
            return kExitOk;
        }
        fail(kExitBadInput, {{"error", "no subcommand"}});
    } catch (const CliError& e) {
        std::cerr << e.detail.dump() << "\n";
        return e.code;
    } catch (const resource_limit_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitResourceLimit;
    } catch (const invalid_frieze_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitBadObject;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
