#include "bisym/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bisym/builtins.hpp"
#include "bisym/checkers.hpp"
#include "bisym/dichotomy.hpp"
#include "bisym/dsl.hpp"
#include "bisym/dyadic.hpp"
#include "bisym/expr_space.hpp"
#include "bisym/grid.hpp"
#include "bisym/kernels.hpp"

namespace bisym::cli {

namespace {

using nlohmann::json;

struct MapOptions {
    std::string builtin_name;
    std::string dsl_file;
    std::vector<double> interval; // lo hi
    std::optional<double> tolerance;
};

void add_map_options(CLI::App* cmd, MapOptions& opt, bool interval_required_default) {
    auto* map = cmd->add_option("--map", opt.builtin_name, "built-in map name");
    auto* dsl = cmd->add_option("--dsl-file", opt.dsl_file, "path to a DSL map file");
    map->excludes(dsl);
    dsl->excludes(map);
    auto* iv = cmd->add_option("--interval", opt.interval, "domain interval: LO HI")
                   ->expected(2);
    (void)iv;
    (void)interval_required_default;
    cmd->add_option("--tolerance", [&opt](const std::vector<std::string>& vals) {
        opt.tolerance = std::stod(vals.front());
        return true;
    }, "override the equality tolerance");
}

Interval resolve_interval(const MapOptions& opt, double def_lo, double def_hi) {
    if (opt.interval.size() == 2)
        return Interval(opt.interval[0], opt.interval[1]);
    return Interval(def_lo, def_hi);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::invalid_config, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ResolvedMap {
    BinaryMap map;
    std::string source; // "builtin:<name>" or "dsl:<path>"
};

ResolvedMap resolve_map(const MapOptions& opt, const Interval& domain) {
    if (!opt.builtin_name.empty())
        return ResolvedMap{builtin(opt.builtin_name, domain), "builtin:" + opt.builtin_name};
    if (!opt.dsl_file.empty()) {
        std::string src = read_file(opt.dsl_file);
        try {
            return ResolvedMap{dsl::compile_source(src, domain), "dsl:" + opt.dsl_file};
        } catch (const ParseError& e) {
            throw ParseError(static_cast<errc>(e.code()), e.begin(), e.end(),
                             e.format(src), e.expected(), e.snippet());
        }
    }
    throw Error(errc::invalid_config, "one of --map or --dsl-file is required");
}

json config_json(const std::string& subcommand, const MapOptions& opt, const Interval& iv,
                 std::initializer_list<std::pair<const char*, json>> extra) {
    json cfg{
        {"subcommand", subcommand},
        {"interval", {iv.lo, iv.hi}},
    };
    if (!opt.builtin_name.empty())
        cfg["map"] = opt.builtin_name;
    if (!opt.dsl_file.empty())
        cfg["dsl_file"] = opt.dsl_file;
    if (opt.tolerance)
        cfg["tolerance"] = *opt.tolerance;
    for (const auto& [k, v] : extra)
        cfg[k] = v;
    return cfg;
}

void emit(std::ostream& out, bool as_json, const json& cfg, const json& result,
          const std::string& table_text) {
    if (as_json) {
        json doc{{"tool_version", kToolVersion}, {"config", cfg}, {"result", result}};
        out << doc.dump(2) << "\n";
    } else {
        out << table_text;
    }
}

std::string witness_text(const Witness& w) {
    std::ostringstream os;
    os.precision(12);
    os << "(";
    for (std::size_t i = 0; i < w.inputs.size(); ++i)
        os << (i ? ", " : "") << w.inputs[i];
    os << ") lhs=" << w.lhs << " rhs=" << w.rhs << " diff=" << w.diff;
    if (!w.note.empty())
        os << " [" << w.note << "]";
    return os.str();
}

// ---- check ------------------------------------------------------------

struct CheckConfig {
    MapOptions map;
    int n = 101;
    int quad_n = 33;
    std::uint64_t seed = 0;
    bool strict_mean = false;
    std::vector<std::string> axioms;
    bool json_out = false;
};

int run_check(const CheckConfig& cfg, std::ostream& out) {
    Interval iv = resolve_interval(cfg.map, 0.0, 1.0);
    ResolvedMap rm = resolve_map(cfg.map, iv);
    SampleGrid grid = make_grid(iv, cfg.n, cfg.seed);
    SampleGrid quad_grid = make_grid(iv, cfg.quad_n, cfg.seed);

    std::vector<PropertyReport> reports;
    auto want = [&](const std::string& name) {
        if (cfg.axioms.empty())
            return true;
        for (const auto& a : cfg.axioms)
            if (a == name)
                return true;
        return false;
    };
    if (want("reflexive"))
        reports.push_back(check_reflexive(rm.map, grid, cfg.map.tolerance));
    if (want("partially-strictly-increasing"))
        reports.push_back(check_partial_strict_increasing(rm.map, grid));
    if (want("symmetric"))
        reports.push_back(check_symmetry(rm.map, grid, cfg.map.tolerance));
    if (want("bisymmetric"))
        reports.push_back(check_bisymmetry(rm.map, quad_grid, cfg.map.tolerance));
    if (want("cancellative"))
        reports.push_back(check_cancellative(rm.map, grid, cfg.map.tolerance));
    if (want("mean"))
        reports.push_back(check_mean_bounds(rm.map, grid, false, cfg.map.tolerance));
    if (cfg.strict_mean && want("strict-mean"))
        reports.push_back(check_mean_bounds(rm.map, grid, true, cfg.map.tolerance));
    if (reports.empty())
        throw Error(errc::invalid_config, "no known axiom selected");

    bool all_hold = true;
    json jreports = json::object();
    std::ostringstream table;
    table << "axiom checks for " << rm.map.name() << " on [" << iv.lo << ", " << iv.hi << "]\n";
    for (const auto& r : reports) {
        all_hold = all_hold && r.holds();
        jreports[r.property] = to_json(r);
        table << "  " << (r.holds() ? "PASS" : "FAIL") << "  " << r.property << "  (samples "
              << r.samples_checked << ", violations " << r.truncated_count << ")\n";
        if (!r.witnesses.empty())
            table << "        first witness: " << witness_text(r.witnesses.front()) << "\n";
    }
    table << (all_hold ? "all checked axioms hold on this sample\n"
                       : "some axioms FAIL on this sample\n");

    json cfg_json = config_json("check", cfg.map, iv,
                                {{"n", cfg.n},
                                 {"quad_n", cfg.quad_n},
                                 {"seed", cfg.seed},
                                 {"strict_mean", cfg.strict_mean}});
    emit(out, cfg.json_out, cfg_json, json{{"axioms", jreports}, {"all_hold", all_hold}},
         table.str());
    return all_hold ? kExitOk : kExitAxiomFailure;
}

// ---- dichotomy ----------------------------------------------------------

struct DichotomyConfig {
    MapOptions map;
    int n = 101;
    int quad_n = 17;
    std::uint64_t seed = 0;
    bool json_out = false;
};

int run_dichotomy(const DichotomyConfig& cfg, std::ostream& out) {
    Interval iv = resolve_interval(cfg.map, 0.0, 1.0);
    ResolvedMap rm = resolve_map(cfg.map, iv);
    SampleGrid grid = make_grid(iv, cfg.n, cfg.seed);
    DichotomyVerdict verdict = dichotomy_verdict(rm.map, grid, cfg.quad_n, cfg.map.tolerance);

    std::ostringstream table;
    table << "dichotomy verdict for " << rm.map.name() << ": "
          << dichotomy_outcome_name(verdict.verdict) << "\n";
    table << "  symmetric pairs " << verdict.partition.symmetric_pairs << ", asymmetric pairs "
          << verdict.partition.asymmetric_pairs << ", classes "
          << verdict.partition.classes.size() << "\n";
    if (!verdict.failed_hypotheses.empty()) {
        table << "  failed hypotheses:";
        for (const auto& h : verdict.failed_hypotheses)
            table << " " << h;
        table << "\n";
    }
    if (verdict.verdict == DichotomyOutcome::Inconclusive)
        table << "  WARNING: mixed symmetry with all hypotheses passing — the dichotomy "
                 "theorem forbids this; please report this map\n";

    json cfg_json = config_json("dichotomy", cfg.map, iv,
                                {{"n", cfg.n}, {"quad_n", cfg.quad_n}, {"seed", cfg.seed}});
    emit(out, cfg.json_out, cfg_json, to_json(verdict), table.str());

    switch (verdict.verdict) {
    case DichotomyOutcome::SymmetricEverywhere:
    case DichotomyOutcome::NowhereSymmetric: return kExitOk;
    case DichotomyOutcome::HypothesisViolated: return kExitHypothesisViolated;
    case DichotomyOutcome::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

// ---- extract ----------------------------------------------------------

struct ExtractConfig {
    MapOptions map;
    double u = 0.0;
    double v = 1.0;
    int depth = 12;
    int grid_n = 101;
    std::uint64_t seed = 0;
    std::string csv_path;
    bool json_out = false;
};

int run_extract(const ExtractConfig& cfg, std::ostream& out) {
    if (!(cfg.u < cfg.v))
        throw Error(errc::invalid_config, "need --u < --v");
    Interval iv = resolve_interval(cfg.map, cfg.u, cfg.v);
    ResolvedMap rm = resolve_map(cfg.map, iv);

    json result;
    std::ostringstream table;
    int exit_code = kExitOk;
    result["table_depth"] = cfg.depth;
    try {
        DyadicTable dt = build_dyadic_table(rm.map, cfg.u, cfg.v, cfg.depth);
        bool monotone = check_table_monotone(dt).holds();
        result["monotone"] = monotone;
        if (!cfg.csv_path.empty()) {
            std::ofstream csv(cfg.csv_path);
            if (!csv)
                throw Error(errc::invalid_config, "cannot write '" + cfg.csv_path + "'");
            csv << "index,dyadic,value\n";
            csv.precision(17);
            for (std::size_t k = 0; k < dt.values.size(); ++k)
                csv << k << "," << dt.dyadic(k) << "," << dt.values[k] << "\n";
        }
        if (monotone) {
            DensityReport density = density_report(dt);
            SampleGrid grid = make_grid(Interval(cfg.u, cfg.v), cfg.grid_n, cfg.seed);
            ReconstructionReport rec = roundtrip_residual(rm.map, cfg.u, cfg.v, cfg.depth, grid);
            result["max_gap"] = density.max_gap;
            result["residual"] = json{{"max", rec.max_abs_residual},
                                      {"argmax", {rec.argmax_x, rec.argmax_y}}};
            result["symmetric_defect"] = rec.symmetric_defect;
            table << "generator table for " << rm.map.name() << " on [" << cfg.u << ", "
                  << cfg.v << "], depth " << cfg.depth << "\n"
                  << "  monotone: yes, max gap " << density.max_gap << "\n"
                  << "  reconstruction residual " << rec.max_abs_residual << " at ("
                  << rec.argmax_x << ", " << rec.argmax_y << ")\n"
                  << "  symmetric defect " << rec.symmetric_defect << "\n";
        } else {
            result["monotone"] = false;
            result["max_gap"] = nullptr;
            result["residual"] = nullptr;
            SampleGrid grid = make_grid(Interval(cfg.u, cfg.v), cfg.grid_n, cfg.seed);
            BinaryMap view("view", rm.map.kind(), Interval(cfg.u, cfg.v),
                           [m = rm.map](double x, double y) { return m(x, y); });
            result["symmetric_defect"] =
                kernels::max_abs_diff(view, swap_arguments(view), grid.points, grid.points).value;
            table << "generator table for " << rm.map.name()
                  << " is NOT strictly increasing; no inverse exists at depth " << cfg.depth
                  << "\n";
            exit_code = kExitAxiomFailure;
        }
    } catch (const Error& e) {
        if (e.code() != errc::domain_escape)
            throw;
        result["monotone"] = false;
        result["max_gap"] = nullptr;
        result["residual"] = nullptr;
        result["error"] = std::string(e.what());
        table << "table construction failed: " << e.what() << "\n";
        exit_code = kExitAxiomFailure;
    }

    json cfg_json = config_json("extract", cfg.map, iv,
                                {{"u", cfg.u},
                                 {"v", cfg.v},
                                 {"depth", cfg.depth},
                                 {"grid", cfg.grid_n},
                                 {"seed", cfg.seed}});
    emit(out, cfg.json_out, cfg_json, result, table.str());
    return exit_code;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateConfig {
    MapOptions map;
    int depth = 3;
    std::optional<double> u, v;
    bool json_out = false;
};

int run_enumerate(const EnumerateConfig& cfg, std::ostream& out) {
    Interval iv = resolve_interval(cfg.map, 0.0, 1.0);
    MapOptions opts = cfg.map;
    if (opts.builtin_name.empty() && opts.dsl_file.empty())
        opts.builtin_name = "arithmetic";
    ResolvedMap rm = resolve_map(opts, iv);
    double u = cfg.u.value_or(iv.lo);
    double v = cfg.v.value_or(iv.hi);

    auto values = evaluate_value_set(rm.map, u, v, cfg.depth, cfg.map.tolerance);
    json jvalues = json::array();
    for (const auto& w : values)
        jvalues.push_back(json{{"value", w.value}, {"length", w.length}});

    json result{{"depth", cfg.depth}, {"values", std::move(jvalues)}};
    unsigned __int128 count = count_exprs(cfg.depth);
    if (count <= static_cast<unsigned __int128>(UINT64_MAX))
        result["tree_count"] = static_cast<std::uint64_t>(count);
    else
        result["tree_count"] = count_exprs_decimal(cfg.depth);

    std::ostringstream table;
    table << "expression space of " << rm.map.name() << " from u=" << u << ", v=" << v
          << " to depth " << cfg.depth << "\n"
          << "  trees: " << count_exprs_decimal(cfg.depth) << ", distinct values: "
          << values.size() << "\n";
    table.precision(12);
    for (const auto& w : values)
        table << "    " << w.value << "  (length " << w.length << ")\n";

    json cfg_json = config_json("enumerate", opts, iv,
                                {{"depth", cfg.depth}, {"u", u}, {"v", v}});
    emit(out, cfg.json_out, cfg_json, result, table.str());
    return kExitOk;
}

// ---- eval ----------------------------------------------------------

struct EvalConfig {
    MapOptions map;
    double x = 0.0;
    double y = 0.0;
    bool json_out = false;
};

int run_eval(const EvalConfig& cfg, std::ostream& out) {
    Interval iv = resolve_interval(cfg.map, 0.0, 1.0);
    ResolvedMap rm = resolve_map(cfg.map, iv);
    double value = rm.map(cfg.x, cfg.y);

    std::ostringstream table;
    table.precision(17);
    table << value << "\n";
    json cfg_json = config_json("eval", cfg.map, iv, {{"x", cfg.x}, {"y", cfg.y}});
    emit(out, cfg.json_out, cfg_json, json{{"value", value}}, table.str());
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical laboratory for two-variable bisymmetric operations"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CheckConfig check_cfg;
    auto* check = app.add_subcommand("check", "run the axiom checkers");
    add_map_options(check, check_cfg.map, false);
    check->add_option("--n", check_cfg.n, "pairwise grid size");
    check->add_option("--quad-n", check_cfg.quad_n, "quadruple-sweep grid size");
    check->add_option("--seed", check_cfg.seed, "grid jitter seed (0 = uniform)");
    check->add_option("--axioms", check_cfg.axioms, "subset of axioms to run")->delimiter(',');
    check->add_flag("--strict-mean", check_cfg.strict_mean, "also require a strict mean");
    check->add_flag("--json", check_cfg.json_out, "emit a JSON report");

    DichotomyConfig dich_cfg;
    auto* dich = app.add_subcommand("dichotomy", "classify the symmetry structure");
    add_map_options(dich, dich_cfg.map, false);
    dich->add_option("--n", dich_cfg.n, "grid size");
    dich->add_option("--quad-n", dich_cfg.quad_n, "bisymmetry grid size (mixed branch)");
    dich->add_option("--seed", dich_cfg.seed, "grid jitter seed (0 = uniform)");
    dich->add_flag("--json", dich_cfg.json_out, "emit a JSON report");

    ExtractConfig ext_cfg;
    auto* ext = app.add_subcommand("extract", "extract the generator on dyadics");
    add_map_options(ext, ext_cfg.map, false);
    ext->add_option("--u", ext_cfg.u, "left seed point")->required();
    ext->add_option("--v", ext_cfg.v, "right seed point")->required();
    ext->add_option("--depth", ext_cfg.depth, "table depth");
    ext->add_option("--grid", ext_cfg.grid_n, "residual grid size");
    ext->add_option("--seed", ext_cfg.seed, "grid jitter seed (0 = uniform)");
    ext->add_option("--csv", ext_cfg.csv_path, "write the raw table as CSV");
    ext->add_flag("--json", ext_cfg.json_out, "emit a JSON report");

    EnumerateConfig enum_cfg;
    auto* enumc = app.add_subcommand("enumerate", "enumerate the expression space");
    add_map_options(enumc, enum_cfg.map, false);
    enumc->add_option("--depth", enum_cfg.depth, "expression depth");
    double u_opt = 0.0, v_opt = 0.0;
    auto* uopt = enumc->add_option("--u", u_opt, "left seed value");
    auto* vopt = enumc->add_option("--v", v_opt, "right seed value");
    enumc->add_flag("--json", enum_cfg.json_out, "emit a JSON report");

    EvalConfig eval_cfg;
    auto* evalc = app.add_subcommand("eval", "evaluate the map at one point");
    add_map_options(evalc, eval_cfg.map, false);
    evalc->add_option("--x", eval_cfg.x, "first argument")->required();
    evalc->add_option("--y", eval_cfg.y, "second argument")->required();
    evalc->add_flag("--json", eval_cfg.json_out, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help / --version
            std::ostringstream help;
            int rc = app.exit(e, help, help);
            out << help.str();
            return rc;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check)
            return run_check(check_cfg, out);
        if (*dich)
            return run_dichotomy(dich_cfg, out);
        if (*ext)
            return run_extract(ext_cfg, out);
        if (*enumc) {
            if (*uopt)
                enum_cfg.u = u_opt;
            if (*vopt)
                enum_cfg.v = v_opt;
            return run_enumerate(enum_cfg, out);
        }
        if (*evalc)
            return run_eval(eval_cfg, out);
        err << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace bisym::cli
