// su11: squeezing-dynamics scanner for su(1,1) coherent states.
//
// Exit codes: 0 success, 1 usage/domain error, 2 numerical failure,
// 3 validation inconsistency.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <su11/bgcs.hpp>
#include <su11/io.hpp>
#include <su11/pcs.hpp>

namespace {

using namespace su11;

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + out + "'");
    f << text;
}

struct GridFlag {
    std::string axis1, axis2;
};

Axis parse_axis(const std::string& s) {
    // name:min:max:steps
    Axis a;
    size_t p0 = s.find(':');
    size_t p1 = s.find(':', p0 + 1);
    size_t p2 = s.find(':', p1 + 1);
    if (p0 == std::string::npos || p1 == std::string::npos || p2 == std::string::npos)
        throw DomainError("grid axis must be name:min:max:steps, got '" + s + "'");
    a.name = s.substr(0, p0);
    a.min = std::stod(s.substr(p0 + 1, p1 - p0 - 1));
    a.max = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
    a.steps = std::stoi(s.substr(p2 + 1));
    return a;
}

int run(int argc, char** argv) {
    CLI::App app{"squeezing dynamics of su(1,1) coherent states"};
    app.require_subcommand(1);

    double omega = 1.0, lambda = 0.0, k = 0.5, r = 1.0, zmag = 1.0, phi = 0.0;
    double time_value = 0.0;
    std::string time_unit = "t", family = "pcs", path_s, format = "csv", out;
    std::vector<std::string> grid_flags;
    int fig_n = 1, threads = 0;
    bool force = false;

    auto add_coupling = [&](CLI::App* cmd) {
        cmd->add_option("--omega", omega, "mode frequency (> 0)");
        cmd->add_option("--lambda", lambda, "pump coupling (>= 0)");
        cmd->add_option("--time", time_value, "evolution time in --time-unit units");
        cmd->add_option("--time-unit", time_unit, "t|tl|tw|gt")
            ->check(CLI::IsMember({"t", "tl", "tw", "gt"}));
    };
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out, "output file (stdout if omitted)");
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "transport coefficients at one time");
    add_coupling(coeffs);
    add_io(coeffs);

    CLI::App* eval = app.add_subcommand("eval", "squeezing report for one state and time");
    add_coupling(eval);
    add_io(eval);
    eval->add_option("--family", family, "pcs|bgcs")->check(CLI::IsMember({"pcs", "bgcs"}));
    eval->add_option("--k", k, "Bargmann index (> 0)");
    eval->add_option("--r", r, "pcs squeeze amplitude");
    eval->add_option("--zmag", zmag, "bgcs intensity |Z|");
    eval->add_option("--phi", phi, "state phase");
    eval->add_option("--path", path_s, "paper|oracle")
        ->check(CLI::IsMember({"paper", "oracle"}));

    CLI::App* scan = app.add_subcommand("scan", "squeezing-factor map over a 2d grid");
    add_coupling(scan);
    add_io(scan);
    scan->add_option("--family", family, "pcs|bgcs")->check(CLI::IsMember({"pcs", "bgcs"}));
    scan->add_option("--k", k, "Bargmann index (> 0)");
    scan->add_option("--grid", grid_flags,
                     "axis as name:min:max:steps (give twice: amplitude axis, then phi)");
    scan->add_option("--path", path_s, "paper|oracle (default paper)")
        ->check(CLI::IsMember({"paper", "oracle"}));
    scan->add_option("--threads", threads, "worker threads (0 = auto)");
    scan->add_flag("--force", force, "allow oracle-path grids above 64x64");

    CLI::App* figure_cmd = app.add_subcommand("figure", "preset scans 1-9");
    add_io(figure_cmd);
    figure_cmd->add_option("--n", fig_n, "figure number 1-9")->required();
    figure_cmd->add_option("--path", path_s, "paper|oracle (default oracle)")
        ->check(CLI::IsMember({"paper", "oracle"}));
    figure_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "reconciliation measurements vs the committed ledger");
    add_io(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (coeffs->parsed()) {
            const CouplingParams c{omega, lambda};
            const double t = resolve_time(c, time_value, time_unit_from_string(time_unit));
            const PropagatorCoefficients pc = coefficients(c, t);
            write_output(format == "csv" ? coefficients_to_csv(pc)
                                         : coefficients_to_json(pc).dump(2) + "\n",
                         out);
            return 0;
        }
        if (eval->parsed()) {
            const CouplingParams c{omega, lambda};
            const double t = resolve_time(c, time_value, time_unit_from_string(time_unit));
            const EvalPath path =
                path_s.empty() ? EvalPath::closed_form : eval_path_from_string(path_s);
            const SqueezingReport rep = family_from_string(family) == StateFamily::pcs
                                            ? pcs_factors({r, phi, k}, c, t, path)
                                            : bgcs_factors({zmag, phi, k}, c, t, path);
            write_output(format == "csv" ? report_to_csv(rep)
                                         : report_to_json(rep).dump(2) + "\n",
                         out);
            return 0;
        }
        if (scan->parsed()) {
            GridSpec g;
            g.family = family_from_string(family);
            if (grid_flags.empty()) {
                g.axis1 = g.family == StateFamily::pcs ? Axis{"r", -3.0, 3.0, 201}
                                                       : Axis{"zmag", 0.0, 2.0, 201};
                g.axis2 = {"phi", 0.0, 2.0 * 3.14159265358979323846264338327950288, 201};
            } else if (grid_flags.size() == 2) {
                g.axis1 = parse_axis(grid_flags[0]);
                g.axis2 = parse_axis(grid_flags[1]);
            } else {
                throw DomainError("scan needs exactly two --grid axes (or none for defaults)");
            }
            g.fixed = {{"omega", omega}, {"lambda", lambda}, {"k", k}};
            g.time_value = time_value;
            g.time_unit = time_unit_from_string(time_unit);
            const EvalPath path =
                path_s.empty() ? EvalPath::closed_form : eval_path_from_string(path_s);
            if (path == EvalPath::oracle && !force &&
                static_cast<long>(g.axis1.steps) * g.axis2.steps > 64L * 64L)
                throw DomainError(
                    "oracle-path scans are limited to 64x64 by default; pass --force to "
                    "override");
            const RegionMap map = scan_plane(g, path, threads);
            write_output(format == "csv" ? region_map_to_csv(map)
                                         : region_map_to_json(map).dump(2) + "\n",
                         out);
            return 0;
        }
        if (figure_cmd->parsed()) {
            std::optional<EvalPath> path;
            if (!path_s.empty()) path = eval_path_from_string(path_s);
            const FigureResult res = figure(fig_n, path, threads);
            std::string text;
            if (res.profile) {
                text = format == "csv" ? profile_to_csv(*res.profile)
                                       : profile_to_json(*res.profile).dump(2) + "\n";
            } else {
                text = format == "csv" ? region_map_to_csv(*res.map)
                                       : region_map_to_json(*res.map).dump(2) + "\n";
            }
            write_output(text, out);
            return 0;
        }
        if (validate_cmd->parsed()) {
            const ValidationReport rep = run_validation();
            if (format == "json")
                write_output(validation_to_json(rep).dump(2) + "\n", out);
            else
                write_output(validation_to_text(rep), out);
            return rep.ok ? 0 : 3;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
