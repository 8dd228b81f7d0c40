#include "spun/errors.hpp"
#include "spun/report.hpp"
#include "spun/triangulation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct CommonArgs {
    std::string path;
    std::string builtin;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("path", args.path, "triangulation file");
    cmd->add_option("--builtin", args.builtin, "builtin triangulation: figure8 or gieseking");
    cmd->add_option("--format", args.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

std::pair<spun::Triangulation, std::string> resolve_input(const CommonArgs& args) {
    if (!args.builtin.empty() && !args.path.empty())
        throw spun::ValidationError("give either a path or --builtin, not both");
    if (!args.builtin.empty()) {
        if (args.builtin == "figure8") return {spun::builtin_figure8(), "builtin:figure8"};
        if (args.builtin == "gieseking") return {spun::builtin_gieseking(), "builtin:gieseking"};
        throw spun::ValidationError("unknown builtin '" + args.builtin + "'");
    }
    if (args.path.empty()) throw spun::ValidationError("no input given");
    return {spun::load_triangulation(args.path), args.path};
}

spun::QVector parse_vector(const std::string& text, std::size_t expected) {
    spun::QVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.emplace_back(item);
        } catch (...) {
            throw spun::ValidationError("invalid integer '" + item + "' in --vector");
        }
    }
    if (v.size() != expected)
        throw spun::ValidationError("--vector needs " + std::to_string(expected) +
                                    " comma-separated integers");
    return v;
}

void emit(const spun::Report& r, const std::string& format) {
    std::cout << (format == "json" ? r.json : r.text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal and spun normal surface computations on ideal triangulations"};
    app.require_subcommand(1);

    CommonArgs info_args, basis_args, qmatch_args, enum_args, boundary_args;
    std::string vector_text;
    bool with_index = false;
    std::optional<int> cusp;

    CLI::App* info = app.add_subcommand("info", "triangulation summary");
    add_common(info, info_args);
    CLI::App* basis = app.add_subcommand("basis", "canonical basis of the solution space");
    add_common(basis, basis_args);
    CLI::App* qmatch = app.add_subcommand("qmatch", "Q-matching system");
    add_common(qmatch, qmatch_args);
    CLI::App* enumerate = app.add_subcommand("enumerate", "fundamental solutions");
    add_common(enumerate, enum_args);
    CLI::App* boundary = app.add_subcommand("boundary", "boundary classes and image index");
    add_common(boundary, boundary_args);
    boundary->add_option("--vector", vector_text, "comma-separated quad coordinates");
    boundary->add_flag("--index", with_index, "image index over the full solution lattice");
    int cusp_value = -1;
    CLI::Option* cusp_opt = boundary->add_option("--cusp", cusp_value, "restrict to one cusp");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) {
            auto [tri, name] = resolve_input(info_args);
            emit(spun::report_info(tri, name), info_args.format);
        } else if (*basis) {
            auto [tri, name] = resolve_input(basis_args);
            emit(spun::report_basis(tri, name), basis_args.format);
        } else if (*qmatch) {
            auto [tri, name] = resolve_input(qmatch_args);
            emit(spun::report_qmatch(tri, name), qmatch_args.format);
        } else if (*enumerate) {
            auto [tri, name] = resolve_input(enum_args);
            emit(spun::report_enumerate(tri, name), enum_args.format);
        } else if (*boundary) {
            auto [tri, name] = resolve_input(boundary_args);
            spun::BoundaryOptions opts;
            opts.with_index = with_index;
            if (cusp_opt->count()) opts.cusp = cusp_value;
            if (!vector_text.empty())
                opts.vector =
                    parse_vector(vector_text, static_cast<std::size_t>(3 * tri.num_tetrahedra()));
            if (!opts.vector && !opts.with_index)
                throw spun::ValidationError("boundary needs --vector and/or --index");
            emit(spun::report_boundary(tri, name, opts), boundary_args.format);
        }
    } catch (const spun::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.user_error() ? 2 : 3;
    }
    return 0;
}
