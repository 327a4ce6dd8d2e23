#include "planarcol_cli/commands.hpp"

#include "planarcol/error.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = planarcol::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Checks d-targets: cuts, configurations, charges, colourings and switches."};
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<int> d;
    int cap = 24;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--d", d, "Expected d; must match the file header (scan: corpus d)");
    app.add_option("--cap", cap, "Vertex cap for cut and matching enumeration")->check(CLI::PositiveNumber);

    std::string file;
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "Target file")->required();
        return sub;
    };
    auto* check = with_file(app.add_subcommand("check", "Degree sums, Euler count, connectivity, odd cuts"));
    auto* classify = with_file(app.add_subcommand("classify", "Primality verdict with witness"));
    auto* discharge = with_file(app.add_subcommand("discharge", "Region charges and rule traces"));
    auto* colour = with_file(app.add_subcommand("colour", "Exact d-edge-colouring"));
    colour->alias("color");

    cli::SwitchOptions sw;
    auto* sw_cmd = with_file(app.add_subcommand("switch", "Switch on a square or a path"));
    auto* square = sw_cmd->add_option("--square", sw.square, "u v w x")->expected(4);
    auto* path = sw_cmd->add_option("--path", sw.path, "x u v y")->expected(4);
    square->excludes(path);
    sw_cmd->add_option("--out", sw.out, "Write the switched target here");

    cli::ScanOptions scan;
    bool no_filter = false;
    auto* scan_cmd = app.add_subcommand("scan", "Corpus-wide primality and colouring checks");
    scan_cmd->add_option("--bases", scan.bases, "Subset of k4 octahedron prism cube pentagonal_prism");
    scan_cmd->add_option("--file", scan.extra_files, "Extra base graphs taken from target files");
    scan_cmd->add_flag("--no-filter", no_filter, "Keep targets that are not oddly connected");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_input_error;
    }

    cli::CommonOptions opt{d, cap};
    auto fmt = format == "machine" ? cli::Format::Machine : cli::Format::Text;
    cli::Report report;
    try {
        if (scan_cmd->parsed()) {
            scan.require_oddly_connected = !no_filter;
            report = cli::cmd_scan(opt, scan);
        } else {
            auto in = cli::load_input(file);
            if (check->parsed())
                report = cli::cmd_check(in, opt);
            else if (classify->parsed())
                report = cli::cmd_classify(in, opt);
            else if (discharge->parsed())
                report = cli::cmd_discharge(in, opt);
            else if (colour->parsed())
                report = cli::cmd_colour(in, opt);
            else
                report = cli::cmd_switch(in, opt, sw);
        }
    } catch (const planarcol::Error& e) {
        std::cerr << "planarcol: " << e.what() << "\n";
        return cli::exit_input_error;
    }
    std::cout << cli::render(report, fmt);
    return report.exit_code;
}
