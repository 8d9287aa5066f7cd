#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dhwt/codec.hpp"
#include "dhwt/defaults.hpp"
#include "dhwt/image_io.hpp"
#include "dhwt/metrics.hpp"
#include "dhwt/test_image.hpp"

namespace {

using namespace dhwt;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

Image open_input(const std::string& path) {
    if (path == "builtin") return builtin_test_image();
    return load_image(path);
}

std::string default_container_path(const std::string& input) {
    if (input == "builtin") return "builtin.dhwt";
    std::filesystem::path p(input);
    p.replace_extension(".dhwt");
    return p.string();
}

void append_csv(const std::string& path, const std::vector<CompareRow>& rows) {
    const bool fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open for writing: " + path);
    if (fresh) out << csv_header() << "\n";
    for (const CompareRow& row : rows) out << csv_row(row) << "\n";
}

void emit_csv(const std::string& path, const std::vector<CompareRow>& rows) {
    if (path == "-") {
        std::cout << csv_header() << "\n";
        for (const CompareRow& row : rows) std::cout << csv_row(row) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << csv_header() << "\n";
    for (const CompareRow& row : rows) out << csv_row(row) << "\n";
}

void print_report(const QualityReport& rep) {
    std::cout << "mse=" << fmt(rep.mse) << "\n"
              << "psnr=" << fmt(rep.psnr) << "\n"
              << "cr_percent=" << fmt(rep.cr) << "\n"
              << "bpp=" << fmt(rep.bpp) << "\n"
              << "energy_retained=" << fmt(rep.energy_retained) << "\n"
              << "zero_share=" << fmt(rep.zero_share) << "\n"
              << "container_bytes=" << rep.container_bytes << "\n"
              << "raw_bytes=" << rep.raw_bytes << "\n"
              << "byte_cr_percent=" << fmt(rep.byte_cr) << "\n";
}

struct Options {
    std::string input;
    std::string output;
    std::string csv = "-";
    std::string plot_dir;
    std::string wavelet = defaults::wavelet;
    int levels = defaults::levels;
    double threshold = defaults::threshold;
    double t0 = defaults::loop_t0;
    double ratio = defaults::loop_ratio;
    int loops = defaults::loops;
    double quantizer = defaults::quantizer_step;
};

int cmd_compress(const Options& opt) {
    const Image img = open_input(opt.input);
    ThresholdSchedule schedule;
    schedule.base_threshold = opt.threshold;
    auto [ci, rep] = compress_image(img, opt.wavelet, opt.levels, schedule, opt.quantizer);
    const std::string out = opt.output.empty() ? default_container_path(opt.input) : opt.output;
    save_container(ci, out);
    std::cout << "input=" << opt.input << "\n"
              << "output=" << out << "\n"
              << "wavelet=" << opt.wavelet << "\n"
              << "levels=" << opt.levels << "\n"
              << "threshold=" << fmt(opt.threshold) << "\n"
              << "quantizer=" << fmt(opt.quantizer) << "\n";
    print_report(rep);
    if (opt.csv != "-") append_csv(opt.csv, {{opt.wavelet, opt.levels, 1, rep}});
    return 0;
}

int cmd_decompress(const Options& opt) {
    const CompressedImage ci = load_container(opt.input);
    const Image img = decompress_image(ci);
    save_image(img, opt.output);
    std::cout << "input=" << opt.input << "\n"
              << "output=" << opt.output << "\n"
              << "width=" << img.width << "\n"
              << "height=" << img.height << "\n"
              << "channels=" << img.channels() << "\n";
    return 0;
}

int cmd_loops(const Options& opt) {
    const Image img = open_input(opt.input);
    ThresholdSchedule schedule;
    schedule.base_threshold = opt.t0;
    schedule.loop_ratio = opt.ratio;
    schedule.loops = opt.loops;
    const std::vector<QualityReport> reports =
        compression_loop(img, opt.wavelet, opt.levels, schedule, opt.quantizer);
    std::vector<CompareRow> rows;
    rows.reserve(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
        rows.push_back({opt.wavelet, opt.levels, static_cast<int>(i) + 1, reports[i]});
    emit_csv(opt.csv, rows);
    return 0;
}

int cmd_compare(const Options& opt) {
    const Image img = open_input(opt.input);
    ThresholdSchedule schedule;
    schedule.base_threshold = opt.threshold;
    const std::vector<std::string> ids = {"dhwt", "sym2", "coif2", "db2"};
    const std::vector<CompareRow> rows =
        comparison_table(img, ids, 1, kMaxLevels, schedule, opt.quantizer);
    emit_csv(opt.csv, rows);
    if (!opt.plot_dir.empty()) {
        std::filesystem::create_directories(opt.plot_dir);
        const std::vector<std::pair<std::string, double QualityReport::*>> metrics = {
            {"mse", &QualityReport::mse},
            {"psnr", &QualityReport::psnr},
            {"bpp", &QualityReport::bpp},
            {"cr", &QualityReport::cr},
        };
        for (const auto& [name, member] : metrics) {
            for (const std::string& id : ids) {
                const std::string path = opt.plot_dir + "/" + name + "_" + id + ".dat";
                std::ofstream out(path);
                if (!out) throw IoError("cannot open for writing: " + path);
                for (const CompareRow& row : rows) {
                    if (row.wavelet == id)
                        out << row.level << " " << fmt(row.report.*member) << "\n";
                }
            }
        }
    }
    return 0;
}

int cmd_inspect(const Options& opt) {
    const CompressedImage ci = load_container(opt.input);
    const ContainerHeader h = read_header(ci);
    std::cout << "version=" << h.version << "\n"
              << "width=" << h.width << "\n"
              << "height=" << h.height << "\n"
              << "channels=" << h.channels << "\n"
              << "levels=" << h.levels << "\n"
              << "wavelet=" << h.wavelet_id << "\n"
              << "quantizer=" << fmt(h.q) << "\n";
    std::cout << "thresholds=";
    for (std::size_t i = 0; i < h.thresholds.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << fmt(h.thresholds[i]);
    }
    std::cout << "\n"
              << "header_bytes=" << h.header_bytes << "\n"
              << "total_bytes=" << ci.bytes.size() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-wavelet image compression toolkit"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* compress = app.add_subcommand("compress", "compress an image to a .dhwt container");
    compress->add_option("-i,--input", opt.input, "input image (png/ppm/pgm) or 'builtin'")
        ->required();
    compress->add_option("-o,--output", opt.output, "output container path");
    compress->add_option("-w,--wavelet", opt.wavelet, "wavelet id");
    compress->add_option("-l,--levels", opt.levels, "decomposition levels")
        ->check(CLI::Range(1, 8));
    compress->add_option("-t,--threshold", opt.threshold, "detail threshold")
        ->check(CLI::NonNegativeNumber);
    compress->add_option("-q,--quantizer", opt.quantizer, "quantizer step")
        ->check(CLI::PositiveNumber);
    compress->add_option("--csv", opt.csv, "append the report row to this CSV file");

    CLI::App* decompress = app.add_subcommand("decompress", "reconstruct an image from a container");
    decompress->add_option("-i,--input", opt.input, "input .dhwt container")->required();
    decompress->add_option("-o,--output", opt.output, "output image (png/ppm/pgm)")->required();

    CLI::App* loops = app.add_subcommand("loops", "geometric threshold loop driver");
    loops->add_option("-i,--input", opt.input, "input image or 'builtin'")->required();
    loops->add_option("--csv", opt.csv, "CSV output path, '-' for stdout");
    loops->add_option("-w,--wavelet", opt.wavelet, "wavelet id");
    loops->add_option("-l,--levels", opt.levels, "decomposition levels")
        ->check(CLI::Range(1, 8));
    loops->add_option("--t0", opt.t0, "loop-1 threshold")->check(CLI::NonNegativeNumber);
    loops->add_option("-r,--ratio", opt.ratio, "per-loop threshold ratio");
    loops->add_option("-n,--loops", opt.loops, "loop count")->check(CLI::Range(1, 64));
    loops->add_option("-q,--quantizer", opt.quantizer, "quantizer step")
        ->check(CLI::PositiveNumber);

    CLI::App* compare = app.add_subcommand("compare", "wavelet x level comparison grid");
    compare->add_option("-i,--input", opt.input, "input image or 'builtin'")->required();
    compare->add_option("--csv", opt.csv, "CSV output path, '-' for stdout");
    compare->add_option("-t,--threshold", opt.threshold, "detail threshold")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("-q,--quantizer", opt.quantizer, "quantizer step")
        ->check(CLI::PositiveNumber);
    compare->add_option("--plot-dir", opt.plot_dir, "write per-metric plot data files here");

    CLI::App* inspect = app.add_subcommand("inspect", "print a container header");
    inspect->add_option("-i,--input", opt.input, "input .dhwt container")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compress->parsed()) return cmd_compress(opt);
        if (decompress->parsed()) return cmd_decompress(opt);
        if (loops->parsed()) return cmd_loops(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (inspect->parsed()) return cmd_inspect(opt);
        std::cerr << "no command\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContainerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
