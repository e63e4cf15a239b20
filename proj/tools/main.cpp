// Command-line front end: constructs X-states from coordinates or matrices,
// validates positivity, classifies the symmetry stratum under the global and
// local group actions, diagonalizes, reports Gram data, and estimates stratum
// measures by rejection sampling.
//
// Exit codes: 0 success (and physical where that applies), 2 well-formed but
// unphysical state, 1 malformed input or I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "doc_io.hpp"
#include "xstrata/xstrata.hpp"

namespace {

using namespace xstrata;
using cli::JsonOut;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitUnphysical = 2;

void emit(const std::string& body, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << body << "\n";
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << body << "\n";
    if (!out) throw std::invalid_argument("failed writing output file: " + output_path);
}

int run_classify(const std::string& input, double tol) {
    const cli::StateDocument doc = cli::parse_state_document(cli::read_input(input));
    const XCoords h = cli::document_coords(doc, tol);
    const bool physical = is_physical(h, tol);

    JsonOut o;
    o.begin_object();
    o.key("input").begin_object().key("coords");
    cli::write_coords(o, h);
    o.end_object();
    o.key("tol").value(tol);
    o.key("physical").value(physical);
    if (!physical) {
        o.key("spectrum").null();
        o.key("complete_order").null();
        o.key("global").null();
        o.key("local").null();
        o.end_object();
        emit(o.str(), "");
        return kExitUnphysical;
    }

    const Spectrum s = spectrum_analytic(h);
    const GramAnalysis gg = gram_global(h, tol);
    const LocalGramAnalysis gl = gram_local(h, tol);
    const GlobalStratum gs = classify_global(h, tol);
    const LocalStratum ls = classify_local(h, tol);

    o.key("spectrum").begin_array();
    for (double r : s.r) o.value(r);
    o.end_array();
    o.key("complete_order").value(s.complete_order);
    o.key("global").begin_object();
    o.key("label").value(to_string(gs));
    o.key("mu_plus").value(gg.mu_plus);
    o.key("mu_minus").value(gg.mu_minus);
    o.key("orbit_dim").value(orbit_dimension(gs));
    o.end_object();
    o.key("local").begin_object();
    o.key("label").value(to_string(ls));
    o.key("mu1").value(gl.mu1);
    o.key("mu2").value(gl.mu2);
    o.key("orbit_dim").value(orbit_dimension(ls));
    o.end_object();
    o.end_object();
    emit(o.str(), "");
    return kExitOk;
}

int run_convert(const std::string& input, double tol) {
    const cli::StateDocument doc = cli::parse_state_document(cli::read_input(input));
    JsonOut o;
    o.begin_object();
    if (doc.coords) {
        o.key("matrix");
        cli::write_matrix(o, to_matrix(*doc.coords));
    } else {
        o.key("coords");
        cli::write_coords(o, from_matrix(*doc.matrix, tol));
    }
    o.end_object();
    emit(o.str(), "");
    return kExitOk;
}

int run_diagonalize(const std::string& input, double tol) {
    const cli::StateDocument doc = cli::parse_state_document(cli::read_input(input));
    const XCoords h = cli::document_coords(doc, tol);

    JsonOut o;
    o.begin_object();
    o.key("input").begin_object().key("coords");
    cli::write_coords(o, h);
    o.end_object();
    o.key("tol").value(tol);
    const bool physical = is_physical(h, tol);
    o.key("physical").value(physical);
    if (!physical) {
        o.end_object();
        emit(o.str(), "");
        return kExitUnphysical;
    }

    const DiagonalizationResult d = diagonalize(h, tol);
    o.key("spectrum").begin_array();
    for (double r : d.spectrum.r) o.value(r);
    o.end_array();
    o.key("complete_order").value(d.spectrum.complete_order);
    o.key("group_element").begin_object();
    o.key("omega15").value(d.element.omega15);
    o.key("su2_a").begin_array();
    for (double v : d.element.su2_a) o.value(v);
    o.end_array();
    o.key("su2_b").begin_array();
    for (double v : d.element.su2_b) o.value(v);
    o.end_array();
    o.end_object();
    o.key("residual").value(d.residual);
    o.key("diagonal").begin_array();
    o.value(d.spectrum.r[0]).value(d.spectrum.r[3]).value(d.spectrum.r[2]).value(d.spectrum.r[1]);
    o.end_array();
    o.end_object();
    emit(o.str(), "");
    return kExitOk;
}

int run_gram(const std::string& input, double tol) {
    const cli::StateDocument doc = cli::parse_state_document(cli::read_input(input));
    const XCoords h = cli::document_coords(doc, tol);
    const GramAnalysis gg = gram_global(h, tol);
    const LocalGramAnalysis gl = gram_local(h, tol);

    JsonOut o;
    o.begin_object();
    o.key("input").begin_object().key("coords");
    cli::write_coords(o, h);
    o.end_object();
    o.key("tol").value(tol);
    o.key("global").begin_object();
    o.key("gram").begin_array();
    for (std::size_t r = 0; r < 7; ++r) {
        o.begin_array();
        for (std::size_t c = 0; c < 7; ++c) o.value(gg.gram(r, c));
        o.end_array();
    }
    o.end_array();
    o.key("spectrum_numeric").begin_array();
    for (double e : gg.spectrum) o.value(e);
    o.end_array();
    o.key("mu_plus_analytic").value(gg.mu_plus);
    o.key("mu_minus_analytic").value(gg.mu_minus);
    o.key("rank").value(gg.rank);
    o.key("orbit_dim").value(gg.orbit_dim);
    o.end_object();
    o.key("local").begin_object();
    o.key("gram").begin_array();
    for (std::size_t r = 0; r < 2; ++r) {
        o.begin_array();
        for (std::size_t c = 0; c < 2; ++c) o.value(gl.gram(r, c));
        o.end_array();
    }
    o.end_array();
    o.key("spectrum_numeric").begin_array();
    for (double e : gl.spectrum) o.value(e);
    o.end_array();
    o.key("mu1_analytic").value(gl.mu1);
    o.key("mu2_analytic").value(gl.mu2);
    o.key("rank").value(gl.rank);
    o.key("orbit_dim").value(gl.orbit_dim);
    o.end_object();
    o.end_object();
    emit(o.str(), "");
    return kExitOk;
}

SampleMode parse_mode(const std::string& mode, double* eps) {
    if (mode == "uniform") return SampleMode::UniformBoxRejection;
    if (mode.rfind("shell:", 0) == 0) {
        try {
            *eps = std::stod(mode.substr(6));
        } catch (const std::exception&) {
            throw std::invalid_argument("mode 'shell:<eps>' needs a numeric epsilon");
        }
        if (!(*eps > 0.0)) throw std::invalid_argument("shell epsilon must be > 0");
        return SampleMode::BoundaryShell;
    }
    throw std::invalid_argument("unknown mode '" + mode + "' (expected uniform or shell:<eps>)");
}

int run_sample(std::uint64_t seed, std::uint64_t count, double tol, const std::string& mode,
               const std::string& format, const std::string& output) {
    if (count < 1) throw std::invalid_argument("--count must be >= 1");
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.tol = tol;
    cfg.mode = parse_mode(mode, &cfg.shell_epsilon);

    if (format == "csv") {
        const SampleBatch batch = sample_physical(cfg);
        std::ostringstream os;
        os << "h3,h6,h7,h8,h10,h11,h15,global_label,local_label";
        for (const XCoords& h : batch.samples) {
            os << "\n";
            for (double v : h.to_array()) os << cli::fmt(v) << ",";
            os << to_string(classify_global(h, tol)) << "," << to_string(classify_local(h, tol));
        }
        emit(os.str(), output);
        return kExitOk;
    }
    if (format != "json")
        throw std::invalid_argument("unknown format '" + format + "' (expected json or csv)");

    const MeasureReport rep = estimate_measures(cfg);
    JsonOut o;
    o.begin_object();
    o.key("seed").value(seed);
    o.key("count").value(count);
    o.key("tol").value(tol);
    o.key("mode").value(std::string_view(mode));
    o.key("measure").value("lebesgue on the seven coordinates");
    o.key("accepted").value(rep.accepted);
    o.key("rejected").value(rep.rejected);
    o.key("acceptance_rate").value(rep.acceptance_rate);
    o.key("global_fractions").begin_object();
    for (int k = 0; k < 4; ++k)
        o.key(to_string(static_cast<GlobalStratum>(k)).data()).value(rep.global_fractions[k]);
    o.end_object();
    o.key("local_fractions").begin_object();
    for (int k = 0; k < 4; ++k)
        o.key(to_string(static_cast<LocalStratum>(k)).data()).value(rep.local_fractions[k]);
    o.end_object();
    o.end_object();
    emit(o.str(), output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit X-state construction, positivity and symmetry-stratum classification"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = 1e-9;
    app.add_option("--tol", tol, "tolerance shared by all subcommands")->capture_default_str();

    std::string input;
    auto* classify = app.add_subcommand("classify", "full physicality and stratum report");
    classify->add_option("input", input, "input document path ('-' or absent: stdin)");
    auto* convert = app.add_subcommand("convert", "coords <-> matrix representation");
    convert->add_option("input", input, "input document path ('-' or absent: stdin)");
    auto* diagonalize = app.add_subcommand("diagonalize", "conjugate to the ordered diagonal form");
    diagonalize->add_option("input", input, "input document path ('-' or absent: stdin)");
    auto* gram = app.add_subcommand("gram", "Gram matrices, spectra and ranks for both actions");
    gram->add_option("input", input, "input document path ('-' or absent: stdin)");

    std::uint64_t seed = 0, count = 1;
    std::string mode = "uniform", format = "json", output;
    auto* sample = app.add_subcommand("sample", "rejection-sample physical states and report "
                                                "stratum fractions");
    sample->add_option("--seed", seed, "stream seed")->capture_default_str();
    sample->add_option("--count", count, "number of accepted samples")->capture_default_str();
    sample->add_option("--mode", mode, "uniform | shell:<eps>")->capture_default_str();
    sample->add_option("--format", format, "json (measure report) | csv (per-sample rows)")
        ->capture_default_str();
    sample->add_option("--output", output, "write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitMalformed;
    }

    try {
        if (classify->parsed()) return run_classify(input, tol);
        if (convert->parsed()) return run_convert(input, tol);
        if (diagonalize->parsed()) return run_diagonalize(input, tol);
        if (gram->parsed()) return run_gram(input, tol);
        return run_sample(seed, count, tol, mode, format, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnphysical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
