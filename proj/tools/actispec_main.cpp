// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
//
// Command-line front end. Subcommands: classify, eval, gen, spectrum,
// filter-response, calibrate. Every library error category maps to its own
// process exit code (see include/actispec/error.hpp) so scripts can tell a
// malformed file from a missing one.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "actispec/actispec.hpp"

using namespace actispec;

namespace {

// ---------- I/O helpers ----------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) raise(errc::io, "read failed for '" + path + "'");
  return os.str();
}

// '-' selects standard input everywhere a samples or labels path is expected.
dataset read_dataset(const std::string& path, const ingest_config& cfg) {
  if (path == "-") return parse_samples(std::cin, cfg);
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open '" + path + "'");
  return parse_samples(in, cfg);
}

label_track read_label_file(const std::string& path) {
  if (path == "-") return parse_labels(std::cin);
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open '" + path + "'");
  return parse_labels(in);
}

std::string format_g(double v) {
  // 12 significant digits: short for round values ("1.28", "50") yet wide
  // enough that exact bin frequencies like 0.1953125 survive verbatim.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------- global configuration flags ----------

// Precedence: built-in defaults, then --config file, then explicit flags.
struct cli_state {
  run_config flags;  // receives flag values; defaults match run_config
  std::string mode_name = "ba";
  std::string config_file;
  bool show_config = false;

  CLI::Option* o_rate = nullptr;
  CLI::Option* o_block = nullptr;
  CLI::Option* o_nfft = nullptr;
  CLI::Option* o_calwin = nullptr;
  CLI::Option* o_fullscale = nullptr;
  CLI::Option* o_range = nullptr;
  CLI::Option* o_gx = nullptr;
  CLI::Option* o_gy = nullptr;
  CLI::Option* o_gz = nullptr;
  CLI::Option* o_rest = nullptr;
  CLI::Option* o_walk_lo = nullptr;
  CLI::Option* o_walk_hi = nullptr;
  CLI::Option* o_run_lo = nullptr;
  CLI::Option* o_run_hi = nullptr;
  CLI::Option* o_prom = nullptr;
  CLI::Option* o_mode = nullptr;

  run_config effective() const {
    run_config cfg;
    if (!config_file.empty()) cfg = parse_config(read_text_file(config_file), cfg);
    const auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(o_rate)) cfg.sample_rate_hz = flags.sample_rate_hz;
    if (given(o_block)) cfg.block_size = flags.block_size;
    if (given(o_nfft)) cfg.n_fft = flags.n_fft;
    if (given(o_calwin)) cfg.cal_window = flags.cal_window;
    if (given(o_fullscale)) cfg.adc_full_scale = flags.adc_full_scale;
    if (given(o_range)) cfg.accel_range_g = flags.accel_range_g;
    if (given(o_gx)) cfg.gain_x = flags.gain_x;
    if (given(o_gy)) cfg.gain_y = flags.gain_y;
    if (given(o_gz)) cfg.gain_z = flags.gain_z;
    if (given(o_rest)) cfg.bands.rest_max_hz = flags.bands.rest_max_hz;
    if (given(o_walk_lo)) cfg.bands.walk_lo_hz = flags.bands.walk_lo_hz;
    if (given(o_walk_hi)) cfg.bands.walk_hi_hz = flags.bands.walk_hi_hz;
    if (given(o_run_lo)) cfg.bands.run_lo_hz = flags.bands.run_lo_hz;
    if (given(o_run_hi)) cfg.bands.run_hi_hz = flags.bands.run_hi_hz;
    if (given(o_prom)) cfg.min_prominence = flags.min_prominence;
    if (given(o_mode)) cfg.mode = parse_mode(mode_name);
    cfg.validate();
    return cfg;
  }
};

void add_global_flags(CLI::App& app, cli_state& st) {
  st.o_rate = app.add_option("--rate", st.flags.sample_rate_hz, "sampling rate in Hz");
  st.o_block = app.add_option("--block-size", st.flags.block_size,
                              "samples per classification block (power of two)");
  st.o_nfft = app.add_option("--n-fft", st.flags.n_fft, "transform length (power of two >= block)");
  st.o_calwin = app.add_option("--cal-window", st.flags.cal_window,
                               "stationary samples used for auto-calibration");
  st.o_fullscale =
      app.add_option("--adc-full-scale", st.flags.adc_full_scale, "largest valid ADC count");
  st.o_range = app.add_option("--range-g", st.flags.accel_range_g,
                              "acceleration clamp, in g, applied after calibration");
  st.o_gx = app.add_option("--gain-x", st.flags.gain_x, "x gain in counts per g");
  st.o_gy = app.add_option("--gain-y", st.flags.gain_y, "y gain in counts per g");
  st.o_gz = app.add_option("--gain-z", st.flags.gain_z, "z gain in counts per g");
  st.o_rest = app.add_option("--rest-max", st.flags.bands.rest_max_hz,
                             "upper edge of the rest band, Hz");
  st.o_walk_lo = app.add_option("--walk-lo", st.flags.bands.walk_lo_hz,
                                "lower edge of the walk band, Hz");
  st.o_walk_hi = app.add_option("--walk-hi", st.flags.bands.walk_hi_hz,
                                "upper edge of the walk band, Hz");
  st.o_run_lo =
      app.add_option("--run-lo", st.flags.bands.run_lo_hz, "lower edge of the run band, Hz");
  st.o_run_hi =
      app.add_option("--run-hi", st.flags.bands.run_hi_hz, "upper edge of the run band, Hz");
  st.o_prom = app.add_option("--min-prominence", st.flags.min_prominence,
                             "weak-peak threshold; blocks below it classify as rest");
  st.o_mode = app.add_option("--mode", st.mode_name, "series to classify: ba, x, y or z");
  app.add_option("--config", st.config_file,
                 "configuration file (flat key = value); explicit flags win");
  app.add_flag("--print-config", st.show_config,
               "print the effective configuration and exit");
}

calibration_params resolve_params(const std::string& calib_file, const dataset& data,
                                  const run_config& cfg) {
  if (!calib_file.empty()) return load_params(calib_file);
  return estimate_params(data.samples, cfg.cal_window, cfg.gain_x, cfg.gain_y, cfg.gain_z);
}

// ---------- classify ----------

void print_classify_header(std::ostream& os, const run_config& cfg, bool with_truth) {
  os << "# actispec classify\n"
     << "# sample_rate_hz = " << format_g(cfg.sample_rate_hz) << "\n"
     << "# block_size = " << cfg.block_size << "\n"
     << "# block_duration_s = " << format_g(cfg.block_duration_s()) << "\n"
     << "block,label,peak_hz" << (with_truth ? ",truth" : "") << "\n";
}

void print_label_row(std::ostream& os, const activity_label& l, const activity* truth) {
  os << l.block_index << ',' << to_string(l.kind) << ',';
  if (l.peak_freq_hz.has_value())
    os << format_g(*l.peak_freq_hz);
  else
    os << '-';
  if (truth != nullptr) os << ',' << to_string(*truth);
  os << '\n';
}

void print_accuracy_footer(std::ostream& os, const std::vector<activity>& pred,
                           const std::vector<activity>& truth) {
  const confusion_matrix m = score(pred, truth);
  os << "# correct = " << m.correct() << " / " << m.total() << "\n"
     << "# accuracy_pct = " << format_pct(100.0 * static_cast<double>(m.correct()) /
                                          static_cast<double>(m.total()))
     << "\n";
}

int run_classify_batch(const run_config& cfg, const std::string& input,
                       const std::string& calib_file, const std::string& labels_file,
                       std::ostream& os) {
  const dataset data = read_dataset(input, cfg.ingest());
  const calibration_params params = resolve_params(calib_file, data, cfg);
  const classification result = classify_dataset(data, params, cfg.classify_opts());

  std::optional<label_track> truth;
  if (!labels_file.empty()) {
    truth = read_label_file(labels_file);
    if (truth->block_labels.size() != result.labels.size())
      raise(errc::alignment,
            "dataset yields " + std::to_string(result.labels.size()) + " blocks but '" +
                labels_file + "' has " + std::to_string(truth->block_labels.size()) + " labels");
  }

  print_classify_header(os, cfg, truth.has_value());
  for (const activity_label& l : result.labels)
    print_label_row(os, l, truth ? &truth->block_labels[l.block_index] : nullptr);
  os << "# blocks = " << result.labels.size() << "\n"
     << "# discarded_samples = " << result.discarded_samples << "\n"
     << "# clamped_axes = " << result.clamped_axes << "\n";
  if (truth) {
    std::vector<activity> pred;
    pred.reserve(result.labels.size());
    for (const activity_label& l : result.labels) pred.push_back(l.kind);
    print_accuracy_footer(os, pred, truth->block_labels);
  }
  return 0;
}

int run_classify_stream(const run_config& cfg, const std::string& input,
                        const std::string& calib_file, const std::string& labels_file,
                        std::ostream& os) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) raise(errc::io, "cannot open '" + input + "'");
    in = &file;
  }

  std::optional<label_track> truth;
  if (!labels_file.empty()) truth = read_label_file(labels_file);
  print_classify_header(os, cfg, truth.has_value());

  std::optional<stream_classifier> sc;
  if (!calib_file.empty())
    sc.emplace(load_params(calib_file), cfg.classify_opts(), cfg.sample_rate_hz, cfg.ingest());

  std::vector<activity> emitted;
  const auto handle = [&](const stream_classifier::line_result& res) {
    if (res.error.has_value()) std::cerr << "actispec: skipped line: " << *res.error << "\n";
    if (!res.label.has_value()) return;
    const std::size_t b = res.label->block_index;
    const activity* t =
        truth && b < truth->block_labels.size() ? &truth->block_labels[b] : nullptr;
    print_label_row(os, *res.label, t);
    os.flush();
    emitted.push_back(res.label->kind);
  };

  // Without a calibration file the first cal_window parseable lines are
  // buffered, define the offsets, and are then replayed through the
  // classifier — so calibration samples stay part of the classified stream.
  std::vector<std::string> pending;
  std::vector<raw_sample> warmup;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!sc.has_value()) {
      pending.push_back(line);
      if (!detail::skippable(line)) {
        try {
          warmup.push_back(parse_sample_line(line, line_no, cfg.ingest(),
                                             static_cast<std::int64_t>(warmup.size())));
        } catch (const error& e) {
          std::cerr << "actispec: skipped line: " << e.what() << "\n";
        }
      }
      if (warmup.size() >= cfg.cal_window) {
        const calibration_params params =
            estimate_params(warmup, cfg.cal_window, cfg.gain_x, cfg.gain_y, cfg.gain_z);
        sc.emplace(params, cfg.classify_opts(), cfg.sample_rate_hz, cfg.ingest());
        for (const std::string& buffered : pending) handle(sc->push_line(buffered));
        pending.clear();
      }
      continue;
    }
    handle(sc->push_line(line));
  }
  if (!sc.has_value())
    raise(errc::insufficient_data,
          "stream ended with " + std::to_string(warmup.size()) + " samples, before the " +
              std::to_string(cfg.cal_window) + "-sample calibration window filled");

  os << "# blocks = " << sc->blocks_emitted() << "\n"
     << "# buffered_samples = " << sc->buffered() << "\n"
     << "# rejected_lines = " << sc->lines_rejected() << "\n";
  if (truth) {
    if (truth->block_labels.size() != emitted.size())
      raise(errc::alignment,
            "stream yielded " + std::to_string(emitted.size()) + " blocks but '" + labels_file +
                "' has " + std::to_string(truth->block_labels.size()) + " labels");
    print_accuracy_footer(os, emitted, truth->block_labels);
  }
  return 0;
}

// ---------- eval ----------

int run_eval(const run_config& cfg, const std::vector<std::string>& pred_files,
             const std::vector<std::string>& samples_files,
             const std::vector<std::string>& truth_files, const std::vector<std::string>& names,
             const std::string& calib_file, bool grouped, bool csv) {
  if (pred_files.empty() == samples_files.empty())
    raise(errc::usage, "eval needs either --pred files or --samples files (exactly one kind)");
  const std::vector<std::string>& srcs = pred_files.empty() ? samples_files : pred_files;
  if (srcs.size() != truth_files.size())
    raise(errc::usage, "got " + std::to_string(srcs.size()) + " inputs but " +
                           std::to_string(truth_files.size()) + " --truth files");
  if (!names.empty() && names.size() != srcs.size())
    raise(errc::usage, "--name must be given once per input when used");

  std::vector<std::pair<std::string, confusion_matrix>> matrices;
  for (std::size_t i = 0; i < srcs.size(); ++i) {
    const std::string name =
        names.empty() ? std::filesystem::path(srcs[i]).stem().string() : names[i];
    const label_track truth = read_label_file(truth_files[i]);
    std::vector<activity> pred;
    if (!pred_files.empty()) {
      pred = read_label_file(pred_files[i]).block_labels;
    } else {
      const dataset data = read_dataset(samples_files[i], cfg.ingest());
      const calibration_params params = resolve_params(calib_file, data, cfg);
      for (const activity_label& l : classify_dataset(data, params, cfg.classify_opts()).labels)
        pred.push_back(l.kind);
    }
    matrices.emplace_back(name, score(pred, truth.block_labels));
  }
  const accuracy_report rep = report(matrices);
  if (csv)
    std::cout << render_csv(rep);
  else if (grouped)
    std::cout << render_grouped(rep);
  else
    std::cout << render_table(rep);
  return 0;
}

// ---------- gen ----------

int run_gen(const run_config& cfg, const std::string& out_dir,
            const std::vector<std::string>& script_files, bool builtin_given,
            double builtin_sigma, const std::string& calib_file) {
  std::vector<activity_script> scripts;
  for (const std::string& f : script_files) scripts.push_back(parse_script(read_text_file(f)));
  if (builtin_given)
    for (activity_script& s : builtin_corpus(builtin_sigma)) scripts.push_back(std::move(s));
  if (scripts.empty()) raise(errc::usage, "gen needs --script files and/or --builtin");

  calibration_params params;
  params.offset_x = params.offset_y = params.offset_z =
      static_cast<double>(cfg.adc_full_scale + 1) / 2.0;  // mid-scale
  params.gain_x = cfg.gain_x;
  params.gain_y = cfg.gain_y;
  params.gain_z = cfg.gain_z;
  if (!calib_file.empty()) params = load_params(calib_file);

  gen_options opt;
  opt.bands = cfg.bands;
  opt.block_size = cfg.block_size;
  opt.adc_full_scale = cfg.adc_full_scale;
  opt.accel_range_g = cfg.accel_range_g;

  const corpus_manifest manifest =
      write_corpus(scripts, out_dir, params, cfg.sample_rate_hz, opt);
  for (const corpus_entry& e : manifest.entries)
    std::cout << "wrote " << out_dir << "/" << e.samples_file << " and " << e.labels_file
              << " (seed " << e.seed << ")\n";
  std::cout << "wrote " << manifest.entries.size() << " datasets to " << out_dir << "\n";
  return 0;
}

// ---------- spectrum ----------

int run_spectrum(const run_config& cfg, const std::string& input, const std::string& calib_file,
                 std::size_t block_index) {
  const dataset data = read_dataset(input, cfg.ingest());
  const calibration_params params = resolve_params(calib_file, data, cfg);

  std::vector<calibrated_sample> cal;
  cal.reserve(data.samples.size());
  std::size_t clamped = 0;
  for (const raw_sample& s : data.samples)
    cal.push_back(apply(s, params, cfg.accel_range_g, &clamped));
  const body_signal sig = body_accel(cal, cfg.sample_rate_hz);
  const split_result blocks = split_blocks(sig, cfg.block_size, cfg.mode);
  if (block_index >= blocks.blocks.size())
    raise(errc::range, "block " + std::to_string(block_index) + " out of range; dataset has " +
                           std::to_string(blocks.blocks.size()) + " full blocks");

  const normalized_spectrum sp = normalized_spectrum_of(blocks.blocks[block_index], cfg.n_fft);
  std::cout << "# actispec spectrum\n"
            << "# block = " << block_index << "\n"
            << "# bin_hz = " << format_g(sp.bin_hz) << "\n";
  if (const auto peak = find_peak(sp); peak.has_value()) {
    std::cout << "# peak_bin = " << peak->bin << "\n"
              << "# peak_freq_hz = " << format_g(peak->freq_hz) << "\n"
              << "# prominence = " << format_g(sp.prominence) << "\n";
  } else {
    std::cout << "# peak_bin = none (energy floor)\n";
  }
  std::cout << "bin,freq_hz,magnitude\n";
  for (std::size_t k = 0; k < sp.magnitudes.size(); ++k)
    std::cout << k << ',' << format_g(static_cast<double>(k) * sp.bin_hz) << ','
              << format_g(sp.magnitudes[k]) << "\n";
  return 0;
}

// ---------- filter-response ----------

int run_filter_response(const run_config& cfg, double cutoff_hz,
                        const std::vector<double>& at, bool coeffs) {
  const filter_cascade cascade = design_gravity_filter(cfg.sample_rate_hz, cutoff_hz);
  if (coeffs) {
    std::cout << "b0,b1,b2,a1,a2\n";
    std::ostringstream os;
    os.precision(17);
    for (const sos_section& s : cascade.sections)
      os << s.b0 << ',' << s.b1 << ',' << s.b2 << ',' << s.a1 << ',' << s.a2 << "\n";
    std::cout << os.str();
    return 0;
  }
  std::vector<double> freqs = at;
  if (freqs.empty()) {
    freqs.push_back(0.0);
    for (double f = 0.05; f < 0.5; f += 0.05) freqs.push_back(f);
    const double nyquist = cfg.sample_rate_hz / 2.0;
    for (double f = 0.5; f < nyquist * 0.999; f += 0.1) freqs.push_back(f);
  }
  std::cout << "freq_hz,db\n";
  for (double f : freqs) {
    if (f < 0.0 || f > cfg.sample_rate_hz / 2.0)
      raise(errc::range, "frequency " + std::to_string(f) + " outside [0, Nyquist]");
    std::cout << format_g(f) << ',' << format_g(response_db(cascade, f)) << "\n";
  }
  return 0;
}

// ---------- calibrate ----------

int run_calibrate(const run_config& cfg, const std::string& input, const std::string& out_file) {
  const dataset data = read_dataset(input, cfg.ingest());
  const calibration_params params =
      estimate_params(data.samples, cfg.cal_window, cfg.gain_x, cfg.gain_y, cfg.gain_z);
  if (out_file.empty()) {
    std::cout << format_params(params);
  } else {
    save_params(params, out_file);
    std::cout << "wrote " << out_file << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequency-band activity classification for tri-axial accelerometer streams",
               "actispec"};
  app.require_subcommand(0, 1);
  cli_state st;
  add_global_flags(app, st);

  std::string cl_input, cl_calib, cl_labels, cl_out;
  bool cl_stream = false;
  CLI::App* classify = app.add_subcommand("classify", "label each block of a recording");
  classify->fallthrough();
  classify->add_option("input", cl_input, "samples file, or - for standard input")->required();
  classify->add_option("--calib", cl_calib,
                       "calibration file (default: estimate from the first window)");
  classify->add_option("--labels", cl_labels,
                       "ground-truth labels; adds a truth column and an accuracy footer");
  classify->add_option("--out", cl_out, "write rows to this file instead of standard output");
  classify->add_flag("--stream", cl_stream,
                     "process line by line, emitting each label as its block completes");

  std::vector<std::string> ev_pred, ev_samples, ev_truth, ev_names;
  std::string ev_calib;
  bool ev_grouped = false, ev_csv = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "score predictions against ground truth");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--pred", ev_pred, "predicted label files (repeatable)");
  eval_cmd->add_option("--samples", ev_samples,
                       "sample files to classify then score (repeatable)");
  eval_cmd->add_option("--truth", ev_truth, "ground-truth label files, one per input");
  eval_cmd->add_option("--name", ev_names, "dataset names (default: input file stems)");
  eval_cmd->add_option("--calib", ev_calib, "calibration file for --samples inputs");
  eval_cmd->add_flag("--grouped", ev_grouped, "fold datasets by their leading letter");
  eval_cmd->add_flag("--csv", ev_csv, "machine-readable output");

  std::string gn_out, gn_calib;
  std::vector<std::string> gn_scripts;
  double gn_sigma = 0.0;
  CLI::App* gen_cmd = app.add_subcommand("gen", "synthesize labeled datasets");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--out", gn_out, "output directory")->required();
  gen_cmd->add_option("--script", gn_scripts, "synthesis script files (repeatable)");
  CLI::Option* gn_builtin = gen_cmd->add_option(
      "--builtin", gn_sigma, "also write the built-in 17-dataset corpus with this noise sigma, g");
  gen_cmd->add_option("--calib", gn_calib,
                      "calibration file defining the count mapping (default: mid-scale offsets)");

  std::string sp_input, sp_calib;
  std::size_t sp_block = 0;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "print one block's normalized magnitude spectrum");
  spectrum_cmd->fallthrough();
  spectrum_cmd->add_option("input", sp_input, "samples file, or - for standard input")->required();
  spectrum_cmd->add_option("--block", sp_block, "block index to transform (default 0)");
  spectrum_cmd->add_option("--calib", sp_calib,
                           "calibration file (default: estimate from the first window)");

  double fr_cutoff = 0.5;
  std::vector<double> fr_at;
  bool fr_coeffs = false;
  CLI::App* filter_cmd =
      app.add_subcommand("filter-response", "print the gravity filter's magnitude response");
  filter_cmd->fallthrough();
  filter_cmd->add_option("--cutoff", fr_cutoff, "passband edge in Hz (default 0.5)");
  filter_cmd->add_option("--at", fr_at, "evaluate only at these frequencies, Hz (repeatable)");
  filter_cmd->add_flag("--coeffs", fr_coeffs, "print second-order-section coefficients instead");

  std::string ca_input, ca_out;
  CLI::App* calibrate_cmd =
      app.add_subcommand("calibrate", "estimate offsets from a stationary recording");
  calibrate_cmd->fallthrough();
  calibrate_cmd->add_option("input", ca_input, "samples file, or - for standard input")
      ->required();
  calibrate_cmd->add_option("--out", ca_out, "write parameters to this file");

  try {
    app.parse(argc, argv);
    const run_config cfg = st.effective();
    if (st.show_config) {
      std::cout << print_config(cfg);
      return 0;
    }
    if (classify->parsed()) {
      std::ofstream out_file;
      std::ostream* os = &std::cout;
      if (!cl_out.empty()) {
        out_file.open(cl_out);
        if (!out_file) raise(errc::io, "cannot open '" + cl_out + "' for writing");
        os = &out_file;
      }
      return cl_stream ? run_classify_stream(cfg, cl_input, cl_calib, cl_labels, *os)
                       : run_classify_batch(cfg, cl_input, cl_calib, cl_labels, *os);
    }
    if (eval_cmd->parsed())
      return run_eval(cfg, ev_pred, ev_samples, ev_truth, ev_names, ev_calib, ev_grouped, ev_csv);
    if (gen_cmd->parsed())
      return run_gen(cfg, gn_out, gn_scripts, gn_builtin->count() > 0, gn_sigma, gn_calib);
    if (spectrum_cmd->parsed()) return run_spectrum(cfg, sp_input, sp_calib, sp_block);
    if (filter_cmd->parsed()) return run_filter_response(cfg, fr_cutoff, fr_at, fr_coeffs);
    if (calibrate_cmd->parsed()) return run_calibrate(cfg, ca_input, ca_out);
    std::cerr << app.help();
    return static_cast<int>(errc::usage);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "actispec: " << e.what() << "\n";
    return static_cast<int>(errc::usage);
  } catch (const error& e) {
    std::cerr << "actispec: " << errc_name(e.category()) << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "actispec: " << e.what() << "\n";
    return static_cast<int>(errc::usage);
  }
}
