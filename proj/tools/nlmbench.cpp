#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlmeans/bench.hpp"
#include "nlmeans/image.hpp"
#include "nlmeans/kernels.hpp"
#include "nlmeans/metrics.hpp"
#include "nlmeans/nlm.hpp"
#include "nlmeans/noise.hpp"
#include "nlmeans/oracle.hpp"
#include "nlmeans/params.hpp"
#include "nlmeans/pgm.hpp"

namespace {

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int radius_of(int side, const char* what) {
  if (side < 1 || side % 2 == 0) {
    throw std::invalid_argument(std::string(what) + " must be odd and positive");
  }
  return (side - 1) / 2;
}

// "auto" keeps the sigma-derived default; anything else must parse fully.
int side_or_auto(const std::string& text, int fallback, const char* what) {
  if (text == "auto") return fallback;
  std::size_t used = 0;
  const int side = std::stoi(text, &used);
  if (used != text.size()) throw std::invalid_argument(std::string(what) + ": bad value " + text);
  radius_of(side, what);
  return side;
}

double real_or_auto(const std::string& text, double fallback, const char* what) {
  if (text == "auto") return fallback;
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + ": bad value " + text);
  }
  return v;
}

void emit_csv(const std::string& csv_path, const std::vector<nlm::BenchRow>& rows) {
  if (csv_path.empty()) {
    nlm::write_bench_csv(std::cout, rows);
    return;
  }
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  nlm::write_bench_csv(out, rows);
}

void emit_text(const std::string& csv_path, const std::string& text) {
  if (csv_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patch-based image denoising benchmark (PGM in, PGM/CSV out)"};
  app.require_subcommand(1);

  // ---- add-noise ----
  auto* add = app.add_subcommand("add-noise", "add seeded white Gaussian noise to a PGM image");
  std::string an_in, an_out;
  double an_sigma = 0.0;
  std::uint64_t an_seed = 0;
  add->add_option("--in", an_in, "input PGM")->required()->check(CLI::ExistingFile);
  add->add_option("--out", an_out, "output PGM (values clamp to 0..255 on write)")->required();
  add->add_option("--sigma", an_sigma, "noise standard deviation")->required();
  add->add_option("--seed", an_seed, "RNG seed");
  add->callback([&] {
    const nlm::ImageGrid noisy =
        nlm::add_gaussian_noise(nlm::read_pgm_file(an_in), {an_sigma, an_seed});
    nlm::write_pgm_file(an_out, noisy);
  });

  // ---- denoise ----
  auto* den = app.add_subcommand("denoise", "denoise a PGM image");
  std::string dn_in, dn_out, dn_variant = "nlm", dn_kernel;
  std::string dn_window = "auto", dn_patch = "auto", dn_H = "auto";
  double dn_sigma = 0.0;
  den->add_option("--in", dn_in, "noisy input PGM")->required()->check(CLI::ExistingFile);
  den->add_option("--out", dn_out, "denoised output PGM")->required();
  den->add_option("--sigma", dn_sigma, "noise level the image was corrupted with")->required();
  den->add_option("--variant", dn_variant, "nlm or split")
      ->check(CLI::IsMember({"nlm", "split"}));
  den->add_option("--window", dn_window, "search window side (odd), or auto");
  den->add_option("--patch", dn_patch, "patch side (odd), or auto");
  den->add_option("--H", dn_H, "weight bandwidth, or auto (0.4*sigma + 2)");
  den->add_option("--kernel", dn_kernel, "rect, k0 or gauss:<bw> (default k0)");
  den->callback([&] {
    const nlm::ImageGrid noisy = nlm::read_pgm_file(dn_in);
    nlm::DenoiseParams p = nlm::practical_params(dn_sigma);
    p.window_radius = (side_or_auto(dn_window, p.window_side(), "window") - 1) / 2;
    p.patch_radius = (side_or_auto(dn_patch, p.patch_side(), "patch") - 1) / 2;
    p.bandwidth = real_or_auto(dn_H, p.bandwidth, "H");
    if (!dn_kernel.empty()) p.kernel = nlm::parse_kernel(dn_kernel);
    p.sigma = dn_sigma;
    const nlm::ImageGrid out =
        dn_variant == "split" ? nlm::split_denoise(noisy, p) : nlm::nlm_denoise(noisy, p);
    nlm::write_pgm_file(dn_out, out);
  });

  // ---- oracle ----
  auto* orc = app.add_subcommand("oracle", "pointwise oracle filter driven by the clean image");
  std::string or_clean, or_noisy, or_out;
  double or_sigma = 0.0, or_H = 0.0;
  int or_window = 0;
  orc->add_option("--clean", or_clean, "clean reference PGM")->required()->check(CLI::ExistingFile);
  orc->add_option("--noisy", or_noisy, "noisy input PGM")->required()->check(CLI::ExistingFile);
  orc->add_option("--out", or_out, "output PGM")->required();
  orc->add_option("--window", or_window, "search window side (odd)")->required();
  orc->add_option("--H", or_H, "weight bandwidth");
  orc->add_option("--sigma", or_sigma, "derive H as 0.4*sigma + 2 when --H is absent");
  orc->callback([&] {
    if (or_H <= 0.0 && or_sigma <= 0.0) throw std::invalid_argument("oracle needs --H or --sigma");
    const double H = or_H > 0.0 ? or_H : 0.4 * or_sigma + 2.0;
    const nlm::ImageGrid out =
        nlm::oracle_denoise(nlm::read_pgm_file(or_clean), nlm::read_pgm_file(or_noisy),
                            radius_of(or_window, "window"), H);
    nlm::write_pgm_file(or_out, out);
  });

  // ---- params ----
  auto* par = app.add_subcommand("params", "print the benchmark defaults for a noise level");
  double pr_sigma = 0.0;
  par->add_option("--sigma", pr_sigma, "noise standard deviation")->required();
  par->callback([&] {
    const nlm::DenoiseParams p = nlm::practical_params(pr_sigma);
    std::cout << "H=" << p.bandwidth << '\n'
              << "window=" << p.window_side() << '\n'
              << "patch=" << p.patch_side() << '\n'
              << "kernel=" << nlm::kernel_name(p.kernel) << '\n';
  });

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "CSV experiment sweeps");
  bench->require_subcommand(1);
  std::string b_csv;

  auto* bo = bench->add_subcommand("oracle", "oracle quality versus window side");
  std::string bo_clean, bo_id;
  std::vector<double> bo_sigmas{10.0, 20.0, 30.0};
  std::vector<int> bo_windows{9, 11, 13, 15, 17, 19, 21};
  std::uint64_t bo_seed = 1;
  bo->add_option("--clean", bo_clean, "clean PGM")->required()->check(CLI::ExistingFile);
  bo->add_option("--id", bo_id, "image id for the CSV (default: file stem)");
  bo->add_option("--sigmas", bo_sigmas, "noise levels")->delimiter(',');
  bo->add_option("--windows", bo_windows, "window sides (odd)")->delimiter(',');
  bo->add_option("--seed", bo_seed, "base seed; sigma index i draws with seed + i");
  bo->add_option("--csv", b_csv, "CSV path (default: stdout)");
  bo->callback([&] {
    const nlm::ImageGrid clean = nlm::read_pgm_file(bo_clean);
    emit_csv(b_csv, nlm::bench_oracle_sweep(clean, bo_id.empty() ? stem_of(bo_clean) : bo_id,
                                            bo_sigmas, bo_windows, bo_seed));
  });

  auto* bp = bench->add_subcommand("patch", "filter quality versus patch side");
  std::string bp_clean, bp_id, bp_H = "auto";
  double bp_sigma = 0.0;
  int bp_window = 13;
  std::vector<int> bp_patches{3, 5, 7, 9, 11, 13, 15, 17, 19, 21};
  std::uint64_t bp_seed = 1;
  bp->add_option("--clean", bp_clean, "clean PGM")->required()->check(CLI::ExistingFile);
  bp->add_option("--id", bp_id, "image id for the CSV (default: file stem)");
  bp->add_option("--sigma", bp_sigma, "noise level")->required();
  bp->add_option("--window", bp_window, "search window side (odd)");
  bp->add_option("--H", bp_H, "weight bandwidth, or auto (0.4*sigma + 2)");
  bp->add_option("--patches", bp_patches, "patch sides (odd)")->delimiter(',');
  bp->add_option("--seed", bp_seed, "seed of the single shared noisy draw");
  bp->add_option("--csv", b_csv, "CSV path (default: stdout)");
  bp->callback([&] {
    const double H = real_or_auto(bp_H, 0.4 * bp_sigma + 2.0, "H");
    const nlm::ImageGrid clean = nlm::read_pgm_file(bp_clean);
    emit_csv(b_csv, nlm::bench_patch_sweep(clean, bp_id.empty() ? stem_of(bp_clean) : bp_id,
                                           bp_sigma, bp_window, H, bp_patches, bp_seed));
  });

  auto* bt = bench->add_subcommand("table2", "benchmark defaults versus the classic baseline");
  std::vector<std::string> bt_cleans;
  std::vector<double> bt_sigmas{10.0, 20.0, 30.0};
  std::uint64_t bt_seed = 1;
  bt->add_option("--clean", bt_cleans, "clean PGM files")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  bt->add_option("--sigmas", bt_sigmas, "noise levels")->delimiter(',');
  bt->add_option("--seed", bt_seed, "base seed; cell (i, s) draws with seed + i*|sigmas| + s");
  bt->add_option("--csv", b_csv, "CSV path (default: stdout)");
  bt->callback([&] {
    std::vector<std::pair<std::string, nlm::ImageGrid>> cleans;
    for (const std::string& path : bt_cleans) {
      cleans.emplace_back(stem_of(path), nlm::read_pgm_file(path));
    }
    emit_csv(b_csv, nlm::bench_table2(cleans, bt_sigmas, bt_seed));
  });

  // ---- rate-check ----
  auto* rate = app.add_subcommand("rate-check", "empirical MSE decay on the synthetic scene");
  double rc_beta = 1.0, rc_L = 222.0, rc_sigma = 30.0;
  std::vector<int> rc_sides{64, 128, 256, 512};
  int rc_reps = 20;
  std::string rc_variant = "oracle", rc_csv;
  std::uint64_t rc_seed = 1;
  rate->add_option("--beta", rc_beta, "smoothness exponent in (0, 1]");
  rate->add_option("--L", rc_L, "smoothness constant");
  rate->add_option("--sigma", rc_sigma, "noise level");
  rate->add_option("--sides", rc_sides, "grid sides")->delimiter(',');
  rate->add_option("--reps", rc_reps, "noise draws per side (>= 10)");
  rate->add_option("--variant", rc_variant, "oracle or split")
      ->check(CLI::IsMember({"oracle", "split"}));
  rate->add_option("--seed", rc_seed, "base seed; side i, rep r draws with seed + i*reps + r");
  rate->add_option("--csv", rc_csv, "CSV path (default: stdout)");
  rate->callback([&] {
    const auto variant =
        rc_variant == "split" ? nlm::RateVariant::kSplit : nlm::RateVariant::kOracle;
    const nlm::RateResult res =
        nlm::rate_check(rc_beta, rc_L, rc_sigma, rc_sides, rc_reps, variant, rc_seed);
    emit_text(rc_csv, nlm::rate_csv(res));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
