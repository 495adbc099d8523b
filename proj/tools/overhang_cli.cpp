// Command-line front end: stack document I/O, balance verification,
// canonical stack constructions, spinal optimization, loaded-to-standard
// conversion, search, and SVG rendering. Documents are the interchange
// format between subcommands; "-" reads stdin / writes stdout.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "overhang/balance.hpp"
#include "overhang/brickwall.hpp"
#include "overhang/document.hpp"
#include "overhang/model.hpp"
#include "overhang/parabolic.hpp"
#include "overhang/render.hpp"
#include "overhang/search.hpp"
#include "overhang/shield.hpp"
#include "overhang/spinal.hpp"

namespace {

using namespace overhang;

constexpr int kExitBalanced = 0;
constexpr int kExitUnbalanced = 1;
constexpr int kExitInvalid = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return read_file(path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Inverse of realize_spine: one block per level, top-down weights from
// the attached point weights.
SpinalDesign spine_from_stack(const Stack& s) {
  int k = s.size();
  std::vector<int> by_level(k, -1);
  for (int i = 0; i < k; ++i) {
    int l = s.blocks[i].level;
    if (l < 0 || l >= k || by_level[l] != -1)
      throw DocumentError("not a spinal stack: need exactly one block per level");
    by_level[l] = i;
  }
  std::vector<double> weights(k, 0.0);  // index 0 = top block
  for (const PointWeight& w : s.weights)
    weights[k - 1 - s.blocks[w.block].level] += w.magnitude;
  SpinalDesign d = balance_displacements(weights);
  return d;
}

int cmd_verify(const std::string& file, const std::string& mode, double tol) {
  Stack s = parse_stack_document(slurp(file));
  validate_geometry(s);
  BalanceMode m = mode == "exact" ? BalanceMode::Exact : BalanceMode::Float;
  if (m == BalanceMode::Exact && !s.has_exact()) {
    std::cerr << "exact mode needs exact (rational) coordinates throughout\n";
    return kExitInvalid;
  }
  BalanceResult r = is_balanced(s, m, tol);
  std::cout << (s.name.empty() ? std::string("stack") : s.name) << ": "
            << (r.balanced ? "balanced" : "unbalanced")
            << (r.certified ? " (certified)" : "") << "\n";
  std::cout << "blocks " << s.size() << ", overhang " << fmt(overhang::overhang(s)) << "\n";
  if (r.balanced)
    std::cout << "witness forces " << r.witness.size() << ", max residual "
              << fmt(r.max_residual) << "\n";
  else
    std::cout << "infeasibility certificate rows " << r.certificate.size() << "\n";
  return r.balanced ? kExitBalanced : kExitUnbalanced;
}

int cmd_build(const std::string& family, double param, const std::string& out) {
  int n = static_cast<int>(param);
  Stack s;
  const std::vector<int>* order = nullptr;
  std::vector<int> laying;
  if (family == "harmonic") {
    s = make_harmonic(n);
  } else if (family == "triangle") {
    s = make_inverted_triangle(n);
  } else if (family == "diamond") {
    s = make_diamond(n);
  } else if (family == "parabolic") {
    s = build_parabolic(n).stack;
  } else if (family == "modified") {
    std::tie(s, laying) = build_modified_parabolic(n);
    order = &laying;
  } else if (family == "sqrt-spinal") {
    s = realize_spine(sqrt_construction(param));
  } else {
    throw CLI::ValidationError("unknown family: " + family);
  }
  if (s.name.empty()) s.name = family + "-" + fmt(param);
  emit(out, write_stack_document(s, order));
  std::cerr << "blocks " << s.size() << ", overhang " << fmt(overhang::overhang(s)) << "\n";
  return 0;
}

int cmd_spinal(double w, int k, bool use_sqrt, const std::string& emit_file) {
  SpinalDesign d;
  if (use_sqrt) {
    d = sqrt_construction(w);
    std::cout << "sqrt construction: k " << d.k << ", overhang " << fmt(d.overhang)
              << ", total weight " << fmt(d.total_weight) << "\n";
  } else {
    SpinalOptimum opt = k > 0 ? optimize_fixed_k(w, k) : optimize(w);
    d = opt.design;
    std::cout << (k > 0 ? "S*_k" : "S*") << "(" << fmt(w) << ") = " << fmt(opt.value)
              << ", k_star " << opt.k_star << "\n";
  }
  std::cout << "weights (top-down):";
  for (double wi : d.weights) std::cout << " " << fmt(wi);
  std::cout << "\n";
  if (!emit_file.empty()) {
    Stack s = realize_spine(d);
    s.name = "spinal-" + fmt(w);
    emit(emit_file, write_stack_document(s));
  }
  return 0;
}

int cmd_convert(const std::string& file, const std::string& out) {
  SpinalDesign d = spine_from_stack(parse_stack_document(slurp(file)));
  ConversionResult r = convert(d);
  std::cerr << conversion_report(r);
  if (!r.success) {
    std::cerr << "conversion failed: " << r.diagnostics << "\n";
    return 1;
  }
  Stack s = r.stack;
  if (s.name.empty()) s.name = "converted";
  emit(out, write_stack_document(s));
  std::cerr << "blocks " << s.size() << ", overhang " << fmt(overhang::overhang(s)) << "\n";
  return 0;
}

int cmd_search_exhaustive(int n, const std::string& out) {
  SearchOptimum r = exhaustive_D(n);
  std::cout << "D(" << n << ") = " << fmt(r.overhang) << "\n";
  if (!out.empty()) {
    Stack s = r.stack;
    s.name = "exhaustive-" + std::to_string(n);
    emit(out, write_stack_document(s));
  }
  return 0;
}

int cmd_search_brickwall(double target, bool asymmetric, const std::string& out,
                         const std::string& profile_out, const std::string& outline_out,
                         const std::string& seed_file) {
  std::optional<BrickWallProfile> seed;
  if (!seed_file.empty()) seed = parse_profile_document(slurp(seed_file));
  BrickWallResult r = local_search_brickwall(target, !asymmetric, seed);
  int blocks = 0;
  for (const auto& lv : r.profile.levels) blocks += lv.width;
  std::cout << (asymmetric ? "asymmetric" : "symmetric") << " overhang "
            << fmt(to_double(profile_overhang(r.profile))) << ": weight "
            << fmt(r.weight) << ", blocks " << blocks << ", levels "
            << r.profile.levels.size() << "\n";
  if (!profile_out.empty()) emit(profile_out, write_profile_document(r.profile));
  if (!outline_out.empty()) emit(outline_out, outline_csv(scaled_outline(r.profile)));
  if (!out.empty()) {
    // Round the weight up to nine decimals so the emitted stack is balanced.
    Rational w(BigInt(static_cast<long long>(std::ceil(r.weight * 1e9))), BigInt(1000000000));
    Stack s = instantiate_profile(r.profile, w);
    s.name = "brickwall-" + fmt(target);
    emit(out, write_stack_document(s));
  }
  return 0;
}

int cmd_render(const std::string& file, const RenderSpec& spec, const std::string& out) {
  Stack s = parse_stack_document(slurp(file));
  validate_geometry(s);
  emit(out, render_svg(s, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D block-stack modeling, balance checking and overhang search"};
  app.require_subcommand(1);

  std::string file, out, mode = "float";
  double tol = 1e-9;

  auto* verify = app.add_subcommand("verify", "Check balance of a stack document");
  verify->add_option("file", file, "stack document (- for stdin)")->required();
  verify->add_option("--mode", mode, "float or exact")
      ->check(CLI::IsMember({"float", "exact"}));
  verify->add_option("--tol", tol, "feasibility tolerance")
      ->envname("OVERHANG_TOL");

  std::string family;
  double param = 0;
  auto* build = app.add_subcommand("build", "Construct a canonical stack family");
  build->add_option("family", family, "harmonic|triangle|diamond|parabolic|modified|sqrt-spinal")
      ->required()
      ->check(CLI::IsMember({"harmonic", "triangle", "diamond", "parabolic", "modified",
                             "sqrt-spinal"}));
  build->add_option("param", param, "size parameter (n, m, d or weight)")->required();
  build->add_option("-o,--out", out, "output document (default stdout)");

  double weight = 0;
  int k = 0;
  bool use_sqrt = false;
  std::string emit_file;
  auto* spinal = app.add_subcommand("spinal", "Optimize spinal stacks");
  spinal->add_option("--weight", weight, "total weight w")->required();
  spinal->add_option("--k", k, "fix the number of spine blocks");
  spinal->add_flag("--construction-sqrt", use_sqrt, "use the sqrt(w) construction");
  spinal->add_option("--emit", emit_file, "write the realized spine document");

  auto* convert = app.add_subcommand("convert", "Convert a loaded spinal stack to blocks only");
  convert->add_option("file", file, "spinal stack document (- for stdin)")->required();
  convert->add_option("-o,--out", out, "output document (default stdout)");

  auto* search = app.add_subcommand("search", "Search for heavy-overhang stacks");
  search->require_subcommand(1);
  int n = 3;
  auto* exhaustive = search->add_subcommand("exhaustive", "Exact small-n optimum D(n)");
  exhaustive->add_option("n", n, "number of blocks (1..7)")->required();
  exhaustive->add_option("-o,--out", out, "emit the optimal stack document");

  double target = 0;
  bool asymmetric = false;
  std::string profile_out, outline_out, seed_file;
  auto* brickwall = search->add_subcommand("brickwall", "Loaded brick-wall local search");
  brickwall->add_option("--overhang", target, "target overhang")->required();
  brickwall->add_flag("--asymmetric", asymmetric, "drop the mirror-symmetry restriction");
  brickwall->add_option("-o,--out", out, "emit the loaded stack document");
  brickwall->add_option("--profile", profile_out, "emit the profile document");
  brickwall->add_option("--outline", outline_out, "emit the scaled outline CSV");
  brickwall->add_option("--seed", seed_file, "start from this profile document");

  RenderSpec spec;
  bool no_weights = false, no_shading = false;
  auto* render = app.add_subcommand("render", "Render a stack document as SVG");
  render->add_option("file", file, "stack document (- for stdin)")->required();
  render->add_option("-o,--out", out, "output SVG file (default stdout)");
  render->add_option("--scale", spec.scale, "pixels per block length")
      ->check(CLI::PositiveNumber);
  render->add_flag("--forces", spec.show_forces, "draw witness force arrows");
  render->add_flag("--no-point-weights", no_weights, "hide point-weight arrows");
  render->add_flag("--no-shading", no_shading, "disable support/balancing shading");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(file, mode, tol);
    if (*build) return cmd_build(family, param, out);
    if (*spinal) return cmd_spinal(weight, k, use_sqrt, emit_file);
    if (*convert) return cmd_convert(file, out);
    if (*exhaustive) return cmd_search_exhaustive(n, out);
    if (*brickwall)
      return cmd_search_brickwall(target, asymmetric, out, profile_out, outline_out,
                                  seed_file);
    if (*render) {
      spec.show_point_weights = !no_weights;
      spec.shading = !no_shading;
      return cmd_render(file, spec, out);
    }
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidGeometry& e) {
    std::cerr << "invalid geometry: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
