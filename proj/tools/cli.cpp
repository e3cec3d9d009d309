#include "cli.hpp"

#include "lcaframe/analysis.hpp"
#include "lcaframe/certify.hpp"
#include "lcaframe/error.hpp"
#include "lcaframe/serialize.hpp"
#include "lcaframe/tiles.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lcaframe::cli {

namespace fs = std::filesystem;

namespace {

// Missing files and unwritable outputs; reported like schema problems.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path.string());
  o << text;
  if (!o) throw InputError("cannot write " + path.string());
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string steps_text(const Lattice& L) {
  std::string s;
  for (const auto& r : L.steps()) s += (s.empty() ? "" : " x ") + to_string(r);
  return s;
}

// Time support on Z and Z_N, spectral set elsewhere.
std::string support_text(const FrameSystem& sys, const SystemElement& e) {
  const GroupSpec& g = sys.chain().group();
  const Generator& gen = e.generator;
  if (gen.time && g.kind() == GroupKind::Integers) {
    std::int64_t lo = gen.time->end(), hi = gen.time->start - 1;
    for (std::int64_t x = gen.time->start; x < gen.time->end(); ++x)
      if (gen.time->at(x) != Complex(0)) {
        lo = std::min(lo, x);
        hi = x;
      }
    return lo > hi ? "empty" : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  }
  if (g.finite()) {
    Sequence t = time_samples(sys, gen);
    std::size_t n = 0;
    for (const auto& v : t.values) n += std::abs(v) > 1e-12;
    return std::to_string(n) + " of " + std::to_string(t.values.size()) + " points";
  }
  const int k = gen.level + (gen.index > 0 ? 1 : 0);
  if (sys.omega()) return "spectrum in " + domain_to_json(sys.omega()->omega(k)).dump();
  return "Q_" + std::to_string(gen.level) + " = " + domain_to_json(sys.chain().level(gen.level).Q).dump();
}

std::string summary(const SystemDescriptor& d, const FrameSystem& sys) {
  std::ostringstream o;
  o << "group " << sys.chain().group().name() << ", family " << family_name(sys.family()) << ", levels "
    << sys.k0() << ".." << sys.k1() << ", " << sys.elements().size() << " generator families\n";
  o << "descriptor-hash " << hex(descriptor_hash(d)) << "\n";
  o << "k  d_k  rho_k\n";
  for (int k = sys.k0(); k < sys.k1(); ++k)
    o << k << "  " << sys.chain().index(k) << "  " << sys.filters_at(k).G.size() << "\n";
  for (const auto& e : sys.elements())
    o << e.generator.name << "  lattice " << steps_text(e.lattice) << "  support " << support_text(sys, e) << "\n";
  return o.str();
}

LoadedSystem load(const std::string& path) {
  return system_from_json(parse_json_text(read_file(path), path));
}

std::string csv_header(const std::string& what, const std::string& name, std::uint64_t hash, std::uint64_t seed) {
  return "# lcaframe emit " + what + " " + name + "\n# descriptor-hash " + hex(hash) + "\n# seed " +
         format_seed(seed) + "\n";
}

std::string file_stem(const Generator& g) {
  return g.index == 0 ? "phi_" + std::to_string(g.level)
                      : "psi_" + std::to_string(g.level) + "_" + std::to_string(g.index);
}

// x, re, im rows of one generator: time values on Z and Z_N, spectrum on the dual of T.
std::string generator_csv(const LoadedSystem& ls, const Generator& g, const std::string& what) {
  const FrameSystem& sys = ls.system;
  const GroupSpec& grp = sys.chain().group();
  std::string s = csv_header(what, g.name, descriptor_hash(ls.descriptor), ls.descriptor.seed);
  auto rows = [&](const char* col, const std::vector<std::pair<std::int64_t, Complex>>& v) {
    s += std::string(col) + ",re,im\n";
    for (const auto& [x, z] : v) s += std::to_string(x) + "," + num(z.real()) + "," + num(z.imag()) + "\n";
  };
  std::vector<std::pair<std::int64_t, Complex>> v;
  if (grp.kind() == GroupKind::Integers) {
    require(g.time.has_value(), ErrorKind::Unsupported, g.name + " has no time values");
    for (std::int64_t x = g.time->start; x < g.time->end(); ++x) v.emplace_back(x, g.time->at(x));
    rows("x", v);
  } else if (grp.finite()) {
    Sequence t = time_samples(sys, g);
    for (std::size_t i = 0; i < t.values.size(); ++i) v.emplace_back(static_cast<std::int64_t>(i), t.values[i]);
    rows("x", v);
  } else {
    require(sys.side() == AnalysisSide::Modulation, ErrorKind::Unsupported,
            "generator emission needs Z, Z_N or a characteristic-function system on T, not " +
                family_name(sys.family()) + " on " + grp.name());
    for (const auto& p : enumerate(sys.chain().level(sys.k1()).V, sys.chain().dual_group()))
      v.emplace_back(p[0].numerator(), g.spectrum({to_double(p[0])}));
    rows("gamma", v);
  }
  return s;
}

int emit_generators(const LoadedSystem& ls, const fs::path& dir, std::ostream& out) {
  for (const auto& e : ls.system.elements()) {
    fs::path p = dir / (file_stem(e.generator) + ".csv");
    write_file(p, generator_csv(ls, e.generator, "generators"));
    out << p.string() << "\n";
  }
  return kOk;
}

int emit_figure1(const LoadedSystem& ls, const fs::path& dir, std::ostream& out) {
  const FrameSystem& sys = ls.system;
  require(sys.chain().group().kind() == GroupKind::Integers && sys.family().kind == FamilyKind::BSpline &&
              sys.family().order == 2 && sys.k0() <= 5 && sys.k1() > 5,
          ErrorKind::Unsupported, "figure1 needs an order-2 B-spline system on Z covering level 5");
  for (const auto& e : sys.wavelets(5)) {
    fs::path p = dir / ("figure1_psi" + std::to_string(e.generator.index) + ".csv");
    write_file(p, generator_csv(ls, e.generator, "figure1"));
    out << p.string() << "\n";
  }
  return kOk;
}

IntVector2 int_pair(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(ErrorKind::Schema, "schema error: at " + path + ": expected two integers");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

int emit_tile(const std::string& path, const fs::path& dir, std::ostream& out) {
  const Json j = parse_json_text(read_file(path), path);
  if (!j.is_object() || !j.contains("tile") || !j["tile"].is_object())
    fail(ErrorKind::Schema, "schema error: at /tile: missing field");
  const Json& t = j["tile"];
  for (const char* key : {"A", "eta", "r"})
    if (!t.contains(key)) fail(ErrorKind::Schema, std::string("schema error: at /tile/") + key + ": missing field");
  if (!t["A"].is_array() || t["A"].size() != 2) fail(ErrorKind::Schema, "schema error: at /tile/A: expected a 2x2 matrix");
  if (!t["r"].is_number_integer()) fail(ErrorKind::Schema, "schema error: at /tile/r: expected an integer");
  TileSpec spec;
  spec.A = {int_pair(t["A"][0], "/tile/A/0"), int_pair(t["A"][1], "/tile/A/1")};
  spec.eta = int_pair(t["eta"], "/tile/eta");
  spec.r = t["r"].get<int>();
  validate(spec);
  TileCloud cloud = tile_iterate(spec);
  std::string s = "# lcaframe emit tile r=" + std::to_string(spec.r) + "\n# descriptor-hash " +
                  hex(fnv1a(t.dump())) + "\n# seed none\nx,y\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    s += num(p[0]) + "," + num(p[1]) + "\n";
  }
  fs::path p = dir / "tile.csv";
  write_file(p, s);
  out << p.string() << "  " << cloud.size() << " points\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiresolution tight frames on elementary LCA groups"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;

  auto* construct = app.add_subcommand("construct", "Build a frame system from a JSON descriptor");
  std::string descriptor;
  construct->add_option("file", input, "Descriptor file");
  construct->add_option("--descriptor", descriptor, "Descriptor file");
  construct->add_option("--out", out_path, "System file to write (default: descriptor \"out\" or <name>.system.json)");

  auto* verify = app.add_subcommand("verify", "Run verification suites on a system file or descriptor");
  std::string suite = "all";
  std::size_t samples = 0;
  int trials = 100;
  std::string seed_text;
  double tolerance = 1e-10;
  bool json_stdout = false;
  verify->add_option("file", input, "System file or descriptor")->required();
  verify->add_option("--suite", suite, "uep, refinement, fiber, telescope, parseval or all");
  verify->add_option("--samples", samples, "Grid nodes on continuous domains (random draws: a quarter of that)");
  verify->add_option("--trials", trials, "Random test functions per check");
  verify->add_option("--seed", seed_text, "Seed as hex, e.g. 0x5EED (default: the descriptor's)");
  verify->add_option("--tolerance", tolerance, "Residual tolerance");
  verify->add_option("--out", out_path, "Write the JSON report here");
  verify->add_flag("--json", json_stdout, "Print the JSON report instead of the summary");

  auto* emit = app.add_subcommand("emit", "Write generator, figure or tile data as CSV");
  std::string what;
  emit->add_option("file", input, "System file, descriptor, or tile file for --what tile")->required();
  emit->add_option("--what", what, "generators, figure1 or tile")->required();
  emit->add_option("--out", out_path, "Output directory (default: current directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*construct) {
      if (!descriptor.empty()) input = descriptor;
      if (input.empty()) throw InputError("construct needs a descriptor file");
      const SystemDescriptor d = parse_descriptor(parse_json_text(read_file(input), input));
      const FrameSystem sys = build_system(d);
      fs::path target = !out_path.empty() ? fs::path(out_path)
                        : d.out           ? fs::path(*d.out)
                                          : fs::path(input).replace_extension(".system.json");
      write_file(target, system_to_json(d, sys).dump(1) + "\n");
      out << summary(d, sys) << "wrote " << target.string() << "\n";
      return kOk;
    }
    if (*verify) {
      const LoadedSystem ls = load(input);
      CertifyOptions opts;
      opts.seed = seed_text.empty() ? ls.descriptor.seed : parse_seed(seed_text);
      opts.plan.seed = opts.seed;
      if (samples > 0) {
        opts.plan.grid_points = samples;
        opts.plan.random_points = samples / 4;
      }
      require(trials >= 1, ErrorKind::Domain, "--trials must be at least 1");
      require(tolerance > 0, ErrorKind::Domain, "--tolerance must be positive");
      opts.trials = trials;
      opts.tolerance = tolerance;
      const Suite s = parse_suite(suite);
      const CertifyReport rep = certify(ls.system, s, opts);
      Json j = report_to_json(rep, s);
      j["descriptor_hash"] = hex(descriptor_hash(ls.descriptor));
      j["seed"] = format_seed(opts.seed);
      if (!out_path.empty()) write_file(out_path, j.dump(1) + "\n");
      if (json_stdout) {
        out << j.dump(1) << "\n";
      } else {
        for (const auto& c : rep.checks) {
          out << to_string(c.status) << "  " << c.suite << "  " << c.condition << "  " << c.scope;
          if (c.status != CheckStatus::Skip)
            out << "  residual " << short_num(c.residual) << " <= " << short_num(c.tolerance) << "  ("
                << c.certification << ", " << c.samples << " samples)";
          if (!c.note.empty()) out << "  " << c.note;
          out << "\n";
        }
        out << rep.count(CheckStatus::Pass) << " passed, " << rep.count(CheckStatus::Fail) << " failed, "
            << rep.count(CheckStatus::Skip) << " skipped\n";
      }
      return rep.passed() ? kOk : kVerifyFailed;
    }
    const fs::path dir = out_path.empty() ? fs::path(".") : fs::path(out_path);
    if (what == "tile") return emit_tile(input, dir, out);
    if (what != "generators" && what != "figure1")
      throw InputError("--what must be generators, figure1 or tile (got " + what + ")");
    const LoadedSystem ls = load(input);
    return what == "generators" ? emit_generators(ls, dir, out) : emit_figure1(ls, dir, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema)
      err << "error: " << e.what() << "\n";
    else
      err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::Schema ? kInputError : kPrecondition;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace lcaframe::cli
