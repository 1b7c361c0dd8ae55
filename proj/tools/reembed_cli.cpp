#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reembed/generators.hpp"
#include "reembed/oracle.hpp"

namespace {

using namespace reembed;

constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Files carrying the planar_code header are binary; everything else is
// treated as rotation text.
std::vector<PlanarMap> load_maps(const std::string& path) {
  const std::string bytes = read_file(path);
  if (bytes.rfind(">>planar_code<<", 0) == 0) {
    std::istringstream in(bytes);
    return parse_planar_code(in);
  }
  return {parse_rotation_text(bytes)};
}

std::vector<PlanarMap> load_validated(const std::string& path) {
  std::vector<PlanarMap> maps = load_maps(path);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const ValidationReport r = validate_cubic_planar(maps[i]);
    if (!r.all_ok()) {
      throw std::invalid_argument("graph " + std::to_string(i) + " in " + path +
                                  " is not a 3-connected cubic spherical map: " +
                                  r.detail.value_or("validation failed"));
    }
  }
  return maps;
}

std::string surface_token(TargetSurface t) {
  switch (t) {
    case TargetSurface::Projective: return "pp";
    case TargetSurface::Torus: return "torus";
    case TargetSurface::Klein: return "klein";
  }
  return "?";
}

std::vector<TargetSurface> parse_surface_flag(const std::string& s, bool allow_all) {
  if (s == "pp") return {TargetSurface::Projective};
  if (s == "torus") return {TargetSurface::Torus};
  if (s == "klein") return {TargetSurface::Klein};
  if (s == "all" && allow_all) {
    return {TargetSurface::Projective, TargetSurface::Torus, TargetSurface::Klein};
  }
  throw CLI::ValidationError("--surface", "expected pp, torus or klein");
}

int run_count(const std::string& path, const std::string& surface) {
  const auto surfaces = parse_surface_flag(surface, /*allow_all=*/true);
  for (const PlanarMap& map : load_validated(path)) {
    const DualMap dual = build_dual(map);
    const CountReport report = count_report(dual);
    for (TargetSurface t : surfaces) {
      long long value = 0;
      switch (t) {
        case TargetSurface::Projective: value = report.projective; break;
        case TargetSurface::Torus: value = report.torus; break;
        case TargetSurface::Klein: value = report.klein; break;
      }
      std::cout << surface_token(t) << '\t' << value << '\n';
    }
  }
  return 0;
}

int run_enumerate(const std::string& path, const std::string& surface, long long limit) {
  const TargetSurface target = parse_surface_flag(surface, /*allow_all=*/false).front();
  long long emitted = 0;
  for (const PlanarMap& map : load_validated(path)) {
    const DualMap dual = build_dual(map);
    SurfaceEnumerator en(dual, target);
    while (auto match = en.next()) {
      std::cout << surface_token(target) << '\t' << pattern_name(match->kind) << '\t';
      if (match->m) {
        std::cout << *match->m;
      } else {
        std::cout << '-';
      }
      std::cout << '\t';
      for (std::size_t i = 0; i < match->twists.size(); ++i) {
        if (i > 0) std::cout << ',';
        std::cout << match->twists[i];
      }
      std::cout << '\n';
      if (limit > 0 && ++emitted >= limit) return 0;
    }
  }
  return 0;
}

int run_distribution(const std::string& path, int edge_cap, int jobs) {
  for (const PlanarMap& map : load_validated(path)) {
    GenusDistribution dist = brute_force_distribution(map, edge_cap, jobs);
    std::vector<std::pair<Surface, long long>> rows(dist.counts.begin(), dist.counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.first.euler_characteristic != b.first.euler_characteristic) {
        return a.first.euler_characteristic > b.first.euler_characteristic;
      }
      return a.first.orientable > b.first.orientable;
    });
    for (const auto& [surface, count] : rows) {
      std::cout << surface.euler_characteristic << '\t' << (surface.orientable ? "true" : "false")
                << '\t' << surface.name() << '\t' << count << '\n';
    }
  }
  return 0;
}

PlanarMap generate(const std::string& spec) {
  if (spec == "tetrahedron") return tetrahedron();
  if (spec == "cube") return cube();
  if (spec == "dodecahedron") return dodecahedron();
  if (spec.rfind("prism:", 0) == 0) return prism(std::stoi(spec.substr(6)));
  if (spec.rfind("trunc:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("gen", "expected trunc:<seed>:<steps>");
    }
    return random_truncation_sequence(std::stoull(rest.substr(0, colon)),
                                      std::stoi(rest.substr(colon + 1)));
  }
  throw CLI::ValidationError(
      "gen", "expected tetrahedron, cube, dodecahedron, prism:<m> or trunc:<seed>:<steps>");
}

int run_gen(const std::string& spec, const std::string& out_path) {
  const std::string bytes = write_planar_code({generate(spec)});
  if (out_path.empty()) {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  return 0;
}

int run_verify(const std::string& path, int edge_cap, int jobs) {
  int exit_code = 0;
  for (const PlanarMap& map : load_validated(path)) {
    const VerifyReport report = verify_counts(map, edge_cap, jobs);
    std::cout << report.to_string() << '\n';
    if (!report.ok()) exit_code = kExitMismatch;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embeddings of 3-connected cubic planar graphs on the projective plane, torus "
               "and Klein bottle"};
  app.require_subcommand(1);

  std::string file, surface = "all", gen_spec, out_path;
  long long limit = 0;
  int edge_cap = 24, jobs = 1;

  CLI::App* count = app.add_subcommand("count", "Closed-form embedding counts per surface (TSV)");
  count->add_option("file", file)->required();
  count->add_option("--surface", surface, "pp|torus|klein|all");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "One line per inequivalent embedding on a surface");
  enumerate->add_option("file", file)->required();
  std::string enum_surface;
  enumerate->add_option("--surface", enum_surface, "pp|torus|klein")->required();
  enumerate->add_option("--limit", limit, "stop after this many matches");

  CLI::App* distribution =
      app.add_subcommand("distribution", "Exhaustive genus distribution over all twist sets");
  distribution->add_option("file", file)->required();
  distribution->add_option("--edge-cap", edge_cap, "refuse sweeps beyond this many edges");
  distribution->add_option("--jobs", jobs, "parallel sweep workers");

  CLI::App* gen = app.add_subcommand("gen", "Write a fixture graph as planar_code");
  gen->add_option("spec", gen_spec, "tetrahedron|cube|dodecahedron|prism:m|trunc:seed:steps")
      ->required();
  gen->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify",
                                        "Check closed form vs enumeration vs exhaustive sweep");
  verify->add_option("file", file)->required();
  verify->add_option("--edge-cap", edge_cap, "skip the sweep beyond this many edges");
  verify->add_option("--jobs", jobs, "parallel sweep workers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return run_count(file, surface);
    if (enumerate->parsed()) return run_enumerate(file, enum_surface, limit);
    if (distribution->parsed()) return run_distribution(file, edge_cap, jobs);
    if (gen->parsed()) return run_gen(gen_spec, out_path);
    if (verify->parsed()) return run_verify(file, edge_cap, jobs);
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
