#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubical/complex.hpp"
#include "cubical/cylinders.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "cubical/hyperbolicity.hpp"
#include "cubical/intervals.hpp"
#include "cubical/io.hpp"
#include "cubical/rng.hpp"
#include "cubical/stability.hpp"

using namespace cubical;

namespace {

CubeComplex load(const std::string& path) {
  return to_complex(load_complex_file(path));
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::FileNotFound, "cannot write " + out_path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"finite CAT(0) cube complex toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for sweeps");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a complex file");
  std::string kind, gen_out;
  std::vector<int> params;
  uint64_t seed = 1;
  gen->add_option("kind", kind, "tree|hypercube|grid|staircase")->required();
  gen->add_option("params", params, "size parameters")->expected(1, 2);
  gen->add_option("--seed", seed, "seed for randomized kinds");
  gen->add_option("--out", gen_out, "output path (stdout if omitted)");

  // validate
  auto* val = app.add_subcommand("validate", "validate a complex file");
  std::string val_path;
  val->add_option("path", val_path)->required();

  // info
  auto* info = app.add_subcommand("info", "geometric constants of a complex");
  std::string info_path;
  info->add_option("path", info_path)->required();

  // cylinder
  auto* cyl = app.add_subcommand("cylinder", "interval and cylinder of a pair");
  std::string cyl_path;
  int cx = 0, cy = 0, cyl_D = -1;
  cyl->add_option("path", cyl_path)->required();
  cyl->add_option("x", cx)->required();
  cyl->add_option("y", cy)->required();
  cyl->add_option("--D", cyl_D, "peripherality bound (default: max grid size)");

  // stability
  auto* stab = app.add_subcommand("stability", "run the triple sweep");
  std::string stab_path, stab_mode = "all", stab_out;
  int stab_D = -1, stab_R = -1;
  long stab_count = 100000;
  uint64_t stab_seed = 1;
  stab->add_option("path", stab_path)->required();
  stab->add_option("--D", stab_D, "peripherality bound (default: max grid size)");
  stab->add_option("--R", stab_R, "ball radius (default: 5Dd)");
  stab->add_option("--mode", stab_mode, "all|sample")
      ->check(CLI::IsMember({"all", "sample"}));
  stab->add_option("--count", stab_count, "sample count (mode=sample)");
  stab->add_option("--seed", stab_seed, "sample seed (mode=sample)");
  stab->add_option("--out", stab_out, "write the report here too");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "graph description output");
  std::string dot_path, dot_out;
  std::vector<int> dot_hl;
  int dot_D = -1;
  dot->add_option("path", dot_path)->required();
  dot->add_option("--highlight", dot_hl, "cylinder endpoints x y")->expected(2);
  dot->add_option("--D", dot_D, "peripherality bound for --highlight");
  dot->add_option("--out", dot_out, "output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    CubeComplex c;
    auto need = [&](size_t k) {
      if (params.size() != k)
        throw Error(Errc::BadArgument,
                    "gen " + kind + " expects " + std::to_string(k) +
                        " parameter(s)",
                    {int(params.size())});
    };
    if (kind == "tree") {
      need(1);
      c = gen_tree(params[0], seed);
    } else if (kind == "hypercube") {
      need(1);
      c = gen_hypercube(params[0]);
    } else if (kind == "grid") {
      need(2);
      c = gen_grid(params[0], params[1]);
    } else if (kind == "staircase") {
      need(1);
      c = gen_staircase(params[0]);
    } else {
      throw Error(Errc::BadArgument, "unknown generator kind " + kind);
    }
    write_or_print(complex_file_text(from_complex(c)), gen_out);
    return 0;
  }

  if (*val) {
    CubeComplex c = load(val_path);
    ComplexFile f = load_complex_file(val_path);
    for (const auto& perm : f.automorphisms)
      check_invariance(c, perm, 0, {{0, 0}});  // throws if not an automorphism
    std::cout << "ok vertices=" << c.n << " edges=" << c.edges.size()
              << " hyperplanes=" << c.num_hyperplanes()
              << " automorphisms=" << f.automorphisms.size() << "\n";
    return 0;
  }

  if (*info) {
    CubeComplex c = load(info_path);
    GeometryConstants g = geometry_constants(c, threads);
    std::cout << "name=" << c.name << "\n";
    std::cout << "vertices=" << c.n << " edges=" << c.edges.size()
              << " hyperplanes=" << c.num_hyperplanes() << "\n";
    std::cout << "dim_d=" << g.dim_d << "\n";
    std::cout << "delta4=" << half_str(g.delta_x2) << "\n";
    std::cout << "grid_D=" << g.grid_D << "\n";
    std::cout << "theta=" << half_str(g.theta_x2) << "\n";
    std::cout << "R=" << g.R << "\n";
    std::cout << constants_text(
        stability_constants(std::max(g.dim_d, 1), g.delta_x2, g.grid_D));
    return 0;
  }

  if (*cyl) {
    CubeComplex c = load(cyl_path);
    if (cx < 0 || cx >= c.n || cy < 0 || cy >= c.n)
      throw Error(Errc::BadArgument, "vertex out of range", {cx, cy, c.n});
    if (cyl_D < 0) cyl_D = max_grid_size(c).first;
    Interval iv = interval(c, cx, cy);
    Cylinder cl = cylinder(c, cx, cy, cyl_D);
    std::cout << "D=" << cyl_D << "\n";
    std::cout << "interval=" << iv.verts.str() << "\n";
    std::cout << "cylinder=" << cl.verts.str() << "\n";
    std::cout << "defining_halfspaces=" << cl.defining.str() << "\n";
    return 0;
  }

  if (*stab) {
    CubeComplex c = load(stab_path);
    SweepMode mode;
    if (stab_mode == "sample") {
      if (stab_count <= 0)
        throw Error(Errc::BadArgument, "sample count must be positive",
                    {int(stab_count)});
      mode = {stab_count, stab_seed};
    }
    SweepReport r = stability_sweep(c, stab_D, stab_R, mode, threads);
    std::string text = sweep_report_json(r);
    std::cout << text;
    if (!stab_out.empty()) write_or_print(text, stab_out);
    return r.failures.empty() ? 0 : 1;
  }

  if (*dot) {
    CubeComplex c = load(dot_path);
    std::ostringstream buf;
    if (!dot_hl.empty()) {
      if (dot_hl[0] < 0 || dot_hl[0] >= c.n || dot_hl[1] < 0 || dot_hl[1] >= c.n)
        throw Error(Errc::BadArgument, "vertex out of range",
                    {dot_hl[0], dot_hl[1], c.n});
      if (dot_D < 0) dot_D = max_grid_size(c).first;
      Cylinder cl = cylinder(c, dot_hl[0], dot_hl[1], dot_D);
      export_dot(c, buf, &cl);
    } else {
      export_dot(c, buf);
    }
    write_or_print(buf.str(), dot_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::FileNotFound:
      case Errc::ParseError:
      case Errc::BadArgument:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
}
