#include "cubical/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cubical/errors.hpp"

namespace cubical {

using nlohmann::json;

ComplexFile load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileNotFound, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::ParseError, path + ": not valid structured text");

  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::ParseError, path + ": " + why);
  };
  if (!j.is_object()) throw fail("top level must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw fail("missing integer field 'vertices'");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw fail("missing array field 'edges'");

  ComplexFile f;
  f.vertices = j["vertices"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw fail("each edge must be a pair of integers");
    f.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw fail("'name' must be a string");
    f.name = j["name"].get<std::string>();
  }
  if (j.contains("automorphisms")) {
    if (!j["automorphisms"].is_array())
      throw fail("'automorphisms' must be an array");
    for (const auto& p : j["automorphisms"]) {
      if (!p.is_array() || int(p.size()) != f.vertices)
        throw fail("each automorphism must list every vertex once");
      std::vector<int> perm;
      for (const auto& v : p) {
        if (!v.is_number_integer()) throw fail("permutation entries must be integers");
        perm.push_back(v.get<int>());
      }
      f.automorphisms.push_back(std::move(perm));
    }
  }
  return f;
}

std::string complex_file_text(ComplexFile f) {
  for (auto& e : f.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(f.edges.begin(), f.edges.end());

  json j;
  j["vertices"] = f.vertices;
  auto edges = json::array();
  for (const auto& e : f.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  if (!f.name.empty()) j["name"] = f.name;
  if (!f.automorphisms.empty()) j["automorphisms"] = f.automorphisms;
  return j.dump(2) + "\n";
}

void save_complex_file(const ComplexFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::FileNotFound, "cannot write " + path);
  out << complex_file_text(f);
}

CubeComplex to_complex(const ComplexFile& f) {
  return build_complex(f.vertices, f.edges, f.name);
}

ComplexFile from_complex(const CubeComplex& c) {
  ComplexFile f;
  f.vertices = c.n;
  f.edges = c.edges;
  f.name = c.name;
  return f;
}

std::string half_str(long x2) {
  if (x2 % 2 == 0) return std::to_string(x2 / 2);
  return std::to_string(x2) + "/2";
}

std::string sweep_report_json(const SweepReport& r) {
  json j;
  j["complex"] = r.complex_name;
  j["D"] = r.D;
  j["dim_d"] = r.dim_d;
  j["delta4"] = half_str(r.delta_x2);
  j["R"] = r.R;
  j["mode"] = r.mode;
  j["sample_count"] = r.sample_count;
  j["seed"] = r.seed;
  j["triples_checked"] = r.triples_checked;
  j["max_empirical_k"] = r.max_empirical_k;
  j["max_projection_difference"] = r.max_projection_difference;
  auto fails = json::array();
  for (const TripleReport& t : r.failures) {
    json ft;
    ft["triple"] = {t.x, t.y, t.z};
    ft["rho"] = half_str(t.rho2);
    ft["sym_diff_size"] = t.sym_diff_size;
    ft["witness_centers"] = t.witness_centers;
    ft["R_used"] = t.R_used;
    ft["covered"] = t.covered;
    ft["empirical_k"] = t.empirical_k;
    fails.push_back(std::move(ft));
  }
  j["failures"] = fails;
  return j.dump(2) + "\n";
}

std::string constants_text(const StabilityConstants& p) {
  std::ostringstream out;
  out << "L = " << p.L.get_str() << "\n";
  out << "R = " << p.R.get_str() << "\n";
  out << "theta = " << half_str(p.theta_x2.get_si()) << "\n";
  out << "T = " << p.T.get_str() << "\n";
  out << "K <= 2^" << p.K_log2.get_str() << " (cell-count bound, upper bound only)\n";
  if (p.M && mpz_sizeinbase(p.M->get_mpz_t(), 2) <= 256)
    out << "M = " << p.M->get_str() << "\n";
  else
    out << "M = " << p.M_over_K.get_str() << " * 2^" << p.K_log2.get_str()
        << " (upper bound)\n";
  return out.str();
}

void export_dot(const CubeComplex& c, std::ostream& out,
                const Cylinder* highlight) {
  static const char* palette[] = {
      "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
      "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6"};
  constexpr int npal = 12;

  std::vector<int> edge_hp(c.edges.size(), -1);
  for (const Hyperplane& h : c.hyperplanes)
    for (const Edge& e : h.edge_class) {
      auto it = std::lower_bound(c.edges.begin(), c.edges.end(), e);
      edge_hp[size_t(it - c.edges.begin())] = h.id;
    }

  out << "graph \"" << (c.name.empty() ? "complex" : c.name) << "\" {\n";
  out << "  node [shape=circle width=0.25 fixedsize=true];\n";
  for (int v = 0; v < c.n; v++) {
    out << "  " << v;
    if (highlight && highlight->verts.test(v))
      out << " [style=filled fillcolor=gold]";
    out << ";\n";
  }
  for (size_t i = 0; i < c.edges.size(); i++)
    out << "  " << c.edges[i].first << " -- " << c.edges[i].second
        << " [color=\"" << palette[edge_hp[i] % npal] << "\"];\n";
  out << "}\n";
}

}  // namespace cubical
