#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "normalcut/enumeration.hpp"
#include "normalcut/error.hpp"
#include "normalcut/homology.hpp"
#include "normalcut/json_io.hpp"
#include "normalcut/normal_surface.hpp"
#include "normalcut/skeleton.hpp"
#include "normalcut/triangulation.hpp"
#include "normalcut/unknot.hpp"
#include "normalcut/wirtinger.hpp"

namespace {

using ordered = nlohmann::ordered_json;

// Exit code contract: 0 definitive positive (valid / Unknot / certified),
// 1 definitive negative (invalid semantics / Knotted / inconclusive),
// 2 operational failure (I/O, resource caps).
constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct OutputOptions {
  bool json = false;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw std::ios_base::failure("cannot read " + path);
  return ss.str();
}

// Writes via a temporary and renames, so readers never observe partial files.
void write_atomically(const std::string& path, const std::string& payload) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open " + tmp + " for writing");
    f << payload;
    if (!f.good()) throw std::ios_base::failure("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
}

int emit(const OutputOptions& out, const ordered& doc, const std::string& text,
         int code) {
  const std::string payload = out.json ? doc.dump(2) + "\n" : text;
  if (out.out_path.empty())
    std::cout << payload;
  else
    write_atomically(out.out_path, payload);
  return code;
}

// Failures always land on stderr; with --json or --out the structured report
// is additionally delivered like a normal one, so automation reading the
// output channel sees a deterministic document even when a command fails.
int emit_error(const OutputOptions& out, const ordered& doc, const std::string& line,
               int code) {
  std::cerr << line;
  if (out.json || !out.out_path.empty()) emit(out, doc, line, code);
  return code;
}

int default_jobs() {
  if (const char* env = std::getenv("NORMALCUT_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::string coords_text(const normalcut::NormalVector& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(x[i]);
  }
  return s + "]";
}

ordered rep_json(const normalcut::PermutationAssignment& rep) {
  ordered r;
  r["n"] = rep.n;
  r["image_order"] = rep.image_order;
  ordered imgs = ordered::array();
  for (const auto& p : rep.images) imgs.push_back(normalcut::cycle_notation(p));
  r["images"] = imgs;
  return r;
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, const OutputOptions& out) {
  const std::string bytes = read_file(path);
  ordered doc;
  doc["schema_version"] = normalcut::kSchemaVersion;
  doc["command"] = "validate";
  doc["checksum"] = normalcut::checksum(bytes);

  // Object at top level: triangulation file.  Array or string: planar diagram.
  bool is_triangulation = false;
  try {
    const auto peek = nlohmann::json::parse(bytes);
    is_triangulation = peek.is_object();
  } catch (const nlohmann::json::exception& e) {
    doc["kind"] = "unknown";
    doc["valid"] = false;
    doc["error"] = std::string("malformed JSON: ") + e.what();
    return emit(out, doc, "invalid: malformed JSON: " + std::string(e.what()) + "\n",
                kExitNegative);
  }

  if (is_triangulation) {
    doc["kind"] = "triangulation";
    try {
      const normalcut::Triangulation tri = normalcut::Triangulation::parse(bytes);
      // Build the derived structures so structural defects surface here too.
      const normalcut::Skeleton skel = normalcut::build_skeleton(tri);
      normalcut::boundary_surface(tri, skel);
      normalcut::matching_system(tri);
      doc["valid"] = true;
      doc["tets"] = tri.tet_count();
      doc["interior_identifications"] = tri.interior_identification_count();
      doc["boundary_faces"] = tri.boundary_face_count();
      std::ostringstream text;
      text << "ok: triangulation, " << tri.tet_count() << " tets, "
           << tri.interior_identification_count() << " interior identifications, "
           << tri.boundary_face_count() << " boundary faces\n";
      return emit(out, doc, text.str(), kExitPositive);
    } catch (const normalcut::parse_error& e) {
      doc["valid"] = false;
      doc["error"] = e.what();
      return emit(out, doc, std::string("invalid: ") + e.what() + "\n", kExitNegative);
    }
  }

  doc["kind"] = "planar_diagram";
  try {
    const normalcut::KnotDiagram d = normalcut::parse_pd(bytes);
    const normalcut::WirtingerPresentation pres = normalcut::wirtinger_presentation(d);
    doc["valid"] = true;
    doc["crossings"] = d.crossing_count();
    doc["generators"] = pres.generator_count;
    std::ostringstream text;
    text << "ok: planar diagram, " << d.crossing_count() << " crossings, "
         << pres.generator_count << " arcs\n";
    return emit(out, doc, text.str(), kExitPositive);
  } catch (const normalcut::parse_error& e) {
    doc["valid"] = false;
    doc["error"] = e.what();
    return emit(out, doc, std::string("invalid: ") + e.what() + "\n", kExitNegative);
  }
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& path, const OutputOptions& out) {
  const std::string bytes = read_file(path);
  const normalcut::Triangulation tri = normalcut::Triangulation::parse(bytes);
  const normalcut::Skeleton skel = normalcut::build_skeleton(tri);
  const normalcut::BoundarySurface bs = normalcut::boundary_surface(tri, skel);
  const normalcut::HomologyResult h1 =
      normalcut::homology_h1(tri, skel, normalcut::Coefficients::integers);
  const normalcut::HomologyResult h1m2 =
      normalcut::homology_h1(tri, skel, normalcut::Coefficients::mod2);
  const std::int64_t kneser = normalcut::kneser_bound(tri);

  ordered doc;
  doc["schema_version"] = normalcut::kSchemaVersion;
  doc["command"] = "analyze";
  doc["checksum"] = normalcut::checksum(bytes);
  doc["tets"] = tri.tet_count();
  doc["interior_identifications"] = tri.interior_identification_count();
  ordered bdry;
  bdry["faces"] = tri.boundary_face_count();
  ordered comps = ordered::array();
  for (int c = 0; c < bs.component_count; ++c) {
    ordered comp;
    comp["euler"] = bs.component_euler[c];
    comp["orientable"] = static_cast<bool>(bs.component_orientable[c]);
    comps.push_back(comp);
  }
  bdry["components"] = comps;
  doc["boundary"] = bdry;
  ordered h;
  h["free_rank"] = h1.free_rank;
  h["torsion"] = h1.torsion;
  h["mod2_dim"] = h1m2.field_dim;
  doc["h1"] = h;
  doc["kneser_bound"] = kneser;

  std::ostringstream text;
  text << "tets: " << tri.tet_count() << "\n";
  text << "boundary: " << bs.component_count << " component(s), "
       << tri.boundary_face_count() << " face(s)";
  for (int c = 0; c < bs.component_count; ++c)
    text << " [euler " << bs.component_euler[c]
         << (bs.component_orientable[c] ? ", orientable" : ", non-orientable") << "]";
  text << "\n";
  text << "H1: free rank " << h1.free_rank << ", torsion";
  if (h1.torsion.empty())
    text << " none";
  else
    for (auto t : h1.torsion) text << " Z/" << t;
  text << "; dim H1(Z/2) = " << h1m2.field_dim << "\n";
  text << "disjoint surface bound: " << kneser << "\n";
  return emit(out, doc, text.str(), kExitPositive);
}

// --- enumerate ----------------------------------------------------------------

int cmd_enumerate(const std::string& path, bool vertex_mode, bool admissible_only,
                  std::int64_t box_cap, const OutputOptions& out) {
  const std::string bytes = read_file(path);
  const normalcut::Triangulation tri = normalcut::Triangulation::parse(bytes);
  const normalcut::MatchingSystem sys = normalcut::matching_system(tri);

  ordered doc;
  doc["schema_version"] = normalcut::kSchemaVersion;
  doc["command"] = "enumerate";
  doc["checksum"] = normalcut::checksum(bytes);
  doc["mode"] = vertex_mode ? "vertex" : "fundamental";
  doc["admissible_only"] = admissible_only;

  std::vector<normalcut::NormalVector> sols;
  normalcut::EnumerationLimits limits;
  limits.box_volume_cap = box_cap;
  if (vertex_mode) {
    sols = normalcut::vertex_solutions(sys).vertices;
    if (admissible_only) {
      std::vector<normalcut::NormalVector> kept;
      for (auto& s : sols)
        if (normalcut::is_admissible(sys, s)) kept.push_back(std::move(s));
      sols = std::move(kept);
    }
  } else if (admissible_only) {
    // Enumerated one quad pattern at a time, so this works even when the
    // unrestricted box (reported by the plain fundamental mode) is over cap.
    sols = normalcut::admissible_fundamentals_direct(sys, limits);
  } else {
    const normalcut::FundamentalSet fs = normalcut::fundamental_solutions(sys, limits);
    ordered box;
    box["bounds"] = fs.box_bounds;
    box["volume"] = fs.box_volume;
    box["cap"] = box_cap;
    doc["box"] = box;
    doc["candidates_scanned"] = fs.candidates_scanned;
    sols = fs.solutions;
  }

  doc["count"] = sols.size();
  ordered arr = ordered::array();
  std::ostringstream text;
  text << (vertex_mode ? "vertex" : "fundamental") << " solutions: " << sols.size()
       << (admissible_only ? " (admissible only)" : "") << "\n";
  for (const auto& s : sols) {
    ordered entry;
    entry["coords"] = s;
    entry["euler"] = normalcut::euler_characteristic(tri, s);
    entry["weight"] = normalcut::weight(tri, s);
    entry["admissible"] = normalcut::is_admissible(sys, s);
    arr.push_back(entry);
    text << "  " << coords_text(s) << " euler=" << entry["euler"].get<std::int64_t>()
         << " weight=" << entry["weight"].get<std::int64_t>()
         << (entry["admissible"].get<bool>() ? " admissible" : "") << "\n";
  }
  doc["solutions"] = arr;
  return emit(out, doc, text.str(), kExitPositive);
}

// --- unknot (with optional dovetailed algebraic certifier) -------------------

ordered certificate_json(const normalcut::Triangulation& tri,
                         const normalcut::NormalVector& x) {
  const normalcut::SurfaceReport rep = normalcut::reconstruct(tri, x);
  ordered c;
  c["coords"] = x;
  c["euler"] = rep.euler;
  c["weight"] = rep.weight;
  c["connected"] = rep.connected();
  c["orientable"] = rep.components.size() == 1 && rep.components[0].orientable;
  c["boundary_curves"] = rep.boundary_curves.size();
  c["essential_boundary"] =
      !rep.boundary_curves.empty() && rep.boundary_curves[0].essential;
  return c;
}

int cmd_unknot(const std::string& tri_path, const std::string& pd_path,
               std::int64_t box_cap, int jobs, int n_max, const OutputOptions& out) {
  const std::string tri_bytes = read_file(tri_path);
  const normalcut::Triangulation tri = normalcut::Triangulation::parse(tri_bytes);

  normalcut::UnknotOptions opts;
  opts.limits.box_volume_cap = box_cap;
  opts.jobs = jobs;

  std::optional<std::string> pd_bytes;
  if (!pd_path.empty()) pd_bytes = read_file(pd_path);

  normalcut::UnknotVerdict verdict;
  std::optional<normalcut::WirtingerPresentation> pres;
  std::optional<std::optional<normalcut::PermutationAssignment>> rep_result;

  if (!pd_bytes) {
    verdict = normalcut::decide_unknot(tri, opts);
  } else {
    // Both deciders run to completion; which one finishes first is timing
    // noise, so it is reported on stderr only.
    pres = normalcut::wirtinger_presentation(normalcut::parse_pd(*pd_bytes));
    std::atomic<int> first{0};
    std::exception_ptr haken_err, wirt_err;
    std::thread haken([&] {
      try {
        verdict = normalcut::decide_unknot(tri, opts);
        int expected = 0;
        first.compare_exchange_strong(expected, 1);
      } catch (...) {
        haken_err = std::current_exception();
      }
    });
    std::thread wirt([&] {
      try {
        rep_result = normalcut::find_noncyclic_rep(*pres, n_max);
        int expected = 0;
        first.compare_exchange_strong(expected, 2);
      } catch (...) {
        wirt_err = std::current_exception();
      }
    });
    haken.join();
    wirt.join();
    if (haken_err) std::rethrow_exception(haken_err);
    if (wirt_err) std::rethrow_exception(wirt_err);
    std::cerr << "first to conclude: "
              << (first.load() == 1 ? "normal-surface decision" : "permutation certifier")
              << "\n";
  }

  ordered doc;
  doc["schema_version"] = normalcut::kSchemaVersion;
  doc["command"] = "unknot";
  doc["triangulation_checksum"] = normalcut::checksum(tri_bytes);
  doc["verdict"] = verdict.unknot ? "unknot" : "knotted";
  doc["certificate"] =
      verdict.certificate ? certificate_json(tri, *verdict.certificate) : ordered(nullptr);
  ordered diag;
  diag["fundamental_count"] = verdict.diagnostics.fundamental_count
                                  ? ordered(*verdict.diagnostics.fundamental_count)
                                  : ordered(nullptr);
  diag["admissible_count"] = verdict.diagnostics.admissible_count;
  diag["disk_count"] = verdict.diagnostics.disk_count;
  diag["essential_disk_count"] = verdict.diagnostics.essential_disk_count;
  diag["min_spanning_genus_found"] =
      verdict.diagnostics.min_spanning_genus_found
          ? ordered(*verdict.diagnostics.min_spanning_genus_found)
          : ordered(nullptr);
  doc["diagnostics"] = diag;

  std::ostringstream text;
  text << "verdict: " << (verdict.unknot ? "Unknot" : "Knotted") << "\n";
  if (verdict.certificate)
    text << "spanning disk: " << coords_text(*verdict.certificate) << "\n";
  text << "fundamental: "
       << (verdict.diagnostics.fundamental_count
               ? std::to_string(*verdict.diagnostics.fundamental_count)
               : std::string("n/a (box over cap)"))
       << ", admissible: " << verdict.diagnostics.admissible_count
       << ", disks: " << verdict.diagnostics.disk_count
       << ", essential disks: " << verdict.diagnostics.essential_disk_count << "\n";

  bool consistent = true;
  if (pd_bytes) {
    ordered w;
    w["pd_checksum"] = normalcut::checksum(*pd_bytes);
    w["generators"] = pres->generator_count;
    w["relations"] = pres->relations.size();
    w["n_max"] = n_max;
    const bool found = rep_result->has_value();
    w["rep"] = found ? rep_json(**rep_result) : ordered(nullptr);
    // A non-cyclic representation proves knottedness; the normal-surface
    // verdict is authoritative, and agreement is asserted here.
    consistent = !(verdict.unknot && found);
    w["consistent"] = consistent;
    doc["algebraic_certifier"] = w;
    if (found)
      text << "algebraic certificate: noncyclic image in S_" << (*rep_result)->n
           << " of order " << (*rep_result)->image_order << "\n";
    else
      text << "algebraic certificate: none up to n_max " << n_max << "\n";
    if (!consistent) text << "WARNING: certifier contradicts normal-surface verdict\n";
  }

  if (!consistent) {
    emit(out, doc, text.str(), kExitError);
    return kExitError;
  }
  return emit(out, doc, text.str(), verdict.unknot ? kExitPositive : kExitNegative);
}

// --- certify-knotted ----------------------------------------------------------

int cmd_certify(const std::string& pd_path, int n_max, const OutputOptions& out) {
  const std::string bytes = read_file(pd_path);
  const normalcut::KnotDiagram d = normalcut::parse_pd(bytes);
  const normalcut::WirtingerPresentation pres = normalcut::wirtinger_presentation(d);
  const auto rep = normalcut::find_noncyclic_rep(pres, n_max);

  ordered doc;
  doc["schema_version"] = normalcut::kSchemaVersion;
  doc["command"] = "certify-knotted";
  doc["pd_checksum"] = normalcut::checksum(bytes);
  doc["crossings"] = d.crossing_count();
  doc["generators"] = pres.generator_count;
  doc["relations"] = pres.relations.size();
  doc["n_max"] = n_max;
  doc["certified"] = rep.has_value();
  doc["rep"] = rep ? rep_json(*rep) : ordered(nullptr);

  std::ostringstream text;
  if (rep) {
    text << "certified knotted: noncyclic image in S_" << rep->n << " of order "
         << rep->image_order << "\n";
    for (std::size_t g = 0; g < rep->images.size(); ++g)
      text << "  arc " << pres.arc_labels[g] << " -> "
           << normalcut::cycle_notation(rep->images[g]) << "\n";
  } else {
    text << "inconclusive: no noncyclic image up to n_max " << n_max << "\n";
  }
  return emit(out, doc, text.str(), rep ? kExitPositive : kExitNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal-surface tools for triangulated 3-manifolds"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string tri_path, pd_path, input_path;
  std::int64_t box_cap = 10'000'000;
  int n_max = 5;
  int jobs = default_jobs();
  bool vertex_mode = false, fundamental_mode = false, admissible_only = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_flag("--json", out.json, "emit JSON instead of text");
    cmd->add_option("--out", out.out_path, "write the report to a file (atomically)");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate an input file");
  validate->add_option("file", input_path, "triangulation or planar-diagram JSON file")
      ->required();
  add_output(validate);

  CLI::App* analyze =
      app.add_subcommand("analyze", "boundary, homology, and the disjoint-surface bound");
  analyze->add_option("file", input_path, "triangulation JSON file")->required();
  add_output(analyze);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate vertex or fundamental solutions");
  enumerate->add_option("file", input_path, "triangulation JSON file")->required();
  enumerate->add_flag("--vertex", vertex_mode, "extreme rays instead of fundamentals");
  enumerate->add_flag("--fundamental", fundamental_mode,
                      "fundamental solutions (the default)");
  enumerate->add_flag("--admissible", admissible_only, "keep admissible solutions only");
  enumerate->add_option("--box-cap", box_cap, "lattice-point cap for the search box");
  add_output(enumerate);

  CLI::App* unknot = app.add_subcommand("unknot", "decide unknottedness");
  unknot->add_option("file", tri_path, "triangulation JSON file")->required();
  unknot->add_option("--pd", pd_path, "planar diagram to run the algebraic certifier on");
  unknot->add_option("--box-cap", box_cap, "lattice-point cap for the search box");
  unknot->add_option("--jobs", jobs, "worker threads (default: NORMALCUT_JOBS or 1)");
  unknot->add_option("--n-max", n_max, "largest symmetric group to search");
  add_output(unknot);

  CLI::App* certify =
      app.add_subcommand("certify-knotted", "search for a noncyclic permutation image");
  certify->add_option("file", pd_path, "planar diagram JSON file")->required();
  certify->add_option("--n-max", n_max, "largest symmetric group to search");
  add_output(certify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input_path, out);
    if (app.got_subcommand(analyze)) return cmd_analyze(input_path, out);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(input_path, vertex_mode && !fundamental_mode, admissible_only,
                           box_cap, out);
    if (app.got_subcommand(unknot))
      return cmd_unknot(tri_path, pd_path, box_cap, jobs, n_max, out);
    if (app.got_subcommand(certify)) return cmd_certify(pd_path, n_max, out);
  } catch (const normalcut::limit_error& e) {
    ordered doc;
    doc["schema_version"] = normalcut::kSchemaVersion;
    doc["error"] = e.what();
    doc["kind"] = "limit";
    doc["required"] = e.required();
    doc["cap"] = e.cap();
    return emit_error(out, doc,
                      "limit exceeded: " + std::string(e.what()) + " (required " +
                          e.required() + ", cap " + e.cap() + ")\n",
                      kExitError);
  } catch (const normalcut::parse_error& e) {
    ordered doc;
    doc["schema_version"] = normalcut::kSchemaVersion;
    doc["error"] = e.what();
    doc["kind"] = "parse";
    return emit_error(out, doc, "invalid input: " + std::string(e.what()) + "\n",
                      kExitNegative);
  } catch (const std::invalid_argument& e) {
    ordered doc;
    doc["schema_version"] = normalcut::kSchemaVersion;
    doc["error"] = e.what();
    doc["kind"] = "precondition";
    return emit_error(out, doc, "precondition failed: " + std::string(e.what()) + "\n",
                      kExitNegative);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
