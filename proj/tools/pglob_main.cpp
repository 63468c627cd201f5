// pglob: manifest-driven front end for confluence checks, globalized
// distances, truncations, finite topologies, gluing and homogenization.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pglob/commands.hpp"

namespace {

struct Global {
  bool pretty = false;
  bool timing = false;
  std::optional<std::size_t> force_max_steps;
};

int emit(const pglob::Report& r, const Global& g, double millis) {
  if (g.pretty) {
    std::cout << pglob::render_pretty(r);
    if (g.timing) std::cout << "  timing_ms: " << millis << "\n";
  } else {
    auto j = r.to_json();
    if (g.timing) j["timing_ms"] = millis;
    std::cout << j.dump(2) << "\n";
  }
  return r.exit_code;
}

template <class F>
int run(const std::string& command, const Global& g, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = pglob::guarded(command, std::forward<F>(f));
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return emit(report, g, elapsed.count());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Globalizations of confluent partial monoid actions on finite spaces"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--pretty", g.pretty, "Plain-text report instead of JSON");
  app.add_flag("--timing", g.timing, "Add wall-clock time to the report");
  app.add_option("--force-max-steps", g.force_max_steps,
                 "Accept presentations without a shortlex certificate; stop after N rewrite steps");

  std::string manifest;
  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("manifest", manifest, "JSON manifest")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Validate presentation, metric, topology and action");
  add_manifest(validate);

  auto* confluence = app.add_subcommand("confluence", "Check word and action confluence");
  add_manifest(confluence);

  auto* dist = app.add_subcommand("distance", "Globalized distance between two elements");
  add_manifest(dist);
  std::string el1, el2;
  pglob::DistanceOptions dopts;
  dist->add_option("from", el1, "Element: generator names then a point, e.g. \"g q\"")->required();
  dist->add_option("to", el2, "Element: generator names then a point")->required();
  dist->add_flag("--oracle", dopts.oracle, "Cross-check against the brute-force path search");
  dist->add_option("--oracle-segments", dopts.oracle_segments, "Segment bound for --oracle");
  dist->add_option("--oracle-depth", dopts.oracle_depth, "Truncation depth for --oracle");
  dist->add_flag("--group-formula", dopts.group_formula, "Cross-check against the group formula");
  dist->add_flag("--geodesic", dopts.geodesic, "Report a geodesic witness");
  dist->add_option("--cap-infinite-at", dopts.cap_infinite, "Report +inf distances as this value");

  auto* trunc = app.add_subcommand("truncation", "Enumerate normal elements of length <= n");
  add_manifest(trunc);
  std::size_t bound = 0;
  bool with_distances = false;
  std::optional<double> cap;
  trunc->add_option("n", bound, "Length bound")->required();
  trunc->add_flag("--distances", with_distances, "Include the distance matrix");
  trunc->add_option("--cap-infinite-at", cap, "Report +inf distances as this value");

  auto* topo = app.add_subcommand("topology", "Final topology of a finite monoid action");
  add_manifest(topo);
  bool embedding = false, t1 = false;
  topo->add_flag("--embedding", embedding, "Check that X embeds topologically");
  topo->add_flag("--t1", t1, "Compare T1 of Y with the preimage criterion");

  auto* gl = app.add_subcommand("glue", "Glue two metric spaces along an isometric identification");
  add_manifest(gl);

  auto* homog = app.add_subcommand("homogenize", "One homogenization step with extension checks");
  add_manifest(homog);
  std::size_t hbound = 2;
  std::string gamma = "singletons";
  homog->add_option("n", hbound, "Truncation bound")->required();
  homog->add_option("--gamma", gamma, "\"singletons\" or a JSON file with {\"gamma\": [maps]}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pglob::kExitInputError;
  }

  using pglob::Report;
  auto load = [&] { return pglob::load_manifest(manifest, g.force_max_steps); };
  if (validate->parsed()) return run("validate", g, [&] { return pglob::cmd_validate(load()); });
  if (confluence->parsed()) {
    return run("confluence", g, [&] { return pglob::cmd_confluence(load()); });
  }
  if (dist->parsed()) {
    return run("distance", g, [&] { return pglob::cmd_distance(load(), el1, el2, dopts); });
  }
  if (trunc->parsed()) {
    return run("truncation", g,
               [&] { return pglob::cmd_truncation(load(), bound, with_distances, cap); });
  }
  if (topo->parsed()) {
    return run("topology", g, [&] { return pglob::cmd_topology(load(), embedding, t1); });
  }
  if (gl->parsed()) {
    return run("glue", g, [&] { return pglob::cmd_glue(pglob::read_json(manifest)); });
  }
  if (homog->parsed()) {
    return run("homogenize", g, [&] { return pglob::cmd_homogenize(load(), hbound, gamma); });
  }
  return pglob::kExitInputError;
}
