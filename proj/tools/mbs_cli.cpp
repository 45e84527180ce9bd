// mbs: command-line front end for the multibranched surface library.
//
// Exit codes: 0 ok, 1 invalid surface (validate), 2 s3 fail, 3 s3
// inconclusive, 64 usage, 65 malformed input, 70 internal (overflow).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mbs/mbs.hpp"

namespace {

constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_software = 70;

constexpr std::uint64_t default_guard = 1'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input errors raised while handling `path` get the path as prefix.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const mbs::InputError& e) {
    throw FileError(path + ": " + e.what());
  }
}

mbs::MultibranchedSurface load_surface(const std::string& path) {
  return with_file(path, [&] { return mbs::load_surface(path); });
}

mbs::MultibranchedSurface load_valid_surface(const std::string& path) {
  return with_file(path, [&] {
    auto x = mbs::load_surface(path);
    mbs::require_valid(x);
    return x;
  });
}

mbs::Multigraph load_graph(const std::string& path) {
  return with_file(path, [&] { return mbs::load_graph(path); });
}

template <class F>
auto parse_flag(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const mbs::InputError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

void print_json(const mbs::json& j) { std::cout << j.dump(2) << '\n'; }

struct SearchFlags {
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
  bool force = false;
  unsigned threads = 0;

  void add_to(CLI::App* app, bool with_limit) {
    auto* s = app->add_option("--sample", sample, "Sample this many random permutation systems")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed for --sample")->needs(s);
    if (with_limit) app->add_option("--limit", limit, "Examine at most N systems (result not exact)")->excludes(s);
    app->add_flag("--force", force, "Allow searches beyond the default limit of 10^6 systems");
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }

  mbs::SearchOptions options() const {
    mbs::SearchOptions o;
    if (sample) {
      o = mbs::SearchOptions::sampled(*sample, seed);
    } else {
      o.limit = limit;
      o.guard = force || limit ? 0 : default_guard;
    }
    o.threads = threads;
    return o;
  }
};

std::string side_name(const mbs::SectorSide& s) { return s.sector + (s.side > 0 ? "+" : "-"); }

void print_range(const mbs::GenusRange& r) {
  std::cout << "systems examined: " << r.examined << " of " << r.total_systems << (r.exact ? " (exhaustive)" : " (not exhaustive)")
            << '\n'
            << "min boundary genus: " << r.min_genus << "  witness " << mbs::to_string(r.witness_min) << '\n'
            << "max boundary genus: " << r.max_genus << "  witness " << mbs::to_string(r.witness_max) << '\n';
}

std::string verdict_text(mbs::S3Verdict v) {
  switch (v) {
    case mbs::S3Verdict::pass: return "pass: no obstruction found";
    case mbs::S3Verdict::fail: return "fail: max boundary genus is below rank H1, so X does not embed in S^3";
    case mbs::S3Verdict::inconclusive: return "inconclusive: sampled max boundary genus is below rank H1";
  }
  return "";
}

int exit_code(mbs::S3Verdict v) {
  switch (v) {
    case mbs::S3Verdict::pass: return 0;
    case mbs::S3Verdict::fail: return 2;
    case mbs::S3Verdict::inconclusive: return 3;
  }
  return exit_software;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multibranched surfaces: homology, neighborhood boundaries, genus bounds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  int status = 0;
  std::string file, file_b;
  bool as_json = false;

  // validate
  auto* validate = app.add_subcommand("validate", "Check that a surface file is a regular multibranched surface");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    auto x = load_surface(file);
    auto report = mbs::validate(x);
    if (report.valid()) {
      std::cout << "valid\n";
      return;
    }
    std::cout << "invalid\n";
    for (const auto& v : report.violations) std::cout << "  " << v.message << '\n';
    status = 1;
  });

  // homology
  bool check = false;
  auto* homology = app.add_subcommand("homology", "First homology group H1(X)");
  homology->add_option("file", file)->required();
  homology->add_flag("--json", as_json);
  homology->add_flag("--check", check, "Compare against the cellular chain complex");
  homology->callback([&] {
    auto x = load_valid_surface(file);
    auto g = mbs::h1(x);
    std::optional<bool> agrees;
    if (check) agrees = mbs::h1_cw_oracle(x) == g;
    if (as_json) {
      mbs::json j = {{"h1", g}};
      if (agrees) j["oracle_agrees"] = *agrees;
      print_json(j);
    } else {
      std::cout << mbs::to_string(g) << '\n';
      if (agrees) std::cout << "oracle: " << (*agrees ? "agrees" : "DISAGREES") << '\n';
    }
    if (agrees && !*agrees) status = exit_software;
  });

  // boundary
  std::string perm, slopes;
  bool enumerate = false;
  SearchFlags boundary_flags;
  auto* boundary = app.add_subcommand("boundary", "Boundary surface of a neighborhood, or its genus range");
  boundary->add_option("file", file)->required();
  auto* perm_opt = boundary->add_option("--perm", perm, "Circular permutation system literal");
  auto* enum_opt = boundary->add_flag("--enumerate", enumerate, "Search all permutation systems");
  boundary_flags.add_to(boundary, true);
  boundary->add_option("--slopes", slopes, "Slope system literal, e.g. l:2/5 (validated and echoed)");
  boundary->add_flag("--json", as_json);
  perm_opt->excludes(enum_opt);
  boundary->callback([&] {
    auto x = load_valid_surface(file);
    std::optional<mbs::SlopeSystem> slope_system;
    if (!slopes.empty()) {
      slope_system = parse_flag("--slopes", [&] { return mbs::parse_slope_system(slopes); });
      auto report = mbs::validate_slopes(x, *slope_system);
      if (!report.valid()) {
        std::string msg = "--slopes:";
        for (const auto& v : report.violations) msg += " " + v.message + ";";
        throw UsageError(msg);
      }
    }
    const bool search = enumerate || boundary_flags.sample;
    if (perm.empty() == !search) throw UsageError("boundary: give exactly one of --perm, --enumerate, --sample");
    if (!perm.empty() && (boundary_flags.limit || boundary_flags.force))
      throw UsageError("boundary: --limit and --force only apply to searches");

    mbs::json j;
    if (!perm.empty()) {
      auto p = parse_flag("--perm", [&] { return mbs::parse_permutation_system(perm); });
      auto b = parse_flag("--perm", [&] { return mbs::trace_boundary(x, p); });
      if (as_json) {
        j = b;
        j["permutation"] = mbs::to_string(p);
      } else {
        std::cout << "permutation: " << mbs::to_string(p) << '\n';
        for (std::size_t i = 0; i < b.components.size(); ++i) {
          const auto& c = b.components[i];
          std::cout << "component " << i + 1 << ": genus " << c.genus << ", euler characteristic " << c.euler_characteristic
                    << ", sides";
          for (const auto& s : c.sides) std::cout << ' ' << side_name(s);
          std::cout << '\n';
        }
        std::cout << "total components: " << b.total_components << '\n' << "total genus: " << b.total_genus << '\n';
      }
    } else {
      auto r = mbs::genus_range(x, boundary_flags.options());
      if (as_json)
        j = r;
      else
        print_range(r);
    }
    if (slope_system) {
      if (as_json) {
        j["slopes"] = mbs::to_string(*slope_system);
        j["slope_assumption"] = "boundary genus computed independently of slopes";
      } else {
        std::cout << "slopes: " << mbs::to_string(*slope_system) << " (boundary genus computed independently of slopes)\n";
      }
    }
    if (as_json) print_json(j);
  });

  // bounds
  SearchFlags bounds_flags;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on min g(X) and max g(X)");
  bounds->add_option("file", file)->required();
  bounds_flags.add_to(bounds, false);
  bounds->add_flag("--json", as_json);
  bounds->callback([&] {
    auto x = load_valid_surface(file);
    auto r = mbs::genus_bounds(x, bounds_flags.options());
    if (as_json) {
      print_json(r);
      return;
    }
    const char* exact = r.max_boundary_genus_exact ? "exact" : "sampled";
    std::cout << "rank H1: " << r.rank_h1 << '\n'
              << "boundary genus: min " << r.min_boundary_genus << ", max " << r.max_boundary_genus << " (" << exact << ", "
              << r.systems_examined << " of " << r.total_systems << " systems)\n"
              << "lower bound for min g(X): " << r.lower_bound_min_genus << " (raw " << r.lower_bound_min_genus_raw << ")\n"
              << "lower bound for max g(X): " << r.lower_bound_max_genus << " (raw " << r.lower_bound_max_genus_raw << ")\n"
              << "upper bound for max g(X): " << r.upper_bound_max_genus << '\n'
              << "dual-graph upper bound: not computed\n"
              << "S^3 obstruction: " << verdict_text(r.s3_obstruction) << '\n';
  });

  // s3
  SearchFlags s3_flags;
  auto* s3 = app.add_subcommand("s3", "Necessary condition for embedding in S^3 (exit 0 pass, 2 fail, 3 inconclusive)");
  s3->add_option("file", file)->required();
  s3_flags.add_to(s3, false);
  s3->add_flag("--json", as_json);
  s3->callback([&] {
    auto x = load_valid_surface(file);
    auto range = mbs::genus_range(x, s3_flags.options());
    auto rank = mbs::rank_h1(x);
    auto v = mbs::s3_verdict(rank, range.max_genus, range.exact);
    if (as_json) {
      print_json({{"s3_obstruction", mbs::to_string(v)},
                  {"message", verdict_text(v)},
                  {"rank_h1", rank},
                  {"max_boundary_genus", range.max_genus},
                  {"exact", range.exact}});
    } else {
      std::cout << verdict_text(v) << '\n'
                << "rank H1: " << rank << ", max boundary genus: " << range.max_genus << (range.exact ? " (exact)" : " (sampled)")
                << '\n';
    }
    status = exit_code(v);
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Graph embeddings and the product with S^1");
  graph->require_subcommand(1);

  bool want_min = false, want_max = false, want_both = false, graph_force = false;
  std::string method = "exhaustive";
  unsigned graph_threads = 0;
  auto* genus = graph->add_subcommand("genus", "Minimum and maximum embedding genus");
  genus->add_option("file", file)->required();
  auto* min_flag = genus->add_flag("--min", want_min);
  auto* max_flag = genus->add_flag("--max", want_max);
  genus->add_flag("--both", want_both)->excludes(min_flag)->excludes(max_flag);
  genus->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "xuong"}));
  genus->add_flag("--force", graph_force, "Allow searches beyond 10^7 rotation systems or spanning trees");
  genus->add_option("--threads", graph_threads);
  genus->add_flag("--json", as_json);
  genus->callback([&] {
    if (!want_min && !want_max && !want_both) throw UsageError("graph genus: give --min, --max or --both");
    if (want_both) want_min = want_max = true;
    auto g = load_graph(file);
    mbs::GraphSearchOptions opts;
    opts.threads = graph_threads;
    if (graph_force) opts.guard = 0;
    mbs::json j = mbs::json::object();
    if (method == "xuong") {
      if (want_min) throw UsageError("graph genus: the xuong method only gives the maximum genus");
      auto r = with_file(file, [&] { return mbs::xuong_max_genus(g, opts); });
      if (as_json) {
        j = {{"max_genus", r.max_genus},
             {"betti_number", r.betti},
             {"deficiency", r.deficiency},
             {"spanning_tree", r.spanning_tree},
             {"spanning_trees_examined", r.trees_examined}};
      } else {
        std::cout << "max genus: " << r.max_genus << " (betti " << r.betti << ", deficiency " << r.deficiency << ")\n"
                  << "spanning tree:";
        for (const auto& e : r.spanning_tree) std::cout << ' ' << e;
        std::cout << '\n';
      }
    } else {
      auto r = with_file(file, [&] { return mbs::embedding_genus_range(g, opts); });
      if (want_min) {
        j["min_genus"] = r.min_genus;
        j["witness_min"] = mbs::to_string(r.witness_min);
        if (!as_json) std::cout << "min genus: " << r.min_genus << "  rotation " << mbs::to_string(r.witness_min) << '\n';
      }
      if (want_max) {
        j["max_genus"] = r.max_genus;
        j["witness_max"] = mbs::to_string(r.witness_max);
        if (!as_json) std::cout << "max genus: " << r.max_genus << "  rotation " << mbs::to_string(r.witness_max) << '\n';
      }
      j["rotation_systems"] = r.total;
    }
    if (as_json) print_json(j);
  });

  std::string rotation;
  auto* faces = graph->add_subcommand("faces", "Faces and genus of one rotation system");
  faces->add_option("file", file)->required();
  faces->add_option("--rotation", rotation, "Rotation literal, e.g. v:a+,b+,a-,b-")->required();
  faces->add_flag("--json", as_json);
  faces->callback([&] {
    auto g = load_graph(file);
    auto rho = parse_flag("--rotation", [&] { return mbs::parse_rotation_system(rotation); });
    auto r = parse_flag("--rotation", [&] { return with_file(file, [&] { return mbs::faces(g, rho); }); });
    if (as_json) {
      print_json(r);
      return;
    }
    std::cout << "faces: " << r.face_count << "\ngenus: " << r.genus << '\n';
    for (const auto& walk : r.face_walks) {
      std::cout << "  (";
      for (std::size_t i = 0; i < walk.size(); ++i) std::cout << (i ? " " : "") << walk[i];
      std::cout << ")\n";
    }
  });

  std::string emit;
  bool verify = false, product_force = false;
  unsigned product_threads = 0;
  auto* product = graph->add_subcommand("product", "The multibranched surface G x S^1");
  product->add_option("file", file)->required();
  auto* emit_opt = product->add_option("--emit", emit, "Write G x S^1 as a surface file");
  product->add_flag("--verify", verify, "Check the genus correspondence over every rotation system")->excludes(emit_opt);
  product->add_flag("--force", product_force, "Allow more than 10^7 rotation systems");
  product->add_option("--threads", product_threads);
  product->add_flag("--json", as_json);
  product->callback([&] {
    if (emit.empty() == !verify) throw UsageError("graph product: give exactly one of --emit, --verify");
    auto g = load_graph(file);
    if (!emit.empty()) {
      auto x = with_file(file, [&] { return mbs::times_circle(g); });
      write_file(emit, mbs::surface_to_json(x).dump(2) + "\n");
      return;
    }
    mbs::GraphSearchOptions opts;
    opts.threads = product_threads;
    if (product_force) opts.guard = 0;
    auto r = with_file(file, [&] { return mbs::verify_product_theorem(g, opts); });
    if (as_json) {
      print_json(r);
    } else {
      std::cout << (r.passed ? "pass" : "FAIL") << '\n'
                << "rotation systems: " << r.rotation_systems << '\n'
                << "rank H1(G x S^1): " << r.rank_h1 << '\n'
                << "genus of G: min " << r.min_genus << ", max " << r.max_genus << '\n'
                << "boundary genus of G x S^1: min " << r.min_boundary_genus << ", max " << r.max_boundary_genus << '\n'
                << "rank - max boundary genus = " << r.rank_h1 - r.max_boundary_genus << " = 2 * " << r.min_genus << '\n'
                << "rank - min boundary genus = " << r.rank_h1 - r.min_boundary_genus << " = 2 * " << r.max_genus << '\n';
      if (r.counterexample) std::cout << "counterexample: " << *r.counterexample << '\n';
    }
    if (!r.passed) status = 1;
  });

  // disksum
  std::string sector_a, sector_b, out;
  auto* disksum = app.add_subcommand("disksum", "Disk sum of two surfaces along a sector of each");
  disksum->add_option("file_a", file)->required();
  disksum->add_option("file_b", file_b)->required();
  disksum->add_option("--sector-a", sector_a)->required();
  disksum->add_option("--sector-b", sector_b)->required();
  disksum->add_option("-o,--output", out)->required();
  disksum->callback([&] {
    auto a = load_valid_surface(file);
    auto b = load_valid_surface(file_b);
    auto x = parse_flag("--sector-a/--sector-b", [&] { return mbs::disk_sum(a, sector_a, b, sector_b); });
    write_file(out, mbs::surface_to_json(x).dump(2) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "mbs: " << e.what() << '\n';
    return exit_usage;
  } catch (const mbs::LimitError& e) {
    std::cerr << "mbs: " << e.what() << " (use --force)\n";
    return exit_usage;
  } catch (const FileError& e) {
    std::cerr << "mbs: " << e.what() << '\n';
    return exit_data;
  } catch (const mbs::InputError& e) {
    std::cerr << "mbs: " << e.what() << '\n';
    return exit_data;
  } catch (const mbs::OverflowError& e) {
    std::cerr << "mbs: arithmetic overflow: " << e.what() << '\n';
    return exit_software;
  } catch (const std::exception& e) {
    std::cerr << "mbs: internal error: " << e.what() << '\n';
    return exit_software;
  }
  return status;
}
