// Command-line front end: every analysis as a subcommand with JSON output
// on stdout and a human-readable summary on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "conjax/axis.hpp"
#include "conjax/decompose.hpp"
#include "conjax/h2.hpp"
#include "conjax/json_io.hpp"
#include "conjax/search.hpp"
#include "conjax/tripod.hpp"

namespace {

using conjax::ojson;

void print_json(const ojson& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
  }
}

ojson with_version(const ojson& body) {
  ojson j{{"v", 1}};
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

conjax::Mat2 parse_mat(const std::string& csv) {
  std::istringstream ss(csv);
  double v[4];
  char comma;
  for (int i = 0; i < 4; ++i) {
    if (i > 0 && !(ss >> comma)) throw std::runtime_error("matrix needs 4 comma-separated entries");
    if (!(ss >> v[i])) throw std::runtime_error("matrix needs 4 comma-separated entries");
  }
  return conjax::Mat2{v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word/axis toolkit for the rank-2 free group"};
  app.require_subcommand(1);

  std::string word, word_a, word_b, g1, g2, out_path, gen_x_csv, gen_y_csv;
  int u_len = 0, max_len = 6, depth = 3, jobs = 0;
  bool no_symmetry = false;
  double tol = 1e-9;

  auto* cmd_reduce = app.add_subcommand("reduce", "freely reduce a word");
  cmd_reduce->add_option("word", word)->required();

  auto* cmd_axis = app.add_subcommand("axis", "axis of a group element");
  cmd_axis->add_option("word", word)->required();

  auto* cmd_intersect = app.add_subcommand("intersect", "exact intersection of two axes");
  cmd_intersect->add_option("--a", word_a)->required();
  cmd_intersect->add_option("--b", word_b)->required();

  auto* cmd_tripod = app.add_subcommand("tripod", "overlap configuration of two conjugate axes");
  cmd_tripod->add_option("--word", word)->required();
  cmd_tripod->add_option("--g1", g1)->required();
  cmd_tripod->add_option("--g2", g2)->required();

  auto* cmd_examples = app.add_subcommand("examples", "the four bundled overlap examples");

  auto* cmd_decompose = app.add_subcommand("decompose", "covering-overlap decomposition");
  cmd_decompose->add_option("--word", word)->required();
  cmd_decompose->add_option("--u-len", u_len)->required();

  auto* cmd_search = app.add_subcommand("search", "exhaustive overlap configuration search");
  cmd_search->add_option("--max-len", max_len)->required();
  cmd_search->add_flag("--no-symmetry", no_symmetry);
  cmd_search->add_option("--jobs", jobs);
  cmd_search->add_option("--out", out_path)->required();

  auto* cmd_h2 = app.add_subcommand("h2-verify", "triangle edge bound check for geodesic lifts");
  cmd_h2->add_option("--word", word)->required();
  cmd_h2->add_option("--depth", depth);
  cmd_h2->add_option("--tol", tol);
  cmd_h2->add_option("--gen-x", gen_x_csv);
  cmd_h2->add_option("--gen-y", gen_y_csv);
  cmd_h2->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_reduce->parsed()) {
      conjax::ReducedWord r = conjax::free_reduce(conjax::parse_word(word));
      ojson j{{"v", 1}, {"reduced", conjax::to_string(r)}};
      print_json(j, "");
      std::cerr << "reduced to " << r.size() << " letters\n";
      return 0;
    }

    if (cmd_axis->parsed()) {
      conjax::Axis a = conjax::axis_of(conjax::free_reduce(conjax::parse_word(word)));
      print_json(with_version(conjax::json_of(a)), "");
      std::cerr << "translation length " << a.core.size() << "\n";
      return 0;
    }

    if (cmd_intersect->parsed()) {
      conjax::Axis a = conjax::axis_of(conjax::free_reduce(conjax::parse_word(word_a)));
      conjax::Axis b = conjax::axis_of(conjax::free_reduce(conjax::parse_word(word_b)));
      conjax::IntersectionResult res = conjax::axis_intersection(a, b);
      print_json(with_version(conjax::json_of(res)), "");
      std::cerr << "intersection kind "
                << with_version(conjax::json_of(res))["kind"].get<std::string>() << "\n";
      return 0;
    }

    if (cmd_tripod->parsed()) {
      conjax::CyclicDecomposition d =
          conjax::cyclic_reduce(conjax::free_reduce(conjax::parse_word(word)));
      conjax::TripodReport rep = conjax::tripod_config(
          d.core, conjax::free_reduce(conjax::parse_word(g1)),
          conjax::free_reduce(conjax::parse_word(g2)));
      print_json(with_version(conjax::json_of(rep)), "");
      std::cerr << "overlaps " << rep.U.size() << "+" << rep.V.size() << " edges, covers="
                << (rep.covers ? "yes" : "no") << "\n";
      return 0;
    }

    if (cmd_examples->parsed()) {
      ojson j{{"v", 1}, {"examples", ojson::array()}};
      for (const conjax::TripodReport& r : conjax::example_suite())
        j["examples"].push_back(conjax::json_of(r));
      print_json(j, "");
      std::cerr << "4 configurations\n";
      return 0;
    }

    if (cmd_decompose->parsed()) {
      conjax::CyclicDecomposition d =
          conjax::cyclic_reduce(conjax::free_reduce(conjax::parse_word(word)));
      conjax::CoverDecomposeOutcome o = conjax::cover_decompose(d.core, u_len);
      print_json(with_version(conjax::json_of(o)), "");
      std::cerr << conjax::cover_status_name(o.status) << "\n";
      return o.status == conjax::CoverDecomposeStatus::Ok ? 0 : 1;
    }

    if (cmd_search->parsed()) {
      conjax::SearchOptions opt;
      opt.max_len = max_len;
      opt.symmetry = !no_symmetry;
      opt.jobs = jobs;
      std::ofstream records(out_path);
      if (!records) throw std::runtime_error("cannot open output file: " + out_path);
      conjax::SearchSummary sum =
          conjax::run_search(opt, [&](const std::string& line) { records << line << "\n"; });
      std::cout << conjax::json_of(sum, opt).dump() << "\n";
      std::cerr << "scanned " << sum.words << " words, " << sum.configs << " configs, "
                << sum.decompositions << " decompositions, " << sum.failures << " failures, "
                << sum.witnesses << " witnesses, " << sum.counterexamples
                << " counterexamples\n";
      if (sum.failures > 0) return 1;
      return sum.counterexamples > 0 ? 2 : 0;
    }

    if (cmd_h2->parsed()) {
      conjax::PuncturedTorusRep rep;
      if (!gen_x_csv.empty()) rep.gen_x = parse_mat(gen_x_csv);
      if (!gen_y_csv.empty()) rep.gen_y = parse_mat(gen_y_csv);
      if (!rep.self_check(1e-6))
        throw std::runtime_error("representation fails the punctured-torus self-check");
      conjax::CyclicDecomposition d =
          conjax::cyclic_reduce(conjax::free_reduce(conjax::parse_word(word)));
      conjax::TriangleScan scan = conjax::triangle_scan(rep, d.core.word(), depth, tol);
      ojson j = with_version(conjax::json_of(scan));
      j["word"] = conjax::to_string(d.core);
      j["depth"] = depth;
      j["tol"] = tol;
      print_json(j, out_path);
      std::cerr << scan.lifts.size() << " lifts, " << scan.triangles.size() << " triangles, "
                << scan.violations.size() << " violations\n";
      return scan.violations.empty() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
