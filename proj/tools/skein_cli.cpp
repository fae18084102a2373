// Command-line front end: generation, bracket evaluation, HOMFLY and its
// substitutions, recurrence-vs-diagram verification, link-graph analysis,
// and method benchmarking.

#include <CLI11.hpp>

#include "skein/diagram.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "skein/linkgraph.hpp"
#include "skein/recurrences.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

skein::FamilySpec spec_from_flags(const std::string& family, int n, const std::string& sizes) {
  skein::FamilySpec spec;
  spec.family = skein::family_from_name(family);
  if (!sizes.empty())
    spec.sizes = parse_sizes(sizes);
  else if (n > 0)
    spec.sizes = {n};
  return spec;
}

int threads_flag = 0;

skein::OrientedDiagram load_oriented(const std::string& text) {
  auto od = skein::oriented_from_json(text);
  if (!od) throw std::invalid_argument("input needs an orientation block for HOMFLY");
  return *od;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein: link-invariant computations on planar diagrams"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("SKEIN_THREADS")) threads_flag = std::atoi(env);

  // --- gen -------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a link family diagram");
  std::string gen_family, gen_sizes, gen_out, gen_format = "json";
  int gen_n = 0;
  bool gen_oriented = true;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--n", gen_n, "component count");
  gen->add_option("--sizes", gen_sizes, "comma-separated composition (level-two families)");
  gen->add_option("--format", gen_format, "text|json");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");
  gen->add_flag("--no-orientation{false},--oriented{true}", gen_oriented,
                "include orientation data (json only)");

  // --- bracket ----------------------------------------------------------
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  std::string br_input, br_method = "auto", br_plan, br_format = "text", br_out;
  int br_cap = 24;
  bracket->add_option("input", br_input, "PD file (json or text), '-' for stdin");
  bracket->add_option("--method", br_method, "naive|gathered|auto");
  bracket->add_option("--plan", br_plan, "region plan file (json list of crossing index lists)");
  bracket->add_option("--cap", br_cap, "crossing cap for the naive method");
  bracket->add_option("--format", br_format, "text|json");
  bracket->add_option("--threads", threads_flag, "worker cap (default SKEIN_THREADS)");
  bracket->add_option("-o,--output", br_out, "output path");

  // --- homfly / jones / alexander ----------------------------------------
  auto* hom = app.add_subcommand("homfly", "HOMFLY-PT polynomial of an oriented diagram");
  auto* jon = app.add_subcommand("jones", "Jones polynomial via HOMFLY substitution");
  auto* alx = app.add_subcommand("alexander", "Alexander-Conway polynomial via HOMFLY");
  std::string hom_input, hom_format = "text", hom_out;
  int hom_cap = 40;
  bool subst_check = false;
  for (auto* cmd : {hom, jon, alx}) {
    cmd->add_option("input", hom_input, "oriented PD json, '-' for stdin");
    cmd->add_option("--cap", hom_cap, "crossing cap");
    cmd->add_option("--format", hom_format, "text|json");
    cmd->add_option("-o,--output", hom_out, "output path");
    cmd->add_flag("--substitution-check", subst_check,
                  "re-verify the imaginary parts cancel in substitutions");
  }

  // --- verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "recurrence vs diagram cross-check");
  std::string ver_family, ver_sizes;
  int ver_max = 4;
  verify->add_option("--family", ver_family, "family name")->required();
  verify->add_option("--max-n", ver_max, "largest size to check");
  verify->add_option("--sizes", ver_sizes, "explicit composition (level-two families)");

  // --- graph ----------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "link graph analysis");
  std::string gr_input;
  bool gr_report = false, gr_dot = false;
  int gr_minimal = 0;
  graph->add_option("input", gr_input, "graph file (json or dot), '-' for stdin");
  graph->add_flag("--report", gr_report, "full Brunnian report");
  graph->add_flag("--dot", gr_dot, "force DOT parsing");
  graph->add_option("--minimal-sets", gr_minimal, "search minimal initial sets up to this size");

  // --- bench -----------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "compare bracket methods on a family");
  std::string be_family, be_sizes, be_methods = "naive,gathered";
  int be_n = 0;
  bench->add_option("--family", be_family, "family name")->required();
  bench->add_option("--n", be_n, "component count");
  bench->add_option("--sizes", be_sizes, "composition for level-two families");
  bench->add_option("--methods", be_methods, "comma list of naive,gathered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      auto spec = spec_from_flags(gen_family, gen_n, gen_sizes);
      if (gen_format == "text") {
        write_output(gen_out, skein::pd_to_text(skein::generate(spec)));
      } else if (gen_oriented) {
        write_output(gen_out, skein::pd_to_json(skein::generate_oriented(spec)));
      } else {
        write_output(gen_out, skein::pd_to_json(skein::generate(spec)));
      }
      return kExitOk;
    }

    if (*bracket) {
      std::string text = read_input(br_input);
      skein::PlanarDiagram pd;
      if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
          text[text.find_first_not_of(" \t\r\n")] == '{')
        pd = skein::pd_from_json(text);
      else
        pd = skein::pd_from_text(text);

      skein::LaurentPoly result("A");
      if (br_method == "naive") {
        result = skein::bracket_naive(pd, br_cap, threads_flag);
      } else if (br_method == "gathered") {
        if (!br_plan.empty()) {
          auto plan_json = nlohmann::json::parse(read_input(br_plan));
          skein::RegionPlan plan;
          for (const auto& row : plan_json) {
            skein::Region r;
            for (const auto& idx : row) r.crossings.push_back(idx.get<int>());
            plan.regions.push_back(r);
          }
          result = skein::bracket_gathered(pd, plan);
        } else {
          result = skein::bracket_gathered(pd);
        }
      } else {
        result = skein::bracket_auto(pd);
      }
      write_output(br_out, br_format == "json" ? result.json() : result.str());
      return kExitOk;
    }

    if (*hom || *jon || *alx) {
      auto od = load_oriented(read_input(hom_input));
      auto p = skein::homfly(od, hom_cap);
      if (*hom) {
        write_output(hom_out, hom_format == "json" ? p.json() : p.str());
      } else {
        // substitution; GaussPoly division throws on imaginary residue, which
        // is the check --substitution-check re-runs explicitly
        auto q = *jon ? skein::jones(p) : skein::alexander(p);
        if (subst_check) {
          auto again = *jon ? skein::jones(p) : skein::alexander(p);
          if (!(again == q)) throw std::logic_error("substitution check failed");
          std::cerr << "substitution check: imaginary residue zero\n";
        }
        write_output(hom_out, hom_format == "json" ? q.json() : q.str());
      }
      return kExitOk;
    }

    if (*verify) {
      int fails = 0, runs = 0;
      auto check_one = [&](const std::vector<int>& sizes) {
        skein::FamilySpec spec;
        spec.family = skein::family_from_name(ver_family);
        spec.sizes = sizes;
        skein::LaurentPoly want("A");
        if (!skein::family_recurrence(ver_family, sizes, want))
          throw std::invalid_argument("no recurrence for family " + ver_family);
        auto pd = skein::generate(spec);
        auto got = skein::bracket_auto(pd);
        bool ok = got == want;
        ++runs;
        if (!ok) ++fails;
        std::cout << ver_family << " ";
        for (size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? "," : "n=") << sizes[i];
        std::cout << (ok ? "  OK" : "  MISMATCH") << "\n";
      };
      if (!ver_sizes.empty()) {
        check_one(parse_sizes(ver_sizes));
      } else {
        int lo = 1;
        if (ver_family == "brunnian_ring" || ver_family == "brunnian_chain" ||
            ver_family == "dbl_hopf_chain" || ver_family == "dbl_hopf_ring")
          lo = 2;
        if (ver_family == "brunnian_chain_dblleft" || ver_family == "dbl_hopf_half_ring" ||
            ver_family == "brunnian_half_ring_plus" || ver_family == "brunnian_half_ring_minus")
          lo = 3;
        if (ver_family == "brunnian_chain_dblends") lo = 4;
        for (int n = lo; n <= ver_max; ++n) {
          if ((ver_family == "dbl_hopf_chain" || ver_family == "dbl_hopf_ring") && n % 2) continue;
          if (ver_family == "dbl_hopf_half_ring" && n % 2 == 0) continue;
          check_one({n});
        }
      }
      std::cout << runs - fails << "/" << runs << " sizes match\n";
      return fails == 0 ? kExitOk : kExitRefused;
    }

    if (*graph) {
      std::string text = read_input(gr_input);
      skein::LinkGraph g;
      bool looks_json = text.find('{') != std::string::npos && text.find("--") == std::string::npos;
      g = (gr_dot || !looks_json) ? skein::graph_from_dot(text) : skein::graph_from_json(text);
      auto violations = skein::validate_graph(g);
      if (!violations.empty()) {
        for (const auto& v : violations)
          std::cout << "axiom " << v.axiom << ": " << v.message << "\n";
        return kExitInput;
      }
      if (gr_report || gr_minimal > 0) {
        auto rep = skein::brunnian_report(g, gr_minimal > 0 ? gr_minimal : 3);
        std::cout << "brunnian: " << (rep.is_brunnian ? "yes" : "no") << "\n";
        std::cout << "strongly_brunnian: " << (rep.is_strongly_brunnian ? "yes" : "no") << "\n";
        for (const auto& [colour, ok] : rep.colour_verdicts)
          std::cout << "colour " << colour << ": " << (ok ? "initial" : "not initial") << "\n";
        if (!rep.search_complete) std::cout << "minimal-set search: partial (bound hit)\n";
        for (const auto& s : rep.minimal_initial_sets) {
          std::cout << "minimal initial set:";
          for (int v : s) std::cout << " " << v;
          std::cout << "\n";
        }
      } else {
        std::cout << "valid link graph; unlinked: " << (skein::is_unlinked(g) ? "yes" : "no")
                  << "\n";
      }
      return kExitOk;
    }

    if (*bench) {
      skein::FamilySpec spec;
      spec.family = skein::family_from_name(be_family);
      spec.sizes = be_sizes.empty() ? std::vector<int>{be_n} : parse_sizes(be_sizes);
      auto pd = skein::generate(spec);
      std::cout << "crossings: " << pd.crossing_count() << "\n";
      skein::LaurentPoly naive_val("A"), gathered_val("A");
      bool ran_naive = false, ran_gathered = false;
      std::istringstream ms(be_methods);
      std::string method;
      while (std::getline(ms, method, ',')) {
        auto t0 = std::chrono::steady_clock::now();
        if (method == "naive") {
          naive_val = skein::bracket_naive(pd, 24, threads_flag);
          ran_naive = true;
        } else if (method == "gathered") {
          gathered_val = skein::bracket_gathered(pd);
          ran_gathered = true;
        } else {
          throw std::invalid_argument("unknown method " + method);
        }
        auto t1 = std::chrono::steady_clock::now();
        std::cout << method << ": "
                  << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
                  << " us\n";
      }
      if (ran_naive && ran_gathered) {
        bool equal = naive_val == gathered_val;
        std::cout << "values " << (equal ? "identical" : "DIFFER") << "\n";
        if (!equal) return kExitRefused;
      }
      return kExitOk;
    }
  } catch (const skein::bracket_cap_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const skein::homfly_cap_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
