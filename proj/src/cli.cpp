#include "indratio/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "indratio/bounds.hpp"
#include "indratio/certificate_io.hpp"
#include "indratio/constants.hpp"
#include "indratio/error.hpp"
#include "indratio/gen.hpp"
#include "indratio/graph_io.hpp"
#include "indratio/oracle.hpp"
#include "indratio/reducer.hpp"
#include "indratio/structure.hpp"

namespace indratio::cli {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read standard input");
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  if (file.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string coefficient(const Rational& r, const char* var) {
  return r == 1 ? std::string(var) : to_string(r) + var;
}

void print_check(std::ostream& out, const ConstantsPair& c) {
  const auto check = check_constants(c);
  out << "a: " << to_string(c.a) << "\nb: " << to_string(c.b) << "\n";
  const auto& system = reduction_constraints();
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& k = system[i];
    out << "(" << k.index << ") " << coefficient(k.p, "a") << " + " << coefficient(k.q, "b") << " >= "
        << to_string(k.r) << "  slack " << to_string(check.slack[i]) << "\n";
  }
  out << "feasible: " << yes_no(check.feasible) << "\ntight: {" << join(check.tight, ", ") << "}\nviolated: {"
      << join(check.violated, ", ") << "}\n";
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified independent sets in graphs with no triangle adjacent to a 4-cycle", "indratio"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format_name = "auto";
  std::string class_name = "T4";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file, or - for standard input")->capture_default_str();
    sub->add_option("--format", format_name, "Input format: auto, g6, edges")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check class membership; print a witness on violation");
  add_input(validate);
  validate->add_option("--class", class_name, "T4 or T35")->capture_default_str();

  std::string a_text = "19/34";
  std::string b_text = "3/34";
  auto* reduce_cmd = app.add_subcommand("reduce", "Extract a certified independent set");
  add_input(reduce_cmd);
  reduce_cmd->add_option("--a", a_text, "Constant a")->capture_default_str();
  reduce_cmd->add_option("--b", b_text, "Constant b")->capture_default_str();

  std::string graph_path;
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a stored certificate against a graph");
  verify->add_option("--graph", graph_path, "Graph file")->required();
  verify->add_option("--cert", cert_path, "Certificate file")->required();
  verify->add_option("--format", format_name, "Graph format: auto, g6, edges")->capture_default_str();

  auto* alpha = app.add_subcommand("alpha", "Exact independence number");
  add_input(alpha);

  std::vector<std::string> check_pair;
  std::string optimize_text;
  auto* constants = app.add_subcommand("constants", "Check constants or optimize them for a density");
  auto* check_opt = constants->add_option("--check", check_pair, "a b as fractions")->expected(2);
  auto* optimize_opt = constants->add_option("--optimize", optimize_text, "Edge density coefficient, e.g. 15/7");
  check_opt->excludes(optimize_opt);

  bool planar = false;
  auto* bound = app.add_subcommand("bound", "Edge-density report for a planar-promised graph");
  add_input(bound);
  bound->add_option("--class", class_name, "T4 or T35")->capture_default_str();
  bound->add_flag("--planar", planar, "The input is promised to be planar");

  std::string kind;
  std::size_t grid_k = 4;
  std::size_t grid_m = 2;
  std::size_t rand_n = 10;
  double rand_p = 0.3;
  std::uint64_t seed = 1;
  std::string out_format = "g6";
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", kind, "figure1, prism or random")
      ->required()
      ->check(CLI::IsMember({"figure1", "prism", "random"}));
  gen->add_option("--k", grid_k, "Prism circumference")->capture_default_str();
  gen->add_option("--m", grid_m, "Prism length")->capture_default_str();
  gen->add_option("--n", rand_n, "Random graph order")->capture_default_str();
  gen->add_option("--p", rand_p, "Edge probability")->capture_default_str();
  gen->add_option("--class", class_name, "T4 or T35")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--output-format", out_format, "g6 or edges")
      ->capture_default_str()
      ->check(CLI::IsMember({"g6", "edges"}));

  std::vector<std::string> argv_storage{"indratio"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const GraphFormat format = parse_format_name(format_name);
    auto load = [&](const std::string& path) { return read_graph(slurp(path, in), format); };

    if (validate->parsed()) {
      const GraphClass cls = parse_graph_class(class_name);
      const Graph g = load(input);
      if (auto w = find_forbidden(g, cls)) {
        out << "VIOLATION class " << to_string(cls) << "\n" << format_witness(*w);
        return kExitFailure;
      }
      out << "OK class " << to_string(cls) << "\n";
      return kExitOk;
    }

    if (reduce_cmd->parsed()) {
      const ConstantsPair c{parse_rational(a_text), parse_rational(b_text)};
      const Graph g = load(input);
      out << certificate_to_json(reduce(g, c), g);
      return kExitOk;
    }

    if (verify->parsed()) {
      const Graph g = load(graph_path);
      const Certificate cert = certificate_from_json(slurp(cert_path, in));
      const auto result = verify_certificate(g, cert);
      if (result) {
        out << "VALID size " << cert.independent_set.size() << " guarantee " << to_string(cert.guarantee_value)
            << "\n";
        return kExitOk;
      }
      out << "INVALID " << result.diagnostic << "\n";
      return kExitFailure;
    }

    if (alpha->parsed()) {
      const Graph g = load(input);
      const auto r = max_independent_set_exact(g);
      if (r.soft_limit_exceeded)
        err << "warning: " << g.vertex_count() << " vertices exceeds the exact-search soft limit of "
            << kOracleSoftLimit << "\n";
      out << "alpha: " << r.alpha << "\nwitness: " << join(r.witness) << "\nratio: "
          << (r.alpha == 0 ? std::string("undefined") : to_string(Rational(g.vertex_count(), r.alpha)))
          << "\nnodes: " << r.nodes_explored << "\n";
      return kExitOk;
    }

    if (constants->parsed()) {
      if (!optimize_text.empty()) {
        const Rational density = parse_rational(optimize_text);
        const auto opt = optimize_for_density(density);
        out << "density: " << to_string(density) << "\na: " << to_string(opt.constants.a)
            << "\nb: " << to_string(opt.constants.b) << "\nobjective: " << to_string(opt.objective) << "\n";
        if (opt.objective > 0) out << "ratio: " << to_string(1 / opt.objective) << "\n";
        out << "optimal vertices:";
        for (const auto& v : opt.optimal_vertices)
          out << " (" << to_string(v.point.a) << ", " << to_string(v.point.b) << ")";
        out << "\nboundary optimum: " << yes_no(opt.boundary_optimum) << "\n";
        return kExitOk;
      }
      ConstantsPair c = reference_constants();
      if (!check_pair.empty()) c = {parse_rational(check_pair[0]), parse_rational(check_pair[1])};
      print_check(out, c);
      return check_constants(c).feasible ? kExitOk : kExitFailure;
    }

    if (bound->parsed()) {
      const GraphClass cls = parse_graph_class(class_name);
      const Graph g = load(input);
      const auto r = check_density(g, cls, planar);
      out << "class: " << to_string(r.graph_class) << "\nn: " << r.n << "\nm: " << r.m
          << "\nbound: " << to_string(r.bound) << "\nasserted: " << yes_no(r.asserted)
          << "\nsatisfied: " << yes_no(r.satisfied) << "\nratio_bound: " << to_string(r.ratio_bound) << "\n";
      if (r.planarity_refuted) out << "planarity: refuted (input cannot be planar in this class)\n";
      return r.planarity_refuted ? kExitFailure : kExitOk;
    }

    if (gen->parsed()) {
      Graph g;
      if (kind == "figure1") g = figure1_graph();
      else if (kind == "prism") g = cylinder_grid(grid_k, grid_m);
      else g = random_valid_graph(rand_n, rand_p, parse_graph_class(class_name), seed);
      out << (out_format == "g6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace indratio::cli
