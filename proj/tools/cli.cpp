#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "qcg/errors.hpp"
#include "qcg/external_edge.hpp"
#include "qcg/factorization.hpp"
#include "qcg/representation.hpp"

namespace qcg::cli {

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct Options {
  std::string graph;
  int level = 0;
  std::size_t cap = 4096;
  std::string output = "-";
  std::string boundary;
  std::string cycle;
  std::string cut;
  std::string cocycle = "external";
  std::size_t family = 16;
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> values;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw InputError("not an integer: " + part);
    }
  }
  return values;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    if (opt.graph.empty()) throw InputError("--graph is required");
    file_ = load_graph(opt.graph);
    if (!opt.boundary.empty()) file_.boundary_weights = parse_ints(opt.boundary);
  }

  const Graph& graph() const { return file_.graph; }
  const std::vector<int>& boundary() const { return file_.boundary_weights; }

  const WeightSpacePtr& space() {
    if (!space_) {
      if (opt_.level < 1) throw InputError("--level <k> with k >= 1 is required");
      space_ = WeightSpace::create(file_.graph, Level(opt_.level), file_.boundary_weights);
    }
    return space_;
  }

  Cycle cycle() const { return Cycle::from_edge_ids(file_.graph, split(opt_.cycle, ',')); }

 private:
  const Options& opt_;
  GraphFile file_;
  WeightSpacePtr space_;
};

std::string edge_list(const Graph& graph, const std::vector<EdgeIndex>& edges) {
  std::vector<std::string> ids;
  for (auto e : edges) ids.push_back(graph.edge(e).id);
  return "{" + join(ids, ",") + "}";
}

void print_stabilizer(std::ostream& out, const WeightSpace& space, const Orbit& orbit) {
  std::vector<std::string> cycles;
  for (auto m : orbit.stabilizer) cycles.push_back(format_cycle(space.graph(), space.basis().element(m)));
  out << "  stabilizer dim " << orbit.stabilizer_dim() << (cycles.empty() ? "" : ": ") << join(cycles, " ; ")
      << '\n';
}

int cmd_enumerate(Session& s, std::ostream& out) {
  for (const auto& w : s.space()->weights()) out << format_weight(w) << '\n';
  return 0;
}

int cmd_orbits(Session& s, std::ostream& out) {
  const auto& space = *s.space();
  for (std::size_t o = 0; o < space.orbits().size(); ++o) {
    const auto& orbit = space.orbits()[o];
    out << "orbit " << o << " size " << orbit.members.size() << " representative "
        << format_weight(space.weight(orbit.representative)) << '\n';
    print_stabilizer(out, space, orbit);
  }
  return 0;
}

int cmd_cohomology(Session& s, std::ostream& out) {
  const auto& space = *s.space();
  out << "order " << cohomology_group_order(space).decimal() << '\n';
  for (std::size_t o = 0; o < space.orbits().size(); ++o) {
    const auto& orbit = space.orbits()[o];
    out << "orbit " << o << " representative " << format_weight(space.weight(orbit.representative)) << '\n';
    print_stabilizer(out, space, orbit);
  }
  return 0;
}

int cmd_ext_cocycle(Session& s, std::ostream& out) {
  const auto& space = s.space();
  const auto ext = construct_external_cocycle(space);
  write_cocycle(out, ext);
  for (std::size_t o = 0; o < space->orbits().size(); ++o) {
    const auto& orbit = space->orbits()[o];
    out << "# orbit " << o << " representative " << format_weight(space->weight(orbit.representative)) << '\n';
    for (auto m : orbit.stabilizer) {
      const auto cycle = space->basis().element(m);
      out << "#   stabilizer " << format_cycle(space->graph(), cycle) << " Ex "
          << edge_list(space->graph(), external_edges(space->graph(), cycle)) << " target "
          << external_target(*space, orbit.representative, m) << '\n';
    }
  }
  return 0;
}

CocycleTable load_cocycle(Session& s, const std::string& which) {
  if (which == "external") return construct_external_cocycle(s.space());
  if (which == "trivial") return CocycleTable::trivial(s.space());
  std::ifstream in(which);
  if (!in) throw InputError("cannot open cocycle file " + which);
  return read_cocycle(in, s.space());
}

int cmd_rep(Session& s, const Options& opt, std::ostream& out) {
  const auto t = load_cocycle(s, opt.cocycle);
  const auto& space = *s.space();
  std::vector<CycleMask> elements;
  if (!opt.cycle.empty()) {
    elements.push_back(space.basis().coordinates(s.cycle()));
  } else {
    for (std::size_t b = 0; b < space.genus(); ++b) elements.push_back(CycleMask{1} << b);
  }
  for (auto m : elements) {
    out << "matrix " << format_cycle(space.graph(), space.basis().element(m)) << " trace " << character(t, m)
        << '\n';
    write_matrix(out, rep_matrix(t, m));
  }
  return 0;
}

int cmd_verify_parity(Session& s, std::ostream& out) {
  const auto& space = *s.space();
  bool ok = true;
  for (std::size_t o = 0; o < space.orbits().size(); ++o) {
    const auto report = check_parity_identity(space, o);
    out << (report.ok ? "PASS" : "FAIL") << " orbit " << o << ' '
        << format_weight(space.weight(space.orbits()[o].representative));
    if (!report.ok) out << " witness " << report.counterexample;
    out << '\n';
    ok = ok && report.ok;
  }
  return ok ? 0 : kVerificationFailed;
}

int print_report(const VerificationReport& report, std::ostream& out) {
  for (const auto& line : report.lines) out << line << '\n';
  if (!report.ok) out << "witness " << report.witness << '\n';
  out << (report.ok ? "PASS" : "FAIL") << " overall, " << report.decompositions << " decompositions\n";
  return report.ok ? 0 : kVerificationFailed;
}

int cmd_cut(Session& s, const Options& opt, std::ostream& out) {
  std::set<EdgeIndex> cut;
  if (!opt.cut.empty()) {
    for (const auto& id : split(opt.cut, ',')) {
      const auto e = s.graph().find_edge(id);
      if (!e) throw InputError("unknown edge " + id);
      cut.insert(*e);
    }
  } else if (!opt.cycle.empty()) {
    cut = isolating_cut(s.graph(), s.cycle());
  } else {
    throw InputError("cut needs --cut <edges> or --cycle <edges>");
  }
  const auto cg = cut_edges(s.graph(), cut);
  for (std::size_t c = 0; c < cg.graph.components().size(); ++c) {
    out << "# component " << c << ' ' << edge_list(cg.graph, cg.graph.components()[c]) << '\n';
  }
  write_graph(out, cg.graph, s.boundary());
  return 0;
}

int cmd_oracle_count(Session& s, const Options& opt, std::ostream& out) {
  const auto& space = *s.space();
  const auto structural = cohomology_group_order(space);
  const auto brute = brute_force_class_count(s.graph(), space.level(), s.boundary(), opt.cap);
  const bool ok = structural == brute;
  out << "structure " << structural.decimal() << '\n'
      << "brute-force " << brute.decimal() << '\n'
      << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : kVerificationFailed;
}

int dispatch(const std::string& name, const Options& opt, std::ostream& out) {
  Session s(opt);
  for (const auto& warning : s.graph().warnings()) out << "# warning: " << warning << '\n';
  if (name == "enumerate") return cmd_enumerate(s, out);
  if (name == "orbits") return cmd_orbits(s, out);
  if (name == "cohomology") return cmd_cohomology(s, out);
  if (name == "ext-cocycle") return cmd_ext_cocycle(s, out);
  if (name == "rep") return cmd_rep(s, opt, out);
  if (name == "verify-parity") return cmd_verify_parity(s, out);
  if (name == "verify-functorial") return print_report(verify_functoriality(s.space(), opt.cap), out);
  if (name == "verify-characterization") {
    return print_report(verify_characterization(s.space(), opt.cap, opt.family, opt.seed), out);
  }
  if (name == "cut") return cmd_cut(s, opt, out);
  return cmd_oracle_count(s, opt, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Clebsch-Gordan weights, twisted cohomology and external edge cocycles", "qcgtool"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"enumerate", "admissible weights as TSV rows of doubled integers"},
      {"orbits", "orbits of the flip action with stabilizer bases"},
      {"cohomology", "order of the twisted first cohomology and per-orbit stabilizers"},
      {"ext-cocycle", "external edge cocycle table with a per-orbit report"},
      {"rep", "monomial matrices of the induced representation"},
      {"verify-parity", "parity identity for every orbit"},
      {"verify-functorial", "restriction of the external class along every decomposition"},
      {"verify-characterization", "characterization by Gamma(n) restrictions"},
      {"cut", "cut a graph along edges, or isolate a cycle"},
      {"oracle-count", "compare the cohomology order with the brute-force count"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", opt.graph, "graph file")->required();
    sub->add_option("--level", opt.level, "level k");
    sub->add_option("--cap", opt.cap, "enumeration cap");
    sub->add_option("--output", opt.output, "output path, - for stdout");
    sub->add_option("--boundary", opt.boundary, "comma-separated doubled boundary weights");
    if (name == "rep" || name == "cut") sub->add_option("--cycle", opt.cycle, "comma-separated edge ids");
    if (name == "cut") sub->add_option("--cut", opt.cut, "comma-separated edge ids to cut");
    if (name == "rep") sub->add_option("--cocycle", opt.cocycle, "external, trivial or a cocycle file");
    if (name == "verify-characterization") {
      sub->add_option("--family", opt.family, "size of each perturbation family");
      sub->add_option("--seed", opt.seed, "seed of the perturbation family");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream text;
  int code = 0;
  try {
    code = dispatch(app.get_subcommands().front()->get_name(), opt, text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (opt.output == "-") {
    out << text.str();
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "error: cannot write " << opt.output << '\n';
      return kUsageError;
    }
    file << text.str();
  }
  return code;
}

}  // namespace qcg::cli
