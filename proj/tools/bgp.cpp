#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgp/exact.hpp"
#include "bgp/generate.hpp"
#include "bgp/instance.hpp"
#include "bgp/recognition.hpp"
#include "bgp/solvers.hpp"

namespace {

// Exit codes are the machine contract:
//   0 solved / feasible / valid
//   1 infeasible / invalid certificate / over budget
//   2 unreadable or unparseable input, unknown family or algorithm
//   3 instance outside the class a named algorithm requires
//   4 bounded search gave up (answer unknown either way)
constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;
constexpr int kMismatch = 3;
constexpr int kUnknown = 4;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<bgp::Instance> load_instance(const std::string& path,
                                           std::string* err) {
  auto text = read_file(path);
  if (!text) {
    *err = "cannot read " + path;
    return std::nullopt;
  }
  try {
    return bgp::parse_instance(*text);
  } catch (const bgp::ParseError& e) {
    *err = path + ": " + e.what();
    return std::nullopt;
  }
}

struct SolveArgs {
  std::string path;
  std::string algorithm = "auto";
  std::string emit;
  std::optional<bgp::Weight> budget;
};

int cmd_solve(const SolveArgs& a) {
  std::string err;
  auto inst = load_instance(a.path, &err);
  if (!inst) {
    std::cerr << err << "\n";
    return kBadInput;
  }
  bgp::SolveReport rep;
  try {
    rep = bgp::solve(*inst, a.algorithm);
  } catch (const bgp::ClassMismatch& e) {
    std::cerr << "class mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const bgp::UnknownResult& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  std::cout << rep.canonical_text(*inst);
  std::cout << "elapsed-ms " << std::fixed << std::setprecision(3)
            << rep.elapsed_ms << "\n";
  if (!a.emit.empty()) {
    std::ofstream out(a.emit, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << a.emit << "\n";
      return kBadInput;
    }
    out << bgp::serialize_ordering(*inst, rep.witness);
  }
  if (a.budget) {
    bool fits = rep.budget <= *a.budget;
    std::cout << "feasible " << (fits ? "true" : "false") << "\n";
    return fits ? kOk : kNo;
  }
  return kOk;
}

struct VerifyArgs {
  std::string inst_path, order_path;
  std::optional<bgp::Weight> budget;
};

int cmd_verify(const VerifyArgs& a) {
  std::string err;
  auto inst = load_instance(a.inst_path, &err);
  if (!inst) {
    std::cerr << err << "\n";
    return kBadInput;
  }
  auto text = read_file(a.order_path);
  if (!text) {
    std::cerr << "cannot read " << a.order_path << "\n";
    return kBadInput;
  }
  bgp::Ordering ord;
  try {
    ord = bgp::parse_ordering(*inst, *text);
  } catch (const bgp::ParseError& e) {
    std::cerr << a.order_path << ": " << e.what() << "\n";
    return kBadInput;
  }
  bool valid = false;
  try {
    valid = bgp::is_valid_ordering(*inst, ord);
  } catch (const std::invalid_argument&) {
    valid = false;  // not even a permutation of the vertices
  }
  if (!valid) {
    std::cout << "valid false\n";
    return kNo;
  }
  bgp::Weight b = bgp::budget_of_ordering(*inst, ord);
  std::cout << "valid true\n";
  std::cout << "budget " << b << "\n";
  if (a.budget) {
    bool fits = b <= *a.budget;
    std::cout << "within-budget " << (fits ? "true" : "false") << "\n";
    return fits ? kOk : kNo;
  }
  return kOk;
}

void print_bool(const char* key, bool v) {
  std::cout << key << ": " << (v ? "true" : "false") << "\n";
}

int cmd_recognize(const std::string& path) {
  std::string err;
  auto inst = load_instance(path, &err);
  if (!inst) {
    std::cerr << err << "\n";
    return kBadInput;
  }
  bgp::GraphClassReport r = bgp::classify(*inst);
  print_bool("unit-weights", r.unit_weights);
  print_bool("biclique", r.biclique);
  print_bool("biclique-union", r.biclique_union);
  print_bool("forest", r.forest);
  print_bool("path-or-cycle", r.path_or_cycle);
  print_bool("chain", r.chain);
  print_bool("trivially-perfect", r.trivially_perfect);
  print_bool("co-bipartite", r.co_bipartite);
  print_bool("permutation", r.permutation);
  if (r.min_max) {
    std::cout << "min-max-order:";
    for (int b : r.min_max->bought_order)
      std::cout << ' ' << inst->bought_id(b);
    std::cout << "\n";
  }
  if (r.obstruction) {
    std::cout << "obstruction: " << (r.obstruction->cycle ? "cycle" : "path");
    for (int g : r.obstruction->walk) std::cout << ' ' << inst->vertex_id(g);
    std::cout << "\n";
  }
  return kOk;
}

struct GenerateArgs {
  std::string family;
  int n = 8;
  int parts = 0;
  bgp::Weight wmax = 1;
  std::uint64_t seed = 0;
  std::optional<int> plane;  // projective only: the plane order
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  bgp::GenSpec spec;
  spec.family = a.family;
  spec.n = a.plane ? *a.plane : a.n;
  spec.parts = a.parts;
  spec.wmax = a.wmax;
  spec.seed = a.seed;
  bgp::Instance inst;
  try {
    inst = bgp::generate(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  std::string text = inst.serialize();
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << a.out << "\n";
      return kBadInput;
    }
    f << text;
  }
  return kOk;
}

std::string class_label(const bgp::GraphClassReport& r) {
  if (r.biclique) return "biclique";
  if (r.biclique_union) return "biclique-union";
  if (r.path_or_cycle) return "path-or-cycle";
  if (r.forest) return "forest";
  if (r.chain) return "chain";
  if (r.trivially_perfect) return "trivially-perfect";
  if (r.co_bipartite) return "co-bipartite";
  if (r.permutation) return "permutation";
  return "none";
}

struct BenchArgs {
  std::string dir;
  std::string algorithm = "auto";
  std::string out = "bench.csv";
};

int cmd_bench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(a.dir, ec)) {
    std::cerr << a.dir << " is not a directory\n";
    return kBadInput;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& x, const fs::path& y) {
              return x.filename().string() < y.filename().string();
            });

  bool fresh = !fs::exists(a.out, ec) || fs::file_size(a.out, ec) == 0;
  std::ofstream csv(a.out, std::ios::app);
  if (!csv) {
    std::cerr << "cannot write " << a.out << "\n";
    return kBadInput;
  }
  if (fresh) csv << "instance,n,class,algorithm,budget,ms,states,status\n";

  for (const fs::path& f : files) {
    std::string name = f.filename().string();
    std::string err;
    auto inst = load_instance(f.string(), &err);
    if (!inst) {
      csv << name << ",-,-," << a.algorithm << ",-,-,-,parse-error\n";
      continue;
    }
    std::string label = class_label(bgp::classify(*inst));
    std::string status = "ok";
    std::string budget = "-", states = "-";
    double ms = 0.0;
    try {
      bgp::SolveReport rep = bgp::solve(*inst, a.algorithm);
      budget = std::to_string(rep.budget);
      states = std::to_string(rep.states);
      ms = rep.elapsed_ms;
    } catch (const bgp::ClassMismatch&) {
      status = "class-mismatch";
    } catch (const bgp::UnknownResult&) {
      status = "unknown";
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return kBadInput;
    }
    csv << name << ',' << inst->vertex_count() << ',' << label << ','
        << a.algorithm << ',' << budget << ',' << std::fixed
        << std::setprecision(3) << ms << ',' << states << ',' << status
        << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Budget solver for bipartite precedence graphs: orderings must buy a "
      "sold vertex's whole neighbourhood before selling it; the budget is "
      "the worst prefix balance. The BGP_EXACT_LIMIT environment variable "
      "overrides the exhaustive table's size cutoff."};
  app.require_subcommand(1);

  SolveArgs sa;
  bgp::Weight sk = 0;
  auto* solve = app.add_subcommand("solve", "Compute the optimal budget");
  solve->add_option("instance", sa.path, "instance file")->required();
  solve->add_option("--algorithm", sa.algorithm,
                    "auto|oracle|exact|tp|cobip|perm|general|simple");
  solve->add_option("--emit-ordering", sa.emit,
                    "write the witness ordering to this file");
  auto* sko = solve->add_option(
      "--budget", sk, "decision mode: exit 0 iff the budget is at most K");

  VerifyArgs va;
  bgp::Weight vk = 0;
  auto* verify =
      app.add_subcommand("verify", "Check an ordering certificate");
  verify->add_option("instance", va.inst_path, "instance file")->required();
  verify->add_option("ordering", va.order_path, "ordering file")->required();
  auto* vko =
      verify->add_option("--budget", vk, "also require budget at most K");

  std::string rpath;
  auto* recognize =
      app.add_subcommand("recognize", "Report graph-class membership");
  recognize->add_option("instance", rpath, "instance file")->required();

  GenerateArgs ga;
  int plane = 0;
  auto* generate =
      app.add_subcommand("generate", "Write a seeded instance");
  generate
      ->add_option("family", ga.family,
                   "biclique-union|forest|chain|tp|cobip|perm|projective")
      ->required();
  generate->add_option("--n", ga.n, "target vertex count");
  generate->add_option("--parts", ga.parts,
                       "biclique-union: component count (0 = from seed)");
  generate->add_option("--wmax", ga.wmax, "maximum vertex weight");
  generate->add_option("--seed", ga.seed, "generator seed");
  auto* po = generate->add_option(
      "--p", plane, "projective: the plane order (overrides --n)");
  generate->add_option("--out", ga.out, "output file (default stdout)");

  BenchArgs ba;
  auto* bench =
      app.add_subcommand("bench", "Solve a directory of instances to CSV");
  bench->add_option("dir", ba.dir, "directory of instance files")->required();
  bench->add_option("--algorithm", ba.algorithm, "solver to run");
  bench->add_option("--out", ba.out, "CSV file to append to");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*sko) sa.budget = sk;
  if (*vko) va.budget = vk;
  if (*po) ga.plane = plane;

  if (app.got_subcommand(solve)) return cmd_solve(sa);
  if (app.got_subcommand(verify)) return cmd_verify(va);
  if (app.got_subcommand(recognize)) return cmd_recognize(rpath);
  if (app.got_subcommand(generate)) return cmd_generate(ga);
  if (app.got_subcommand(bench)) return cmd_bench(ba);
  return kBadInput;
}
