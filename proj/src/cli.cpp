#include "safeset/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "safeset/approx2.hpp"
#include "safeset/blockgraph.hpp"
#include "safeset/exact_dp.hpp"
#include "safeset/fptas.hpp"
#include "safeset/instances.hpp"
#include "safeset/io.hpp"
#include "safeset/oracle.hpp"
#include "safeset/ptas.hpp"
#include "safeset/rational.hpp"
#include "safeset/verify.hpp"

namespace safeset {

namespace {

constexpr const char* kUsage =
    "usage: safeset <command> ...\n"
    "  solve exact   --input F [--budget W]\n"
    "  solve approx2 --input F\n"
    "  solve ptas    --input F --eps p/q\n"
    "  solve fptas   --input F --eps p/q --ratio M\n"
    "  oracle        --input F [--safe-number]\n"
    "  verify        --input F --set id,id,...\n"
    "  gen tree      --n N --seed S --wmax W [--wmin w] [--ratio M --base B] [--out F]\n"
    "  gen star-subset-sum --c c1,c2,... --k K [--out F]\n"
    "  gen blockgraph --sizes s1,s2,... --seed S [--out F]\n"
    "  blockbound    --input F\n"
    "  bench         --dir D --out F\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Flags {
 public:
  Flags(const std::vector<std::string>& args, std::size_t start) {
    for (std::size_t i = start; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + a + "'");
      if (i + 1 >= args.size()) throw UsageError("flag " + a + " needs a value");
      values_[a.substr(2)] = args[++i];
    }
  }

  std::string require(const std::string& name) {
    auto it = values_.find(name);
    if (it == values_.end()) throw UsageError("missing --" + name);
    used_.insert(name);
    return it->second;
  }

  std::optional<std::string> get(const std::string& name) {
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    used_.insert(name);
    return it->second;
  }

  void check_all_used() const {
    for (const auto& [k, v] : values_)
      if (!used_.count(k)) throw UsageError("unknown flag --" + k);
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

long long to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + s + "'");
  }
}

std::vector<long long> to_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(to_int(tok, what));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(Flags& flags) { return parse_instance(read_file(flags.require("input"))); }

const TreeInstance& require_tree(const Instance& inst, const std::string& cmd) {
  const auto* t = std::get_if<TreeInstance>(&inst);
  if (!t) throw UsageError(cmd + " requires a 'tree' instance");
  return *t;
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

void write_text_output(const std::optional<std::string>& path, const std::string& text,
                       std::ostream& out) {
  if (!path || *path == "-") {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + *path + "'");
  f << text;
}

int cmd_solve(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() < 2) throw UsageError("solve needs an algorithm");
  const std::string& algo = args[1];
  Flags flags(args, 2);
  Instance inst = load_instance(flags);

  if (algo == "exact") {
    const WeightedTree* tree = nullptr;
    std::optional<DualWeights> dw;
    if (const auto* t = std::get_if<TreeInstance>(&inst)) {
      tree = &t->tree;
      dw = DualWeights::uniform(t->tree);
    } else if (const auto* d = std::get_if<DualTreeInstance>(&inst)) {
      tree = &d->tree;
      dw = d->weights;
    } else {
      throw UsageError("solve exact requires a tree or dtree instance");
    }
    Weight budget;
    if (auto b = flags.get("budget")) {
      budget = to_int(*b, "--budget");
    } else if (std::holds_alternative<TreeInstance>(inst)) {
      // Tighter default for single-weight instances: the 2-approximation
      // weight always covers the optimum.
      budget = two_approx(*tree).weight(tree->weights());
    } else {
      budget = default_budget(*dw);
    }
    flags.check_all_used();
    auto sol = solve_exact(*tree, *dw, budget);
    if (!sol) {
      out << "infeasible budget=" << budget << "\n";
      return 1;
    }
    out << write_solution(sol->set, dw->minus_weights()) << "\n";
    return 0;
  }

  if (algo == "approx2") {
    const auto& t = require_tree(inst, "solve approx2");
    flags.check_all_used();
    VertexSet s = two_approx(t.tree);
    out << write_solution(s, t.tree.weights()) << "\n";
    return 0;
  }

  if (algo == "ptas") {
    const auto& t = require_tree(inst, "solve ptas");
    Rational eps = parse_rational(flags.require("eps"));
    flags.check_all_used();
    VertexSet s = ptas_solve(t.tree, eps);
    out << write_solution(s, t.tree.weights()) << "\n";
    return 0;
  }

  if (algo == "fptas") {
    const auto& t = require_tree(inst, "solve fptas");
    Rational eps = parse_rational(flags.require("eps"));
    long long ratio = to_int(flags.require("ratio"), "--ratio");
    flags.check_all_used();
    VertexSet s = fptas_solve(t.tree, eps, ratio);
    out << write_solution(s, t.tree.weights()) << "\n";
    return 0;
  }

  throw UsageError("unknown solve algorithm '" + algo + "'");
}

int cmd_oracle(const std::vector<std::string>& args, std::ostream& out) {
  Flags flags(args, 1);
  Instance inst = load_instance(flags);
  bool safe_number = false;
  if (auto v = flags.get("safe-number")) {
    safe_number = (*v != "0" && *v != "false");
  }
  flags.check_all_used();

  OracleSolution sol;
  std::vector<Weight> weights = instance_objective_weights(inst);
  if (const auto* t = std::get_if<TreeInstance>(&inst)) {
    sol = safe_number ? brute_safe_min(t->tree)
                      : brute_connected_safe_min(t->tree, DualWeights::uniform(t->tree));
  } else if (const auto* d = std::get_if<DualTreeInstance>(&inst)) {
    if (safe_number) throw UsageError("--safe-number is defined for tree and graph instances");
    sol = brute_connected_safe_min(d->tree, d->weights);
  } else {
    const auto& g = std::get<GraphInstance>(inst);
    sol = safe_number ? brute_safe_min(g.graph, g.weights)
                      : brute_connected_safe_min(g.graph, g.weights);
  }
  out << write_solution(sol.set, weights) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
  Flags flags(args, 1);
  Instance inst = load_instance(flags);
  std::vector<int> ids;
  for (long long v : to_int_list(flags.require("set"), "--set"))
    ids.push_back(static_cast<int>(v));
  flags.check_all_used();
  VertexSet set(std::move(ids));

  std::optional<SafetyViolation> violation;
  if (const auto* t = std::get_if<TreeInstance>(&inst))
    violation = find_safety_violation(t->tree, DualWeights::uniform(t->tree), set);
  else if (const auto* d = std::get_if<DualTreeInstance>(&inst))
    violation = find_safety_violation(d->tree, d->weights, set);
  else {
    const auto& g = std::get<GraphInstance>(inst);
    violation = find_safety_violation(g.graph, g.weights, g.weights, set);
  }
  if (!violation) {
    out << "SAFE\n";
    return 0;
  }
  out << "UNSAFE C={" << join_ids(violation->inside) << "} D={" << join_ids(violation->outside)
      << "} " << violation->inside_weight << "<" << violation->outside_weight << "\n";
  return 1;
}

int cmd_gen(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() < 2) throw UsageError("gen needs a family");
  const std::string& family = args[1];
  Flags flags(args, 2);
  auto out_path = flags.get("out");

  if (family == "tree") {
    int n = static_cast<int>(to_int(flags.require("n"), "--n"));
    std::uint64_t seed = static_cast<std::uint64_t>(to_int(flags.require("seed"), "--seed"));
    Weight wmax = to_int(flags.require("wmax"), "--wmax");
    Weight wmin = flags.get("wmin") ? to_int(*flags.get("wmin"), "--wmin") : 0;
    auto ratio_flag = flags.get("ratio");
    auto base_flag = flags.get("base");
    WeightedTree tree = random_tree(n, seed, wmax, wmin);
    std::vector<std::string> headers = {"gen tree n=" + std::to_string(n) +
                                        " seed=" + std::to_string(seed) +
                                        " wmin=" + std::to_string(wmin) +
                                        " wmax=" + std::to_string(wmax) +
                                        " prng=" + kGeneratorName};
    if (ratio_flag) {
      long long ratio = to_int(*ratio_flag, "--ratio");
      Weight base = base_flag ? to_int(*base_flag, "--base") : 1;
      tree = ratio_bounded_weights(tree, ratio, seed, base);
      headers.push_back("reweight ratio=" + std::to_string(ratio) +
                        " base=" + std::to_string(base) + " seed=" + std::to_string(seed) +
                        " prng=" + kGeneratorName);
    }
    flags.check_all_used();
    write_text_output(out_path, write_instance(tree, headers), out);
    return 0;
  }

  if (family == "star-subset-sum") {
    std::vector<Weight> c;
    for (long long v : to_int_list(flags.require("c"), "--c")) c.push_back(v);
    Weight k = to_int(flags.require("k"), "--k");
    flags.check_all_used();
    WeightedTree star = subset_sum_star(c, k);
    std::string cs;
    for (std::size_t i = 0; i < c.size(); ++i) cs += (i ? "," : "") + std::to_string(c[i]);
    write_text_output(
        out_path,
        write_instance(star, {"gen star-subset-sum c=" + cs + " k=" + std::to_string(k)}), out);
    return 0;
  }

  if (family == "blockgraph") {
    std::vector<int> sizes;
    for (long long v : to_int_list(flags.require("sizes"), "--sizes"))
      sizes.push_back(static_cast<int>(v));
    std::uint64_t seed = static_cast<std::uint64_t>(to_int(flags.require("seed"), "--seed"));
    flags.check_all_used();
    SimpleGraph g = random_block_graph(sizes, seed);
    std::string ss;
    for (std::size_t i = 0; i < sizes.size(); ++i) ss += (i ? "," : "") + std::to_string(sizes[i]);
    std::vector<Weight> unit(g.n() + 1, 1);
    write_text_output(out_path,
                      write_instance(g, unit,
                                     {"gen blockgraph sizes=" + ss +
                                      " seed=" + std::to_string(seed) +
                                      " prng=" + std::string(kGeneratorName)}),
                      out);
    return 0;
  }

  throw UsageError("unknown gen family '" + family + "'");
}

int cmd_blockbound(const std::vector<std::string>& args, std::ostream& out) {
  Flags flags(args, 1);
  Instance inst = load_instance(flags);
  flags.check_all_used();
  const auto* g = std::get_if<GraphInstance>(&inst);
  if (!g) throw UsageError("blockbound requires a 'graph' instance");
  BlockBoundReport report;
  VertexSet s = safe_upper_construct(g->graph, &report);
  out << "blockbound n=" << g->graph.n() << " omega=" << report.omega
      << " bound=" << report.bound << "\n";
  std::vector<Weight> unit(g->graph.n() + 1, 1);
  out << write_solution(s, unit) << "\n";
  return 0;
}

struct BenchRow {
  std::string instance;
  int n;
  Weight total_weight;
  std::string solver;
  std::optional<Weight> weight;
  std::optional<Weight> oracle;
  double millis;
};

void emit_rows(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "instance,n,total_weight,solver,weight,oracle,ratio,millis\n";
  char buf[64];
  for (const auto& r : rows) {
    os << r.instance << "," << r.n << "," << r.total_weight << "," << r.solver << ",";
    if (r.weight) os << *r.weight;
    os << ",";
    if (r.oracle) os << *r.oracle;
    os << ",";
    if (r.weight && r.oracle && *r.oracle > 0) {
      std::snprintf(buf, sizeof buf, "%.6g",
                    static_cast<double>(*r.weight) / static_cast<double>(*r.oracle));
      os << buf;
    } else if (r.weight && r.oracle && *r.oracle == 0 && *r.weight == 0) {
      os << "1";
    }
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    os << "," << buf << "\n";
  }
}

int cmd_bench(const std::vector<std::string>& args, std::ostream& out) {
  Flags flags(args, 1);
  std::string dir = flags.require("dir");
  std::string out_path = flags.require("out");
  flags.check_all_used();

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    auto ext = entry.path().extension().string();
    if (ext == ".tree" || ext == ".dtree" || ext == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  constexpr int kOracleCap = 18;
  std::vector<BenchRow> rows;
  for (const auto& path : files) {
    Instance inst = parse_instance(read_file(path.string()));
    std::string name = path.filename().string();
    int n = instance_n(inst);
    std::vector<Weight> weights = instance_objective_weights(inst);
    Weight total = 0;
    for (int v = 1; v <= n; ++v) total += weights[v];

    auto timed = [&](const std::string& solver, auto&& fn) {
      auto start = std::chrono::steady_clock::now();
      std::optional<Weight> w = fn();
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
      rows.push_back(BenchRow{name, n, total, solver, w, std::nullopt, ms});
    };

    std::optional<Weight> oracle_weight;
    if (const auto* t = std::get_if<TreeInstance>(&inst)) {
      const WeightedTree& tree = t->tree;
      if (n <= kOracleCap)
        oracle_weight = brute_connected_safe_min(tree, DualWeights::uniform(tree)).weight;
      timed("exact", [&] {
        Weight budget = two_approx(tree).weight(tree.weights());
        auto sol = solve_exact(tree, DualWeights::uniform(tree), budget);
        return sol ? std::optional<Weight>(sol->weight) : std::nullopt;
      });
      timed("approx2", [&] {
        return std::optional<Weight>(two_approx(tree).weight(tree.weights()));
      });
      timed("ptas", [&] {
        return std::optional<Weight>(
            ptas_solve(tree, Rational(1, 1)).weight(tree.weights()));
      });
      Weight wmin = tree.weight(1), wmax = tree.weight(1);
      for (int v = 1; v <= n; ++v) {
        wmin = std::min(wmin, tree.weight(v));
        wmax = std::max(wmax, tree.weight(v));
      }
      if (wmin >= 1) {
        long long m = std::max<long long>(3, (wmax + wmin - 1) / wmin);
        timed("fptas", [&] {
          return std::optional<Weight>(
              fptas_solve(tree, Rational(1, m), m).weight(tree.weights()));
        });
      }
    } else if (const auto* d = std::get_if<DualTreeInstance>(&inst)) {
      if (n <= kOracleCap)
        oracle_weight = brute_connected_safe_min(d->tree, d->weights).weight;
      timed("exact", [&] {
        auto sol = solve_exact(d->tree, d->weights, default_budget(d->weights));
        return sol ? std::optional<Weight>(sol->weight) : std::nullopt;
      });
    } else {
      const auto& g = std::get<GraphInstance>(inst);
      std::vector<Weight> unit(g.graph.n() + 1, 1);
      if (n <= kOracleCap) oracle_weight = brute_connected_safe_min(g.graph, unit).weight;
      timed("blockbound", [&] {
        return std::optional<Weight>(
            static_cast<Weight>(safe_upper_construct(g.graph).size()));
      });
    }
    for (auto& row : rows)
      if (row.instance == name) row.oracle = oracle_weight;
  }

  if (out_path == "-") {
    emit_rows(out, rows);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + out_path + "'");
    emit_rows(f, rows);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "solve") return cmd_solve(args, out);
    if (cmd == "oracle") return cmd_oracle(args, out);
    if (cmd == "verify") return cmd_verify(args, out);
    if (cmd == "gen") return cmd_gen(args, out);
    if (cmd == "blockbound") return cmd_blockbound(args, out);
    if (cmd == "bench") return cmd_bench(args, out);
    err << "unknown command '" << cmd << "'\n" << kUsage;
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapTooLarge:
      case ErrorKind::BudgetOverflow:
      case ErrorKind::SearchStalled:
      case ErrorKind::PreconditionViolated:
      case ErrorKind::InstanceTooLarge:
      case ErrorKind::NotExtensible:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace safeset
