#include "safeset/io.hpp"

#include <charconv>
#include <sstream>

namespace safeset {

namespace {

struct Lines {
  std::vector<std::pair<int, std::string>> rows;  // (line number, content)
};

Lines split_content_lines(std::string_view text) {
  Lines out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;  // blank
    if (line[first] == '#') continue;               // comment
    out.rows.emplace_back(line_no, std::string(line));
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Lines lines = split_content_lines(text);
  if (lines.rows.empty()) throw ParseError(1, "empty instance");
  std::size_t row = 0;
  auto next_row = [&](const char* what) -> const std::pair<int, std::string>& {
    if (row >= lines.rows.size())
      throw ParseError(lines.rows.back().first, std::string("missing ") + what);
    return lines.rows[row++];
  };

  const auto& [hline, header] = next_row("header");
  auto htoks = tokens_of(header);
  bool is_tree = !htoks.empty() && htoks[0] == "tree";
  bool is_dtree = !htoks.empty() && htoks[0] == "dtree";
  bool is_graph = !htoks.empty() && htoks[0] == "graph";
  if (!is_tree && !is_dtree && !is_graph)
    throw ParseError(hline, "header must be 'tree <n>', 'dtree <n>' or 'graph <n> <m>'");
  if ((is_graph && htoks.size() != 3) || (!is_graph && htoks.size() != 2))
    throw ParseError(hline, "wrong number of header fields");
  long long n = parse_int(htoks[1], hline);
  if (n < 1) throw ParseError(hline, "n must be >= 1");
  long long m = is_graph ? parse_int(htoks[2], hline) : n - 1;
  if (m < 0) throw ParseError(hline, "m must be >= 0");

  std::vector<Weight> w(n, -1), wplus(n, -1);
  for (long long i = 0; i < n; ++i) {
    const auto& [lno, line] = next_row("node line");
    auto toks = tokens_of(line);
    std::size_t expected = is_dtree ? 4 : 3;
    if (toks.size() != expected || toks[0] != "node")
      throw ParseError(lno, is_dtree ? "expected 'node <id> <w-> <w+>'"
                                     : "expected 'node <id> <w>'");
    long long id = parse_int(toks[1], lno);
    if (id < 1 || id > n) throw ParseError(lno, "node id outside 1.." + std::to_string(n));
    if (w[id - 1] >= 0) throw ParseError(lno, "duplicate node " + std::to_string(id));
    long long wv = parse_int(toks[2], lno);
    if (wv < 0) throw ParseError(lno, "negative weight");
    w[id - 1] = wv;
    if (is_dtree) {
      long long wp = parse_int(toks[3], lno);
      if (wp < 0) throw ParseError(lno, "negative weight");
      wplus[id - 1] = wp;
    }
  }
  for (long long id = 1; id <= n; ++id)
    if (w[id - 1] < 0)
      throw ParseError(lines.rows.back().first, "missing node " + std::to_string(id));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    const auto& [lno, line] = next_row("edge line");
    auto toks = tokens_of(line);
    if (toks.size() != 3 || toks[0] != "edge") throw ParseError(lno, "expected 'edge <u> <v>'");
    long long u = parse_int(toks[1], lno), v = parse_int(toks[2], lno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lno, "edge endpoint outside 1.." + std::to_string(n));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (row != lines.rows.size())
    throw ParseError(lines.rows[row].first, "unexpected trailing line");

  if (is_graph) {
    SimpleGraph g = SimpleGraph::build(static_cast<int>(n), std::move(edges));
    std::vector<Weight> w1(n + 1, 0);
    for (long long v = 1; v <= n; ++v) w1[v] = w[v - 1];
    return GraphInstance{std::move(g), std::move(w1)};
  }
  WeightedTree tree = WeightedTree::build(static_cast<int>(n), std::move(edges), w);
  if (is_dtree) {
    DualWeights dw = DualWeights::build(w, wplus);
    return DualTreeInstance{std::move(tree), std::move(dw)};
  }
  return TreeInstance{std::move(tree)};
}

namespace {

void append_headers(std::string& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out += "# " + c + "\n";
}

void append_edges(std::string& out, const std::vector<std::pair<int, int>>& edges) {
  for (const auto& [u, v] : edges)
    out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
}

}  // namespace

std::string write_instance(const WeightedTree& tree,
                           const std::vector<std::string>& header_comments) {
  std::string out;
  append_headers(out, header_comments);
  out += "tree " + std::to_string(tree.n()) + "\n";
  for (int v = 1; v <= tree.n(); ++v)
    out += "node " + std::to_string(v) + " " + std::to_string(tree.weight(v)) + "\n";
  append_edges(out, tree.edges());
  return out;
}

std::string write_instance(const WeightedTree& tree, const DualWeights& dw,
                           const std::vector<std::string>& header_comments) {
  std::string out;
  append_headers(out, header_comments);
  out += "dtree " + std::to_string(tree.n()) + "\n";
  for (int v = 1; v <= tree.n(); ++v)
    out += "node " + std::to_string(v) + " " + std::to_string(dw.minus(v)) + " " +
           std::to_string(dw.plus(v)) + "\n";
  append_edges(out, tree.edges());
  return out;
}

std::string write_instance(const SimpleGraph& graph, const std::vector<Weight>& weights,
                           const std::vector<std::string>& header_comments) {
  std::string out;
  append_headers(out, header_comments);
  out += "graph " + std::to_string(graph.n()) + " " + std::to_string(graph.m()) + "\n";
  for (int v = 1; v <= graph.n(); ++v)
    out += "node " + std::to_string(v) + " " + std::to_string(weights[v]) + "\n";
  append_edges(out, graph.edges());
  return out;
}

std::string write_solution(const VertexSet& set, const std::vector<Weight>& weights) {
  std::string ids;
  for (int v : set) {
    if (!ids.empty()) ids += ",";
    ids += std::to_string(v);
  }
  return "safeset weight=" + std::to_string(set.weight(weights)) +
         " size=" + std::to_string(set.size()) + " vertices=" + ids;
}

int instance_n(const Instance& inst) {
  if (const auto* t = std::get_if<TreeInstance>(&inst)) return t->tree.n();
  if (const auto* d = std::get_if<DualTreeInstance>(&inst)) return d->tree.n();
  return std::get<GraphInstance>(inst).graph.n();
}

std::vector<Weight> instance_objective_weights(const Instance& inst) {
  if (const auto* t = std::get_if<TreeInstance>(&inst)) return t->tree.weights();
  if (const auto* d = std::get_if<DualTreeInstance>(&inst)) return d->weights.minus_weights();
  return std::get<GraphInstance>(inst).weights;
}

}  // namespace safeset
