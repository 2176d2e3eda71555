#include "ffree/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ffree {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

Digraph parse_arclist(const std::vector<std::string>& lines) {
  std::istringstream head(lines[0]);
  std::string key;
  int n = 0;
  head >> key >> n;
  if (key != "n" || n <= 0) throw std::runtime_error("arc list: bad header line");
  std::string extra;
  if (head >> extra) throw std::runtime_error("arc list: bad header line");
  Digraph d(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int u = -1, w = -1;
    if (!(ls >> u >> w) || (ls >> extra))
      throw std::runtime_error("arc list: expected 'tail head' on line: " + lines[i]);
    if (u < 0 || u >= n || w < 0 || w >= n)
      throw std::runtime_error("arc list: vertex out of range on line: " + lines[i]);
    if (u == w) throw std::runtime_error("arc list: loops are not allowed");
    d.add_arc(u, w);  // repeats are harmless
  }
  return d;
}

Digraph parse_matrix(const std::vector<std::string>& lines) {
  std::vector<std::vector<int>> rows;
  for (const auto& line : lines) {
    std::vector<int> row;
    for (char c : line) {
      if (c == '0' || c == '1')
        row.push_back(c - '0');
      else if (c != ' ' && c != '\t' && c != '\r')
        throw std::runtime_error(std::string("matrix: unexpected character '") + c + "'");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::runtime_error("matrix: no rows");
  ZeroOneMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::runtime_error("matrix: row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(n));
    if (rows[i][i] != 0)
      throw std::runtime_error("matrix: nonzero diagonal entry in row " + std::to_string(i));
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint8_t>(rows[i][j]);
  }
  return from_matrix(m);
}

}  // namespace

Digraph read_digraph_text(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::runtime_error("parse: empty input");
  std::istringstream probe(lines[0]);
  std::string first;
  probe >> first;
  if (first == "n") return parse_arclist(lines);
  return parse_matrix(lines);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_digraph_text(buf.str());
}

std::string write_matrix(const Digraph& d) {
  std::string out;
  const int n = d.order();
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) out.push_back(d.has_arc(u, w) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string write_arclist(const Digraph& d) {
  std::ostringstream os;
  os << "n " << d.order() << '\n';
  for (auto [u, w] : d.arcs()) os << u << ' ' << w << '\n';
  return os.str();
}

std::string write_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, w] : d.arcs()) os << "  " << u << " -> " << w << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json witness_json(const TwoWalkWitness& w) {
  return {{"a", w.a}, {"b", w.b}, {"c1", w.c1}, {"c2", w.c2}};
}

nlohmann::json audit_json(const AuditReport& rep) {
  const char* status = "ok";
  if (rep.status == AuditStatus::WrongSize) status = "wrong-size";
  if (rep.status == AuditStatus::NotFFree) status = "not-admissible";
  return {{"status", status},
          {"reversed", rep.reversed},
          {"delta_plus", rep.delta_plus},
          {"delta_plus_ok", rep.delta_plus_ok},
          {"alpha", rep.alpha_value},
          {"alpha_ok", rep.alpha_ok},
          {"fanin_ok", rep.fanin_ok}};
}

}  // namespace

std::string check_report_json(const Digraph& d, const CheckReport& rep) {
  const NatMatrix sq = square(to_matrix(d));
  nlohmann::json j;
  j["n"] = d.order();
  j["size"] = d.size();
  j["trace"] = to_matrix(d).trace();
  j["max_square_entry"] = sq.max_entry();
  j["admissible"] = rep.ok;
  j["witness"] = rep.witness ? witness_json(*rep.witness) : nlohmann::json();
  return j.dump(2);
}

std::string search_result_json(const SearchResult& res) {
  nlohmann::json j;
  j["n"] = res.n;
  j["max_size"] = res.max_size;
  std::string bits(res.witness_bits.size(), '0');
  for (std::size_t i = 0; i < res.witness_bits.size(); ++i)
    if (res.witness_bits[i]) bits[i] = '1';
  j["witness_bits"] = bits;
  j["witness_arcs"] = nlohmann::json::array();
  for (auto [u, w] : res.witness.arcs()) j["witness_arcs"].push_back({u, w});
  j["nodes_explored"] = res.nodes_explored;
  j["nodes_pruned"] = res.nodes_pruned;
  j["complete"] = res.complete;
  j["seconds"] = res.seconds;
  return j.dump(2);
}

std::string audit_report_json(const AuditReport& rep) { return audit_json(rep).dump(2); }

std::string recognition_report_json(const RecognitionReport& rep) {
  nlohmann::json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["n"] = rep.n;
  j["size"] = rep.size;
  j["expected_size"] = rep.expected_size;
  j["witness"] = rep.witness ? witness_json(*rep.witness) : nlohmann::json();
  j["matches"] = nlohmann::json::array();
  for (const auto& m : rep.matches) {
    nlohmann::json mj;
    mj["family"] = family_name(m.family);
    mj["direction"] = m.reversed ? "reversed" : "as-is";
    mj["mapping"] = m.mapping;
    mj["spec"] = nlohmann::json::parse(spec_to_json(m.spec));
    j["matches"].push_back(std::move(mj));
  }
  j["audit"] = audit_json(rep.audit);
  return j.dump(2);
}

}  // namespace ffree
