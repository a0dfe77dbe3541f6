#include "kz/text_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kz {

namespace {

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  std::string out = hash == std::string::npos ? line : line.substr(0, hash);
  size_t begin = out.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = out.find_last_not_of(" \t\r\n");
  return out.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string format_monomial(const Monomial& m, const VariableSpace& space) {
  if (m.nvars() != space.count())
    throw std::invalid_argument("format_monomial: wrong variable count");
  std::string out;
  for (int v = 0; v < m.nvars(); ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += space.label(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& token, const VariableSpace& space) {
  std::vector<int> e(static_cast<size_t>(space.count()), 0);
  std::string body = trim(token);
  if (body == "1" || body.empty()) return Monomial(std::move(e));
  for (const std::string& raw : split(body, '*')) {
    std::string factor = trim(raw);
    if (factor.empty() || factor == "1") continue;
    std::string name = factor;
    int exp = 1;
    size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      exp = std::stoi(factor.substr(caret + 1));
      if (exp < 0) throw std::invalid_argument("parse_monomial: negative exponent");
    }
    int idx = space.index_of(name);
    if (idx < 0) throw std::invalid_argument("parse_monomial: unknown variable " + name);
    e[static_cast<size_t>(idx)] += exp;
  }
  return Monomial(std::move(e));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& l : ideal.space().labels()) out += " " + l;
  out += "\n";
  for (const auto& g : ideal.generators()) out += format_monomial(g, ideal.space()) + "\n";
  return out;
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_vars = false;
  VariableSpace space;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    if (!have_vars) {
      if (body.rfind("vars:", 0) != 0)
        throw std::invalid_argument("parse_ideal: expected a `vars:` header line");
      std::istringstream head(body.substr(5));
      std::vector<std::string> labels;
      std::string label;
      while (head >> label) labels.push_back(label);
      if (labels.empty()) throw std::invalid_argument("parse_ideal: empty variable list");
      space = VariableSpace(std::move(labels));
      have_vars = true;
      continue;
    }
    gens.push_back(parse_monomial(body, space));
  }
  if (!have_vars) throw std::invalid_argument("parse_ideal: missing `vars:` header");
  return MonomialIdeal::from_generators(std::move(space), std::move(gens));
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [i, j] : g.edges())
    out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream row(body);
    if (n < 0) {
      if (!(row >> n) || n < 0) throw std::invalid_argument("parse_graph: bad vertex count");
      continue;
    }
    int i, j;
    if (!(row >> i >> j)) throw std::invalid_argument("parse_graph: bad edge line: " + body);
    edges.emplace_back(i - 1, j - 1);
  }
  if (n < 0) throw std::invalid_argument("parse_graph: missing vertex count");
  return SimpleGraph(n, std::move(edges));
}

std::string format_koszul_element(const KoszulElement& z) {
  std::string out;
  for (const auto& [key, c] : z.terms()) {
    out += std::to_string(c) + " * " + format_monomial(key.u, z.space()) + " * e[";
    bool first = true;
    for (int i : mask_to_indices(key.jmask)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    out += "]\n";
  }
  return out;
}

KoszulElement parse_koszul_element(const std::string& text, const CoefficientModule& module) {
  KoszulElement z(module);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    std::vector<std::string> parts = split(body, '*');
    if (parts.size() < 3) throw std::invalid_argument("parse_koszul_element: need coeff * monomial * e[J]");
    int64_t coeff = std::stoll(trim(parts.front()));
    std::string tail = trim(parts.back());
    if (tail.rfind("e[", 0) != 0 || tail.back() != ']')
      throw std::invalid_argument("parse_koszul_element: malformed index set " + tail);
    uint64_t jmask = 0;
    std::string inner = tail.substr(2, tail.size() - 3);
    if (!trim(inner).empty())
      for (const std::string& tok : split(inner, ',')) {
        int idx = std::stoi(trim(tok)) - 1;
        if (idx < 0 || idx >= module.nvars())
          throw std::invalid_argument("parse_koszul_element: index out of range");
        jmask |= uint64_t(1) << idx;
      }
    // the monomial may itself contain '*', so rejoin the middle parts
    std::string monomial_text;
    for (size_t t = 1; t + 1 < parts.size(); ++t) {
      if (t > 1) monomial_text += "*";
      monomial_text += parts[t];
    }
    z.add_term(parse_monomial(monomial_text, module.space()), jmask, coeff);
  }
  return z;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kz
