#include "parcat/text.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parcat {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse: empty number");
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("parse: bad number '" + s + "'");
  return v;
}

}  // namespace

std::string to_text(const RTuple& t) {
  std::string out;
  for (int i = 1; i <= t.n(); ++i) {
    out += std::to_string(t.at1(i));
    if (i < t.n()) {
      bool divider = false;
      for (int q : t.rset().elements())
        if (q == i) divider = true;
      out += divider ? ";" : ",";
    }
  }
  return out;
}

std::string to_text(const RPermutation& p) { return to_text(p.tuple()); }

std::string to_text_classical(const RPermutation& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    out += std::to_string(p.at1(i));
    if (i < p.n()) out += ",";
  }
  return out;
}

RTuple parse_rtuple(const std::string& s, std::optional<int> n, const std::optional<std::vector<int>>& relements) {
  const std::string body = strip(s);
  std::vector<int> entries;
  std::vector<int> dividers;
  for (const std::string& carrel : split(body, ';')) {
    for (const std::string& tok : split(carrel, ',')) entries.push_back(parse_int(tok));
    dividers.push_back(static_cast<int>(entries.size()));
  }
  dividers.pop_back();  // the final boundary is n, not a divider
  const int nn = static_cast<int>(entries.size());
  if (n && *n != nn)
    throw std::invalid_argument("tuple has " + std::to_string(nn) + " entries but n = " + std::to_string(*n) +
                                " was given");
  if (relements && *relements != dividers)
    throw std::invalid_argument("tuple dividers disagree with the given R");
  return RTuple(RSet(nn, std::move(dividers)), std::move(entries));
}

RPermutation parse_rpermutation(const std::string& s, std::optional<int> n,
                                const std::optional<std::vector<int>>& relements) {
  return RPermutation(parse_rtuple(s, n, relements));
}

RPermutation parse_classical_permutation(const std::string& s) {
  std::vector<int> e;
  for (const std::string& tok : split(strip(s), ',')) e.push_back(parse_int(tok));
  return RPermutation::classical(std::move(e));
}

std::string to_text(const CriticalList& c) {
  std::string out;
  for (int h = 1; h <= c.carrel_count(); ++h) {
    const auto& carrel = c.carrel(h);
    for (auto it = carrel.rbegin(); it != carrel.rend(); ++it) {
      out += std::to_string(it->index) + ":" + std::to_string(it->entry);
      if (std::next(it) != carrel.rend()) out += ",";
    }
    if (h < c.carrel_count()) out += ";";
  }
  return out;
}

std::string to_text(const Partition& shape) {
  std::string out;
  for (int i = 1; i <= shape.n(); ++i) {
    out += std::to_string(shape.part(i));
    if (i < shape.n()) out += ",";
  }
  return out;
}

Partition parse_partition(const std::string& s) { return Partition(parse_int_list(s)); }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  const std::string body = strip(s);
  if (body.empty()) return out;
  for (const std::string& tok : split(body, ',')) out.push_back(parse_int(tok));
  return out;
}

std::string to_text(const Tableau& t) {
  const Partition& shape = t.shape();
  const int width = static_cast<int>(std::to_string(shape.n()).size());
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= shape.n(); ++i) {
    if (shape.part(i) == 0) continue;
    if (any) os << "\n";
    any = true;
    for (int j = 1; j <= shape.part(i); ++j) {
      if (j > 1) os << ' ';
      std::string v = std::to_string(t.at(j, i));
      os << std::string(width - v.size(), ' ') << v;
    }
  }
  if (!any) os << "(empty)";
  return os.str();
}

std::string to_compact(const Tableau& t) {
  if (t.cols().empty()) return "-";
  std::string out;
  for (std::size_t j = 0; j < t.cols().size(); ++j) {
    if (j) out += "|";
    for (std::size_t i = 0; i < t.cols()[j].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t.cols()[j][i]);
    }
  }
  return out;
}

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json j;
  j["n"] = t.n();
  j["shape"] = t.shape().parts();
  j["columns"] = t.cols();
  return j;
}

Tableau parse_tableau(const std::string& s, const std::optional<Partition>& shape) {
  std::vector<std::vector<int>> cols;
  std::optional<Partition> got_shape;
  if (s.find('{') != std::string::npos) {
    nlohmann::json j = nlohmann::json::parse(s);
    got_shape = Partition(j.at("shape").get<std::vector<int>>());
    cols = j.at("columns").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && j.at("n").get<int>() != got_shape->n())
      throw std::invalid_argument("tableau JSON: n disagrees with the shape length");
  } else {
    const std::string flat = strip(s);
    if (flat != "-" && !flat.empty())
      for (const std::string& colstr : split(flat, '|')) {
        cols.push_back({});
        for (const std::string& tok : split(colstr, ',')) cols.back().push_back(parse_int(tok));
      }
  }
  if (!shape && !got_shape)
    throw std::invalid_argument("tableau: compact form needs an explicit shape");
  if (shape && got_shape && !(*shape == *got_shape))
    throw std::invalid_argument("tableau: shape disagrees with the JSON shape");
  return Tableau(shape ? *shape : *got_shape, std::move(cols));
}

std::string to_text(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

nlohmann::json to_json(const SparsePoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

}  // namespace parcat
