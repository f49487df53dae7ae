#include "mcgrep/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mcgrep {

using nlohmann::json;

namespace {

json cyc_json(const Cyc& c) {
  json arr = json::array();
  for (const auto& q : c.coords()) arr.push_back(rational_str(q));
  return arr;
}

Cyc cyc_parse(int r, const json& arr) {
  std::vector<Rational> coords;
  for (const auto& s : arr) coords.push_back(rational_parse(s.get<std::string>()));
  return Cyc::from_coords(r, std::move(coords));
}

}  // namespace

std::string cyc_to_json(const Cyc& c) { return cyc_json(c).dump(); }

Cyc cyc_from_json(int r, const std::string& text) {
  return cyc_parse(r, json::parse(text));
}

std::string laurent_to_json(const Laurent<Rational>& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json{{"exp", e}, {"coeff", rational_str(c)}});
  return out.dump();
}

std::string laurent_cyc_to_json(const Laurent<Cyc>& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json{{"exp", e}, {"coeff", cyc_json(c)}});
  return out.dump();
}

std::string alg_to_json(const AlgElem& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back(json{{"idx", {k[0], k[1], k[2]}}, {"coeff", cyc_json(c)}});
  json out{{"r", x.r()}, {"order", "ETF"}, {"terms", terms}};
  return out.dump();
}

AlgElem alg_from_json(const std::string& text) {
  json in = json::parse(text);
  int r = in.at("r").get<int>();
  if (in.at("order").get<std::string>() != "ETF")
    throw std::invalid_argument("alg_from_json: only the ETF order is stored");
  AlgElem x(r);
  for (const auto& t : in.at("terms")) {
    const auto& idx = t.at("idx");
    x.add_term(idx.at(0).get<int>(), idx.at(1).get<int>(), idx.at(2).get<int>(),
               cyc_parse(r, t.at("coeff")));
  }
  return x;
}

std::string heis_word_to_json(const HeisWord& w) {
  json out{{"c", w.c}, {"a", w.a}, {"b", w.b}};
  return out.dump();
}

HeisWord heis_word_from_json(const std::string& text) {
  json in = json::parse(text);
  HeisWord w;
  w.c = in.at("c").get<long>();
  w.a = in.at("a").get<std::vector<long>>();
  w.b = in.at("b").get<std::vector<long>>();
  if (w.a.size() != w.b.size())
    throw std::invalid_argument("heis_word_from_json: vector lengths differ");
  return w;
}

std::string matrix_to_json(const SparseMat<Cyc>& m, int g, int r) {
  json entries = json::array();
  for (int col = 0; col < m.cols(); ++col)
    for (const auto& [row, v] : m.col(col))
      entries.push_back(json::array({row, col, cyc_json(v)}));
  json out{{"r", r}, {"g", g}, {"basis", "ETF-lex"}, {"entries", entries}};
  return out.dump();
}

std::string matrix_to_csv(const SparseMat<Cyc>& m) {
  std::string out;
  for (int col = 0; col < m.cols(); ++col)
    for (const auto& [row, v] : m.col(col)) {
      out += std::to_string(row);
      out += ",";
      out += std::to_string(col);
      out += ",";
      out += v.str();
      out += "\n";
    }
  return out;
}

std::string monomial_map_to_json(const SparseMat<Cyc>& m) {
  json perm = json::array();
  json scalars = json::array();
  for (int col = 0; col < m.cols(); ++col) {
    if (m.col(col).size() != 1)
      throw std::invalid_argument("monomial_map_to_json: not monomial");
    const auto& [row, v] = *m.col(col).begin();
    perm.push_back(row);
    scalars.push_back(cyc_json(v));
  }
  json out{{"dims", m.cols()}, {"perm", perm}, {"scalars", scalars}};
  return out.dump();
}

std::string report_to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json out{{"all_pass", rep.all_pass()}, {"checks", checks}};
  return out.dump(2) + "\n";
}

std::string report_to_markdown(const Report& rep) {
  std::string out = "| check | status | detail |\n|---|---|---|\n";
  for (const auto& c : rep.checks) {
    out += "| " + c.name + " | " + (c.pass ? "pass" : "FAIL") + " | " +
           c.detail + " |\n";
  }
  out += "\n";
  out += rep.all_pass() ? "All checks passed.\n" : "Some checks FAILED.\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
    os << content;
    if (!os.good()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic rename failed for " + path);
  }
}

}  // namespace mcgrep
