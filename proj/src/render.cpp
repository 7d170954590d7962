#include "hlpoly/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hlpoly {

namespace {

std::string note_for(const Verdict& v) {
  std::string note;
  if (v.reason) note = std::string(to_string(*v.reason));
  if (!v.detail.empty()) note += (note.empty() ? "" : ": ") + v.detail;
  if (v.hypothesis) {
    if (!note.empty()) note += "; ";
    note += v.hypothesis->satisfied ? "hypothesis ok"
                                    : "hypothesis violated at m=" + std::to_string(*v.hypothesis->first_violation);
  }
  return note;
}

}  // namespace

nlohmann::json to_json(const Rational& r) {
  return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string()) {
    throw ParseError("expected {\"num\": ..., \"den\": ...}");
  }
  Rational r = Rational::parse(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
  return r;
}

nlohmann::json to_json(const ResidueModP& r) { return {{"residue", r.value()}, {"modulus", r.modulus()}}; }

nlohmann::json to_json(const AuditValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

nlohmann::json to_json(const GridPoint& g) {
  nlohmann::json j;
  if (g.k) j["k"] = *g.k;
  if (g.alpha) j["alpha"] = to_json(*g.alpha);
  if (g.a) j["a"] = to_json(*g.a);
  if (g.prime) j["p"] = *g.prime;
  j["n"] = g.n;
  if (g.l) j["l"] = *g.l;
  if (g.form) j["form"] = *g.form;
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = std::string(to_string(v.status));
  if (v.witness) j["witness"] = {{"lhs", to_json(v.witness->lhs)}, {"rhs", to_json(v.witness->rhs)}};
  if (v.reason) j["reason"] = std::string(to_string(*v.reason));
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.hypothesis) {
    nlohmann::json h{{"satisfied", v.hypothesis->satisfied}};
    if (v.hypothesis->first_violation) h["first_violation_m"] = *v.hypothesis->first_violation;
    j["hypothesis"] = h;
  }
  return j;
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r = to_json(row.verdict);
    r["point"] = to_json(row.point);
    rows.push_back(std::move(r));
  }
  const auto s = report.summary();
  nlohmann::json j{
      {"identity", std::string(to_string(report.identity))},
      {"summary", {{"holds", s.holds}, {"fails", s.fails}, {"undefined", s.undefined}, {"total", s.total()}}},
      {"rows", std::move(rows)},
  };
  if (report.variant) j["variant"] = *report.variant;
  return j;
}

nlohmann::json to_json(const StirlingTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int m = 0; m <= n; ++m) row.push_back(table.entry(n, m).get_str());
    rows.push_back(std::move(row));
  }
  return {
      {"kind", table.kind() == StirlingKind::first_unsigned ? "first_unsigned" : "second"},
      {"max_n", table.max_n()},
      {"rows", std::move(rows)},
  };
}

std::string render_value(const AuditValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  const auto& res = std::get<ResidueModP>(v);
  return std::to_string(res.value()) + " (mod " + std::to_string(res.modulus()) + ")";
}

std::string point_label(const GridPoint& g) {
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](const char* key, const std::string& value) {
    os << sep << key << "=" << value;
    sep = " ";
  };
  if (g.k) put("k", std::to_string(*g.k));
  if (g.alpha) put("alpha", g.alpha->to_string());
  if (g.a) put("a", g.a->to_string());
  if (g.prime) put("p", std::to_string(*g.prime));
  put("n", std::to_string(g.n));
  if (g.l) put("l", std::to_string(*g.l));
  if (g.form) put("form", *g.form);
  return os.str();
}

std::string render_text(const AuditReport& report) {
  std::vector<std::array<std::string, 5>> table;
  table.push_back({"point", "status", "lhs", "rhs", "note"});
  for (const auto& row : report.rows) {
    const auto& v = row.verdict;
    table.push_back({point_label(row.point), std::string(to_string(v.status)),
                     v.witness ? render_value(v.witness->lhs) : "-", v.witness ? render_value(v.witness->rhs) : "-",
                     note_for(v)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& cells : table) {
    for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  }

  std::ostringstream os;
  const auto s = report.summary();
  os << "== " << to_string(report.identity);
  if (report.variant) os << " [variant " << *report.variant << "]";
  os << "  holds=" << s.holds << " fails=" << s.fails << " undefined=" << s.undefined << " total=" << s.total()
     << "\n";
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      line += cells[c];
      if (c + 1 < cells.size()) line += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hlpoly
