#include "nlk/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nlk/error.hpp"

namespace nlk::io {

namespace {

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

[[noreturn]] void bad(const std::string& what) { throw ParseError("algebra file: " + what); }

int get_int(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Scalar get_scalar(const json& j) {
  if (!j.is_string()) bad("scalars must be JSON strings");
  return parse_scalar(j.get<std::string>());
}

int parse_index(const std::string& s, int dim) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    bad("index key \"" + s + "\" is not a positive integer");
  }
  const int i = std::stoi(s);
  if (i < 1 || i > dim) bad("index " + s + " out of range");
  return i;
}

}  // namespace

// ---------------------------------------------------------------- algebra files

json to_json(const AlgebraFile& f) {
  const Algebra& a = f.algebra;
  json j = json::object();
  j["arity"] = a.arity();
  j["dim"] = a.dim();
  if (!a.labels.empty()) j["basis_labels"] = a.labels;
  json brackets = json::array();
  for (const auto& [key, value] : a.tensor.entries()) {
    json v = json::object();
    for (std::size_t m = 0; m < value.size(); ++m)
      if (sgn(value[m]) != 0) v[std::to_string(m + 1)] = to_string(value[m]);
    brackets.push_back({{"args", key}, {"value", v}});
  }
  j["brackets"] = std::move(brackets);
  if (f.form) {
    json rows = json::array();
    const Mat& g = f.form->gram();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(to_string(g(r, c)));
      rows.push_back(std::move(row));
    }
    j["form"] = std::move(rows);
  }
  return j;
}

AlgebraFile algebra_file_from_json(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  static const std::set<std::string> known{"arity", "dim", "basis_labels", "brackets", "form"};
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) bad("unknown key \"" + key + "\"");

  const int arity = get_int(j, "arity");
  const int dim = get_int(j, "dim");
  if (arity < 2) bad("arity must be at least 2");
  if (dim < 0) bad("dim must be non-negative");

  std::vector<std::string> labels;
  if (j.contains("basis_labels")) {
    const json& l = j.at("basis_labels");
    if (!l.is_array() || l.size() != to_size(dim)) bad("basis_labels must be an array of dim strings");
    for (const auto& s : l) {
      if (!s.is_string()) bad("basis labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  StructureTensor t(arity, dim);
  if (!j.contains("brackets") || !j.at("brackets").is_array()) bad("\"brackets\" must be an array");
  std::set<Tuple> seen;
  for (const auto& entry : j.at("brackets")) {
    if (!entry.is_object() || !entry.contains("args") || !entry.contains("value")) {
      bad("each bracket needs \"args\" and \"value\"");
    }
    const json& args = entry.at("args");
    if (!args.is_array() || args.size() != to_size(arity)) bad("\"args\" must list arity indices");
    Tuple key;
    for (const auto& i : args) {
      if (!i.is_number_integer()) bad("bracket indices must be integers");
      const int idx = i.get<int>();
      if (idx < 1 || idx > dim) bad("bracket index " + std::to_string(idx) + " out of range");
      if (!key.empty() && idx <= key.back()) bad("bracket args must be strictly increasing");
      key.push_back(idx);
    }
    if (!seen.insert(key).second) bad("duplicate bracket entry");
    const json& value = entry.at("value");
    if (!value.is_object()) bad("\"value\" must map indices to scalar strings");
    Vec v(to_size(dim));
    for (const auto& [k, s] : value.items()) v[to_size(parse_index(k, dim) - 1)] = get_scalar(s);
    t.set(key, v);
  }

  AlgebraFile f{Algebra(std::move(t), std::move(labels)), std::nullopt};
  if (j.contains("form")) {
    const json& rows = j.at("form");
    if (!rows.is_array() || rows.size() != to_size(dim)) bad("\"form\" must be a dim x dim array");
    Mat g(to_size(dim), to_size(dim));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != to_size(dim)) bad("\"form\" must be a dim x dim array");
      for (std::size_t c = 0; c < rows[r].size(); ++c) g(r, c) = get_scalar(rows[r][c]);
    }
    f.form = Form::unchecked(std::move(g));
  }
  return f;
}

std::string emit(const AlgebraFile& f) { return to_json(f).dump(2) + "\n"; }

AlgebraFile parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_file_from_json(j);
}

AlgebraFile read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::filesystem::path& path, const AlgebraFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << emit(f);
  if (!out) throw ParseError("write failed for " + path.string());
}

AlgebraFile from_metric(const MetricAlgebra& ma) { return {ma.algebra(), ma.form()}; }

// ---------------------------------------------------------------- reports

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v.entries()) out.push_back(to_string(s));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", to_json(s.basis())}}; }

std::string describe(ViolationKind k) {
  switch (k) {
    case ViolationKind::fundamental_identity:
      return "fundamental identity [[x1..xn],y2..yn] = sum_i [x1..[xi,y2..yn]..xn]";
    case ViolationKind::invariance: return "invariance B([x1..x(n-1),y1],y2) = -B([x1..x(n-1),y2],y1)";
    case ViolationKind::symmetry: return "symmetry B(x,y) = B(y,x)";
    case ViolationKind::nondegeneracy: return "nondegeneracy: gram matrix has full rank";
    case ViolationKind::levi: return "Levi annotation consistency";
  }
  return "";
}

json to_json(const ViolationReport& r, std::size_t max_witnesses) {
  json witnesses = json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i) {
    const Witness& w = r.witnesses[i];
    json jw = json::object();
    jw["tuples"] = w.tuples;
    if (const auto* v = std::get_if<Vec>(&w.residual)) jw["residual"] = to_json(*v);
    if (const auto* s = std::get_if<Scalar>(&w.residual)) jw["residual"] = to_string(*s);
    if (!w.note.empty()) jw["note"] = w.note;
    witnesses.push_back(std::move(jw));
  }
  return {{"kind", to_string(r.kind)},
          {"check", describe(r.kind)},
          {"ok", r.ok()},
          {"witness_count", r.witnesses.size()},
          {"witnesses", std::move(witnesses)}};
}

json to_json(const MetricReport& r) {
  return json::array({to_json(r.fundamental_identity), to_json(r.symmetry), to_json(r.invariance),
                      to_json(r.nondegeneracy)});
}

json to_json(const InvariantProfile& p) {
  return {{"dim_center", p.dim_center},
          {"dim_derived", p.dim_derived},
          {"center_isotropic", p.center_isotropic},
          {"dim_center_cap_derived", p.dim_center_cap_derived},
          {"solvable", p.solvable},
          {"perfect", p.perfect}};
}

json to_json(const ClassificationReport& r) {
  json j = {{"case", to_string(r.label)}, {"n", r.n}, {"d", r.d}, {"k", r.k}, {"profile", to_json(r.profile)}};
  if (r.label == CaseLabel::case3_mixed) {
    j["l"] = r.l;
    j["k1"] = r.k1;
  }
  return j;
}

json to_json(const LeviReport& r) {
  json failures = json::array();
  for (const auto& w : r.violations.witnesses) failures.push_back(w.note);
  return {{"ok", r.ok()}, {"checks_run", r.checks_run}, {"failures", std::move(failures)}};
}

// ---------------------------------------------------------------- vectors

std::vector<Vec> parse_vectors(std::string_view text, std::size_t dim) {
  std::vector<Vec> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const std::string_view item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::vector<Scalar> entries;
    std::size_t s = 0;
    while (true) {
      const std::size_t comma = item.find(',', s);
      entries.push_back(parse_scalar(item.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s)));
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    if (entries.size() != dim) {
      throw ParseError("vector has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(dim));
    }
    out.emplace_back(std::move(entries));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace nlk::io
