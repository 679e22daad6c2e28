#include "cli/document.hpp"

#include <fstream>
#include <sstream>

#include "loghat/error.hpp"
#include "loghat/motive.hpp"

namespace loghat::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ValidationError(path + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

BigInt parse_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                                          : BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  fail(path, "expected an integer");
}

std::size_t parse_size(const json& j, const std::string& path) {
  BigInt v = parse_integer(j, path);
  if (v < 0 || v > 4096) fail(path, "expected a size in [0, 4096]");
  return v.get_ui();
}

ModuleSpec parse_module(const json& j, const std::string& path) {
  ModuleSpec m;
  m.rank = parse_size(field(j, "rank", path), path + ".rank");
  m.frob = parse_matrix(field(j, "frob", path), path + ".frob");
  if (m.frob.rows() != m.rank || m.frob.cols() != m.rank)
    fail(path + ".frob", "expected a " + std::to_string(m.rank) + "x" + std::to_string(m.rank) + " matrix");
  return m;
}

std::vector<QMatrix> parse_matrix_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of matrices");
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_matrix(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ordered_json int_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json module_json(const ModuleSpec& m) {
  ordered_json j;
  j["rank"] = m.rank;
  j["frob"] = matrix_json(m.frob);
  return j;
}

}  // namespace

QMatrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows) {
    if (!j[0].is_array()) fail(path + "[0]", "expected a row list");
    cols = j[0].size();
  }
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(rp, "expected a row list");
    if (j[i].size() != cols) fail(rp, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_integer(j[i][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json matrix_json(const QMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigRat& x = m(i, c);
      if (is_integral(x)) row.push_back(int_json(x.get_num()));
      else row.push_back(x.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

InputDocument parse_document(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
  InputDocument doc;
  const std::string& p = source;
  const json& version = field(root, "version", p);
  if (!version.is_string() || version.get<std::string>() != "1") fail(p + ".version", "expected \"1\"");
  doc.q = parse_integer(field(root, "q", p), p + ".q");
  if (!is_prime_power(doc.q)) fail(p + ".q", "expected a prime power, got " + doc.q.get_str());
  doc.k = parse_size(field(root, "k", p), p + ".k");
  if (doc.k == 0) fail(p + ".k", "expected a positive integer");
  const json& objects = field(root, "objects", p);
  if (!objects.is_array()) fail(p + ".objects", "expected a list");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string op = p + ".objects[" + std::to_string(i) + "]";
    const json& o = objects[i];
    ObjectEntry e;
    e.name = "object" + std::to_string(i);
    if (o.is_object() && o.contains("name")) {
      if (!o["name"].is_string()) fail(op + ".name", "expected a string");
      e.name = o["name"].get<std::string>();
    }
    const json& kind = field(o, "kind", op);
    const std::string ks = kind.is_string() ? kind.get<std::string>() : "";
    if (ks == "pairing") {
      PairingSpec s;
      s.M = parse_module(field(o, "M", op), op + ".M");
      s.N = parse_module(field(o, "N", op), op + ".N");
      s.X = parse_matrix_list(field(o, "X", op), op + ".X");
      if (s.X.size() != doc.k) fail(op + ".X", "expected k = " + std::to_string(doc.k) + " matrices");
      e.body = std::move(s);
    } else if (ks == "motive") {
      MotiveSpec s;
      s.Y = parse_module(field(o, "Y", op), op + ".Y");
      s.X = parse_module(field(o, "X", op), op + ".X");
      s.pairing = parse_matrix_list(field(o, "pairing", op), op + ".pairing");
      if (s.pairing.size() != doc.k) fail(op + ".pairing", "expected k = " + std::to_string(doc.k) + " matrices");
      const json& ap = field(o, "abelian_poly", op);
      if (!ap.is_array() || ap.empty()) fail(op + ".abelian_poly", "expected a nonempty coefficient list");
      std::vector<BigInt> c;
      for (std::size_t t = 0; t < ap.size(); ++t)
        c.push_back(parse_integer(ap[t], op + ".abelian_poly[" + std::to_string(t) + "]"));
      s.abelian_poly = IntPoly(std::move(c));
      const json& ct = field(o, "classical_torsion", op);
      if (!ct.is_boolean()) fail(op + ".classical_torsion", "expected true or false");
      s.classical_torsion = ct.get<bool>();
      e.body = std::move(s);
    } else {
      fail(op + ".kind", "expected \"pairing\" or \"motive\"");
    }
    doc.objects.push_back(std::move(e));
  }
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

ordered_json to_json(const InputDocument& doc) {
  ordered_json j;
  j["version"] = doc.version;
  j["q"] = int_json(doc.q);
  j["k"] = doc.k;
  j["objects"] = ordered_json::array();
  for (const auto& o : doc.objects) {
    ordered_json e;
    e["name"] = o.name;
    if (auto* p = std::get_if<PairingSpec>(&o.body)) {
      e["kind"] = "pairing";
      e["M"] = module_json(p->M);
      e["N"] = module_json(p->N);
      e["X"] = ordered_json::array();
      for (const auto& x : p->X) e["X"].push_back(matrix_json(x));
    } else {
      const auto& m = std::get<MotiveSpec>(o.body);
      e["kind"] = "motive";
      e["Y"] = module_json(m.Y);
      e["X"] = module_json(m.X);
      e["pairing"] = ordered_json::array();
      for (const auto& x : m.pairing) e["pairing"].push_back(matrix_json(x));
      e["abelian_poly"] = ordered_json::array();
      for (const auto& c : m.abelian_poly.coeffs()) e["abelian_poly"].push_back(int_json(c));
      e["classical_torsion"] = m.classical_torsion;
    }
    j["objects"].push_back(std::move(e));
  }
  return j;
}

std::string serialize(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace loghat::cli
