#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "loghat/matrix.hpp"
#include "loghat/polynomial.hpp"

namespace loghat::cli {

struct ModuleSpec {
  std::size_t rank = 0;
  QMatrix frob;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct PairingSpec {
  ModuleSpec M, N;
  std::vector<QMatrix> X;
  friend bool operator==(const PairingSpec&, const PairingSpec&) = default;
};

struct MotiveSpec {
  ModuleSpec Y, X;
  std::vector<QMatrix> pairing;
  IntPoly abelian_poly = IntPoly::constant(1);
  bool classical_torsion = false;
  friend bool operator==(const MotiveSpec&, const MotiveSpec&) = default;
};

struct ObjectEntry {
  std::string name;
  std::variant<PairingSpec, MotiveSpec> body;
  bool is_motive() const { return body.index() == 1; }
  friend bool operator==(const ObjectEntry&, const ObjectEntry&) = default;
};

struct InputDocument {
  std::string version = "1";
  BigInt q = 2;
  std::size_t k = 1;
  std::vector<ObjectEntry> objects;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Throws ValidationError with the offending field path or parse position.
InputDocument parse_document(const std::string& text, const std::string& source = "<input>");
InputDocument read_document(const std::string& path);
nlohmann::ordered_json to_json(const InputDocument& doc);
std::string serialize(const InputDocument& doc);

nlohmann::ordered_json matrix_json(const QMatrix& m);
// Integer matrix from JSON rows; `path` names the field in diagnostics.
QMatrix parse_matrix(const nlohmann::json& j, const std::string& path);

}  // namespace loghat::cli
