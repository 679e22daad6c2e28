#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "cli/document.hpp"
#include "loghat/classify.hpp"
#include "loghat/motive.hpp"

namespace loghat::cli {

using Json = nlohmann::ordered_json;

struct ReportContext {
  BigInt q;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  int unknowns = 0;
};

struct BuiltObject {
  std::string name;
  bool motive = false;
  LatticePairing pairing;  // the monodromy pairing for motives
  std::optional<SymbolicLogOneMotive> m;
};

// Validates modules, equivariance and (for motives) the weight-1 part.
BuiltObject build_object(const InputDocument& doc, const ObjectEntry& e);

std::string factored(const IntPoly& p);
std::string describe_k1(const SimpleClassK1& c);

Json charpoly_report(const BuiltObject& o, ReportContext& ctx);
Json polarize_report(const BuiltObject& o, ReportContext& ctx);
Json normalform_report(const BuiltObject& o, ReportContext& ctx);
Json simple_report(const BuiltObject& o, ReportContext& ctx);
Json classify_report(const BuiltObject& o, ReportContext& ctx);
Json decompose_report(const BuiltObject& o, ReportContext& ctx);
Json analyze_report(const BuiltObject& o, ReportContext& ctx);

Json classification_json(const Classification& c);
Json ppol_json(const PpolResult& r);

// Indented key: value rendering of a report.
std::string render_text(const Json& j);

}  // namespace loghat::cli
