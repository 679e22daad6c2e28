#include "cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cli/fixtures.hpp"
#include "cli/report.hpp"
#include "loghat/error.hpp"

namespace loghat::cli {

namespace {

const std::set<std::string> kCommands{"analyze", "classify", "isogeny",  "polarize", "decompose",
                                      "simple",  "charpoly", "normalform", "fixture", "emit_fixture"};

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string format = "text";
  bool strict = false;
  std::uint64_t seed = 0;
  std::string from, to, morphism;
};

Json object_report(const std::string& command, const BuiltObject& o, ReportContext& ctx) {
  Json j;
  j["name"] = o.name;
  j["kind"] = o.motive ? "motive" : "pairing";
  if (command == "analyze") j["report"] = analyze_report(o, ctx);
  else if (command == "classify") j["report"] = classify_report(o, ctx);
  else if (command == "polarize") j["report"] = polarize_report(o, ctx);
  else if (command == "decompose") j["report"] = decompose_report(o, ctx);
  else if (command == "simple") j["report"] = simple_report(o, ctx);
  else if (command == "charpoly") j["report"] = charpoly_report(o, ctx);
  else if (command == "normalform") j["report"] = normalform_report(o, ctx);
  return j;
}

const BuiltObject& find_object(const std::vector<BuiltObject>& objs, const std::string& name) {
  for (const auto& o : objs)
    if (o.name == name) return o;
  throw ValidationError("no object named \"" + name + "\"");
}

Json isogeny_report(const Options& opt, const std::vector<InputDocument>& docs, ReportContext& ctx) {
  if (opt.from.empty() || opt.to.empty() || opt.morphism.empty())
    throw ValidationError("isogeny needs --from NAME --to NAME --morphism FILE");
  std::vector<BuiltObject> objs;
  for (const auto& d : docs)
    for (const auto& e : d.objects) objs.push_back(build_object(d, e));
  const BuiltObject& src = find_object(objs, opt.from);
  const BuiltObject& dst = find_object(objs, opt.to);
  std::ifstream in(opt.morphism);
  if (!in) throw ValidationError(opt.morphism + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  nlohmann::json mj;
  try {
    mj = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error&) {
    throw ValidationError(opt.morphism + ": malformed JSON");
  }
  if (!mj.is_object() || !mj.contains("psi1") || !mj.contains("psi2"))
    throw ValidationError(opt.morphism + ": expected fields \"psi1\" and \"psi2\"");
  QMatrix psi1 = parse_matrix(mj["psi1"], opt.morphism + ".psi1");
  QMatrix psi2 = parse_matrix(mj["psi2"], opt.morphism + ".psi2");
  PairingMorphism phi = validate_morphism(src.pairing, dst.pairing, psi1, psi2);
  IsogenyInfo info = is_isogeny(src.pairing, dst.pairing, phi);
  Json j;
  j["from"] = opt.from;
  j["to"] = opt.to;
  j["morphism"] = "valid";
  j["isogeny"] = info.isogeny;
  j["cokernel_orders"] = {info.cokernel1 ? info.cokernel1->get_str() : "infinite",
                          info.cokernel2 ? info.cokernel2->get_str() : "infinite"};
  if (info.isogeny) {
    j["charpolys_agree"] = src.pairing.M.charpoly() == dst.pairing.M.charpoly() &&
                           src.pairing.N.charpoly() == dst.pairing.N.charpoly();
    Classification a = classify_pairing(src.pairing, ctx.q, ctx.seed);
    Classification b = classify_pairing(dst.pairing, ctx.q, ctx.seed);
    j["ppol"] = {to_string(a.ppol.verdict), to_string(b.ppol.verdict)};
    Verdict v = same_invariants(a, b, ctx.seed);
    if (v == Verdict::Unknown) ++ctx.unknowns;
    j["invariants_agree"] = to_string(v);
  }
  return j;
}

int execute(const Options& opt, std::ostream& out) {
  if (opt.command == "fixture" || opt.command == "emit_fixture") {
    if (opt.files.size() != 1) throw ValidationError("fixture takes exactly one name; known: paper-k2-remark, "
                                                     "standard-logpoint-r4-q2, mixed-motive-q2, rank1-motive-q5");
    out << serialize(emit_fixture(opt.files.front()));
    return kOk;
  }
  if (opt.files.empty()) throw ValidationError("no input files");
  std::vector<InputDocument> docs;
  for (const auto& f : opt.files) docs.push_back(read_document(f));
  ReportContext ctx;
  ctx.seed = opt.seed;
  Json report;
  report["command"] = opt.command;
  if (opt.command == "isogeny") {
    ctx.q = docs.front().q;
    ctx.k = docs.front().k;
    report["result"] = isogeny_report(opt, docs, ctx);
  } else {
    report["files"] = Json::array();
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const auto& d = docs[i];
      ctx.q = d.q;
      ctx.k = d.k;
      Json fj;
      fj["path"] = opt.files[i];
      fj["q"] = d.q.get_str();
      fj["k"] = d.k;
      fj["objects"] = Json::array();
      std::vector<BuiltObject> built;
      for (const auto& e : d.objects) built.push_back(build_object(d, e));
      for (const auto& o : built) {
        try {
          fj["objects"].push_back(object_report(opt.command, o, ctx));
        } catch (const PreconditionError& err) {
          throw ValidationError("object \"" + o.name + "\": " + err.what());
        }
      }
      report["files"].push_back(std::move(fj));
    }
  }
  report["unknown_verdicts"] = ctx.unknowns;
  if (opt.format == "json") out << report.dump(2) << "\n";
  else out << render_text(report);
  return opt.strict && ctx.unknowns > 0 ? kUnknownStrict : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"loghat: classification data of log abelian varieties over finite log points"};
  Options opt;
  app.add_option("command", opt.command, "analyze | classify | isogeny | polarize | decompose | simple | charpoly | "
                                         "normalform | fixture")
      ->required();
  app.add_option("files", opt.files, "input documents (or a fixture name)");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", opt.strict, "exit 3 when any verdict is unknown");
  app.add_option("--seed", opt.seed, "seed for randomized retries");
  app.add_option("--from", opt.from, "isogeny: source object name");
  app.add_option("--to", opt.to, "isogeny: target object name");
  app.add_option("--morphism", opt.morphism, "isogeny: JSON file with psi1, psi2");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (!kCommands.count(opt.command)) {
    err << "loghat: unknown command \"" << opt.command << "\"\n";
    return kUsage;
  }
  try {
    return execute(opt, out);
  } catch (const ValidationError& e) {
    err << "loghat: validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const PreconditionError& e) {
    err << "loghat: validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "loghat: error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace loghat::cli
