#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli/document.hpp"
#include "cli/fixtures.hpp"
#include "cli/run.hpp"
#include "loghat/error.hpp"
#include "loghat/gammamod.hpp"

using namespace loghat;
using namespace loghat::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "loghat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("loghat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string fixture(const std::string& name) { return write(name + ".json", serialize(emit_fixture(name))); }
  fs::path dir_;
};

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

nlohmann::json first_report(const nlohmann::json& j) { return j.at("files").at(0).at("objects").at(0).at("report"); }

// Rank-8 pairing over Z[ζ_3]^4 whose Xbar_1 has an irreducible quartic minimal
// polynomial: the simplicity test cannot settle it without factoring over Q(ζ_3).
InputDocument undecided_document() {
  QMatrix a{{2, 1, 0, 0}, {1, 3, 1, 0}, {0, 1, 4, 1}, {0, 0, 1, 5}};
  GammaModule m = direct_sum(std::vector<GammaModule>(4, cyclotomic_module(3)));
  QMatrix x(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t e = 0; e < 2; ++e) x(2 * i + e, 2 * j + e) = a(i, j);
  InputDocument d;
  d.q = 2;
  d.k = 2;
  d.objects.push_back({"quartic-r3", PairingSpec{{8, m.frob()}, {8, dual_module(m).frob()}, {x, QMatrix::identity(8)}}});
  return d;
}

}  // namespace

TEST(Document, FixturesRoundTrip) {
  for (const auto& name : fixture_names()) {
    InputDocument d = emit_fixture(name);
    EXPECT_EQ(parse_document(serialize(d)), d) << name;
    EXPECT_EQ(serialize(emit_fixture(name)), serialize(d));
  }
  EXPECT_THROW(emit_fixture("no-such-fixture"), ValidationError);
}

TEST(Document, FieldNames) {
  auto j = nlohmann::json::parse(serialize(emit_fixture("mixed-motive-q2")));
  EXPECT_EQ(j["version"], "1");
  for (const char* key : {"version", "q", "k", "objects"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& o = j["objects"][0];
  for (const char* key : {"kind", "Y", "X", "pairing", "abelian_poly", "classical_torsion"})
    EXPECT_TRUE(o.contains(key)) << key;
  EXPECT_EQ(o["kind"], "motive");
  EXPECT_TRUE(o["Y"].contains("rank"));
  EXPECT_TRUE(o["Y"].contains("frob"));
  auto p = nlohmann::json::parse(serialize(emit_fixture("paper-k2-remark")));
  for (const char* key : {"kind", "M", "N", "X"}) EXPECT_TRUE(p["objects"][0].contains(key)) << key;
}

TEST(Document, Diagnostics) {
  auto msg = [](const std::string& text) {
    try {
      parse_document(text, "doc");
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg("{\"version\": \"1\",\n  \"q\": 2,\n  oops}").find("doc:3:"), std::string::npos);
  EXPECT_NE(msg(R"({"version":"2","q":2,"k":1,"objects":[]})").find("version"), std::string::npos);
  EXPECT_NE(msg(R"({"version":"1","q":12,"k":1,"objects":[]})").find("prime power"), std::string::npos);
  EXPECT_NE(msg(R"({"version":"1","q":2,"k":0,"objects":[]})").find("doc.k"), std::string::npos);
  std::string bad_entry = R"({"version":"1","q":2,"k":1,"objects":[{"name":"a","kind":"pairing",
    "M":{"rank":1,"frob":[[1]]},"N":{"rank":1,"frob":[[1]]},"X":[[[1, 0.5]]]}]})";
  EXPECT_NE(msg(bad_entry).find("doc.objects[0].X[0][0]"), std::string::npos) << msg(bad_entry);
  std::string bad_kind = R"({"version":"1","q":2,"k":1,"objects":[{"name":"a","kind":"torus"}]})";
  EXPECT_NE(msg(bad_kind).find("doc.objects[0].kind"), std::string::npos);
}

TEST_F(CliFiles, SpecExamples) {
  Result a = invoke({"analyze", "--format", "json", fixture("paper-k2-remark")});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto r = first_report(json_of(a));
  EXPECT_EQ(r["ppol"]["verdict"], "yes");
  EXPECT_EQ(r["ppol"]["certificate"], nlohmann::json::parse("[[1,0],[0,1]]"));
  EXPECT_EQ(r["simple"], "yes");
  EXPECT_EQ(r["M"]["simple"], false);
  EXPECT_EQ(r["N"]["simple"], false);
  EXPECT_EQ(r["classes"][0]["r"], 1);
  EXPECT_EQ(r["classes"][0]["a"], 2);

  std::string q5 = fixture("rank1-motive-q5");
  Result c = invoke({"charpoly", "--format", "json", q5});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(first_report(json_of(c))["P"], "(θ−1)(θ−5)");
  Result k = invoke({"classify", "--format", "json", q5});
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(first_report(json_of(k))["summary"], "weight-0 class r=1; weight-2 class q·ζ_1^{−1}=5");
}

TEST_F(CliFiles, EveryCommandRunsOnEveryFixture) {
  std::vector<std::string> files;
  for (const auto& n : fixture_names()) files.push_back(fixture(n));
  for (const char* cmd : {"analyze", "classify", "polarize", "decompose", "simple", "charpoly", "normalform"})
    for (const char* fmt : {"json", "text"}) {
      std::vector<std::string> args{cmd, "--format", fmt};
      args.insert(args.end(), files.begin(), files.end());
      Result r = invoke(args);
      EXPECT_EQ(r.code, 0) << cmd << ": " << r.err;
      EXPECT_FALSE(r.out.empty());
      EXPECT_EQ(invoke(args).out, r.out) << "nondeterministic output for " << cmd;
    }
}

TEST_F(CliFiles, ExitCodes) {
  std::string good = fixture("paper-k2-remark");
  EXPECT_EQ(invoke({"analyze", good}).code, 0);
  EXPECT_EQ(invoke({"analyze", write("bad.json", "{\"version\": \"1\", \"q\": 6, \"k\": 1, \"objects\": []}")}).code,
            2);
  EXPECT_EQ(invoke({"analyze", write("broken.json", "{")}).code, 2);
  EXPECT_EQ(invoke({"analyze", (dir_ / "missing.json").string()}).code, 2);
  Result unknown_cmd = invoke({"frobnicate", good});
  EXPECT_NE(unknown_cmd.code, 0);
  EXPECT_NE(unknown_cmd.err.find("unknown command"), std::string::npos);
  EXPECT_NE(invoke({"analyze", "--format", "yaml", good}).code, 0);
  std::string nonequivariant = write("ne.json", R"({"version":"1","q":2,"k":1,"objects":[{"name":"a","kind":"pairing",
    "M":{"rank":2,"frob":[[0,-1],[1,0]]},"N":{"rank":2,"frob":[[0,-1],[1,0]]},"X":[[[1,0],[0,2]]]}]})");
  EXPECT_EQ(invoke({"analyze", nonequivariant}).code, 2);

  std::string undecided = write("undecided.json", serialize(undecided_document()));
  Result lax = invoke({"simple", "--format", "json", undecided});
  ASSERT_EQ(lax.code, 0) << lax.err;
  EXPECT_EQ(first_report(json_of(lax))["simple"], "unknown");
  EXPECT_EQ(invoke({"simple", "--strict", undecided}).code, 3);
  EXPECT_EQ(invoke({"simple", "--strict", good}).code, 0);
}

TEST_F(CliFiles, FixtureCommand) {
  Result r = invoke({"fixture", "standard-logpoint-r4-q2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_document(r.out), emit_fixture("standard-logpoint-r4-q2"));
  EXPECT_EQ(invoke({"emit_fixture", "mixed-motive-q2"}).out, serialize(emit_fixture("mixed-motive-q2")));
  EXPECT_EQ(invoke({"fixture", "nope"}).code, 2);
}

TEST_F(CliFiles, Isogeny) {
  InputDocument d = emit_fixture("paper-k2-remark");
  // target: X′ = 2X, reached by ψ1 = I, ψ2 = 2I
  ObjectEntry twice = d.objects[0];
  twice.name = "twice";
  for (auto& x : std::get<PairingSpec>(twice.body).X) x = BigRat(2) * x;
  d.objects.push_back(twice);
  std::string doc = write("pair.json", serialize(d));
  std::string good = write("m.json", R"({"psi1": [[1,0],[0,1]], "psi2": [[2,0],[0,2]]})");
  std::string bad = write("b.json", R"({"psi1": [[1,0],[0,1]], "psi2": [[1,0],[0,1]]})");
  Result r = invoke({"isogeny", "--format", "json", "--from", "k2-example", "--to", "twice", "--morphism", good, doc});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r)["result"];
  EXPECT_EQ(j["isogeny"], true);
  EXPECT_EQ(j["charpolys_agree"], true);
  EXPECT_EQ(j["invariants_agree"], "yes");
  EXPECT_EQ(invoke({"isogeny", "--from", "k2-example", "--to", "twice", "--morphism", bad, doc}).code, 2);
  EXPECT_EQ(invoke({"isogeny", "--from", "k2-example", "--to", "nobody", "--morphism", good, doc}).code, 2);
  EXPECT_EQ(invoke({"isogeny", doc}).code, 2);
}
