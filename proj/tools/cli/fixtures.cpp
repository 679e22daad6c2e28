#include "cli/fixtures.hpp"

#include "loghat/error.hpp"

namespace loghat::cli {

namespace {

ModuleSpec module(std::size_t rank, QMatrix frob) { return {rank, std::move(frob)}; }

InputDocument k2_example_doc() {
  InputDocument d;
  d.q = 2;
  d.k = 2;
  PairingSpec p;
  p.M = module(2, QMatrix::identity(2));
  p.N = module(2, QMatrix::identity(2));
  p.X = {QMatrix{{1, 0}, {0, 1}}, QMatrix{{1, 1}, {1, 2}}};
  d.objects.push_back({"k2-example", p});
  return d;
}

InputDocument standard_r4() {
  InputDocument d;
  d.q = 2;
  d.k = 1;
  PairingSpec p;
  // Z[ζ_4] in the basis 1, ζ and its dual, which carries the same matrix.
  p.M = module(2, QMatrix{{0, -1}, {1, 0}});
  p.N = module(2, QMatrix{{0, -1}, {1, 0}});
  p.X = {QMatrix::identity(2)};
  d.objects.push_back({"standard-r4", p});
  return d;
}

InputDocument mixed_motive() {
  InputDocument d;
  d.q = 2;
  d.k = 1;
  MotiveSpec m;
  m.Y = module(1, QMatrix{{1}});
  m.X = module(1, QMatrix{{1}});
  m.pairing = {QMatrix{{1}}};
  m.abelian_poly = int_poly({2, -1, 1});
  m.classical_torsion = true;
  d.objects.push_back({"mixed", m});
  return d;
}

InputDocument rank1_motive_q5() {
  InputDocument d;
  d.q = 5;
  d.k = 1;
  MotiveSpec m;
  m.Y = module(1, QMatrix{{1}});
  m.X = module(1, QMatrix{{1}});
  m.pairing = {QMatrix{{1}}};
  m.classical_torsion = false;
  d.objects.push_back({"rank1-q5", m});
  return d;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"paper-k2-remark", "standard-logpoint-r4-q2", "mixed-motive-q2", "rank1-motive-q5"};
}

InputDocument emit_fixture(const std::string& name) {
  if (name == "paper-k2-remark") return k2_example_doc();
  if (name == "standard-logpoint-r4-q2") return standard_r4();
  if (name == "mixed-motive-q2") return mixed_motive();
  if (name == "rank1-motive-q5") return rank1_motive_q5();
  throw ValidationError("unknown fixture \"" + name + "\"");
}

}  // namespace loghat::cli
