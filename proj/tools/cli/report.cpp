#include "cli/report.hpp"

#include <sstream>

#include "loghat/cyclotomic.hpp"
#include "loghat/error.hpp"
#include "loghat/factor.hpp"
#include "loghat/linalg.hpp"

namespace loghat::cli {

namespace {

const PolyFormat kTheta{"θ", true};

GammaModule build_module(const ModuleSpec& s) { return validate_module(s.rank, s.frob); }

std::string poly_text(const IntPoly& p) { return format(p, kTheta); }

Json cyclo_json(const CycloElem& x) { return x.to_string("ζ"); }

Json cyclo_matrix_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclo_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json blocks_json(const std::vector<IsotypicBlock>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back({{"r", b.r}, {"a", b.a}});
  return j;
}

Json verdict_json(Verdict v, ReportContext& ctx) {
  if (v == Verdict::Unknown) ++ctx.unknowns;
  return to_string(v);
}

Json module_summary(const GammaModule& m) {
  Json j;
  j["rank"] = m.rank();
  j["charpoly"] = factored(m.charpoly());
  j["order"] = m.order().get_str();
  j["simple"] = is_simple(m);
  return j;
}

}  // namespace

BuiltObject build_object(const InputDocument& doc, const ObjectEntry& e) {
  BuiltObject o;
  o.name = e.name;
  try {
    if (auto* p = std::get_if<PairingSpec>(&e.body)) {
      o.pairing = validate_pairing(build_module(p->M), build_module(p->N), doc.k, p->X);
    } else {
      const auto& s = std::get<MotiveSpec>(e.body);
      o.motive = true;
      o.m = make_motive(doc.q, doc.k, build_module(s.Y), build_module(s.X), s.pairing, s.abelian_poly,
                        s.classical_torsion);
      o.pairing = o.m->pairing;
    }
  } catch (const ValidationError& err) {
    throw ValidationError("object \"" + e.name + "\": " + err.what());
  }
  return o;
}

std::string factored(const IntPoly& p) {
  if (p.degree() <= 0) return poly_text(p);
  std::string s;
  for (const auto& f : factor_integer_poly(p)) {
    s += "(" + poly_text(f.poly) + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

std::string describe_k1(const SimpleClassK1& c) {
  std::string s = "weight-0 class r=" + std::to_string(c.r) + "; weight-2 class q·ζ_" + std::to_string(c.r) + "^{−1}";
  if (c.r == 1) s += "=" + c.q.get_str();
  if (c.r == 2) s += "=−" + c.q.get_str();
  return s;
}

Json ppol_json(const PpolResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["tier"] = r.tier;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.certificate) {
    j["certificate"] = matrix_json(*r.certificate);
    j["equivariant"] = r.equivariant;
  }
  return j;
}

Json classification_json(const Classification& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json j;
    j["r"] = b.r;
    j["a"] = b.a;
    if (auto* k1 = std::get_if<SimpleClassK1>(&b.invariant)) {
      j["type"] = "weil-pair";
      j["F"] = poly_text(k1->F);
      j["G"] = poly_text(k1->G);
      j["summary"] = describe_k1(*k1);
    } else if (auto* pt = std::get_if<TrkPoint>(&b.invariant)) {
      j["type"] = "T_{r,k}";
      j["t"] = Json::array();
      for (const auto& x : pt->t) j["t"].push_back(cyclo_json(x));
    } else {
      const auto& m = std::get<TrkMatrixClass>(b.invariant);
      j["type"] = "T_{r,k}^(a)/~";
      j["Xbar"] = Json::array();
      for (const auto& x : m.Xbar) j["Xbar"].push_back(cyclo_matrix_json(x));
      j["witness"] = matrix_json(m.witness);
      j["spin_algebra_dim"] = spin_algebra_dimension(m.Xbar);
    }
    j["simple"] = to_string(b.simple);
    blocks.push_back(std::move(j));
  }
  return blocks;
}

Json charpoly_report(const BuiltObject& o, ReportContext&) {
  Json j;
  if (!o.motive) {
    j["M"] = factored(o.pairing.M.charpoly());
    j["N"] = factored(o.pairing.N.charpoly());
    return j;
  }
  const auto& m = *o.m;
  j["P_Y"] = factored(m.Y.charpoly());
  j["P_B"] = factored(m.abelian.poly);
  j["P_T"] = factored(torus_charpoly(m.X, m.q));
  j["P"] = factored(frobenius_charpoly_motive(m));
  return j;
}

Json polarize_report(const BuiltObject& o, ReportContext& ctx) {
  PpolResult r = is_pointwise_polarizable(o.pairing, ctx.seed);
  if (r.verdict == Verdict::Unknown) ++ctx.unknowns;
  Json j = ppol_json(r);
  j["sum_pairing_det"] = o.pairing.M.rank() == o.pairing.N.rank() && o.pairing.M.rank()
                             ? det(sum_pairing(o.pairing).X.front()).get_str()
                             : std::string("n/a");
  return j;
}

Json normalform_report(const BuiltObject& o, ReportContext& ctx) {
  PpolResult r = is_pointwise_polarizable(o.pairing, ctx.seed);
  Json j;
  j["ppol"] = verdict_json(r.verdict, ctx);
  if (r.verdict != Verdict::Yes) {
    j["normal_form"] = "n/a (needs a pointwise polarizable pairing)";
    return j;
  }
  NormalForm nf = normal_form(o.pairing, r);
  j["blocks"] = blocks_json(nf.blocks);
  j["n"] = nf.n.get_str();
  j["cokernel_orders"] = {nf.isogeny.cokernel1->get_str(), nf.isogeny.cokernel2->get_str()};
  j["R_frob"] = matrix_json(nf.Q.M.frob());
  j["X"] = Json::array();
  for (const auto& x : nf.Q.X) j["X"].push_back(matrix_json(x));
  j["psi1"] = matrix_json(nf.phi.psi1);
  j["psi2"] = matrix_json(nf.phi.psi2);
  j["lambda"] = matrix_json(*nf.lambda);
  EndRingDescriptor e = endomorphism_ring(nf.Q);
  j["endomorphism_ring"] = {{"blocks", blocks_json(e.blocks)}, {"rank", e.hom_rank}};
  return j;
}

Json simple_report(const BuiltObject& o, ReportContext& ctx) {
  Json j;
  j["M_simple"] = is_simple(o.pairing.M);
  j["N_simple"] = is_simple(o.pairing.N);
  Classification c = classify_pairing(o.pairing, ctx.q, ctx.seed);
  j["ppol"] = verdict_json(c.ppol.verdict, ctx);
  if (c.ppol.verdict == Verdict::Yes) j["simple"] = verdict_json(c.simple, ctx);
  else j["simple"] = "n/a";
  return j;
}

Json classify_report(const BuiltObject& o, ReportContext& ctx) {
  Json j;
  if (o.motive) {
    Json classes = Json::array();
    for (const auto& w : weight_spectrum(*o.m)) {
      Json e;
      e["weight"] = w.weight;
      if (w.weight != 1) e["r"] = w.r;
      e["poly"] = poly_text(w.poly);
      e["multiplicity"] = w.multiplicity;
      classes.push_back(std::move(e));
    }
    j["weight_spectrum"] = classes;
  }
  Classification c = classify_pairing(o.pairing, ctx.q, ctx.seed);
  j["ppol"] = verdict_json(c.ppol.verdict, ctx);
  if (c.ppol.verdict == Verdict::Yes) {
    j["classes"] = classification_json(c);
    for (const auto& b : c.blocks)
      if (b.simple == Verdict::Unknown) ++ctx.unknowns;
    j["simple"] = verdict_json(c.simple, ctx);
    if (c.blocks.size() == 1)
      if (auto* k1 = std::get_if<SimpleClassK1>(&c.blocks.front().invariant)) j["summary"] = describe_k1(*k1);
  }
  return j;
}

Json decompose_report(const BuiltObject& o, ReportContext& ctx) {
  Json j;
  if (!o.motive) {
    j["skipped"] = "not a motive";
    return j;
  }
  Decomposition d = decompose(*o.m, ctx.seed);
  j["pairing_part"] = {{"Y_rank", d.pairing_part.M.rank()}, {"X_rank", d.pairing_part.N.rank()},
                       {"ppol", verdict_json(d.ppol.verdict, ctx)}};
  j["abelian_part"] = factored(d.abelian_part.poly);
  j["classical_torsion"] = {{"input", o.m->classical_torsion}, {"cleared", d.cleared.classical_torsion}};
  const IntPoly prod = d.pairing_part.M.charpoly() * d.abelian_part.poly * torus_charpoly(d.pairing_part.N, o.m->q);
  j["charpoly_multiplicative"] = prod == frobenius_charpoly_motive(*o.m);
  return j;
}

Json analyze_report(const BuiltObject& o, ReportContext& ctx) {
  Json j;
  j["M"] = module_summary(o.pairing.M);
  j["N"] = module_summary(o.pairing.N);
  j["charpoly"] = charpoly_report(o, ctx);
  PpolResult r = is_pointwise_polarizable(o.pairing, ctx.seed);
  j["ppol"] = ppol_json(r);
  Classification c = classify_pairing(o.pairing, ctx.q, ctx.seed);
  if (c.ppol.verdict == Verdict::Unknown) ++ctx.unknowns;
  if (c.normal_form) j["normal_form"] = {{"blocks", blocks_json(c.normal_form->blocks)}, {"n", c.normal_form->n.get_str()}};
  if (c.ppol.verdict == Verdict::Yes) {
    j["simple"] = verdict_json(c.simple, ctx);
    j["classes"] = classification_json(c);
  }
  if (o.motive) {
    Json w = Json::array();
    for (const auto& e : weight_spectrum(*o.m)) {
      std::string key = e.weight == 1 ? poly_text(e.poly) : "r=" + std::to_string(e.r);
      w.push_back({{"weight", e.weight}, {"class", key}, {"multiplicity", e.multiplicity}});
    }
    j["weight_spectrum"] = w;
  }
  return j;
}

namespace {

bool is_inline(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object()) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_inline(v)) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      render(j[i], indent + 2, os);
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace loghat::cli
