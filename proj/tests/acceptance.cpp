// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the catkit binary.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <unistd.h>

#include "catkit/harness.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;
namespace fs = std::filesystem;

namespace {

/** Collects reasons a criterion does not hold; empty means it holds. */
class Verdict {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  /** Every check named `law` passed, and at least one ran. */
  void require_checks(const Report& r, const std::string& law, const std::string& where) {
    bool seen = false, ok = true;
    for (const auto& [name, pass] : r.checks())
      if (name == law) {
        seen = true;
        ok = ok && pass;
      }
    require(seen && ok, where + ": " + law + (seen ? " failed" : " never ran"));
  }
  bool ok() const { return failures_.empty(); }
  std::string reason() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

private:
  std::vector<std::string> failures_;
};

const scenario::ProductCell& nucleus() {
  static const scenario::ProductCell s = scenario::nucleus();
  return s;
}

const scenario::ProductCell& meetcell() {
  static const scenario::ProductCell s = scenario::meetcell();
  return s;
}

/** f is invertible whenever U f is, decided by hom-set search on both sides. */
bool reflects_isos_by_search(const Functor& U) {
  const FinCat& X = *U.dom();
  const FinCat& Y = *U.cod();
  auto invertible = [](const FinCat& C, int f) {
    for (int g = 0; g < C.morphism_count(); ++g)
      if (C.dom(g) == C.cod(f) && C.cod(g) == C.dom(f) && C.compose(g, f) == C.identity(C.dom(f)) &&
          C.compose(f, g) == C.identity(C.cod(f)))
        return true;
    return false;
  };
  for (int f = 0; f < X.morphism_count(); ++f)
    if (invertible(Y, U.mor(f)) && !invertible(X, f)) return false;
  return true;
}

void law_suites(Verdict& v) {
  for (const auto& name : harness::fixture_names()) {
    harness::SpecFile s = harness::generate_fixture(name);
    s.tasks = harness::validation_tasks(s);
    harness::RunReport r = harness::run_check_suite(s, "");
    v.require(!r.tasks.empty() && r.outcome() == harness::Outcome::Pass, "fixture " + name + " fails validation");
  }
  v.require(validate_parametric_adjunction(fx::heyting(fx::two())).ok(), "heyting on Two");
  v.require(validate_parametric_adjunction(fx::z2_parametric(false)).ok(), "z2 action");
  for (const auto& p : fx::perturbations()) {
    auto all = p.report.sorted_violations();
    v.require(std::find(all.begin(), all.end(), Violation{p.law, p.witness}) != all.end(),
              p.name + " lacks " + p.law + " " + format_witness(p.witness));
  }
}

void phi_psi_identity(Verdict& v) {
  for (const Monad& m : {identity_monad(fx::two()), fx::closure1(), fx::nucleus()})
    v.require(monad_from_adjunction(em_category(m).adjunction) == m, m.name);
}

void em_counts(Verdict& v) {
  std::pair<Monad, std::size_t> cases[] = {
      {identity_monad(fx::two()), 2}, {fx::closure1(), 1}, {fx::nucleus(), 2}};
  for (const auto& [m, expected] : cases) {
    std::size_t brute = oracle::algebras(m).size();
    auto em = em_category(m);
    v.require(brute == expected, m.name + ": search found " + std::to_string(brute));
    v.require(static_cast<std::size_t>(em.em->object_count()) == brute, m.name + ": engine count differs");
  }
}

void adjoint_object_roundtrips(Verdict& v) {
  const auto& s = nucleus();
  MndHopf mh = hopf_operator_mnd(s.cell, s.S, s.E);
  AdjHopf ah = hopf_operator_adj(s.adj, s.left(), s.param());
  const FinCat& Q = *s.em_E.em;
  v.require(Q.object_count() == 2, "two algebras");
  for (int q = 0; q < Q.object_count(); ++q) {
    const std::string at = Q.object_id(q);
    MndOneCell c = restrict_at_algebra(mh, q);
    MndAdjointObject mo = adjoint_object_mnd(c, scenario::right_adjoint(c.carrier));
    auto zeta = oracle::inverse_family(c.psi);
    v.require(mo.ok(), "monad side at " + at + ": " + mo.report.summary());
    v.require(zeta && mo.zeta.components() == *zeta, "zeta at " + at);
    v.require(zeta && mo.zeta_recovered.components() == *zeta, "recovered zeta at " + at);

    AdjOneCell a = restrict_at_parameter(ah, q);
    AdjAdjointObject ao = adjoint_object_adj(a, scenario::right_adjoint(a.top), scenario::right_adjoint(a.bottom));
    auto gamma = oracle::inverse_family(a.lambda);
    v.require(ao.ok(), "adj side at " + at + ": " + ao.report.summary());
    v.require(gamma && ao.gamma.components() == *gamma, "gamma at " + at);
    v.require(gamma && ao.gamma_recovered.components() == *gamma, "recovered gamma at " + at);
  }
}

void four_way(Verdict& v) {
  {
    const auto& s = nucleus();
    MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
    for (int q = 0; q < s.em_E.em->object_count(); ++q) {
      MndOneCell c = restrict_at_algebra(h, q);
      AdjointEquivalence eq = adjoint_equivalence(c, scenario::right_adjoint(c.carrier));
      v.require(eq.psi_invertible && eq.lambda_invertible && eq.mnd_adjoint_object && eq.adj_adjoint_object,
                "nucleus at " + s.em_E.em->object_id(q) + " not all true");
    }
  }
  const auto& s = meetcell();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  MndOneCell c = restrict_at_algebra(h, s.em_E.em->object("(1|id1)"));
  AdjointEquivalence eq = adjoint_equivalence(c, scenario::right_adjoint(c.carrier));
  v.require(!eq.psi_invertible && !eq.lambda_invertible && !eq.mnd_adjoint_object && !eq.adj_adjoint_object,
            "meetcell not all false");
  v.require(oracle::inverse_family(c.psi).has_value() == eq.psi_invertible, "meetcell decision differs from search");
}

void transport(Verdict& v) {
  for (const auto* s : {&nucleus(), &meetcell()}) {
    std::string n = s == &nucleus() ? "nucleus" : "meetcell";
    PhiComparison cmp = compare_hopf_phi(s->adj, s->left(), s->param());
    v.require_checks(cmp.report, "hopf-commutes-with-phi", n);
    v.require_checks(cmp.report, "hopf-equivalence", n);
    v.require(cmp.ok(), n + ": " + cmp.report.summary());
    if (cmp.adj.analysis.hopf()) v.require_checks(cmp.report, "inverse-relation", n);
    for (const Functor* U : {&s->em_S.forget, &s->em_E.forget, &s->em_T.forget})
      v.require(reflects_isos_by_search(*U) && reflects_isomorphisms(*U), n + ": " + U->name() + " reflects isos");
  }
}

/** Pointwise inverse from the whiskered family, using searched inverses throughout. */
void fusion_lemma(Verdict& v, const scenario::ProductCell& s, const std::string& n) {
  AdjHopf adj = hopf_operator_adj(s.adj, s.left(), s.param());
  MndOneCell phi_h = phi_one_cell(adj.cell);
  const Adjunction& param = s.param();
  const Cat& C = s.left().domain();
  const Cat& CP = s.adj.source.domain();
  const Cat& CQ = adj.cell.top.dom();
  const FinCat& D = *s.adj.target.domain();
  const FinCat& Q = *param.codomain();
  const Functor& Lt = param.left;
  const Functor& Rt = param.right;
  const Functor& J = s.adj.top;
  const Functor& T = phi_h.target.endo;
  const Functor RL = monad_from_adjunction(s.left()).endo;

  for (int x = 0; x < C->object_count(); ++x) {
    Functor A = compose_functors({T, J, insert_left(CP, x)});
    Functor B = compose_functors(J, insert_left(CP, RL.obj(x)));
    NatTrans a0 = whisker_right(phi_h.psi, insert_left(CQ, x));
    NatTrans alpha("alpha", compose_functors(A, Rt), compose_functors(B, Rt), a0.components());
    auto inv_alpha = oracle::inverse_family(alpha);
    auto inv_alphaL = oracle::inverse_family(whisker_right(alpha, Lt));
    v.require(inv_alpha.has_value() == inv_alphaL.has_value(), n + ": lemma invertibility at " + C->object_id(x));
    if (!inv_alpha || !inv_alphaL) continue;
    std::vector<int> closed(Q.object_count());
    for (int q = 0; q < Q.object_count(); ++q) {
      int rq = Rt.obj(q);
      closed[q] = D.compose({A.mor(Rt.mor(param.counit.at(q))), (*inv_alphaL)[rq], B.mor(param.unit.at(rq))});
    }
    v.require(closed == *inv_alpha, n + ": closed-form inverse at " + C->object_id(x));
  }
}

void fusion(Verdict& v) {
  for (const auto* s : {&nucleus(), &meetcell()}) {
    std::string n = s == &nucleus() ? "nucleus" : "meetcell";
    FusionComparison cmp = fusion_hopf_equivalence(s->adj, s->left(), s->param());
    v.require_checks(cmp.report, "fusion-equals-reindexed-hopf", n);
    v.require(cmp.ok(), n + ": " + cmp.report.summary());
    bool hopf = cmp.adj.analysis.hopf();
    bool fused = cmp.fusion.analysis.hopf();
    v.require(hopf == fused, n + ": Hopf and fusion decisions differ");
    v.require(hopf == (s == &nucleus()), n + ": unexpected decision");
    v.require(oracle::inverse_family(cmp.fusion.analysis.op).has_value() == fused, n + ": fusion decision vs search");
    fusion_lemma(v, *s, n);
  }
}

void antipode(Verdict& v) {
  const auto& s = nucleus();
  MndExtension ext = build_hopf_parametric_adjoint_object(s.cell, s.S, s.E, fx::heyting(s.S.base));
  MndAntipode a = antipode_mnd(ext);
  v.require_checks(a.report, "iota-sigma-is-identity", "antipode");
  v.require_checks(a.report, "sigma-iota-is-identity", "antipode");
  v.require(!a.report.has_violation("antipode-mult") && !a.report.has_violation("antipode-unit"),
            "sigma equations: " + a.report.summary());
  v.require(a.ok(), a.report.summary());
  const AntipodeContext& ctx = a.context;
  v.require(psi_from_sigma(ctx, sigma_from_psi(ctx, ext.psi)).family == ext.psi.family, "iota after sigma");
  v.require(sigma_from_psi(ctx, psi_from_sigma(ctx, a.sigma)).family == a.sigma.family, "sigma after iota");
}

void lifting(Verdict& v) {
  const auto& s = nucleus();
  LiftingResult res = lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base));
  const FinCat& P = *res.em_parameters().em;
  v.require(P.object_count() == 2 && P.morphism_count() == 3 && P.thin(), "parameters are not the 2-chain");
  v.require(validate_parametric_adjunction(res.lifted).ok(), "lifted parametric adjunction invalid");
  for (const char* law : {"forgetful-square-left", "forgetful-square-right", "roundtrip-lifting-to-hopf",
                          "roundtrip-hopf-to-lifting"})
    v.require_checks(res.report, law, "lift");
  v.require(res.ok(), res.report.summary());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void determinism(Verdict& v, const std::string& catkit) {
  fs::path dir = fs::temp_directory_path() / ("catkit-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path spec = dir / "bool4-nucleus.json";
  auto sh = [&](const std::string& args) { return std::system(("\"" + catkit + "\" " + args).c_str()); };
  v.require(sh("fixture --name bool4-nucleus --out \"" + spec.string() + "\"") == 0, "fixture command failed");
  fs::path a = dir / "a.json", b = dir / "b.json";
  v.require(sh("run \"" + spec.string() + "\" --out \"" + a.string() + "\"") == 0, "first run did not pass");
  v.require(sh("run \"" + spec.string() + "\" --out \"" + b.string() + "\"") == 0, "second run did not pass");
  std::string ra = slurp(a), rb = slurp(b);
  v.require(!ra.empty() && ra == rb, "reports differ");
  fs::remove_all(dir);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: catkit_acceptance <path-to-catkit>\n";
    return 2;
  }
  std::string catkit = argv[1];
  struct Criterion {
    const char* title;
    std::function<void(Verdict&)> run;
  };
  const Criterion criteria[] = {
      {"law suites and perturbation witnesses", law_suites},
      {"Phi after Psi is the identity on monads", phi_psi_identity},
      {"Eilenberg-Moore algebra counts match search", em_counts},
      {"adjoint objects from invertible restrictions", adjoint_object_roundtrips},
      {"four-way equivalence", four_way},
      {"Hopf transport along Phi", transport},
      {"fusion operator and pointwise inverse", fusion},
      {"antipode roundtrips and equations", antipode},
      {"lifted parametric adjunction on the 2-chain", lifting},
      {"byte-identical reports", [&](Verdict& v) { determinism(v, catkit); }},
  };

  int failed = 0, index = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.ok() ? "PASS" : "FAIL") << " " << index << " " << c.title;
    if (!v.ok()) {
      std::cout << ": " << v.reason();
      ++failed;
    }
    std::cout << std::endl;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria) << " criteria hold (" << ms << " ms)\n";
  return failed == 0 ? 0 : 1;
}
