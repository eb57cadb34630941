#include <gtest/gtest.h>

#include "catkit/fixtures.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

namespace {

const scenario::ProductCell& nucleus() {
  static const scenario::ProductCell s = scenario::nucleus();
  return s;
}

const scenario::ProductCell& meetcell() {
  static const scenario::ProductCell s = scenario::meetcell();
  return s;
}

} // namespace

TEST(Parametric, HeytingFamiliesValidate) {
  EXPECT_TRUE(validate_parametric_adjunction(fx::heyting(fx::bool4())).ok());
  EXPECT_TRUE(validate_parametric_adjunction(fx::heyting(fx::two())).ok());
}

TEST(Parametric, Z2ActionValidates) {
  EXPECT_TRUE(validate_parametric_adjunction(fx::z2_parametric(false)).ok());
}

TEST(Parametric, ProjectionBreaksConjugacy) {
  Report r = validate_parametric_adjunction(fx::z2_parametric(true));
  EXPECT_TRUE(r.has_violation("conjugate", {"g", "*"}));
}

TEST(Parametric, ImplicationValuesOnBool4) {
  ParametricAdjunction h = fx::heyting(fx::bool4());
  const Cat& D = h.D();
  auto imp = [&](const char* p, const char* x) {
    return h.G.obj_id(h.G.dom()->pair_object(D->object(p), D->object(x)));
  };
  EXPECT_EQ(imp("a", "b"), "b");
  EXPECT_EQ(imp("a", "bot"), "b");
  EXPECT_EQ(imp("top", "a"), "a");
  EXPECT_EQ(imp("bot", "bot"), "top");
}

TEST(Parametric, ReindexAlongForgetValidates) {
  ParametricAdjunction r = reindex(fx::heyting(fx::bool4()), nucleus().em_E.forget);
  EXPECT_TRUE(validate_parametric_adjunction(r).ok());
  EXPECT_EQ(r.P()->object_count(), 2);
}

TEST(HopfOperator, NucleusCellIsHopf) {
  const auto& s = nucleus();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  EXPECT_TRUE(h.analysis.hopf());
  EXPECT_TRUE(validate_mnd_one_cell(h.cell).ok());
  auto brute = oracle::inverse_family(h.analysis.op);
  ASSERT_TRUE(brute.has_value());
  EXPECT_EQ(h.analysis.inv.inverse->components(), *brute);
}

TEST(HopfOperator, MeetCellFailsAtZeroAndTopAlgebra) {
  const auto& s = meetcell();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  EXPECT_FALSE(h.analysis.hopf());
  EXPECT_FALSE(oracle::inverse_family(h.analysis.op).has_value());
  EXPECT_EQ(h.analysis.witness(), std::vector<std::string>{"(0,(1|id1))"});
}

TEST(HopfOperator, AdjOperatorDecisionsMatch) {
  AdjHopf n = hopf_operator_adj(nucleus().adj, nucleus().left(), nucleus().param());
  EXPECT_TRUE(n.analysis.hopf());
  EXPECT_TRUE(validate_adj_one_cell(n.cell).ok());
  AdjHopf m = hopf_operator_adj(meetcell().adj, meetcell().left(), meetcell().param());
  EXPECT_FALSE(m.analysis.hopf());
}

TEST(HopfOperator, WrongSourceIsADomainError) {
  const auto& s = nucleus();
  EXPECT_THROW(hopf_operator_adj(s.adj, s.left(), identity_adjunction(s.S.base)), DomainError);
}

TEST(HopfOperator, FusionDecisions) {
  EXPECT_TRUE(fusion_operator_mnd(nucleus().cell, nucleus().S, nucleus().E).analysis.hopf());
  EXPECT_FALSE(fusion_operator_mnd(meetcell().cell, meetcell().S, meetcell().E).analysis.hopf());
}

TEST(Transport, HopfCommutesWithPhi) {
  for (const auto* s : {&nucleus(), &meetcell()}) {
    PhiComparison cmp = compare_hopf_phi(s->adj, s->left(), s->param());
    EXPECT_TRUE(cmp.ok()) << cmp.report.summary();
    EXPECT_TRUE(cmp.reflects_isos);
  }
}

TEST(Transport, FusionMatchesHopf) {
  for (const auto* s : {&nucleus(), &meetcell()}) {
    FusionComparison cmp = fusion_hopf_equivalence(s->adj, s->left(), s->param());
    EXPECT_TRUE(cmp.ok()) << cmp.report.summary();
  }
  EXPECT_TRUE(fusion_hopf_equivalence(nucleus().adj, nucleus().left(), nucleus().param()).fusion.analysis.hopf());
}

TEST(Transport, ForgetfulFunctorsReflectIsos) {
  for (const auto* s : {&nucleus(), &meetcell()}) {
    EXPECT_TRUE(reflects_isomorphisms(s->em_S.forget));
    EXPECT_TRUE(reflects_isomorphisms(s->em_T.forget));
  }
}

TEST(AdjointObject, MonadSideAtEachAlgebra) {
  const auto& s = nucleus();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  for (int q = 0; q < s.em_E.em->object_count(); ++q) {
    MndOneCell c = restrict_at_algebra(h, q);
    MndAdjointObject ao = adjoint_object_mnd(c, scenario::right_adjoint(c.carrier));
    EXPECT_TRUE(ao.ok()) << ao.report.summary();
    auto brute = oracle::inverse_family(c.psi);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(ao.zeta.components(), *brute);
    EXPECT_EQ(ao.zeta_recovered.components(), *brute);
  }
}

TEST(AdjointObject, AdjSideAtEachParameter) {
  const auto& s = nucleus();
  AdjHopf h = hopf_operator_adj(s.adj, s.left(), s.param());
  for (int q = 0; q < s.em_E.em->object_count(); ++q) {
    AdjOneCell c = restrict_at_parameter(h, q);
    AdjAdjointObject ao =
        adjoint_object_adj(c, scenario::right_adjoint(c.top), scenario::right_adjoint(c.bottom));
    EXPECT_TRUE(ao.ok()) << ao.report.summary();
    auto brute = oracle::inverse_family(c.lambda);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(ao.gamma.components(), *brute);
    EXPECT_EQ(ao.gamma_recovered.components(), *brute);
  }
}

TEST(AdjointObject, RefusesNonInvertibleCells) {
  const auto& s = meetcell();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  MndOneCell c = restrict_at_algebra(h, s.em_E.em->object("(1|id1)"));
  EXPECT_THROW(adjoint_object_mnd(c, scenario::right_adjoint(c.carrier)), DomainError);
}

TEST(AdjointEquivalence, AllFourHoldOnNucleusRestrictions) {
  const auto& s = nucleus();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  for (int q = 0; q < s.em_E.em->object_count(); ++q) {
    MndOneCell c = restrict_at_algebra(h, q);
    AdjointEquivalence eq = adjoint_equivalence(c, scenario::right_adjoint(c.carrier));
    EXPECT_TRUE(eq.agree());
    EXPECT_TRUE(eq.psi_invertible);
    EXPECT_TRUE(eq.mnd_adjoint_object);
  }
}

TEST(AdjointEquivalence, AllFourFailOnMeetCell) {
  const auto& s = meetcell();
  MndHopf h = hopf_operator_mnd(s.cell, s.S, s.E);
  MndOneCell c = restrict_at_algebra(h, s.em_E.em->object("(1|id1)"));
  AdjointEquivalence eq = adjoint_equivalence(c, scenario::right_adjoint(c.carrier));
  EXPECT_TRUE(eq.agree());
  EXPECT_FALSE(eq.psi_invertible);
  EXPECT_FALSE(eq.lambda_invertible);
  EXPECT_FALSE(eq.mnd_adjoint_object);
  EXPECT_FALSE(eq.adj_adjoint_object);
  EXPECT_EQ(eq.witness, std::vector<std::string>{"0"});
}

TEST(Extension, MonadSideOnNucleus) {
  const auto& s = nucleus();
  MndExtension ext = build_hopf_parametric_adjoint_object(s.cell, s.S, s.E, fx::heyting(s.S.base));
  EXPECT_TRUE(ext.ok()) << ext.report.summary();
  EXPECT_TRUE(validate_mnd_one_cell(ext.cell).ok());
  EXPECT_TRUE(validate_param_trans(ext.psi).ok());
}

TEST(Extension, RefusesNonHopfCells) {
  const auto& s = meetcell();
  EXPECT_THROW(build_hopf_parametric_adjoint_object(s.cell, s.S, s.E, fx::heyting(s.S.base)), DomainError);
}

TEST(Antipode, RoundTripsOnNucleus) {
  const auto& s = nucleus();
  MndExtension ext = build_hopf_parametric_adjoint_object(s.cell, s.S, s.E, fx::heyting(s.S.base));
  MndAntipode a = antipode_mnd(ext);
  EXPECT_TRUE(a.ok()) << a.report.summary();
  AntipodeContext ctx = a.context;
  EXPECT_EQ(psi_from_sigma(ctx, sigma_from_psi(ctx, ext.psi)).family, ext.psi.family);
  EXPECT_EQ(sigma_from_psi(ctx, psi_from_sigma(ctx, a.sigma)).family, a.sigma.family);
  EXPECT_TRUE(validate_param_trans(a.sigma).ok());
}

TEST(Lifting, NucleusLiftsToTheTwoChain) {
  const auto& s = nucleus();
  LiftingResult res = lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base));
  EXPECT_TRUE(res.ok()) << res.report.summary();
  EXPECT_TRUE(validate_parametric_adjunction(res.lifted).ok());
  EXPECT_EQ(res.em_parameters().em->object_count(), 2);
  EXPECT_TRUE(res.em_parameters().em->thin());
  EXPECT_EQ(res.em_parameters().em->morphism_count(), 3);
}

TEST(Lifting, LiftedImplicationValues) {
  const auto& s = nucleus();
  LiftingResult res = lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base));
  const Functor& G = res.lifted.G;
  const Cat& P = res.lifted.P();
  const Cat& D = res.lifted.D();
  auto imp = [&](const std::string& p, const std::string& x) {
    return G.obj_id(G.dom()->pair_object(P->object(p), D->object(x)));
  };
  EXPECT_EQ(imp("(a|id_a)", "(top|id_top)"), "(top|id_top)");
  EXPECT_EQ(imp("(top|id_top)", "(a|id_a)"), "(a|id_a)");
  EXPECT_EQ(imp("(a|id_a)", "(a|id_a)"), "(top|id_top)");
  EXPECT_EQ(imp("(top|id_top)", "(top|id_top)"), "(top|id_top)");
}

TEST(Lifting, ForgetfulSquaresCommute) {
  const auto& s = nucleus();
  LiftingResult res = lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base));
  for (const char* law : {"forgetful-square-left", "forgetful-square-right", "roundtrip-lifting-to-hopf",
                          "roundtrip-hopf-to-lifting", "roundtrip-lifting-to-extension"}) {
    bool seen = false;
    for (const auto& [name, ok] : res.report.checks())
      if (name == law) {
        seen = true;
        EXPECT_TRUE(ok) << law;
      }
    EXPECT_TRUE(seen) << law;
  }
}

TEST(Lifting, AdjAntipodeAgreesWithMonadSide) {
  const auto& s = nucleus();
  LiftingResult res = lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base));
  bool seen = false;
  for (const auto& [name, ok] : res.report.checks())
    if (name.rfind("adj-antipode/", 0) == 0) {
      seen = true;
      EXPECT_TRUE(ok) << name;
    }
  EXPECT_TRUE(seen);
}

TEST(Lifting, RefusesMeetCell) {
  const auto& s = meetcell();
  EXPECT_THROW(lift_parametric_adjunction(s.cell, s.S, s.E, fx::heyting(s.S.base)), DomainError);
}
