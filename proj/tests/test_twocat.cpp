#include <gtest/gtest.h>

#include <random>

#include "catkit/fixtures.hpp"
#include "oracles.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

TEST(Mate, AcrossIdentityAdjunctionsIsTheSameFamily) {
  Cat z = fx::z2();
  Adjunction id = identity_adjunction(z);
  for (const auto& F : oracle::all_functors(z, z))
    for (const auto& G : oracle::all_functors(z, z)) {
      Functor LF = compose_functors(id.left, F), GL = compose_functors(G, id.left);
      for (const auto& comp : oracle::all_transformations(LF, GL)) {
        NatTrans theta("theta", LF, GL, comp);
        EXPECT_EQ(mate(theta, F, G, id, id).components(), comp);
      }
    }
}

TEST(Mate, IsAnInvolutionOnHeytingSquares) {
  Cat b = fx::bool4();
  auto endos = oracle::all_functors(b, b);
  std::mt19937 rng(7);
  int checked_pairs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Functor& F = endos[rng() % endos.size()];
    const Functor& G = endos[rng() % endos.size()];
    Adjunction a = fx::heyting_adjunction(b, static_cast<int>(rng() % 4));
    Adjunction c = fx::heyting_adjunction(b, static_cast<int>(rng() % 4));
    Functor src = compose_functors(c.left, F), tgt = compose_functors(G, a.left);
    for (const auto& comp : oracle::all_transformations(src, tgt)) {
      NatTrans theta("theta", src, tgt, comp);
      EXPECT_EQ(left_mate(mate(theta, F, G, a, c), F, G, a, c), theta);
      ++checked_pairs;
    }
    Functor rsrc = compose_functors(F, a.right), rtgt = compose_functors(c.right, G);
    for (const auto& comp : oracle::all_transformations(rsrc, rtgt)) {
      NatTrans rho("rho", rsrc, rtgt, comp);
      EXPECT_EQ(mate(left_mate(rho, F, G, a, c), F, G, a, c), rho);
      ++checked_pairs;
    }
  }
  EXPECT_GT(checked_pairs, 50);
}

TEST(Mate, ShapeMismatchIsStructural) {
  Cat b = fx::bool4();
  Adjunction a = fx::heyting_adjunction(b, 1);
  Functor I = identity_functor(b);
  NatTrans wrong = identity_nat(I);
  EXPECT_THROW(mate(wrong, I, I, a, a), StructuralError);
}

TEST(AdjOneCell, IdentityCellValidates) {
  AdjOneCell c = identity_adj_one_cell(fx::heyting_adjunction(fx::bool4(), 2));
  EXPECT_TRUE(validate_adj_one_cell(c).ok());
  EXPECT_TRUE(is_invertible(c.rho).invertible);
}

TEST(AdjOneCell, ComparisonUnitCellValidates) {
  Cat b = fx::bool4();
  for (int p = 0; p < 4; ++p) {
    AdjOneCell c = unit_one_cell(fx::heyting_adjunction(b, p));
    EXPECT_TRUE(validate_adj_one_cell(c).ok());
    EXPECT_EQ(phi_one_cell(c), identity_mnd_one_cell(monad_from_adjunction(c.source)));
  }
}

TEST(AdjOneCell, CompositionWithIdentityIsNeutral) {
  AdjOneCell c = unit_one_cell(fx::heyting_adjunction(fx::bool4(), 1));
  EXPECT_EQ(compose_adj_one_cells(c, identity_adj_one_cell(c.source)), c);
  EXPECT_EQ(compose_adj_one_cells(identity_adj_one_cell(c.target), c), c);
}

TEST(AdjOneCell, PhiPreservesComposition) {
  AdjOneCell c = unit_one_cell(fx::heyting_adjunction(fx::bool4(), 1));
  AdjOneCell d = identity_adj_one_cell(c.target);
  EXPECT_EQ(phi_one_cell(compose_adj_one_cells(d, c)),
            compose_mnd_one_cells(phi_one_cell(d), phi_one_cell(c)));
}

TEST(AdjOneCell, NonInvertibleMateIsRejected) {
  // The mate 1 => const 1 has the non-invertible component u at 0.
  Cat t = fx::two();
  Adjunction id = identity_adjunction(t);
  Functor I = identity_functor(t);
  Functor top = constant_functor(t, t, 1);
  NatTrans lambda = thin_nat("lambda", I, top);
  EXPECT_THROW(make_adj_one_cell(id, id, I, top, lambda), DomainError);
}

TEST(MndOneCell, ReferenceCellsValidate) {
  EXPECT_TRUE(validate_mnd_one_cell(fx::nucleus_cell()).ok());
  EXPECT_TRUE(validate_mnd_one_cell(fx::meet_cell()).ok());
}

TEST(MndOneCell, IdentityCellIsNeutral) {
  MndOneCell c = fx::nucleus_cell();
  EXPECT_EQ(compose_mnd_one_cells(c, identity_mnd_one_cell(c.source)), c);
  EXPECT_EQ(compose_mnd_one_cells(identity_mnd_one_cell(c.target), c), c);
}

TEST(MndOneCell, StructureMapGFailsUnitLaw) {
  Monad m = identity_monad(fx::z2());
  Functor I = identity_functor(m.base);
  NatTrans psi("psi_g", compose_functors(m.endo, I), compose_functors(I, m.endo), {m.base->morphism("g")});
  Report r = validate_mnd_one_cell(MndOneCell{m, m, I, psi});
  EXPECT_TRUE(r.structurally_ok());
  EXPECT_FALSE(r.ok());
}

TEST(Lift, PsiOfIdentityIsIdentityOnEm) {
  for (const Monad& m : {fx::nucleus(), fx::closure1()}) {
    AdjOneCell lifted = psi_one_cell(identity_mnd_one_cell(m));
    EMBundle em = em_category(m);
    EXPECT_EQ(lifted.bottom, identity_functor(em.em));
    EXPECT_EQ(lifted, identity_adj_one_cell(em.adjunction));
  }
}

TEST(Lift, ForgetfulSquareCommutes) {
  MndOneCell c = fx::nucleus_cell();
  AdjOneCell lifted = psi_one_cell(c);
  EMBundle s = em_category(c.source), t = em_category(c.target);
  EXPECT_EQ(compose_functors(t.forget, lifted.bottom), compose_functors(c.carrier, s.forget));
}

TEST(Lift, LiftedCountsMatchAlgebraProducts) {
  MndOneCell c = fx::nucleus_cell();
  AdjOneCell lifted = psi_one_cell(c);
  EXPECT_EQ(lifted.bottom.dom()->object_count(), 4);
  EXPECT_EQ(lifted.bottom.cod()->object_count(), 2);
}

TEST(Transpose, PhiAfterPsiIsIdentityOnMonadCells) {
  for (const MndOneCell& c : {fx::nucleus_cell(), fx::meet_cell()}) {
    MndOneCell back = transpose_adj_to_mnd(transpose_mnd_to_adj(c));
    EXPECT_EQ(back, c);
  }
}

TEST(Transpose, RefusesCellsOffTheEmResolution) {
  AdjOneCell c = identity_adj_one_cell(fx::heyting_adjunction(fx::bool4(), 1));
  EXPECT_THROW(transpose_adj_to_mnd(c), DomainError);
}

TEST(TwoCell, IdentityTwoCellsValidate) {
  AdjOneCell c = unit_one_cell(fx::heyting_adjunction(fx::bool4(), 2));
  AdjTwoCell t{c, c, identity_nat(c.top), identity_nat(c.bottom)};
  EXPECT_TRUE(validate_adj_two_cell(t).ok());
  MndTwoCell m = phi_two_cell(t);
  EXPECT_TRUE(validate_mnd_two_cell(m).ok());
  AdjTwoCell back = psi_two_cell(m);
  EXPECT_TRUE(validate_adj_two_cell(back).ok());
}

TEST(TwoCell, UnitIntoNucleusIsAMonadTwoCell) {
  // theta: 1 => j between the identity cell and (j, mu) as 1-cells j -> j.
  Monad j = fx::nucleus();
  MndOneCell id = identity_mnd_one_cell(j);
  NatTrans psi("psi_j", compose_functors(j.endo, j.endo), compose_functors(j.endo, j.endo),
               identity_nat(compose_functors(j.endo, j.endo)).components());
  MndOneCell jj = checked(MndOneCell{j, j, j.endo, psi});
  MndTwoCell t{id, jj, NatTrans("eta", id.carrier, jj.carrier, j.unit.components())};
  EXPECT_TRUE(validate_mnd_two_cell(t).ok());
  EXPECT_TRUE(validate_adj_two_cell(psi_two_cell(t)).ok());
}
