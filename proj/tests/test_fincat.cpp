#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "catkit/fixtures.hpp"
#include "oracles.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

TEST(FinCat, OneIsAValidCategory) {
  Cat one = fx::one();
  EXPECT_EQ(one->object_count(), 1);
  EXPECT_EQ(one->morphism_count(), 1);
  EXPECT_TRUE(validate_category(*one).ok());
}

TEST(FinCat, TwoIsAValidChain) {
  Cat two = fx::two();
  EXPECT_EQ(two->object_count(), 2);
  EXPECT_EQ(two->morphism_count(), 3);
  EXPECT_EQ(two->dom(two->morphism("u")), two->object("0"));
  EXPECT_TRUE(validate_category(*two).ok());
}

TEST(FinCat, RedirectedCompositionBreaksRightIdentity) {
  Report r = validate_category(*fx::two_bad_composition());
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has_violation("right-identity", {"u", "id0"}));
}

TEST(FinCat, DanglingIdentifierIsStructural) {
  CategoryData d = fx::two()->data();
  d.composition.push_back({"u", "id0", "missing"});
  EXPECT_THROW(FinCat::from_data(d), StructuralError);
}

TEST(FinCat, CompositionForNonComposablePairIsReported) {
  CategoryData d = fx::two()->data();
  d.composition.push_back({"u", "u", "u"});
  Report r = validate_category(*FinCat::from_data(d));
  EXPECT_TRUE(r.has_violation("composition-undefined", {"u", "u"}));
}

TEST(FinCat, MissingCompositionIsReported) {
  CategoryData d = fx::two()->data();
  std::erase_if(d.composition, [](const CompositionEntry& e) { return e.g == "id1" && e.f == "u"; });
  Report r = validate_category(*FinCat::from_data(d));
  EXPECT_TRUE(r.has_violation("composition-total", {"id1", "u"}));
}

TEST(FinCat, DataRoundTrip) {
  for (const Cat& c : {fx::one(), fx::two(), fx::bool4(), fx::z2()}) {
    Cat back = FinCat::from_data(c->data());
    EXPECT_TRUE(same(back, c)) << c->name();
    EXPECT_EQ(back->fingerprint(), c->fingerprint());
  }
}

TEST(FinCat, OppositeOfOneIsOne) {
  Cat one = fx::one();
  EXPECT_TRUE(same(op_category(one), one));
}

TEST(FinCat, OppositeOfTwoReversesU) {
  Cat op = op_category(fx::two());
  int u = op->morphism("u");
  EXPECT_EQ(op->object_id(op->dom(u)), "1");
  EXPECT_EQ(op->object_id(op->cod(u)), "0");
  EXPECT_TRUE(validate_category(*op).ok());
}

TEST(FinCat, OppositeIsInvolutive) {
  for (const Cat& c : {fx::one(), fx::two(), fx::bool4(), fx::z2()}) {
    Cat back = op_category(op_category(c));
    EXPECT_TRUE(same(back, c));
    EXPECT_EQ(back->name(), c->name());
  }
}

TEST(FinCat, OppositeReversesComposition) {
  Cat c = fx::bool4();
  Cat op = op_category(c);
  for (int f = 0; f < c->morphism_count(); ++f)
    for (int g : c->out(c->cod(f))) EXPECT_EQ(op->compose(f, g), c->compose(g, f));
}

TEST(Product, OneTimesTwoHasThreeMorphisms) {
  Cat p = product_category(fx::one(), fx::two());
  EXPECT_EQ(p->morphism_count(), 3);
  EXPECT_EQ(p->object_id(0), "(*,0)");
}

TEST(Product, TwoTimesTwoCountsMatchPairs) {
  Cat t = fx::two();
  Cat p = product_category(t, t);
  int pairs = 0;
  for (int f = 0; f < t->morphism_count(); ++f)
    for (int g = 0; g < t->morphism_count(); ++g) ++pairs;
  EXPECT_EQ(p->object_count(), 4);
  EXPECT_EQ(p->morphism_count(), pairs);
  EXPECT_EQ(p->morphism_count(), 9);
  EXPECT_TRUE(validate_category(*p).ok());
  EXPECT_EQ(oracle::composable_pairs(*p), oracle::composable_pairs(*t) * oracle::composable_pairs(*t));
}

TEST(Product, Bool4TimesTwoHasEightObjects) {
  EXPECT_EQ(product_category(fx::bool4(), fx::two())->object_count(), 8);
}

TEST(Product, SizeGuardNamesTheLimit) {
  ScopedMorphismLimit guard(8);
  try {
    product_category(fx::two(), fx::two());
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.limit(), 8u);
  }
}

TEST(Product, ProjectionsAreFunctors) {
  Cat p = product_category(fx::bool4(), fx::two());
  EXPECT_TRUE(validate_functor(projection_left(p)).ok());
  EXPECT_TRUE(validate_functor(projection_right(p)).ok());
}

TEST(Functor, IdentityOnTwoValidates) { EXPECT_TRUE(validate_functor(identity_functor(fx::two())).ok()); }

TEST(Functor, MeetOnBool4Validates) { EXPECT_TRUE(validate_functor(fx::meet(fx::bool4())).ok()); }

TEST(Functor, ObjectSwapFailsAtU) {
  Report r = validate_functor(fx::two_swap_functor());
  EXPECT_TRUE(r.has_violation("functor-typing", {"u", "u"}));
}

TEST(Functor, IdentityIsNeutral) {
  Functor m = fx::meet(fx::bool4());
  EXPECT_EQ(compose_functors(identity_functor(m.cod()), m), m);
  EXPECT_EQ(compose_functors(m, identity_functor(m.dom())), m);
}

TEST(Functor, ConstantFromOne) {
  Functor c = constant_functor(fx::one(), fx::two(), 1);
  EXPECT_EQ(c.obj_id(0), "1");
  EXPECT_TRUE(validate_functor(c).ok());
}

TEST(Functor, MeetWithTopIsIdentity) {
  Cat b = fx::bool4();
  Functor m = fx::meet(b);
  Functor with_top = compose_functors(m, pair_functor(identity_functor(b), constant_functor(b, b, 3), m.dom()));
  EXPECT_EQ(with_top, identity_functor(b));
}

TEST(Functor, OppositeIsFunctorial) {
  Cat b = fx::bool4();
  for (const auto& F : oracle::all_functors(fx::two(), b))
    for (const auto& G : oracle::all_functors(b, b)) {
      if (G.obj(0) != 0 && G.obj(3) == 0) continue;
      Functor lhs = op_functor(compose_functors(G, F));
      Functor rhs = compose_functors(op_functor(G), op_functor(F));
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(NatTrans, IdentityIsNatural) {
  EXPECT_TRUE(validate_nat_trans(identity_nat(fx::meet(fx::bool4()))).ok());
}

TEST(NatTrans, UnitIntoNucleusIsNatural) {
  Monad j = fx::nucleus();
  NatTrans t = thin_nat("x<=jx", identity_functor(j.base), j.endo);
  EXPECT_TRUE(validate_nat_trans(t).ok());
}

TEST(NatTrans, WrongCodomainIsStructural) {
  Cat b = fx::bool4();
  Functor I = identity_functor(b);
  NatTrans t("bad", I, I, {b->morphism("bot<=a"), 5, 7, 8});
  Report r = validate_nat_trans(t);
  EXPECT_FALSE(r.structurally_ok());
  EXPECT_THROW(checked(t), StructuralError);
}

TEST(NatTrans, VerticalIdentity) {
  NatTrans i = identity_nat(fx::nucleus().endo);
  EXPECT_EQ(vcompose(i, i), i);
}

TEST(NatTrans, InterchangeOnEnumeratedInstances) {
  // Every triple of functors Two -> Two, all transformations between them, and
  // every whiskering functor Two -> Two.
  Cat t = fx::two();
  auto functors = oracle::all_functors(t, t);
  ASSERT_EQ(functors.size(), 3u);
  int checked_instances = 0;
  for (const auto& A : functors)
    for (const auto& B : functors)
      for (const auto& C : functors)
        for (const auto& s : oracle::all_transformations(B, C))
          for (const auto& u : oracle::all_transformations(A, B))
            for (const auto& F : functors) {
              NatTrans ns("s", B, C, s), nt("t", A, B, u);
              EXPECT_EQ(vcompose(whisker_left(F, ns), whisker_left(F, nt)), whisker_left(F, vcompose(ns, nt)));
              EXPECT_EQ(vcompose(whisker_right(ns, F), whisker_right(nt, F)), whisker_right(vcompose(ns, nt), F));
              ++checked_instances;
            }
  EXPECT_GT(checked_instances, 0);
}

TEST(NatTrans, MiddleFourInterchangeOnZ2) {
  Cat z = fx::z2();
  auto functors = oracle::all_functors(z, z);
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 50; ++trial) {
    auto pick = [&] { return functors[rng() % functors.size()]; };
    Functor F = pick(), G = pick(), H = pick(), K = pick();
    auto s_all = oracle::all_transformations(F, G);
    auto t_all = oracle::all_transformations(H, K);
    if (s_all.empty() || t_all.empty()) continue;
    NatTrans s("s", F, G, s_all[rng() % s_all.size()]);
    NatTrans t("t", H, K, t_all[rng() % t_all.size()]);
    // (t * s) = tG . Hs = Ks . tF
    NatTrans a = vcompose(whisker_right(t, G), whisker_left(H, s));
    NatTrans b = vcompose(whisker_left(K, s), whisker_right(t, F));
    EXPECT_EQ(a.components(), b.components());
  }
}

TEST(NatTrans, IdentityIsInvertibleWithItselfAsInverse) {
  NatTrans i = identity_nat(fx::meet(fx::bool4()));
  auto inv = is_invertible(i);
  ASSERT_TRUE(inv.invertible);
  EXPECT_EQ(*inv.inverse, i);
}

TEST(NatTrans, UnitIntoNucleusIsNotInvertibleAtBot) {
  Monad j = fx::nucleus();
  auto inv = is_invertible(j.unit);
  EXPECT_FALSE(inv.invertible);
  EXPECT_EQ(j.base->object_id(inv.witness), "bot");
}

TEST(NatTrans, NucleusPreservesMeetsInvertibly) {
  EXPECT_TRUE(is_invertible(fx::nucleus_cell().psi).invertible);
}

TEST(NatTrans, InvertibilityMatchesExhaustiveSearch) {
  std::vector<std::pair<Cat, Cat>> shapes = {{fx::two(), fx::two()}, {fx::z2(), fx::z2()},
                                             {fx::two(), fx::bool4()}, {fx::one(), fx::z2()}};
  int decided = 0;
  for (const auto& [C, D] : shapes) {
    auto functors = oracle::all_functors(C, D);
    for (const auto& S : functors)
      for (const auto& T : functors)
        for (const auto& comp : oracle::all_transformations(S, T)) {
          NatTrans t("t", S, T, comp);
          auto brute = oracle::inverse_family(t);
          auto inv = is_invertible(t);
          ASSERT_EQ(inv.invertible, brute.has_value());
          if (brute) {
            EXPECT_EQ(inv.inverse->components(), *brute);
            EXPECT_TRUE(oracle::natural(T, S, *brute));
          }
          ++decided;
        }
  }
  EXPECT_GT(decided, 20);
}

TEST(ParamTrans, IdentityFamilyOverThinParameterPasses) {
  EXPECT_TRUE(validate_param_trans(fx::z2_family(false)).ok());
}

TEST(ParamTrans, PerturbedComponentFailsTheSquare) {
  Report r = validate_param_trans(fx::z2_family(true));
  EXPECT_TRUE(r.has_violation("param-square", {"u", "e"}));
  EXPECT_TRUE(r.has_violation("param-square", {"u", "g"}));
}

TEST(ParamTrans, ShapeMismatchIsStructural) {
  ParamTrans t = fx::z2_family(false);
  t.parameter = fx::bool4();
  EXPECT_FALSE(validate_param_trans(t).structurally_ok());
}

class Perturbations : public ::testing::TestWithParam<fx::Perturbation> {};

TEST_P(Perturbations, FailWithTheDocumentedWitness) {
  const auto& p = GetParam();
  auto all = p.report.sorted_violations();
  EXPECT_NE(std::find(all.begin(), all.end(), Violation{p.law, p.witness}), all.end())
      << p.name << ": " << p.report.summary();
}

INSTANTIATE_TEST_SUITE_P(Catalogue, Perturbations, ::testing::ValuesIn(fx::perturbations()),
                         [](const auto& info) {
                           std::string n;
                           for (char c : info.param.name) n += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return n;
                         });
