#include <gtest/gtest.h>

#include "catkit/fixtures.hpp"
#include "oracles.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

namespace {

std::vector<Monad> reference_monads() { return {identity_monad(fx::two()), fx::closure1(), fx::nucleus()}; }

/** Fixed points of a thin closure: the algebra carriers. */
int fixed_points(const Functor& j) {
  int n = 0;
  for (int x = 0; x < j.dom()->object_count(); ++x) n += j.obj(x) == x;
  return n;
}

} // namespace

TEST(Adjunction, HeytingAdjunctionsValidate) {
  Cat b = fx::bool4();
  for (int p = 0; p < b->object_count(); ++p) EXPECT_TRUE(validate_adjunction(fx::heyting_adjunction(b, p)).ok());
}

TEST(Adjunction, IdentityAdjunctionValidates) {
  for (const Cat& c : {fx::one(), fx::two(), fx::z2()}) EXPECT_TRUE(validate_adjunction(identity_adjunction(c)).ok());
}

TEST(Adjunction, CounitGFailsLeftTriangle) {
  Report r = validate_adjunction(fx::z2_bad_adjunction());
  EXPECT_TRUE(r.has_violation("triangle-left", {"*"}));
}

TEST(Adjunction, ProductAdjunctionValidates) {
  Cat b = fx::bool4();
  Adjunction p = product_adjunction(fx::heyting_adjunction(b, 1), fx::heyting_adjunction(b, 2));
  EXPECT_TRUE(validate_adjunction(p).ok());
  EXPECT_EQ(p.domain()->object_count(), 16);
}

TEST(Adjunction, RightAdjointOfMeetIsImplication) {
  Cat b = fx::bool4();
  for (int p = 0; p < b->object_count(); ++p) {
    Adjunction h = fx::heyting_adjunction(b, p);
    auto found = find_right_adjoint(h.left);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->right.obj_map(), h.right.obj_map());
    EXPECT_TRUE(validate_adjunction(*found).ok());
  }
}

TEST(Adjunction, ConstantTopHasNoRightAdjoint) {
  Cat t = fx::two();
  EXPECT_FALSE(find_right_adjoint(constant_functor(t, t, 1)).has_value());
}

TEST(Adjunction, RightAdjointSearchMatchesBruteForceOnTwo) {
  // L has a right adjoint on a finite chain iff it preserves joins, i.e. L(0) = 0.
  Cat t = fx::two();
  for (const auto& L : oracle::all_functors(t, t))
    EXPECT_EQ(find_right_adjoint(L).has_value(), L.obj(0) == 0) << L.obj(0) << L.obj(1);
}

TEST(Monad, ReferenceMonadsValidate) {
  for (const Monad& m : reference_monads()) EXPECT_TRUE(validate_monad(m).ok()) << m.name;
}

TEST(Monad, MultiplicationGFailsLeftUnit) {
  EXPECT_TRUE(validate_monad(fx::z2_bad_monad()).has_violation("left-unit", {"*"}));
}

TEST(Monad, MissingUnitComponentIsStructural) {
  Report r = validate_monad(fx::two_zero_monad());
  EXPECT_FALSE(r.structurally_ok());
  auto issues = r.structural_issues();
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().law, "unit/dangling-component");
  EXPECT_EQ(issues.front().witness, std::vector<std::string>{"1"});
}

TEST(Monad, ProductMonadValidates) {
  EXPECT_TRUE(validate_monad(product_monad(fx::nucleus(), fx::closure1())).ok());
}

TEST(Monad, ThinMonadsAreExactlyClosures) {
  Cat b = fx::bool4();
  int closures = 0;
  for (const auto& j : oracle::all_functors(b, b)) {
    bool inflationary = true, idempotent = true;
    for (int x = 0; x < 4; ++x) {
      inflationary = inflationary && (x & j.obj(x)) == x;
      idempotent = idempotent && j.obj(j.obj(x)) == j.obj(x);
    }
    auto map = [&](int x) { return j.obj(x); };
    if (inflationary && idempotent) {
      Monad m = fx::thin_monad("j", b, map);
      EXPECT_EQ(static_cast<int>(enumerate_algebras(m).size()), fixed_points(m.endo));
      ++closures;
    } else {
      EXPECT_ANY_THROW(fx::thin_monad("j", b, map));
    }
  }
  // Meet-closed subsets containing top: eight subsets of {bot, a, b} minus {a, b}.
  EXPECT_EQ(closures, 7);
}

TEST(EilenbergMoore, AlgebraCountsMatchBruteForce) {
  std::vector<std::pair<Monad, int>> expected = {
      {identity_monad(fx::two()), 2}, {fx::closure1(), 1}, {fx::nucleus(), 2}};
  for (const auto& [m, count] : expected) {
    auto brute = oracle::algebras(m);
    EXPECT_EQ(static_cast<int>(brute.size()), count) << m.name;
    EXPECT_EQ(enumerate_algebras(m), brute) << m.name;
    EXPECT_EQ(em_category(m).em->object_count(), count) << m.name;
  }
}

TEST(EilenbergMoore, AlgebraIdentifiers) {
  EMBundle em = em_category(fx::nucleus());
  ASSERT_EQ(em.em->object_count(), 2);
  EXPECT_EQ(em.em->object_id(0), "(a|id_a)");
  EXPECT_EQ(em.em->object_id(1), "(top|id_top)");
  EXPECT_EQ(em_category(fx::closure1()).em->object_id(0), "(1|id1)");
}

TEST(EilenbergMoore, ProductCountIsMultiplicative) {
  auto ms = reference_monads();
  for (const Monad& s : ms)
    for (const Monad& e : ms)
      EXPECT_EQ(enumerate_algebras(product_monad(s, e)).size(),
                oracle::algebras(s).size() * oracle::algebras(e).size());
}

TEST(EilenbergMoore, AdjunctionValidatesAndForgetReflectsIsos) {
  for (const Monad& m : reference_monads()) {
    EMBundle em = em_category(m);
    EXPECT_TRUE(validate_category(*em.em).ok());
    EXPECT_TRUE(validate_adjunction(em.adjunction).ok());
    EXPECT_TRUE(reflects_isomorphisms(em.forget));
  }
}

TEST(EilenbergMoore, InducedMonadIsTheOriginal) {
  for (const Monad& m : reference_monads()) {
    Monad back = monad_from_adjunction(em_category(m).adjunction);
    EXPECT_TRUE(back == m) << m.name;
    EXPECT_EQ(back.endo.obj_map(), m.endo.obj_map());
    EXPECT_EQ(back.endo.mor_map(), m.endo.mor_map());
    EXPECT_EQ(back.mult.components(), m.mult.components());
    EXPECT_EQ(back.unit.components(), m.unit.components());
  }
}

TEST(EilenbergMoore, ComparisonFunctorCommutesWithForget) {
  Cat b = fx::bool4();
  for (int p = 0; p < b->object_count(); ++p) {
    Adjunction h = fx::heyting_adjunction(b, p);
    EMBundle em = em_category(monad_from_adjunction(h));
    Functor K = comparison_functor(h, em);
    EXPECT_TRUE(validate_functor(K).ok());
    EXPECT_EQ(compose_functors(em.forget, K), h.right);
    EXPECT_EQ(compose_functors(K, h.left), em.free);
  }
}

TEST(EilenbergMoore, ComparisonOfEmAdjunctionIsIdentity) {
  for (const Monad& m : reference_monads()) {
    EMBundle em = em_category(m);
    EXPECT_EQ(comparison_functor(em.adjunction, em).obj_map(), identity_functor(em.em).obj_map());
  }
}

TEST(EilenbergMoore, ForgetfulFunctorOfZeroIsNotReflecting) {
  Cat t = fx::two();
  EXPECT_FALSE(reflects_isomorphisms(constant_functor(t, t, 0)));
  EXPECT_TRUE(reflects_isomorphisms(identity_functor(t)));
}
