#ifndef CATKIT_TESTS_ORACLES_HPP
#define CATKIT_TESTS_ORACLES_HPP

// Brute-force reference computations used as test oracles. They work from
// raw tables and never call the engine operation being checked.

#include <optional>
#include <utility>
#include <vector>

#include "catkit/fincat.hpp"
#include "catkit/functor.hpp"
#include "catkit/nat_trans.hpp"
#include "catkit/cat_struct.hpp"

namespace oracle {

using catkit::FinCat;

/** Every morphism pair (g, f) with g after f defined. */
inline int composable_pairs(const FinCat& c) {
  int n = 0;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      if (c.dom(g) == c.cod(f)) ++n;
  return n;
}

/** Search all hom-sets for a two-sided inverse of every component, then re-check naturality by hand. */
inline std::optional<std::vector<int>> inverse_family(const catkit::NatTrans& t) {
  const FinCat& D = *t.cod();
  const FinCat& C = *t.dom();
  std::vector<int> inv(C.object_count(), -1);
  for (int a = 0; a < C.object_count(); ++a) {
    int c = t.at(a);
    for (int g = 0; g < D.morphism_count(); ++g) {
      if (D.dom(g) != D.cod(c) || D.cod(g) != D.dom(c)) continue;
      if (D.compose(g, c) == D.identity(D.dom(c)) && D.compose(c, g) == D.identity(D.cod(c))) {
        inv[a] = g;
        break;
      }
    }
    if (inv[a] < 0) return std::nullopt;
  }
  return inv;
}

/** All structure maps k: SM -> M obeying both algebra laws, tried over every morphism of the base. */
inline std::vector<std::pair<int, int>> algebras(const catkit::Monad& m) {
  const FinCat& C = *m.base;
  std::vector<std::pair<int, int>> out;
  for (int M = 0; M < C.object_count(); ++M)
    for (int k = 0; k < C.morphism_count(); ++k) {
      if (C.dom(k) != m.endo.obj(M) || C.cod(k) != M) continue;
      if (C.compose(k, m.unit.at(M)) != C.identity(M)) continue;
      if (C.compose(k, m.mult.at(M)) != C.compose(k, m.endo.mor(k))) continue;
      out.emplace_back(M, k);
    }
  return out;
}

/** Decide naturality directly from the definition. */
inline bool natural(const catkit::Functor& S, const catkit::Functor& T, const std::vector<int>& comp) {
  const FinCat& C = *S.dom();
  const FinCat& D = *S.cod();
  for (int a = 0; a < C.object_count(); ++a)
    if (D.dom(comp[a]) != S.obj(a) || D.cod(comp[a]) != T.obj(a)) return false;
  for (int f = 0; f < C.morphism_count(); ++f)
    if (D.compose(T.mor(f), comp[C.dom(f)]) != D.compose(comp[C.cod(f)], S.mor(f))) return false;
  return true;
}

/** Every natural family S => T, enumerated over all component choices. */
inline std::vector<std::vector<int>> all_transformations(const catkit::Functor& S, const catkit::Functor& T) {
  const FinCat& C = *S.dom();
  const FinCat& D = *S.cod();
  std::vector<std::vector<int>> choices(C.object_count());
  for (int a = 0; a < C.object_count(); ++a)
    for (int g = 0; g < D.morphism_count(); ++g)
      if (D.dom(g) == S.obj(a) && D.cod(g) == T.obj(a)) choices[a].push_back(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(C.object_count());
  auto rec = [&](auto&& self, int a) -> void {
    if (a == C.object_count()) {
      if (natural(S, T, cur)) out.push_back(cur);
      return;
    }
    for (int g : choices[a]) {
      cur[a] = g;
      self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/** Every functor between two small categories, by exhaustive assignment. */
inline std::vector<catkit::Functor> all_functors(const catkit::Cat& C, const catkit::Cat& D) {
  std::vector<catkit::Functor> out;
  std::vector<int> objs(C->object_count()), mors(C->morphism_count());
  auto rec_mor = [&](auto&& self, int f) -> void {
    if (f == C->morphism_count()) {
      catkit::Functor F("F" + std::to_string(out.size()), C, D, objs, mors);
      if (catkit::validate_functor(F).ok()) out.push_back(F);
      return;
    }
    for (int g = 0; g < D->morphism_count(); ++g)
      if (D->dom(g) == objs[C->dom(f)] && D->cod(g) == objs[C->cod(f)]) {
        mors[f] = g;
        self(self, f + 1);
      }
  };
  auto rec_obj = [&](auto&& self, int a) -> void {
    if (a == C->object_count()) {
      rec_mor(rec_mor, 0);
      return;
    }
    for (int x = 0; x < D->object_count(); ++x) {
      objs[a] = x;
      self(self, a + 1);
    }
  };
  rec_obj(rec_obj, 0);
  return out;
}

} // namespace oracle

#endif
