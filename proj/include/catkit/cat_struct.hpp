#ifndef CATKIT_CAT_STRUCT_HPP
#define CATKIT_CAT_STRUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catkit/nat_trans.hpp"

namespace catkit {

/** left -| right, with unit 1 => right.left and counit left.right => 1. */
struct Adjunction {
  std::string name;
  Functor left;
  Functor right;
  NatTrans unit;
  NatTrans counit;

  const Cat& domain() const noexcept { return left.dom(); }
  const Cat& codomain() const noexcept { return left.cod(); }

  friend bool operator==(const Adjunction& a, const Adjunction& b) {
    return a.left == b.left && a.right == b.right && a.unit == b.unit && a.counit == b.counit;
  }
};

/** (base, endo, mult, unit). */
struct Monad {
  std::string name;
  Cat base;
  Functor endo;
  NatTrans mult;
  NatTrans unit;

  friend bool operator==(const Monad& a, const Monad& b) {
    return same(a.base, b.base) && a.endo == b.endo && a.mult == b.mult && a.unit == b.unit;
  }
};

inline Report validate_adjunction(const Adjunction& a) {
  Report r;
  const Functor& L = a.left;
  const Functor& R = a.right;
  if (!same(L.dom(), R.cod()) || !same(L.cod(), R.dom())) {
    r.structural("adjoint-shape", {L.name(), R.name()});
    return r;
  }
  r.absorb("left", validate_functor(L));
  r.absorb("right", validate_functor(R));
  if (!r.ok()) return r;
  if (!(a.unit.source() == identity_functor(L.dom())) || !(a.unit.target() == compose_functors(R, L)))
    r.structural("unit-shape", {a.unit.name()});
  if (!(a.counit.source() == compose_functors(L, R)) || !(a.counit.target() == identity_functor(L.cod())))
    r.structural("counit-shape", {a.counit.name()});
  if (!r.structurally_ok()) return r;
  r.absorb("unit", validate_nat_trans(a.unit));
  r.absorb("counit", validate_nat_trans(a.counit));
  if (!r.structurally_ok()) return r;

  const auto& C = *L.dom();
  const auto& X = *L.cod();
  for (int c = 0; c < C.object_count(); ++c) {
    int lhs = X.compose(a.counit.at(L.obj(c)), L.mor(a.unit.at(c)));
    if (lhs != X.identity(L.obj(c))) r.fail("triangle-left", {C.object_id(c)});
  }
  for (int x = 0; x < X.object_count(); ++x) {
    int lhs = C.compose(R.mor(a.counit.at(x)), a.unit.at(R.obj(x)));
    if (lhs != C.identity(R.obj(x))) r.fail("triangle-right", {X.object_id(x)});
  }
  return r;
}

inline Adjunction checked(Adjunction a) {
  require(validate_adjunction(a), "adjunction " + a.name);
  return a;
}

inline Report validate_monad(const Monad& m) {
  Report r;
  const Functor& S = m.endo;
  if (!same(S.dom(), m.base) || !same(S.cod(), m.base)) {
    r.structural("endo-shape", {S.name()});
    return r;
  }
  r.absorb("endo", validate_functor(S));
  if (!r.ok()) return r;
  if (!(m.mult.source() == compose_functors(S, S)) || !(m.mult.target() == S))
    r.structural("mult-shape", {m.mult.name()});
  if (!(m.unit.source() == identity_functor(m.base)) || !(m.unit.target() == S))
    r.structural("unit-shape", {m.unit.name()});
  if (!r.structurally_ok()) return r;
  r.absorb("mult", validate_nat_trans(m.mult));
  r.absorb("unit", validate_nat_trans(m.unit));
  if (!r.structurally_ok()) return r;

  const auto& C = *m.base;
  for (int c = 0; c < C.object_count(); ++c) {
    int mu = m.mult.at(c);
    int sc = S.obj(c);
    if (C.compose(mu, S.mor(mu)) != C.compose(mu, m.mult.at(sc)))
      r.fail("associativity", {C.object_id(c)});
    if (C.compose(mu, S.mor(m.unit.at(c))) != C.identity(sc)) r.fail("left-unit", {C.object_id(c)});
    if (C.compose(mu, m.unit.at(sc)) != C.identity(sc)) r.fail("right-unit", {C.object_id(c)});
  }
  return r;
}

inline Monad checked(Monad m) {
  require(validate_monad(m), "monad " + m.name);
  return m;
}

/** (RL, R eps L, eta). */
inline Monad monad_from_adjunction(const Adjunction& a) {
  Functor S = compose_functors(a.right, a.left).renamed(a.right.name() + a.left.name());
  NatTrans mult = whisker_left(a.right, whisker_right(a.counit, a.left));
  mult = NatTrans("mu_" + S.name(), compose_functors(S, S), S, mult.components());
  NatTrans unit("eta_" + S.name(), identity_functor(a.domain()), S, a.unit.components());
  return checked(Monad{S.name(), a.domain(), S, std::move(mult), std::move(unit)});
}

inline Adjunction identity_adjunction(const Cat& C) {
  Functor I = identity_functor(C);
  return Adjunction{"1_" + C->name(), I, I, identity_nat(I), identity_nat(I)};
}

inline Monad identity_monad(const Cat& C) {
  Functor I = identity_functor(C);
  return Monad{"1_" + C->name(), C, I, identity_nat(I), identity_nat(I)};
}

inline Adjunction product_adjunction(const Adjunction& a, const Adjunction& b) {
  Cat dom = product_category(a.domain(), b.domain());
  Cat cod = product_category(a.codomain(), b.codomain());
  Functor L = product_functor(a.left, b.left, dom, cod);
  Functor R = product_functor(a.right, b.right, cod, dom);
  NatTrans unit = product_nat(a.unit, b.unit, dom, dom);
  NatTrans counit = product_nat(a.counit, b.counit, cod, cod);
  unit = NatTrans(unit.name(), identity_functor(dom), compose_functors(R, L), unit.components());
  counit = NatTrans(counit.name(), compose_functors(L, R), identity_functor(cod), counit.components());
  return checked(Adjunction{"(" + a.name + "*" + b.name + ")", L, R, unit, counit});
}

inline Monad product_monad(const Monad& s, const Monad& e) {
  Cat base = product_category(s.base, e.base);
  Functor S = product_functor(s.endo, e.endo, base, base);
  NatTrans mult = product_nat(s.mult, e.mult, base, base);
  NatTrans unit = product_nat(s.unit, e.unit, base, base);
  mult = NatTrans(mult.name(), compose_functors(S, S), S, mult.components());
  unit = NatTrans(unit.name(), identity_functor(base), S, unit.components());
  return checked(Monad{"(" + s.name + "*" + e.name + ")", base, S, mult, unit});
}

/** Eilenberg-Moore category of a monad with its free/forgetful adjunction. */
struct EMBundle {
  Monad monad;
  Cat em;
  Functor free;
  Functor forget;
  Adjunction adjunction;
  /** Carrier and structure map of each algebra, by em object index. */
  std::vector<int> carrier;
  std::vector<int> structure;

  /** Object index of the algebra (M, k), or -1. */
  int algebra(int M, int k) const {
    auto it = by_algebra.find({M, k});
    return it == by_algebra.end() ? -1 : it->second;
  }

  /** The flagged morphism with underlying m between two algebras, or -1. */
  int lift(int m, int from, int to) const {
    for (int f : em->hom(from, to))
      if (forget.mor(f) == m) return f;
    return -1;
  }

  std::map<std::pair<int, int>, int> by_algebra;
};

inline std::string algebra_id(const std::string& M, const std::string& k) {
  return "(" + M + "|" + k + ")";
}

/** Every (M, k) with k: SM -> M satisfying both algebra laws, in canonical order. */
inline std::vector<std::pair<int, int>> enumerate_algebras(const Monad& m) {
  const auto& C = *m.base;
  std::vector<std::pair<int, int>> result;
  for (int M = 0; M < C.object_count(); ++M) {
    int SM = m.endo.obj(M);
    for (int k : C.hom(SM, M)) {
      bool unit_law = C.compose(k, m.unit.at(M)) == C.identity(M);
      bool assoc_law = C.compose(k, m.mult.at(M)) == C.compose(k, m.endo.mor(k));
      if (unit_law && assoc_law) result.emplace_back(M, k);
    }
  }
  return result;
}

inline EMBundle em_category(const Monad& m) {
  require(validate_monad(m), "em_category: monad " + m.name);
  const Cat& base = m.base;
  const auto& C = *base;
  const auto& S = m.endo;
  auto algebras = enumerate_algebras(m);

  EMBundle b;
  b.monad = m;
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto [M, k] = algebras[i];
    b.by_algebra[{M, k}] = static_cast<int>(i);
    b.carrier.push_back(M);
    b.structure.push_back(k);
    objs.push_back(algebra_id(C.object_id(M), C.morphism_id(k)));
  }

  std::vector<std::string> mors;
  std::vector<int> dom, cod, ident(algebras.size(), -1), underlying;
  std::map<std::tuple<int, int, int>, int> by_data;
  for (std::size_t x = 0; x < algebras.size(); ++x)
    for (std::size_t y = 0; y < algebras.size(); ++y) {
      auto [M, k] = algebras[x];
      auto [N, l] = algebras[y];
      for (int f : C.hom(M, N)) {
        if (C.compose(l, S.mor(f)) != C.compose(f, k)) continue;
        int idx = static_cast<int>(mors.size());
        by_data[{static_cast<int>(x), static_cast<int>(y), f}] = idx;
        if (x == y && f == C.identity(M)) ident[x] = idx;
        mors.push_back(C.morphism_id(f) + ":" + objs[x] + "->" + objs[y]);
        dom.push_back(static_cast<int>(x));
        cod.push_back(static_cast<int>(y));
        underlying.push_back(f);
      }
    }
  enforce_morphism_limit(mors.size(), "Eilenberg-Moore category of " + m.name);
  b.em = FinCat::build("EM(" + m.name + ")", objs, mors, dom, cod, ident, [&](int g, int f) {
    auto it = by_data.find({dom[f], cod[g], C.compose(underlying[g], underlying[f])});
    return it == by_data.end() ? -1 : it->second;
  });
  require(validate_category(*b.em), "Eilenberg-Moore category of " + m.name);

  std::vector<int> forget_objs(b.carrier);
  b.forget = Functor("U^" + m.name, b.em, base, std::move(forget_objs), underlying);

  std::vector<int> free_objs(C.object_count()), free_mors(C.morphism_count());
  for (int M = 0; M < C.object_count(); ++M) {
    free_objs[M] = b.algebra(S.obj(M), m.mult.at(M));
    if (free_objs[M] < 0) throw LawError("free algebra missing", {C.object_id(M)});
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    free_mors[f] = b.lift(S.mor(f), free_objs[C.dom(f)], free_objs[C.cod(f)]);
    if (free_mors[f] < 0) throw LawError("free image is not an algebra map", {C.morphism_id(f)});
  }
  b.free = Functor("F^" + m.name, base, b.em, std::move(free_objs), std::move(free_mors));

  NatTrans unit("eta^" + m.name, identity_functor(base), compose_functors(b.forget, b.free),
                m.unit.components());
  std::vector<int> counit(algebras.size());
  for (std::size_t x = 0; x < algebras.size(); ++x) {
    counit[x] = b.lift(b.structure[x], b.free.obj(b.carrier[x]), static_cast<int>(x));
    if (counit[x] < 0) throw LawError("structure map is not an algebra map", {objs[x]});
  }
  NatTrans eps("eps^" + m.name, compose_functors(b.free, b.forget), identity_functor(b.em),
               std::move(counit));
  b.adjunction = checked(Adjunction{"EM(" + m.name + ")", b.free, b.forget, unit, eps});
  return b;
}

/** X -> EM(RL): x goes to (Rx, R eps_x). */
inline Functor comparison_functor(const Adjunction& a, const EMBundle& em) {
  if (!(em.monad == monad_from_adjunction(a)))
    throw DomainError("comparison functor: bundle is not built on the induced monad of " + a.name);
  const Functor& R = a.right;
  const auto& X = *a.codomain();
  std::vector<int> objs(X.object_count()), mors(X.morphism_count());
  for (int x = 0; x < X.object_count(); ++x) {
    objs[x] = em.algebra(R.obj(x), R.mor(a.counit.at(x)));
    if (objs[x] < 0) throw LawError("comparison: image is not an algebra", {X.object_id(x)});
  }
  for (int f = 0; f < X.morphism_count(); ++f) {
    mors[f] = em.lift(R.mor(f), objs[X.dom(f)], objs[X.cod(f)]);
    if (mors[f] < 0) throw LawError("comparison: image is not an algebra map", {X.morphism_id(f)});
  }
  return checked(Functor("K^" + a.name, a.codomain(), em.em, std::move(objs), std::move(mors)));
}

inline Functor comparison_functor(const Adjunction& a) {
  return comparison_functor(a, em_category(monad_from_adjunction(a)));
}

/**
 * Search for a right adjoint of L by universal arrows L c -> x, taking the
 * first universal pair in canonical order. Returns nothing when some x has
 * no universal arrow.
 */
inline std::optional<Adjunction> find_right_adjoint(const Functor& L) {
  const auto& C = *L.dom();
  const auto& X = *L.cod();
  std::vector<int> G(X.object_count(), -1), eps(X.object_count(), -1);

  auto factorizations = [&](int c, int e, int c2, int f) {
    std::vector<int> found;
    for (int g : C.hom(c2, c))
      if (X.compose(e, L.mor(g)) == f) found.push_back(g);
    return found;
  };

  for (int x = 0; x < X.object_count(); ++x) {
    for (int c = 0; c < C.object_count() && G[x] < 0; ++c)
      for (int e : X.hom(L.obj(c), x)) {
        bool universal = true;
        for (int c2 = 0; c2 < C.object_count() && universal; ++c2)
          for (int f : X.hom(L.obj(c2), x))
            if (factorizations(c, e, c2, f).size() != 1) {
              universal = false;
              break;
            }
        if (universal) {
          G[x] = c;
          eps[x] = e;
          break;
        }
      }
    if (G[x] < 0) return std::nullopt;
  }

  std::vector<int> Gm(X.morphism_count());
  for (int h = 0; h < X.morphism_count(); ++h) {
    int x = X.dom(h), y = X.cod(h);
    Gm[h] = factorizations(G[y], eps[y], G[x], X.compose(h, eps[x])).front();
  }
  Functor R("R_" + L.name(), L.cod(), L.dom(), G, std::move(Gm));
  std::vector<int> eta(C.object_count());
  for (int c = 0; c < C.object_count(); ++c) {
    int Lc = L.obj(c);
    eta[c] = factorizations(G[Lc], eps[Lc], c, X.identity(Lc)).front();
  }
  Adjunction a{L.name() + "-|" + R.name(), L, R,
               NatTrans("eta", identity_functor(L.dom()), compose_functors(R, L), std::move(eta)),
               NatTrans("eps", compose_functors(L, R), identity_functor(L.cod()), std::move(eps))};
  return checked(std::move(a));
}

} // namespace catkit

#endif
