#ifndef CATKIT_TWOCAT_HPP
#define CATKIT_TWOCAT_HPP

#include <string>
#include <utility>

#include "catkit/cat_struct.hpp"

namespace catkit {

/**
 * Mate of theta: Lb.F => G.La across La -| Ra (C -> X) and Lb -| Rb (D -> Y):
 *   Rb G eps_a  .  Rb theta Ra  .  eta_b F Ra  :  F.Ra => Rb.G
 */
inline NatTrans mate(const NatTrans& theta, const Functor& F, const Functor& G,
                     const Adjunction& a, const Adjunction& b) {
  if (!(theta.source() == compose_functors(b.left, F)) || !(theta.target() == compose_functors(G, a.left)))
    throw StructuralError("mate: " + theta.name() + " does not have the shape Lb.F => G.La");
  const Functor& Ra = a.right;
  const Functor& Rb = b.right;
  const auto& D = *F.cod();
  const auto& X = *a.codomain();
  std::vector<int> comp(X.object_count());
  for (int x = 0; x < X.object_count(); ++x) {
    int rx = Ra.obj(x);
    comp[x] = D.compose({Rb.mor(G.mor(a.counit.at(x))), Rb.mor(theta.at(rx)), b.unit.at(F.obj(rx))});
  }
  return checked(NatTrans("m(" + theta.name() + ")", compose_functors(F, Ra), compose_functors(Rb, G),
                          std::move(comp)));
}

/**
 * The inverse passage, rho: F.Ra => Rb.G to
 *   eps_b G La  .  Lb rho La  .  Lb F eta_a  :  Lb.F => G.La
 */
inline NatTrans left_mate(const NatTrans& rho, const Functor& F, const Functor& G,
                          const Adjunction& a, const Adjunction& b) {
  if (!(rho.source() == compose_functors(F, a.right)) || !(rho.target() == compose_functors(b.right, G)))
    throw StructuralError("left mate: " + rho.name() + " does not have the shape F.Ra => Rb.G");
  const Functor& La = a.left;
  const Functor& Lb = b.left;
  const auto& Y = *G.cod();
  const auto& C = *a.domain();
  std::vector<int> comp(C.object_count());
  for (int c = 0; c < C.object_count(); ++c) {
    int lc = La.obj(c);
    comp[c] = Y.compose({b.counit.at(G.obj(lc)), Lb.mor(rho.at(lc)), Lb.mor(F.mor(a.unit.at(c)))});
  }
  return checked(NatTrans("m'(" + rho.name() + ")", compose_functors(Lb, F), compose_functors(G, La),
                          std::move(comp)));
}

/** A 1-cell of Adj_R: top J, bottom V, lambda: target.L J => V source.L, with cached mate. */
struct AdjOneCell {
  Adjunction source;
  Adjunction target;
  Functor top;
  Functor bottom;
  NatTrans lambda;
  NatTrans rho;
  NatTrans rho_inv;

  friend bool operator==(const AdjOneCell& a, const AdjOneCell& b) {
    return a.source == b.source && a.target == b.target && a.top == b.top && a.bottom == b.bottom &&
           a.lambda == b.lambda;
  }
};

/** Computes the mate; a non-invertible mate rejects the cell. */
inline AdjOneCell make_adj_one_cell(Adjunction source, Adjunction target, Functor top, Functor bottom,
                                    NatTrans lambda) {
  if (!same(top.dom(), source.domain()) || !same(top.cod(), target.domain()) ||
      !same(bottom.dom(), source.codomain()) || !same(bottom.cod(), target.codomain()))
    throw StructuralError("1-cell: top/bottom functors do not connect " + source.name + " to " +
                          target.name);
  require(validate_nat_trans(lambda), "1-cell lambda " + lambda.name());
  NatTrans rho = mate(lambda, top, bottom, source, target);
  auto inv = is_invertible(rho);
  if (!inv)
    throw DomainError("1-cell mate is not invertible", {rho.dom()->object_id(inv.witness)});
  return AdjOneCell{std::move(source), std::move(target), std::move(top), std::move(bottom),
                    std::move(lambda), std::move(rho), std::move(*inv.inverse)};
}

inline Report validate_adj_one_cell(const AdjOneCell& c) {
  Report r;
  r.absorb("source", validate_adjunction(c.source));
  r.absorb("target", validate_adjunction(c.target));
  r.absorb("top", validate_functor(c.top));
  r.absorb("bottom", validate_functor(c.bottom));
  if (!r.ok()) return r;
  if (!(c.lambda.source() == compose_functors(c.target.left, c.top)) ||
      !(c.lambda.target() == compose_functors(c.bottom, c.source.left))) {
    r.structural("lambda-shape", {c.lambda.name()});
    return r;
  }
  r.absorb("lambda", validate_nat_trans(c.lambda));
  if (!r.ok()) return r;
  NatTrans m = mate(c.lambda, c.top, c.bottom, c.source, c.target);
  r.check("rho-is-mate", m == c.rho);
  r.check("rho-inverse-left", vcompose(c.rho_inv, c.rho) == identity_nat(c.rho.source()));
  r.check("rho-inverse-right", vcompose(c.rho, c.rho_inv) == identity_nat(c.rho.target()));
  return r;
}

inline AdjOneCell identity_adj_one_cell(const Adjunction& a) {
  Functor L = a.left;
  NatTrans lambda("1_" + L.name(), compose_functors(L, identity_functor(a.domain())),
                  compose_functors(identity_functor(a.codomain()), L), identity_nat(L).components());
  return make_adj_one_cell(a, a, identity_functor(a.domain()), identity_functor(a.codomain()),
                           std::move(lambda));
}

/** second after first: (J'J, V'V, V'lambda . lambda'J). */
inline AdjOneCell compose_adj_one_cells(const AdjOneCell& second, const AdjOneCell& first) {
  if (!(first.target == second.source))
    throw StructuralError("1-cell composition: adjunctions do not match");
  NatTrans lambda = vcompose(whisker_left(second.bottom, first.lambda),
                             whisker_right(second.lambda, first.top));
  return make_adj_one_cell(first.source, second.target, compose_functors(second.top, first.top),
                           compose_functors(second.bottom, first.bottom), std::move(lambda));
}

/** A 1-cell of Mnd: carrier B with psi: T B => B S. */
struct MndOneCell {
  Monad source;
  Monad target;
  Functor carrier;
  NatTrans psi;

  friend bool operator==(const MndOneCell& a, const MndOneCell& b) {
    return a.source == b.source && a.target == b.target && a.carrier == b.carrier && a.psi == b.psi;
  }
};

inline Report validate_mnd_one_cell(const MndOneCell& c) {
  Report r;
  r.absorb("source", validate_monad(c.source));
  r.absorb("target", validate_monad(c.target));
  r.absorb("carrier", validate_functor(c.carrier));
  if (!r.ok()) return r;
  const Functor& B = c.carrier;
  const Functor& S = c.source.endo;
  const Functor& T = c.target.endo;
  if (!same(B.dom(), c.source.base) || !same(B.cod(), c.target.base) ||
      !(c.psi.source() == compose_functors(T, B)) || !(c.psi.target() == compose_functors(B, S))) {
    r.structural("psi-shape", {c.psi.name()});
    return r;
  }
  r.absorb("psi", validate_nat_trans(c.psi));
  if (!r.ok()) return r;
  const auto& C = *c.source.base;
  const auto& D = *c.target.base;
  for (int x = 0; x < C.object_count(); ++x) {
    int bx = B.obj(x);
    int lhs = D.compose(c.psi.at(x), c.target.mult.at(bx));
    int rhs = D.compose({B.mor(c.source.mult.at(x)), c.psi.at(S.obj(x)), T.mor(c.psi.at(x))});
    if (lhs != rhs) r.fail("compatibility-mult", {C.object_id(x)});
    if (D.compose(c.psi.at(x), c.target.unit.at(bx)) != B.mor(c.source.unit.at(x)))
      r.fail("compatibility-unit", {C.object_id(x)});
  }
  return r;
}

inline MndOneCell checked(MndOneCell c) {
  require(validate_mnd_one_cell(c), "monad 1-cell " + c.psi.name());
  return c;
}

inline MndOneCell identity_mnd_one_cell(const Monad& m) {
  NatTrans psi("1_" + m.endo.name(), compose_functors(m.endo, identity_functor(m.base)),
               compose_functors(identity_functor(m.base), m.endo), identity_nat(m.endo).components());
  return checked(MndOneCell{m, m, identity_functor(m.base), std::move(psi)});
}

/** second after first: (B'B, B'psi . psi'B). */
inline MndOneCell compose_mnd_one_cells(const MndOneCell& second, const MndOneCell& first) {
  if (!(first.target == second.source))
    throw StructuralError("monad 1-cell composition: monads do not match");
  NatTrans psi = vcompose(whisker_left(second.carrier, first.psi), whisker_right(second.psi, first.carrier));
  return checked(MndOneCell{first.source, second.target,
                            compose_functors(second.carrier, first.carrier), std::move(psi)});
}

/** A 2-cell of Adj_R: alpha on tops, beta on bottoms. */
struct AdjTwoCell {
  AdjOneCell from;
  AdjOneCell to;
  NatTrans alpha;
  NatTrans beta;
};

/**
 * Both compatibility conditions are evaluated; they are equivalent, so a
 * disagreement is reported as its own failure.
 */
inline Report validate_adj_two_cell(const AdjTwoCell& t) {
  Report r;
  if (!(t.from.source == t.to.source) || !(t.from.target == t.to.target) ||
      !(t.alpha.source() == t.from.top) || !(t.alpha.target() == t.to.top) ||
      !(t.beta.source() == t.from.bottom) || !(t.beta.target() == t.to.bottom)) {
    r.structural("two-cell-shape", {t.alpha.name(), t.beta.name()});
    return r;
  }
  r.absorb("alpha", validate_nat_trans(t.alpha));
  r.absorb("beta", validate_nat_trans(t.beta));
  if (!r.ok()) return r;
  const Adjunction& src = t.from.source;
  const Adjunction& tgt = t.from.target;
  const auto& C = *src.domain();
  const auto& X = *src.codomain();
  const auto& D = *tgt.domain();
  const auto& Y = *tgt.codomain();
  Report dagger, ddagger;
  for (int c = 0; c < C.object_count(); ++c) {
    int lhs = Y.compose(t.beta.at(src.left.obj(c)), t.from.lambda.at(c));
    int rhs = Y.compose(t.to.lambda.at(c), tgt.left.mor(t.alpha.at(c)));
    if (lhs != rhs) dagger.fail("dagger", {C.object_id(c)});
  }
  for (int x = 0; x < X.object_count(); ++x) {
    int lhs = D.compose(tgt.right.mor(t.beta.at(x)), t.from.rho.at(x));
    int rhs = D.compose(t.to.rho.at(x), t.alpha.at(src.right.obj(x)));
    if (lhs != rhs) ddagger.fail("double-dagger", {X.object_id(x)});
  }
  r.absorb("", dagger);
  r.absorb("", ddagger);
  r.check("conditions-agree", dagger.ok() == ddagger.ok());
  return r;
}

/** A 2-cell of Mnd between parallel 1-cells. */
struct MndTwoCell {
  MndOneCell from;
  MndOneCell to;
  NatTrans theta;
};

inline Report validate_mnd_two_cell(const MndTwoCell& t) {
  Report r;
  if (!(t.from.source == t.to.source) || !(t.from.target == t.to.target) ||
      !(t.theta.source() == t.from.carrier) || !(t.theta.target() == t.to.carrier)) {
    r.structural("two-cell-shape", {t.theta.name()});
    return r;
  }
  r.absorb("theta", validate_nat_trans(t.theta));
  if (!r.ok()) return r;
  const auto& C = *t.from.source.base;
  const auto& D = *t.from.target.base;
  const Functor& S = t.from.source.endo;
  const Functor& T = t.from.target.endo;
  for (int x = 0; x < C.object_count(); ++x) {
    int lhs = D.compose(t.to.psi.at(x), T.mor(t.theta.at(x)));
    int rhs = D.compose(t.theta.at(S.obj(x)), t.from.psi.at(x));
    if (lhs != rhs) r.fail("theta-compatibility", {C.object_id(x)});
  }
  return r;
}

/** Phi on 1-cells: carrier J, psi = rho_inv L . Rb lambda. */
inline MndOneCell phi_one_cell(const AdjOneCell& c) {
  Monad S = monad_from_adjunction(c.source);
  Monad T = monad_from_adjunction(c.target);
  NatTrans psi = vcompose(whisker_right(c.rho_inv, c.source.left), whisker_left(c.target.right, c.lambda));
  psi = NatTrans("Phi(" + c.lambda.name() + ")", compose_functors(T.endo, c.top),
                 compose_functors(c.top, S.endo), psi.components());
  return checked(MndOneCell{std::move(S), std::move(T), c.top, std::move(psi)});
}

inline MndTwoCell phi_two_cell(const AdjTwoCell& t) {
  MndTwoCell out{phi_one_cell(t.from), phi_one_cell(t.to), t.alpha};
  require(validate_mnd_two_cell(out), "Phi of a 2-cell");
  return out;
}

/**
 * Lift of a monad 1-cell over an adjunction `over` inducing its source
 * monad, into the Eilenberg-Moore adjunction of its target:
 *   x  |->  (B R x, B(R eps_x) . psi_{R x}),   xi  |->  B R xi (flagged).
 * Over the Eilenberg-Moore adjunction of the source this is Psi.
 */
inline AdjOneCell lift_one_cell(const MndOneCell& c, const Adjunction& over, const EMBundle& target_em) {
  if (!(monad_from_adjunction(over) == c.source))
    throw DomainError("lift: " + over.name + " does not induce the source monad");
  if (!(target_em.monad == c.target))
    throw DomainError("lift: bundle is not built on the target monad");
  const Functor& B = c.carrier;
  const Functor& R = over.right;
  const auto& X = *over.codomain();
  const auto& D = *c.target.base;

  std::vector<int> objs(X.object_count()), mors(X.morphism_count());
  for (int x = 0; x < X.object_count(); ++x) {
    int rx = R.obj(x);
    int k = D.compose(B.mor(R.mor(over.counit.at(x))), c.psi.at(rx));
    objs[x] = target_em.algebra(B.obj(rx), k);
    if (objs[x] < 0) throw LawError("lifted object is not an algebra", {X.object_id(x)});
  }
  for (int f = 0; f < X.morphism_count(); ++f) {
    mors[f] = target_em.lift(B.mor(R.mor(f)), objs[X.dom(f)], objs[X.cod(f)]);
    if (mors[f] < 0) throw LawError("lifted morphism is not an algebra map", {X.morphism_id(f)});
  }
  Functor lifted = checked(Functor(B.name() + "^", over.codomain(), target_em.em, std::move(objs),
                                   std::move(mors)));

  const Functor& FT = target_em.free;
  const auto& C = *c.source.base;
  std::vector<int> comp(C.object_count());
  for (int x = 0; x < C.object_count(); ++x) {
    comp[x] = target_em.lift(c.psi.at(x), FT.obj(B.obj(x)), lifted.obj(over.left.obj(x)));
    if (comp[x] < 0) throw LawError("psi component is not an algebra map", {C.object_id(x)});
  }
  NatTrans lambda("lambda^" + B.name(), compose_functors(FT, B), compose_functors(lifted, over.left),
                  std::move(comp));
  AdjOneCell out = make_adj_one_cell(over, target_em.adjunction, B, std::move(lifted), std::move(lambda));
  require(validate_adj_one_cell(out), "lift of " + c.psi.name());
  if (!(whisker_left(target_em.forget, out.lambda).components() == c.psi.components()))
    throw LawError("forgetful image of the lifted lambda differs from psi");
  return out;
}

inline AdjOneCell psi_one_cell(const MndOneCell& c) {
  return lift_one_cell(c, em_category(c.source).adjunction, em_category(c.target));
}

/** Lift of a monad 2-cell: beta at x is theta_{R x}, flagged. */
inline AdjTwoCell lift_two_cell(const MndTwoCell& t, const Adjunction& over, const EMBundle& target_em) {
  AdjOneCell from = lift_one_cell(t.from, over, target_em);
  AdjOneCell to = lift_one_cell(t.to, over, target_em);
  const auto& X = *over.codomain();
  std::vector<int> comp(X.object_count());
  for (int x = 0; x < X.object_count(); ++x) {
    comp[x] = target_em.lift(t.theta.at(over.right.obj(x)), from.bottom.obj(x), to.bottom.obj(x));
    if (comp[x] < 0) throw LawError("lifted 2-cell component is not an algebra map", {X.object_id(x)});
  }
  NatTrans beta(t.theta.name() + "^", from.bottom, to.bottom, std::move(comp));
  AdjTwoCell out{std::move(from), std::move(to), t.theta, std::move(beta)};
  require(validate_adj_two_cell(out), "lift of 2-cell " + t.theta.name());
  return out;
}

inline AdjTwoCell psi_two_cell(const MndTwoCell& t) {
  return lift_two_cell(t, em_category(t.from.source).adjunction, em_category(t.from.target));
}

/** The unit of the 2-adjunction at an adjunction: (1, comparison) with identity lambda. */
inline AdjOneCell unit_one_cell(const Adjunction& a) {
  EMBundle em = em_category(monad_from_adjunction(a));
  Functor K = comparison_functor(a, em);
  Functor one = identity_functor(a.domain());
  NatTrans lambda("1", compose_functors(em.free, one), compose_functors(K, a.left),
                  identity_nat(em.free).components());
  return make_adj_one_cell(a, em.adjunction, std::move(one), std::move(K), std::move(lambda));
}

/** Phi restricted to cells between Eilenberg-Moore adjunctions. */
inline MndOneCell transpose_adj_to_mnd(const AdjOneCell& c) {
  Monad S = monad_from_adjunction(c.source);
  Monad T = monad_from_adjunction(c.target);
  if (!(c.source == em_category(S).adjunction) || !(c.target == em_category(T).adjunction))
    throw DomainError("transpose: the cell does not run between Eilenberg-Moore adjunctions");
  return phi_one_cell(c);
}

inline AdjOneCell transpose_mnd_to_adj(const MndOneCell& c) { return psi_one_cell(c); }

} // namespace catkit

#endif
