#ifndef CATKIT_HOPF_PARAMETRIC_HPP
#define CATKIT_HOPF_PARAMETRIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/twocat.hpp"

namespace catkit {

/**
 * F: C*P -> D and G: P^op*D -> C with an adjunction F(-,P) -| G(P,-) for
 * every parameter object P, indexed by P's object index.
 */
struct ParametricAdjunction {
  std::string name;
  Functor F;
  Functor G;
  std::vector<Adjunction> per_parameter;

  const Cat& C() const { return F.dom()->left_factor(); }
  const Cat& P() const { return F.dom()->right_factor(); }
  const Cat& D() const { return F.cod(); }

  const Adjunction& at(int p) const { return per_parameter.at(p); }

  friend bool operator==(const ParametricAdjunction& a, const ParametricAdjunction& b) {
    return a.F == b.F && a.G == b.G && a.per_parameter == b.per_parameter;
  }
};

/** F(-, p): C -> D. */
inline Functor section_left(const Functor& F, int p) {
  return compose_functors(F, insert_right(F.dom(), p)).renamed(F.name() + "_" + F.dom()->right_factor()->object_id(p));
}

/** G(p, -): D -> C. */
inline Functor section_right(const Functor& G, int p) {
  return compose_functors(G, insert_left(G.dom(), p)).renamed(G.name() + "_" + G.dom()->left_factor()->object_id(p));
}

inline Report validate_parametric_adjunction(const ParametricAdjunction& pa) {
  Report r;
  const Functor& F = pa.F;
  const Functor& G = pa.G;
  if (!F.dom()->is_product() || !G.dom()->is_product() ||
      !same(G.dom()->left_factor(), op_category(pa.P())) || !same(G.dom()->right_factor(), pa.D()) ||
      !same(G.cod(), pa.C())) {
    r.structural("parametric-shape", {F.name(), G.name()});
    return r;
  }
  if (static_cast<int>(pa.per_parameter.size()) != pa.P()->object_count()) {
    r.structural("parameter-arity", {pa.name});
    return r;
  }
  r.absorb("F", validate_functor(F));
  r.absorb("G", validate_functor(G));
  if (!r.ok()) return r;

  const auto& P = *pa.P();
  for (int p = 0; p < P.object_count(); ++p) {
    const Adjunction& a = pa.at(p);
    r.absorb("parameter[" + P.object_id(p) + "]", validate_adjunction(a));
    r.check("section-left", a.left == section_left(F, p), {P.object_id(p)});
    r.check("section-right", a.right == section_right(G, p), {P.object_id(p)});
  }
  if (!r.ok()) return r;

  const auto& C = *pa.C();
  const auto& D = *pa.D();
  const Cat& FD = F.dom();
  const Cat& GD = G.dom();
  for (int p = 0; p < P.morphism_count(); ++p) {
    int s = P.dom(p), t = P.cod(p);
    const Adjunction& as = pa.at(s);
    const Adjunction& at = pa.at(t);
    for (int d = 0; d < D.object_count(); ++d) {
      int given = G.mor(GD->pair_morphism(p, D.identity(d)));
      int gtd = at.right.obj(d);
      int Fp = F.mor(FD->pair_morphism(C.identity(gtd), p));
      int conj = C.compose({as.right.mor(at.counit.at(d)), as.right.mor(Fp), as.unit.at(gtd)});
      if (given != conj) r.fail("conjugate", {P.morphism_id(p), D.object_id(d)});
    }
  }
  return r;
}

inline ParametricAdjunction checked(ParametricAdjunction pa) {
  require(validate_parametric_adjunction(pa), "parametric adjunction " + pa.name);
  return pa;
}

/** Reindex along R: Q -> P, giving F(C*R) -| G(R^op*D) with the adjunction at R(q). */
inline ParametricAdjunction reindex(const ParametricAdjunction& pa, const Functor& R) {
  if (!same(R.cod(), pa.P())) throw StructuralError("reindex: functor does not land in the parameters");
  Cat CQ = product_category(pa.C(), R.dom());
  Cat QopD = product_category(op_category(R.dom()), pa.D());
  Functor F = compose_functors(pa.F, product_functor(identity_functor(pa.C()), R, CQ, pa.F.dom()));
  Functor G = compose_functors(
      pa.G, product_functor(op_functor(R, QopD->left_factor(), pa.G.dom()->left_factor()),
                            identity_functor(pa.D()), QopD, pa.G.dom()));
  std::vector<Adjunction> per;
  for (int q = 0; q < R.dom()->object_count(); ++q) {
    Adjunction a = pa.at(R.obj(q));
    a.left = section_left(F, q);
    a.right = section_right(G, q);
    if (!(a.left == pa.at(R.obj(q)).left) || !(a.right == pa.at(R.obj(q)).right))
      throw LawError("reindex: sections disagree", {R.dom()->object_id(q)});
    per.push_back(std::move(a));
  }
  return checked(ParametricAdjunction{pa.name + "[" + R.name() + "]", F.renamed(pa.F.name() + R.name()),
                                      G.renamed(pa.G.name() + R.name()), std::move(per)});
}

} // namespace catkit

#endif
