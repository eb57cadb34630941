#ifndef CATKIT_FIXTURES_HPP
#define CATKIT_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "catkit/hopf/lifting.hpp"
#include "catkit/hopf/transport.hpp"

// Small reference instances. Lattice objects are bitmasks: Two = {0, 1},
// Bool4 = {bot, a, b, top} = {0, 1, 2, 3}.
namespace catkit::fixtures {

inline Cat one() {
  return FinCat::build("One", {"*"}, {"id*"}, {0}, {0}, {0}, [](int, int) { return 0; });
}

inline Cat two() {
  return poset_category("Two", {"0", "1"}, [](int x, int y) { return x <= y; },
                        [](const std::string& x, const std::string& y) {
                          return x == y ? "id" + x : std::string("u");
                        });
}

inline Cat bool4() {
  return poset_category("Bool4", {"bot", "a", "b", "top"}, [](int x, int y) { return (x & y) == x; });
}

inline Cat z2() {
  return monoid_category("Z2", "*", {"e", "g"}, [](int g, int f) { return g ^ f; });
}

/** Largest bitmask of a Boolean lattice fixture. */
inline int top_of(const Cat& L) { return L->object_count() - 1; }

inline Functor meet(const Cat& L, Cat dom = {}) {
  if (!dom) dom = product_category(L, L);
  return thin_functor("meet", dom, L, [&](int x) {
    auto [a, b] = dom->split_object(x);
    return a & b;
  });
}

/** (p, x) |-> p => x on L^op * L. */
inline Functor implication(const Cat& L, Cat dom = {}) {
  if (!dom) dom = product_category(op_category(L), L);
  int full = top_of(L);
  return thin_functor("imp", dom, L, [&](int x) {
    auto [p, y] = dom->split_object(x);
    return (~p | y) & full;
  });
}

/** A monad on a thin category from its object map; mult and unit are forced. */
inline Monad thin_monad(std::string name, const Cat& L, const std::function<int(int)>& j) {
  Functor S = thin_functor(name, L, L, j);
  NatTrans mult = thin_nat("mu_" + name, compose_functors(S, S), S);
  NatTrans unit = thin_nat("eta_" + name, identity_functor(L), S);
  return checked(Monad{std::move(name), L, S, std::move(mult), std::move(unit)});
}

/** j0 = j1 = 1 on Two. */
inline Monad closure1() {
  return thin_monad("j1", two(), [](int) { return 1; });
}

/** x |-> x v a on Bool4. */
inline Monad nucleus() {
  return thin_monad("j", bool4(), [](int x) { return x | 1; });
}

/** (- ^ b) -| (b => -) on a Boolean lattice fixture. */
inline Adjunction heyting_adjunction(const Cat& L, int b) {
  int full = top_of(L);
  const std::string& bid = L->object_id(b);
  Functor left = thin_functor("(-^" + bid + ")", L, L, [=](int x) { return x & b; });
  Functor right = thin_functor("(" + bid + "=>-)", L, L, [=](int x) { return (~b | x) & full; });
  NatTrans unit = thin_nat("eta", identity_functor(L), compose_functors(right, left));
  NatTrans counit = thin_nat("eps", compose_functors(left, right), identity_functor(L));
  return checked(Adjunction{"heyting_" + bid, left, right, unit, counit});
}

/** meet -|_L implication with F(c, p) = c ^ p and G(p, x) = p => x. */
inline ParametricAdjunction heyting(const Cat& L) {
  Functor F = meet(L);
  Functor G = implication(L);
  std::vector<Adjunction> per;
  for (int p = 0; p < L->object_count(); ++p) {
    Adjunction a = heyting_adjunction(L, p);
    a.left = section_left(F, p);
    a.right = section_right(G, p);
    per.push_back(std::move(a));
  }
  return checked(ParametricAdjunction{"heyting_" + L->name(), F, G, std::move(per)});
}

/** (meet, equalities j(x ^ y) = jx ^ jy) from j*j to j on Bool4. */
inline MndOneCell nucleus_cell() {
  Monad j = nucleus();
  Monad jj = product_monad(j, j);
  Functor J = meet(j.base, jj.base);
  NatTrans psi = thin_nat("psi_meet", compose_functors(j.endo, J), compose_functors(J, jj.endo));
  return checked(MndOneCell{jj, j, J, std::move(psi)});
}

/** (meet, x ^ p <= jx ^ p) from Closure1 * 1 to 1 on Two. */
inline MndOneCell meet_cell() {
  Monad S = closure1();
  Monad E = identity_monad(S.base);
  Monad source = product_monad(S, E);
  Monad target = identity_monad(S.base);
  Functor J = meet(S.base, source.base);
  NatTrans psi = thin_nat("psi_meet", compose_functors(target.endo, J), compose_functors(J, source.endo));
  return checked(MndOneCell{source, target, J, std::move(psi)});
}

// Seeded perturbations, each with the law and witness it must produce.

struct Perturbation {
  std::string name;
  std::string law;
  std::vector<std::string> witness;
  Report report;
};

/** Two with composition(u, id0) redirected to id1. */
inline Cat two_bad_composition() {
  CategoryData d = two()->data();
  for (auto& e : d.composition)
    if (e.g == "u" && e.f == "id0") e.eq = "id1";
  return FinCat::from_data(d);
}

/** Object swap on Two with morphisms left in place. */
inline Functor two_swap_functor() {
  Cat T = two();
  return Functor("swap", T, T, {1, 0}, {0, 1, 2});
}

/** A family over Two^op * Z2 between projections, identity except at (0, *). */
inline ParamTrans z2_family(bool perturbed) {
  Cat T = two();
  Cat Z = z2();
  Cat dom = product_category(op_category(T), Z);
  Functor pi = projection_right(dom);
  std::vector<int> comp(dom->object_count(), Z->identity(0));
  if (perturbed) comp[dom->pair_object(0, 0)] = Z->morphism("g");
  return ParamTrans{"z2_family", T, Z, NatTrans("z2_family", pi, pi, std::move(comp))};
}

/** The identity adjunction on Z2 with counit component g. */
inline Adjunction z2_bad_adjunction() {
  Adjunction a = identity_adjunction(z2());
  a.counit = NatTrans("eps_g", a.counit.source(), a.counit.target(), {a.domain()->morphism("g")});
  return a;
}

/** F(c, p) = c.p; G(p, d) = p.d, or the projection onto d when perturbed. */
inline ParametricAdjunction z2_parametric(bool perturbed) {
  Cat Z = z2();
  Cat CP = product_category(Z, Z);
  Cat PopD = product_category(op_category(Z), Z);
  auto act = [&](const Cat& dom, bool project) {
    std::vector<int> mors(dom->morphism_count());
    for (int f = 0; f < dom->morphism_count(); ++f) {
      auto [x, y] = dom->split_morphism(f);
      mors[f] = project ? y : (x ^ y);
    }
    return mors;
  };
  Functor F("act", CP, Z, {0}, act(CP, false));
  Functor G(perturbed ? "proj" : "act", PopD, Z, {0}, act(PopD, perturbed));
  Adjunction a = identity_adjunction(Z);
  a.left = section_left(F, 0);
  a.right = section_right(G, 0);
  return ParametricAdjunction{"z2_parametric", F, G, {a}};
}

/** Identity endofunctor on Z2 with multiplication g. */
inline Monad z2_bad_monad() {
  Cat Z = z2();
  Functor I = identity_functor(Z);
  return Monad{"z2_bad", Z, I, NatTrans("mu_g", compose_functors(I, I), I, {Z->morphism("g")}), identity_nat(I)};
}

/** j0 = j1 = 0 on Two; the unit has no component at 1. */
inline Monad two_zero_monad() {
  Cat T = two();
  Functor S("zero", T, T, {0, 0}, {0, 0, 0});
  NatTrans mult("mu", compose_functors(S, S), S, {0, 0});
  NatTrans unit("eta", identity_functor(T), S, {0, -1});
  return Monad{"zero", T, S, std::move(mult), std::move(unit)};
}

inline std::vector<Perturbation> perturbations() {
  std::vector<Perturbation> out;
  out.push_back({"two-redirected-composition", "right-identity", {"u", "id0"},
                 validate_category(*two_bad_composition())});
  out.push_back({"two-object-swap", "functor-typing", {"u", "u"}, validate_functor(two_swap_functor())});
  out.push_back({"z2-family", "param-square", {"u", "e"}, validate_param_trans(z2_family(true))});
  out.push_back({"z2-counit", "triangle-left", {"*"}, validate_adjunction(z2_bad_adjunction())});
  out.push_back({"z2-conjugate", "conjugate", {"g", "*"}, validate_parametric_adjunction(z2_parametric(true))});
  out.push_back({"z2-multiplication", "left-unit", {"*"}, validate_monad(z2_bad_monad())});
  out.push_back({"two-zero-monad", "unit/dangling-component", {"1"}, validate_monad(two_zero_monad())});
  return out;
}

} // namespace catkit::fixtures

#endif
