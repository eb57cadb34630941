#ifndef CATKIT_NAT_TRANS_HPP
#define CATKIT_NAT_TRANS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catkit/functor.hpp"

namespace catkit {

/** A natural transformation source => target, one component per object. */
class NatTrans {
public:
  NatTrans() = default;
  NatTrans(std::string name, Functor source, Functor target, std::vector<int> components)
      : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
        comp_(std::move(components)) {}

  const std::string& name() const noexcept { return name_; }
  const Functor& source() const noexcept { return source_; }
  const Functor& target() const noexcept { return target_; }
  const Cat& dom() const noexcept { return source_.dom(); }
  const Cat& cod() const noexcept { return source_.cod(); }
  int at(int a) const { return comp_.at(a); }
  const std::vector<int>& components() const noexcept { return comp_; }
  const std::string& at_id(int a) const { return cod()->morphism_id(at(a)); }

  NatTrans renamed(std::string name) const {
    NatTrans t = *this;
    t.name_ = std::move(name);
    return t;
  }

  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.comp_ == b.comp_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

private:
  std::string name_;
  Functor source_;
  Functor target_;
  std::vector<int> comp_;
};

inline NatTrans nat_from_ids(std::string name, Functor source, Functor target,
                             const std::map<std::string, std::string>& components) {
  const Cat& C = source.dom();
  std::vector<int> comp(C->object_count(), -1);
  for (const auto& [k, v] : components) comp.at(C->object(k)) = source.cod()->morphism(v);
  for (int a = 0; a < C->object_count(); ++a)
    if (comp[a] < 0)
      throw StructuralError("transformation " + name + " has no component", {C->object_id(a)});
  return NatTrans(std::move(name), std::move(source), std::move(target), std::move(comp));
}

/**
 * Shape problems (mismatched functors, mistyped components) are structural
 * and stop the check before naturality is evaluated.
 */
inline Report validate_nat_trans(const NatTrans& t) {
  Report r;
  if (!same(t.source().dom(), t.target().dom()) || !same(t.source().cod(), t.target().cod())) {
    r.structural("parallel-functors", {t.source().name(), t.target().name()});
    return r;
  }
  const auto& C = *t.dom();
  const auto& D = *t.cod();
  if (static_cast<int>(t.components().size()) != C.object_count()) {
    r.structural("component-arity", {t.name()});
    return r;
  }
  for (int a = 0; a < C.object_count(); ++a) {
    int c = t.at(a);
    if (c < 0 || c >= D.morphism_count()) {
      r.structural("dangling-component", {C.object_id(a)});
      continue;
    }
    if (D.dom(c) != t.source().obj(a) || D.cod(c) != t.target().obj(a))
      r.structural("component-typing", {C.object_id(a), D.morphism_id(c)});
  }
  if (!r.structurally_ok()) return r;
  for (int f = 0; f < C.morphism_count(); ++f) {
    int lhs = D.compose_or_missing(t.target().mor(f), t.at(C.dom(f)));
    int rhs = D.compose_or_missing(t.at(C.cod(f)), t.source().mor(f));
    if (lhs < 0 || lhs != rhs) r.fail("naturality", {C.morphism_id(f)});
  }
  return r;
}

inline NatTrans checked(NatTrans t) {
  require(validate_nat_trans(t), "transformation " + t.name());
  return t;
}

inline NatTrans identity_nat(const Functor& F) {
  std::vector<int> comp(F.dom()->object_count());
  for (int a = 0; a < F.dom()->object_count(); ++a) comp[a] = F.cod()->identity(F.obj(a));
  return NatTrans("1_" + F.name(), F, F, std::move(comp));
}

/** s after t. */
inline NatTrans vcompose(const NatTrans& s, const NatTrans& t) {
  if (!(t.target() == s.source()))
    throw StructuralError("vertical composition: target of " + t.name() + " is not the source of " +
                          s.name());
  std::vector<int> comp(t.dom()->object_count());
  for (std::size_t a = 0; a < comp.size(); ++a)
    comp[a] = s.cod()->compose(s.at(static_cast<int>(a)), t.at(static_cast<int>(a)));
  return NatTrans(s.name() + "*" + t.name(), t.source(), s.target(), std::move(comp));
}

/** Composite of a displayed chain: vcompose({u, s, t}) is u after s after t. */
inline NatTrans vcompose(std::initializer_list<NatTrans> chain) {
  auto it = std::rbegin(chain);
  NatTrans acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = vcompose(*it, acc);
  return acc;
}

/** F t : F.source => F.target, components F(t_A). */
inline NatTrans whisker_left(const Functor& F, const NatTrans& t) {
  if (!same(F.dom(), t.cod()))
    throw StructuralError("whiskering: " + F.name() + " does not accept the codomain of " + t.name());
  std::vector<int> comp(t.dom()->object_count());
  for (std::size_t a = 0; a < comp.size(); ++a) comp[a] = F.mor(t.at(static_cast<int>(a)));
  return NatTrans(F.name() + t.name(), compose_functors(F, t.source()),
                  compose_functors(F, t.target()), std::move(comp));
}

/** t F : source.F => target.F, components t_{F A}. */
inline NatTrans whisker_right(const NatTrans& t, const Functor& F) {
  if (!same(F.cod(), t.dom()))
    throw StructuralError("whiskering: " + F.name() + " does not land in the domain of " + t.name());
  std::vector<int> comp(F.dom()->object_count());
  for (std::size_t a = 0; a < comp.size(); ++a) comp[a] = t.at(F.obj(static_cast<int>(a)));
  return NatTrans(t.name() + F.name(), compose_functors(t.source(), F),
                  compose_functors(t.target(), F), std::move(comp));
}

/** F t G. */
inline NatTrans whisker(const Functor& F, const NatTrans& t, const Functor& G) {
  return whisker_left(F, whisker_right(t, G));
}

inline NatTrans product_nat(const NatTrans& a, const NatTrans& b, Cat dom = {}, Cat cod = {}) {
  if (!dom) dom = product_category(a.dom(), b.dom());
  if (!cod) cod = product_category(a.cod(), b.cod());
  std::vector<int> comp(dom->object_count());
  for (int x = 0; x < dom->object_count(); ++x) {
    auto [i, j] = dom->split_object(x);
    comp[x] = cod->pair_morphism(a.at(i), b.at(j));
  }
  return NatTrans("(" + a.name() + "*" + b.name() + ")",
                  product_functor(a.source(), b.source(), dom, cod),
                  product_functor(a.target(), b.target(), dom, cod), std::move(comp));
}

/** The same components read in the opposite categories: target^op => source^op. */
inline NatTrans op_nat(const NatTrans& t, Cat dom = {}, Cat cod = {}) {
  if (!dom) dom = op_category(t.dom());
  if (!cod) cod = op_category(t.cod());
  return NatTrans(op_name(t.name()), op_functor(t.target(), dom, cod),
                  op_functor(t.source(), dom, cod), t.components());
}

/** Transformation between functors into a thin category; components are forced. */
inline NatTrans thin_nat(std::string name, const Functor& source, const Functor& target) {
  std::vector<int> comp(source.dom()->object_count());
  for (int a = 0; a < source.dom()->object_count(); ++a) {
    auto h = source.cod()->hom(source.obj(a), target.obj(a));
    if (h.size() != 1)
      throw DomainError("no unique component for " + name, {source.dom()->object_id(a)});
    comp[a] = h.front();
  }
  return NatTrans(std::move(name), source, target, std::move(comp));
}

struct Invertibility {
  bool invertible = false;
  std::optional<NatTrans> inverse;
  /** First object whose component has no two-sided inverse. */
  int witness = -1;

  explicit operator bool() const noexcept { return invertible; }
};

/**
 * Search each hom-set for two-sided inverses. The assembled inverse is
 * validated as a transformation before it is returned.
 */
inline Invertibility is_invertible(const NatTrans& t) {
  Invertibility result;
  std::vector<int> comp(t.dom()->object_count());
  for (int a = 0; a < t.dom()->object_count(); ++a) {
    auto inv = t.cod()->inverse(t.at(a));
    if (!inv) {
      result.witness = a;
      return result;
    }
    comp[a] = *inv;
  }
  NatTrans inverse(t.name() + "^-1", t.target(), t.source(), std::move(comp));
  require(validate_nat_trans(inverse), "inverse of " + t.name());
  result.invertible = true;
  result.inverse = std::move(inverse);
  return result;
}

inline NatTrans inverse_of(const NatTrans& t, const std::string& context) {
  auto inv = is_invertible(t);
  if (!inv)
    throw DomainError(context + ": " + t.name() + " is not invertible",
                      {t.dom()->object_id(inv.witness)});
  return *inv.inverse;
}

/**
 * A family indexed by (parameter, argument), contravariant in the
 * parameter: source and target are functors on parameter^op * argument.
 */
struct ParamTrans {
  std::string name;
  Cat parameter;
  Cat argument;
  NatTrans family;

  /** Component at (q, d) given by parameter and argument object indices. */
  int at(int q, int d) const { return family.at(family.dom()->pair_object(q, d)); }

  friend bool operator==(const ParamTrans& a, const ParamTrans& b) {
    return same(a.parameter, b.parameter) && same(a.argument, b.argument) && a.family == b.family;
  }
};

/**
 * For q: Q -> Q' and d: D -> D' the two paths
 *   T(q^op, D') . c(Q', D') . S(Q', d)  and  T(Q, d) . c(Q, D) . S(q^op, D)
 * from S(Q', D) to T(Q, D') must agree.
 */
inline Report validate_param_trans(const ParamTrans& t) {
  Report r = validate_nat_trans(t.family);
  if (!r.structurally_ok()) return r;
  const Cat& dom = t.family.dom();
  if (!dom->is_product() || !same(dom->left_factor(), op_category(t.parameter)) ||
      !same(dom->right_factor(), t.argument)) {
    r.structural("param-shape", {t.name});
    return r;
  }
  Report squares;
  const auto& Q = *t.parameter;
  const auto& D = *t.argument;
  const auto& X = *t.family.cod();
  const Functor& S = t.family.source();
  const Functor& T = t.family.target();
  for (int q = 0; q < Q.morphism_count(); ++q)
    for (int d = 0; d < D.morphism_count(); ++d) {
      int Qs = Q.dom(q), Qt = Q.cod(q), Ds = D.dom(d), Dt = D.cod(d);
      int top = X.compose({T.mor(dom->pair_morphism(q, D.identity(Dt))), t.at(Qt, Dt),
                           S.mor(dom->pair_morphism(Q.identity(Qt), d))});
      int bottom = X.compose({T.mor(dom->pair_morphism(Q.identity(Qs), d)), t.at(Qs, Ds),
                              S.mor(dom->pair_morphism(q, D.identity(Ds)))});
      if (top != bottom) squares.fail("param-square", {Q.morphism_id(q), D.morphism_id(d)});
    }
  r.absorb("", squares);
  return r;
}

} // namespace catkit

#endif
