#ifndef CATKIT_FUNCTOR_HPP
#define CATKIT_FUNCTOR_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catkit/fincat.hpp"

namespace catkit {

/** A functor between finite categories, stored extensionally. */
class Functor {
public:
  Functor() = default;
  Functor(std::string name, Cat dom, Cat cod, std::vector<int> obj_map, std::vector<int> mor_map)
      : name_(std::move(name)), dom_(std::move(dom)), cod_(std::move(cod)),
        obj_(std::move(obj_map)), mor_(std::move(mor_map)) {}

  const std::string& name() const noexcept { return name_; }
  const Cat& dom() const noexcept { return dom_; }
  const Cat& cod() const noexcept { return cod_; }
  int obj(int a) const { return obj_.at(a); }
  int mor(int f) const { return mor_.at(f); }
  const std::vector<int>& obj_map() const noexcept { return obj_; }
  const std::vector<int>& mor_map() const noexcept { return mor_; }

  const std::string& obj_id(int a) const { return cod_->object_id(obj(a)); }
  const std::string& mor_id(int f) const { return cod_->morphism_id(mor(f)); }

  Functor renamed(std::string name) const {
    Functor f = *this;
    f.name_ = std::move(name);
    return f;
  }

  /** Pointwise identifier equality over equal categories. */
  friend bool operator==(const Functor& a, const Functor& b) {
    return a.obj_ == b.obj_ && a.mor_ == b.mor_ && same(a.dom_, b.dom_) && same(a.cod_, b.cod_);
  }

private:
  std::string name_;
  Cat dom_;
  Cat cod_;
  std::vector<int> obj_;
  std::vector<int> mor_;
};

/** Build from identifier maps; unknown ids throw StructuralError. */
inline Functor functor_from_ids(std::string name, Cat dom, Cat cod,
                                const std::map<std::string, std::string>& obj_map,
                                const std::map<std::string, std::string>& mor_map) {
  std::vector<int> objs(dom->object_count(), -1), mors(dom->morphism_count(), -1);
  for (const auto& [k, v] : obj_map) objs.at(dom->object(k)) = cod->object(v);
  for (const auto& [k, v] : mor_map) mors.at(dom->morphism(k)) = cod->morphism(v);
  for (int a = 0; a < dom->object_count(); ++a)
    if (objs[a] < 0)
      throw StructuralError("functor " + name + " has no image for object", {dom->object_id(a)});
  for (int f = 0; f < dom->morphism_count(); ++f)
    if (mors[f] < 0)
      throw StructuralError("functor " + name + " has no image for morphism",
                            {dom->morphism_id(f)});
  return Functor(std::move(name), std::move(dom), std::move(cod), std::move(objs), std::move(mors));
}

inline Report validate_functor(const Functor& F) {
  Report r;
  const auto& C = *F.dom();
  const auto& D = *F.cod();
  if (static_cast<int>(F.obj_map().size()) != C.object_count() ||
      static_cast<int>(F.mor_map().size()) != C.morphism_count()) {
    r.structural("functor-arity", {F.name()});
    return r;
  }
  for (int a = 0; a < C.object_count(); ++a)
    if (F.obj(a) < 0 || F.obj(a) >= D.object_count()) r.structural("dangling-object", {C.object_id(a)});
  for (int f = 0; f < C.morphism_count(); ++f)
    if (F.mor(f) < 0 || F.mor(f) >= D.morphism_count())
      r.structural("dangling-morphism", {C.morphism_id(f)});
  if (!r.structurally_ok()) return r;

  for (int f = 0; f < C.morphism_count(); ++f) {
    int g = F.mor(f);
    if (D.dom(g) != F.obj(C.dom(f)) || D.cod(g) != F.obj(C.cod(f)))
      r.fail("functor-typing", {C.morphism_id(f), D.morphism_id(g)});
  }
  if (!r.ok()) return r;
  for (int a = 0; a < C.object_count(); ++a)
    if (F.mor(C.identity(a)) != D.identity(F.obj(a)))
      r.fail("functor-identity", {C.object_id(a)});
  for (int f = 0; f < C.morphism_count(); ++f)
    for (int g : C.out(C.cod(f))) {
      int gf = C.compose_or_missing(g, f);
      if (gf < 0) continue;
      if (F.mor(gf) != D.compose_or_missing(F.mor(g), F.mor(f)))
        r.fail("functor-composition", {C.morphism_id(g), C.morphism_id(f)});
    }
  return r;
}

inline Functor checked(Functor F) {
  require(validate_functor(F), "functor " + F.name());
  return F;
}

inline Functor identity_functor(const Cat& C) {
  std::vector<int> objs(C->object_count()), mors(C->morphism_count());
  for (int a = 0; a < C->object_count(); ++a) objs[a] = a;
  for (int f = 0; f < C->morphism_count(); ++f) mors[f] = f;
  return Functor("1_" + C->name(), C, C, std::move(objs), std::move(mors));
}

/** Every object goes to `obj`, every morphism to its identity. */
inline Functor constant_functor(const Cat& dom, const Cat& cod, int obj) {
  std::vector<int> objs(dom->object_count(), obj), mors(dom->morphism_count(), cod->identity(obj));
  return Functor("const_" + cod->object_id(obj), dom, cod, std::move(objs), std::move(mors));
}

/** g after f. */
inline Functor compose_functors(const Functor& G, const Functor& F) {
  if (!same(F.cod(), G.dom()))
    throw StructuralError("functor composition: codomain of " + F.name() +
                          " is not the domain of " + G.name());
  std::vector<int> objs(F.dom()->object_count()), mors(F.dom()->morphism_count());
  for (std::size_t a = 0; a < objs.size(); ++a) objs[a] = G.obj(F.obj(static_cast<int>(a)));
  for (std::size_t f = 0; f < mors.size(); ++f) mors[f] = G.mor(F.mor(static_cast<int>(f)));
  return Functor(G.name() + "." + F.name(), F.dom(), G.cod(), std::move(objs), std::move(mors));
}

/** Composite of a displayed chain: compose({H, G, F}) is H.G.F. */
inline Functor compose_functors(std::initializer_list<Functor> chain) {
  auto it = std::rbegin(chain);
  Functor acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = compose_functors(*it, acc);
  return acc;
}

inline Functor product_functor(const Functor& F, const Functor& G, Cat dom = {}, Cat cod = {}) {
  if (!dom) dom = product_category(F.dom(), G.dom());
  if (!cod) cod = product_category(F.cod(), G.cod());
  std::vector<int> objs(dom->object_count()), mors(dom->morphism_count());
  for (int x = 0; x < dom->object_count(); ++x) {
    auto [a, b] = dom->split_object(x);
    objs[x] = cod->pair_object(F.obj(a), G.obj(b));
  }
  for (int f = 0; f < dom->morphism_count(); ++f) {
    auto [u, v] = dom->split_morphism(f);
    mors[f] = cod->pair_morphism(F.mor(u), G.mor(v));
  }
  return Functor("(" + F.name() + "*" + G.name() + ")", dom, cod, std::move(objs), std::move(mors));
}

/** Same tables between the opposite categories. */
inline Functor op_functor(const Functor& F, Cat dom = {}, Cat cod = {}) {
  if (!dom) dom = op_category(F.dom());
  if (!cod) cod = op_category(F.cod());
  return Functor(op_name(F.name()), dom, cod, F.obj_map(), F.mor_map());
}

inline Functor projection_left(const Cat& product) {
  if (!product->is_product()) throw DomainError("projection from a non-product " + product->name());
  const Cat& a = product->left_factor();
  std::vector<int> objs(product->object_count()), mors(product->morphism_count());
  for (int x = 0; x < product->object_count(); ++x) objs[x] = product->split_object(x).first;
  for (int f = 0; f < product->morphism_count(); ++f) mors[f] = product->split_morphism(f).first;
  return Functor("pi1", product, a, std::move(objs), std::move(mors));
}

inline Functor projection_right(const Cat& product) {
  if (!product->is_product()) throw DomainError("projection from a non-product " + product->name());
  const Cat& b = product->right_factor();
  std::vector<int> objs(product->object_count()), mors(product->morphism_count());
  for (int x = 0; x < product->object_count(); ++x) objs[x] = product->split_object(x).second;
  for (int f = 0; f < product->morphism_count(); ++f) mors[f] = product->split_morphism(f).second;
  return Functor("pi2", product, b, std::move(objs), std::move(mors));
}

/** Pairing <F, G>: X -> A*B. */
inline Functor pair_functor(const Functor& F, const Functor& G, Cat cod = {}) {
  if (!same(F.dom(), G.dom())) throw StructuralError("pairing of functors with different domains");
  if (!cod) cod = product_category(F.cod(), G.cod());
  std::vector<int> objs(F.dom()->object_count()), mors(F.dom()->morphism_count());
  for (std::size_t a = 0; a < objs.size(); ++a)
    objs[a] = cod->pair_object(F.obj(static_cast<int>(a)), G.obj(static_cast<int>(a)));
  for (std::size_t f = 0; f < mors.size(); ++f)
    mors[f] = cod->pair_morphism(F.mor(static_cast<int>(f)), G.mor(static_cast<int>(f)));
  return Functor("<" + F.name() + "," + G.name() + ">", F.dom(), cod, std::move(objs),
                 std::move(mors));
}

/** x -> (x, p) from the left factor of `product`. */
inline Functor insert_right(const Cat& product, int p) {
  const Cat& C = product->left_factor();
  return pair_functor(identity_functor(C),
                      constant_functor(C, product->right_factor(), p), product)
      .renamed("(-," + product->right_factor()->object_id(p) + ")");
}

/** x -> (p, x) from the right factor of `product`. */
inline Functor insert_left(const Cat& product, int p) {
  const Cat& D = product->right_factor();
  return pair_functor(constant_functor(D, product->left_factor(), p), identity_functor(D), product)
      .renamed("(" + product->left_factor()->object_id(p) + ",-)");
}

/**
 * Functor into a thin category determined by its object map; the image of a
 * morphism is the unique arrow between the images.
 */
inline Functor thin_functor(std::string name, const Cat& dom, const Cat& cod,
                            const std::function<int(int)>& object_map) {
  std::vector<int> objs(dom->object_count()), mors(dom->morphism_count());
  for (int a = 0; a < dom->object_count(); ++a) objs[a] = object_map(a);
  for (int f = 0; f < dom->morphism_count(); ++f) {
    auto h = cod->hom(objs[dom->dom(f)], objs[dom->cod(f)]);
    if (h.size() != 1)
      throw DomainError("thin functor " + name + " is not monotone", {dom->morphism_id(f)});
    mors[f] = h.front();
  }
  return Functor(std::move(name), dom, cod, std::move(objs), std::move(mors));
}

/** True iff every morphism with invertible image is itself invertible. */
inline bool reflects_isomorphisms(const Functor& F) {
  for (int f = 0; f < F.dom()->morphism_count(); ++f)
    if (F.cod()->is_iso(F.mor(f)) && !F.dom()->is_iso(f)) return false;
  return true;
}

} // namespace catkit

#endif
