#ifndef CATKIT_FINCAT_HPP
#define CATKIT_FINCAT_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catkit/error.hpp"

namespace catkit {

struct MorphismRecord {
  std::string id;
  std::string dom;
  std::string cod;

  friend bool operator==(const MorphismRecord&, const MorphismRecord&) = default;
};

/** One entry of a composition table: `eq` is `g` after `f`. */
struct CompositionEntry {
  std::string g;
  std::string f;
  std::string eq;

  friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

/** A category written out by identifiers, as it appears in a spec file. */
struct CategoryData {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorphismRecord> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<CompositionEntry> composition;
};

class FinCat;
using Cat = std::shared_ptr<const FinCat>;

/**
 * A finite category stored as index tables.
 *
 * Objects and morphisms keep the order they were declared in; that order is
 * the canonical order used by every enumeration in the engine. Composition
 * is "g after f" throughout. Entries that are missing, mistyped, or given for
 * non-composable pairs are kept so that validate_category can report them.
 */
class FinCat {
public:
  /** Resolve a category from identifiers; dangling or duplicate ids throw StructuralError. */
  static Cat from_data(const CategoryData& data) {
    auto cat = std::shared_ptr<FinCat>(new FinCat());
    cat->name_ = data.name;
    cat->objs_ = data.objects;
    for (const auto& m : data.morphisms) cat->mors_.push_back(m.id);
    cat->index_ids(data.name);
    for (const auto& m : data.morphisms) {
      cat->dom_.push_back(cat->resolve_object(m.dom, "morphism " + m.id + " dom"));
      cat->cod_.push_back(cat->resolve_object(m.cod, "morphism " + m.id + " cod"));
    }
    cat->ident_.assign(cat->objs_.size(), -1);
    for (const auto& [obj, mor] : data.identities) {
      int a = cat->resolve_object(obj, "identities");
      int f = cat->resolve_morphism(mor, "identities[" + obj + "]");
      if (cat->ident_[a] >= 0)
        throw StructuralError("duplicate identity in category " + data.name, {obj});
      cat->ident_[a] = f;
    }
    for (std::size_t a = 0; a < cat->objs_.size(); ++a)
      if (cat->ident_[a] < 0)
        throw StructuralError("missing identity in category " + data.name, {cat->objs_[a]});
    cat->index_adjacency();
    for (const auto& e : data.composition) {
      int g = cat->resolve_morphism(e.g, "composition g");
      int f = cat->resolve_morphism(e.f, "composition f");
      int h = cat->resolve_morphism(e.eq, "composition eq");
      if (cat->cod_[f] != cat->dom_[g]) {
        cat->stray_.emplace_back(g, f, h);
        continue;
      }
      int& slot = cat->table_[f][cat->out_pos_[g]];
      if (slot >= 0 && slot != h)
        throw StructuralError("conflicting composition entries in category " + data.name,
                              {e.g, e.f});
      slot = h;
    }
    cat->finish();
    return cat;
  }

  /**
   * Build from index tables; `compose(g, f)` is queried once for every
   * composable pair. Used by every derived construction.
   */
  template <class Compose>
  static Cat build(std::string name, std::vector<std::string> objects,
                   std::vector<std::string> morphisms, std::vector<int> dom, std::vector<int> cod,
                   std::vector<int> identity, Compose&& compose, Cat left = {}, Cat right = {}) {
    enforce_morphism_limit(morphisms.size(), "category " + name);
    auto cat = std::shared_ptr<FinCat>(new FinCat());
    cat->name_ = std::move(name);
    cat->objs_ = std::move(objects);
    cat->mors_ = std::move(morphisms);
    cat->dom_ = std::move(dom);
    cat->cod_ = std::move(cod);
    cat->ident_ = std::move(identity);
    cat->left_ = std::move(left);
    cat->right_ = std::move(right);
    cat->index_ids(cat->name_);
    cat->index_adjacency();
    for (std::size_t f = 0; f < cat->mors_.size(); ++f) {
      const auto& outs = cat->out_[cat->cod_[f]];
      for (std::size_t k = 0; k < outs.size(); ++k)
        cat->table_[f][k] = compose(outs[k], static_cast<int>(f));
    }
    cat->finish();
    return cat;
  }

  const std::string& name() const noexcept { return name_; }
  int object_count() const noexcept { return static_cast<int>(objs_.size()); }
  int morphism_count() const noexcept { return static_cast<int>(mors_.size()); }
  const std::string& object_id(int a) const { return objs_.at(a); }
  const std::string& morphism_id(int f) const { return mors_.at(f); }
  const std::vector<std::string>& object_ids() const noexcept { return objs_; }
  const std::vector<std::string>& morphism_ids() const noexcept { return mors_; }

  int find_object(const std::string& id) const {
    auto it = obj_index_.find(id);
    return it == obj_index_.end() ? -1 : it->second;
  }
  int find_morphism(const std::string& id) const {
    auto it = mor_index_.find(id);
    return it == mor_index_.end() ? -1 : it->second;
  }
  int object(const std::string& id) const { return resolve_object(id, "lookup"); }
  int morphism(const std::string& id) const { return resolve_morphism(id, "lookup"); }

  int dom(int f) const { return dom_.at(f); }
  int cod(int f) const { return cod_.at(f); }
  int identity(int a) const { return ident_.at(a); }
  bool is_identity(int f) const { return dom_[f] == cod_[f] && ident_[dom_[f]] == f; }
  bool composable(int g, int f) const { return cod_.at(f) == dom_.at(g); }

  /** g after f, or -1 when the table has no entry for the pair. */
  int compose_or_missing(int g, int f) const {
    if (!composable(g, f)) return -1;
    return table_[f][out_pos_[g]];
  }

  /** g after f; throws on a non-composable pair or a hole in the table. */
  int compose(int g, int f) const {
    if (!composable(g, f))
      throw StructuralError("non-composable pair in category " + name_,
                            {mors_.at(g), mors_.at(f)});
    int h = table_[f][out_pos_[g]];
    if (h < 0)
      throw StructuralError("composition undefined in category " + name_, {mors_[g], mors_[f]});
    return h;
  }

  /** Composite of a displayed chain: compose({h, g, f}) is h after g after f. */
  int compose(std::initializer_list<int> chain) const {
    auto it = std::rbegin(chain);
    int acc = *it;
    for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
    return acc;
  }

  const std::vector<int>& out(int a) const { return out_.at(a); }
  const std::vector<int>& in(int a) const { return in_.at(a); }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> result;
    for (int f : out_.at(a))
      if (cod_[f] == b) result.push_back(f);
    return result;
  }

  /** Two-sided inverse of f found by searching hom(cod f, dom f). */
  std::optional<int> inverse(int f) const {
    for (int g : hom(cod_[f], dom_[f]))
      if (compose_or_missing(g, f) == ident_[dom_[f]] &&
          compose_or_missing(f, g) == ident_[cod_[f]])
        return g;
    return std::nullopt;
  }

  bool is_iso(int f) const { return inverse(f).has_value(); }

  bool thin() const {
    for (std::size_t a = 0; a < objs_.size(); ++a) {
      std::map<int, int> seen;
      for (int f : out_[a])
        if (++seen[cod_[f]] > 1) return false;
    }
    return true;
  }

  /** Factors, when this category was produced by product_category. */
  const Cat& left_factor() const noexcept { return left_; }
  const Cat& right_factor() const noexcept { return right_; }
  bool is_product() const noexcept { return left_ && right_; }

  int pair_object(int a, int b) const { return a * right_->object_count() + b; }
  int pair_morphism(int f, int g) const { return f * right_->morphism_count() + g; }
  std::pair<int, int> split_object(int x) const {
    return {x / right_->object_count(), x % right_->object_count()};
  }
  std::pair<int, int> split_morphism(int f) const {
    return {f / right_->morphism_count(), f % right_->morphism_count()};
  }

  /** Entries given for non-composable pairs (g, f, eq). */
  const std::vector<std::tuple<int, int, int>>& stray_entries() const noexcept { return stray_; }

  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /** Export back to identifiers; composition is listed g-major. */
  CategoryData data() const {
    CategoryData d;
    d.name = name_;
    d.objects = objs_;
    for (std::size_t f = 0; f < mors_.size(); ++f)
      d.morphisms.push_back({mors_[f], objs_[dom_[f]], objs_[cod_[f]]});
    for (std::size_t a = 0; a < objs_.size(); ++a) d.identities.emplace_back(objs_[a], mors_[ident_[a]]);
    for (std::size_t g = 0; g < mors_.size(); ++g)
      for (int f : in_[dom_[g]]) {
        int h = compose_or_missing(static_cast<int>(g), f);
        if (h >= 0) d.composition.push_back({mors_[g], mors_[f], mors_[h]});
      }
    for (const auto& [g, f, h] : stray_) d.composition.push_back({mors_[g], mors_[f], mors_[h]});
    return d;
  }

  /** Structural equality of tables; the name is not compared. */
  friend bool operator==(const FinCat& a, const FinCat& b) {
    if (&a == &b) return true;
    return a.fingerprint_ == b.fingerprint_ && a.objs_ == b.objs_ && a.mors_ == b.mors_ &&
           a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.ident_ == b.ident_ && a.table_ == b.table_ &&
           a.stray_ == b.stray_;
  }

private:
  FinCat() = default;

  int resolve_object(const std::string& id, const std::string& where) const {
    auto it = obj_index_.find(id);
    if (it == obj_index_.end())
      throw StructuralError("unknown object in category " + name_ + " (" + where + ")", {id});
    return it->second;
  }

  int resolve_morphism(const std::string& id, const std::string& where) const {
    auto it = mor_index_.find(id);
    if (it == mor_index_.end())
      throw StructuralError("unknown morphism in category " + name_ + " (" + where + ")", {id});
    return it->second;
  }

  void index_ids(const std::string& cat_name) {
    for (std::size_t i = 0; i < objs_.size(); ++i)
      if (!obj_index_.emplace(objs_[i], static_cast<int>(i)).second)
        throw StructuralError("duplicate object in category " + cat_name, {objs_[i]});
    for (std::size_t i = 0; i < mors_.size(); ++i)
      if (!mor_index_.emplace(mors_[i], static_cast<int>(i)).second)
        throw StructuralError("duplicate morphism in category " + cat_name, {mors_[i]});
  }

  void index_adjacency() {
    out_.assign(objs_.size(), {});
    in_.assign(objs_.size(), {});
    out_pos_.assign(mors_.size(), 0);
    for (std::size_t f = 0; f < mors_.size(); ++f) {
      out_pos_[f] = static_cast<int>(out_[dom_[f]].size());
      out_[dom_[f]].push_back(static_cast<int>(f));
      in_[cod_[f]].push_back(static_cast<int>(f));
    }
    table_.assign(mors_.size(), {});
    for (std::size_t f = 0; f < mors_.size(); ++f) table_[f].assign(out_[cod_[f]].size(), -1);
  }

  void finish() {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    std::hash<std::string> hs;
    for (const auto& o : objs_) mix(hs(o));
    for (const auto& m : mors_) mix(hs(m));
    for (std::size_t f = 0; f < mors_.size(); ++f) {
      mix(static_cast<std::uint64_t>(dom_[f]));
      mix(static_cast<std::uint64_t>(cod_[f]));
      for (int x : table_[f]) mix(static_cast<std::uint64_t>(x + 1));
    }
    for (int i : ident_) mix(static_cast<std::uint64_t>(i));
    fingerprint_ = h;
  }

  std::string name_;
  std::vector<std::string> objs_;
  std::vector<std::string> mors_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
  std::vector<int> dom_;
  std::vector<int> cod_;
  std::vector<int> ident_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> out_pos_;
  std::vector<std::vector<int>> table_;
  std::vector<std::tuple<int, int, int>> stray_;
  std::uint64_t fingerprint_ = 0;
  Cat left_;
  Cat right_;
};

inline bool same(const Cat& a, const Cat& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

/**
 * Check the category laws. Dangling ids never reach this point (they are
 * rejected on construction); everything else is reported per instance.
 */
inline Report validate_category(const FinCat& c) {
  Report r;
  const auto& m = c.morphism_ids();
  for (int a = 0; a < c.object_count(); ++a) {
    int i = c.identity(a);
    if (c.dom(i) != a || c.cod(i) != a) r.fail("identity-typing", {c.object_id(a), m[i]});
  }
  for (const auto& [g, f, h] : c.stray_entries()) r.fail("composition-undefined", {m[g], m[f]});

  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.out(c.cod(f))) {
      int h = c.compose_or_missing(g, f);
      if (h < 0)
        r.fail("composition-total", {m[g], m[f]});
      else if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
        r.fail("composition-typing", {m[g], m[f], m[h]});
    }

  for (int f = 0; f < c.morphism_count(); ++f) {
    int left = c.identity(c.cod(f));
    int right = c.identity(c.dom(f));
    if (c.compose_or_missing(left, f) != f) r.fail("left-identity", {m[left], m[f]});
    if (c.compose_or_missing(f, right) != f) r.fail("right-identity", {m[f], m[right]});
  }

  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.out(c.cod(f))) {
      int gf = c.compose_or_missing(g, f);
      if (gf < 0) continue;
      for (int h : c.out(c.cod(g))) {
        int hg = c.compose_or_missing(h, g);
        if (hg < 0) continue;
        int a = c.compose_or_missing(h, gf);
        int b = c.compose_or_missing(hg, f);
        if (a != b) r.fail("associativity", {m[h], m[g], m[f]});
      }
    }
  return r;
}

inline std::string op_name(const std::string& name) {
  const std::string suffix = "^op";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return name.substr(0, name.size() - suffix.size());
  return name + suffix;
}

/** Same identifiers, dom and cod swapped, composition reversed. */
inline Cat op_category(const Cat& c) {
  std::vector<int> dom(c->morphism_count()), cod(c->morphism_count()), ident(c->object_count());
  for (int f = 0; f < c->morphism_count(); ++f) {
    dom[f] = c->cod(f);
    cod[f] = c->dom(f);
  }
  for (int a = 0; a < c->object_count(); ++a) ident[a] = c->identity(a);
  Cat left = c->is_product() ? op_category(c->left_factor()) : Cat{};
  Cat right = c->is_product() ? op_category(c->right_factor()) : Cat{};
  return FinCat::build(op_name(c->name()), c->object_ids(), c->morphism_ids(), std::move(dom),
                       std::move(cod), std::move(ident),
                       [&](int g, int f) { return c->compose_or_missing(f, g); }, left, right);
}

inline std::string pair_id(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

/** Componentwise product; pairs are encoded "(x,y)" in left-major order. */
inline Cat product_category(const Cat& a, const Cat& b) {
  std::size_t count = static_cast<std::size_t>(a->morphism_count()) * b->morphism_count();
  std::string name = "(" + a->name() + "*" + b->name() + ")";
  enforce_morphism_limit(count, "product " + name);
  std::vector<std::string> objs, mors;
  std::vector<int> dom, cod, ident;
  objs.reserve(a->object_count() * b->object_count());
  for (const auto& x : a->object_ids())
    for (const auto& y : b->object_ids()) objs.push_back(pair_id(x, y));
  const int nb = b->object_count(), mb = b->morphism_count();
  for (int f = 0; f < a->morphism_count(); ++f)
    for (int g = 0; g < mb; ++g) {
      mors.push_back(pair_id(a->morphism_id(f), b->morphism_id(g)));
      dom.push_back(a->dom(f) * nb + b->dom(g));
      cod.push_back(a->cod(f) * nb + b->cod(g));
    }
  for (int x = 0; x < a->object_count(); ++x)
    for (int y = 0; y < nb; ++y) ident.push_back(a->identity(x) * mb + b->identity(y));
  return FinCat::build(
      std::move(name), std::move(objs), std::move(mors), std::move(dom), std::move(cod),
      std::move(ident),
      [&](int g, int f) {
        int l = a->compose_or_missing(g / mb, f / mb);
        int r = b->compose_or_missing(g % mb, f % mb);
        return (l < 0 || r < 0) ? -1 : l * mb + r;
      },
      a, b);
}

/**
 * A thin category from a preorder. Morphism ids come from `namer(x, y)`,
 * which receives the element ids.
 */
inline Cat poset_category(std::string name, const std::vector<std::string>& elements,
                          const std::function<bool(int, int)>& leq,
                          const std::function<std::string(const std::string&, const std::string&)>&
                              namer = {}) {
  auto label = [&](int x, int y) {
    if (namer) return namer(elements[x], elements[y]);
    return x == y ? "id_" + elements[x] : elements[x] + "<=" + elements[y];
  };
  const int n = static_cast<int>(elements.size());
  std::vector<std::string> mors;
  std::vector<int> dom, cod, ident(n);
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) {
        index[{x, y}] = static_cast<int>(mors.size());
        if (x == y) ident[x] = static_cast<int>(mors.size());
        mors.push_back(label(x, y));
        dom.push_back(x);
        cod.push_back(y);
      }
  return FinCat::build(std::move(name), elements, std::move(mors), dom, cod, std::move(ident),
                       [&](int g, int f) {
                         auto it = index.find({dom[f], cod[g]});
                         return it == index.end() ? -1 : it->second;
                       });
}

/** A one-object category from a finite monoid given by its multiplication table. */
inline Cat monoid_category(std::string name, std::string object,
                           const std::vector<std::string>& elements,
                           const std::function<int(int, int)>& multiply, int unit = 0) {
  std::vector<int> zeros(elements.size(), 0);
  return FinCat::build(std::move(name), {std::move(object)}, elements, zeros, zeros, {unit},
                       [&](int g, int f) { return multiply(g, f); });
}

} // namespace catkit

#endif
