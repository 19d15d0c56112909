#include "freemod/linmap.hpp"

#include <algorithm>

namespace freemod {

LinearMapTable::LinearMapTable(StructurePtr domain, StructurePtr codomain,
                               std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_->size())
    throw Error("map table must have " + std::to_string(domain_->size()) + " entries, got " +
                std::to_string(table_.size()));
  for (std::size_t v : table_)
    if (v >= codomain_->size()) throw Error("map table entry out of range");
}

bool LinearMapTable::operator==(const LinearMapTable& other) const {
  return domain() == other.domain() && codomain() == other.codomain() &&
         table_ == other.table_;
}

LinearMapTable identity_map(StructurePtr s) {
  std::vector<std::size_t> table(s->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  StructurePtr codomain = s;
  return verified(LinearMapTable(std::move(s), std::move(codomain), std::move(table)));
}

LinearityVerdict check_linear(const LinearMapTable& f) {
  const FiniteStructure& d = f.domain();
  const FiniteStructure& c = f.codomain();
  if (!same_semiring(d.ring(), c.ring()))
    throw DomainMismatchError("domain over " + d.ring()->name() + ", codomain over " +
                              c.ring()->name());
  LinearityVerdict v;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n && !v.add_witness; ++x)
    for (std::size_t y = 0; y < n && !v.add_witness; ++y)
      if (f(d.add(x, y)) != c.add(f(x), f(y))) {
        Witness w;
        w.elems = {{"x", x}, {"y", y}};
        v.add_witness = std::move(w);
      }
  const std::size_t m = d.scalar_count();
  for (std::size_t a = 0; a < m && !v.scale_witness; ++a)
    for (std::size_t x = 0; x < n && !v.scale_witness; ++x)
      if (f(d.act(a, x)) != c.act(a, f(x))) {
        Witness w;
        w.elems = {{"x", x}};
        w.scalars = {{"a", a}};
        v.scale_witness = std::move(w);
      }
  v.linear = !v.add_witness && !v.scale_witness;
  return v;
}

InvertibilityVerdict check_invertible(const LinearMapTable& f) {
  InvertibilityVerdict v;
  const std::size_t n = f.domain().size();
  const std::size_t cn = f.codomain().size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_hit(cn, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = f(x);
    if (first_hit[y] != kUnset) {
      Witness w;
      w.elems = {{"x1", first_hit[y]}, {"x2", x}};
      v.collision = std::move(w);
      return v;
    }
    first_hit[y] = x;
  }
  for (std::size_t y = 0; y < cn; ++y)
    if (first_hit[y] == kUnset) {
      v.missed = y;
      return v;
    }
  v.invertible = true;
  v.inverse = std::move(first_hit);
  return v;
}

LinearMapTable verified(const LinearMapTable& f) {
  LinearMapTable out = f;
  const LinearityVerdict lv = check_linear(f);
  out.linear_ = lv.linear ? TriState::yes : TriState::no;
  out.linear_witness_ = lv.add_witness ? lv.add_witness : lv.scale_witness;
  const InvertibilityVerdict iv = check_invertible(f);
  out.invertible_ = iv.invertible ? TriState::yes : TriState::no;
  out.inverse_ = iv.inverse;
  return out;
}

LinearMapTable compose(const LinearMapTable& f, const LinearMapTable& g) {
  if (!(g.codomain() == f.domain()))
    throw Error("compose: codomain of the inner map differs from domain of the outer map");
  std::vector<std::size_t> table(g.domain().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = f(g(x));
  LinearMapTable out(g.domain_ptr(), f.codomain_ptr(), std::move(table));
  if (f.linear_state() == TriState::yes && g.linear_state() == TriState::yes)
    out.linear_ = TriState::yes;
  if (f.invertible_state() == TriState::yes && g.invertible_state() == TriState::yes) {
    out.invertible_ = TriState::yes;
    std::vector<std::size_t> inv(out.codomain().size());
    const auto& fi = *f.inverse_table();
    const auto& gi = *g.inverse_table();
    for (std::size_t y = 0; y < inv.size(); ++y) inv[y] = gi[fi[y]];
    out.inverse_ = std::move(inv);
  }
  return out;
}

LinearMapTable inverse(const LinearMapTable& f) {
  if (f.invertible_state() != TriState::yes)
    throw PreconditionError("inverse requires a map verified invertible");
  LinearMapTable out(f.codomain_ptr(), f.domain_ptr(), *f.inverse_table());
  out.invertible_ = TriState::yes;
  out.inverse_ = f.table();
  // The footnote defines isomorphisms by invertibility alone; linearity of
  // the inverse is checked, and a violation would be recorded here.
  const LinearityVerdict lv = check_linear(out);
  out.linear_ = lv.linear ? TriState::yes : TriState::no;
  out.linear_witness_ = lv.add_witness ? lv.add_witness : lv.scale_witness;
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

std::vector<bool> zero_candidate_mask(const FiniteStructure& s) {
  std::vector<bool> mask(s.size(), false);
  for (std::size_t z = 0; z < s.size(); ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x) ok = s.add(x, z) == x;
    mask[z] = ok;
  }
  return mask;
}

struct IsoSearch {
  const FiniteStructure& x;
  const FiniteStructure& y;
  std::vector<bool> zx, zy;
  std::size_t n = 0, m = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> img;       // domain -> codomain, kUnset when open
  std::vector<bool> used;             // codomain hit?
  std::vector<std::size_t> assigned;  // assignment order, for undo

  IsoSearch(const FiniteStructure& xs, const FiniteStructure& ys, std::uint64_t b)
      : x(xs), y(ys), budget(b) {
    n = x.size();
    m = x.scalar_count();
    zx = zero_candidate_mask(x);
    zy = zero_candidate_mask(y);
    img.assign(n, kUnset);
    used.assign(n, false);
  }

  bool assign(std::size_t u, std::size_t v, std::size_t trail_mark) {
    (void)trail_mark;
    if (img[u] != kUnset) return img[u] == v;
    if (used[v] || zx[u] != zy[v]) return false;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    img[u] = v;
    used[v] = true;
    assigned.push_back(u);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (assigned.size() > mark) {
      const std::size_t u = assigned.back();
      assigned.pop_back();
      used[img[u]] = false;
      img[u] = kUnset;
    }
  }

  // Forces images entailed by the homomorphism equations over the
  // currently assigned elements. Returns false on conflict.
  bool propagate(std::size_t from) {
    for (std::size_t qi = from; qi < assigned.size(); ++qi) {
      const std::size_t u = assigned[qi];
      for (std::size_t idx = 0; idx < assigned.size(); ++idx) {
        const std::size_t w = assigned[idx];
        if (!assign(x.add(u, w), y.add(img[u], img[w]), 0)) return false;
        if (!assign(x.add(w, u), y.add(img[w], img[u]), 0)) return false;
      }
      for (std::size_t a = 0; a < m; ++a)
        if (!assign(x.act(a, u), y.act(a, img[u]), 0)) return false;
    }
    return true;
  }

  enum class Outcome { found, exhausted, budget };

  Outcome dfs() {
    std::size_t u = kUnset;
    for (std::size_t i = 0; i < n; ++i)
      if (img[i] == kUnset) {
        u = i;
        break;
      }
    if (u == kUnset) return Outcome::found;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t mark = assigned.size();
      if (assign(u, v, mark) && propagate(mark)) {
        const Outcome o = dfs();
        if (o != Outcome::exhausted) return o;
      }
      undo_to(mark);
      if (out_of_budget) return Outcome::budget;
    }
    return Outcome::exhausted;
  }
};

}  // namespace

IsoSearchResult check_isomorphic(StructurePtr x, StructurePtr y, std::uint64_t budget) {
  if (!same_semiring(x->ring(), y->ring()))
    throw DomainMismatchError("carriers over " + x->ring()->name() + " and " +
                              y->ring()->name());
  IsoSearchResult r;
  if (x->size() != y->size()) {
    r.status = IsoStatus::not_isomorphic;
    r.obstruction = "carrier sizes differ (" + std::to_string(x->size()) + " vs " +
                    std::to_string(y->size()) + ")";
    return r;
  }
  IsoSearch search(*x, *y, budget);
  const std::size_t zx_count = static_cast<std::size_t>(
      std::count(search.zx.begin(), search.zx.end(), true));
  const std::size_t zy_count = static_cast<std::size_t>(
      std::count(search.zy.begin(), search.zy.end(), true));
  if (zx_count != zy_count) {
    r.status = IsoStatus::not_isomorphic;
    r.obstruction = "zero-candidate counts differ (" + std::to_string(zx_count) + " vs " +
                    std::to_string(zy_count) + ")";
    return r;
  }
  const IsoSearch::Outcome o = search.dfs();
  r.nodes_visited = search.nodes;
  switch (o) {
    case IsoSearch::Outcome::found: {
      r.status = IsoStatus::isomorphic;
      LinearMapTable w = verified(LinearMapTable(x, y, search.img));
      if (w.linear_state() != TriState::yes || w.invertible_state() != TriState::yes)
        throw Error("isomorphism search produced an unverifiable witness");
      r.witness = std::move(w);
      return r;
    }
    case IsoSearch::Outcome::exhausted:
      r.status = IsoStatus::not_isomorphic;
      r.obstruction = "no bijective linear map exists (search exhausted)";
      return r;
    case IsoSearch::Outcome::budget:
      r.status = IsoStatus::undecided_budget;
      r.obstruction = "budget of " + std::to_string(budget) + " assignments exceeded";
      return r;
  }
  throw Error("unreachable");
}

}  // namespace freemod
