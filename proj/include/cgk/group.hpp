#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "cgk/errors.hpp"
#include "cgk/perm.hpp"

namespace cgk {

/// Finite permutation group with a complete element enumeration.
/// Element 0 is the identity; the rest follow breadth-first discovery order
/// from the generator list, so the enumeration is reproducible.
class PermGroup {
 public:
  static PermGroup close(std::vector<Perm> generators, std::size_t bound = 20000) {
    if (generators.empty()) throw std::invalid_argument("close: no generators");
    int deg = generators[0].degree();
    for (const auto& g : generators)
      if (g.degree() != deg) throw std::invalid_argument("close: generator degree mismatch");

    PermGroup G;
    G.degree_ = deg;
    G.gens_ = std::move(generators);
    Perm id = Perm::identity(deg);
    G.elems_.push_back(id);
    G.index_.emplace(id, 0);
    G.parent_.push_back(-1);
    G.via_gen_.push_back(-1);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < G.gens_.size(); ++k) {
        Perm y = G.elems_[x].compose(G.gens_[k]);
        if (G.index_.count(y)) continue;
        if (G.elems_.size() >= bound)
          fail(Errc::BoundExceeded, "group order exceeds bound " + std::to_string(bound));
        int idx = static_cast<int>(G.elems_.size());
        G.index_.emplace(y, idx);
        G.elems_.push_back(std::move(y));
        G.parent_.push_back(x);
        G.via_gen_.push_back(static_cast<int>(k));
        queue.push_back(idx);
      }
    }
    G.finish();
    return G;
  }

  static PermGroup trivial(int degree) { return close({Perm::identity(degree)}, 1); }

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const Perm& element(int i) const { return elems_.at(i); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }

  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of element(i) composed after element(j).
  int mult(int i, int j) const {
    int r = index_of(elems_.at(i).compose(elems_.at(j)));
    if (r < 0) throw std::logic_error("PermGroup::mult: product escaped the group");
    return r;
  }

  int inverse(int i) const { return inv_.at(i); }
  int element_order(int i) const { return orders_.at(i); }

  /// BFS tree data: element i equals element(parent(i)) composed after
  /// generator(via_gen(i)); identity has parent -1.
  int parent(int i) const { return parent_.at(i); }
  int via_gen(int i) const { return via_gen_.at(i); }

 private:
  void finish() {
    inv_.resize(elems_.size());
    orders_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      inv_[i] = index_of(elems_[i].inverse());
      orders_[i] = elems_[i].order();
    }
  }

  int degree_ = 0;
  std::vector<Perm> elems_;
  std::vector<Perm> gens_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<int> parent_;
  std::vector<int> via_gen_;
  std::unordered_map<Perm, int, PermHash> index_;
};

/// Subgroup as a sorted list of parent element indices. Characters and class
/// data of stabilizers are always expressed through the parent enumeration so
/// that restriction and transport keep element identity.
struct Subgroup {
  const PermGroup* parent = nullptr;
  std::vector<int> members;  // sorted, contains 0

  static Subgroup whole(const PermGroup& G) {
    Subgroup s;
    s.parent = &G;
    s.members.resize(G.order());
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
  }

  std::size_t order() const { return members.size(); }

  int pos_of(int parent_idx) const {
    auto it = std::lower_bound(members.begin(), members.end(), parent_idx);
    if (it == members.end() || *it != parent_idx) return -1;
    return static_cast<int>(it - members.begin());
  }
  bool contains(int parent_idx) const { return pos_of(parent_idx) >= 0; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

/// Group action on points 0..n-1, given by the permutation image of each
/// group element index.
using PointAction = std::function<int(int g, int point)>;

struct OrbitPartition {
  std::vector<int> orbit_of;               // point -> orbit index
  std::vector<std::vector<int>> orbits;    // sorted points, orbits ordered by min point
  std::vector<int> reps;                   // orbits[k].front()
};

inline OrbitPartition orbits(const PermGroup& G, int n_points, const PointAction& apply) {
  OrbitPartition part;
  part.orbit_of.assign(n_points, -1);
  // generator indices in the group enumeration
  std::vector<int> gen_idx;
  for (const auto& g : G.generators()) gen_idx.push_back(G.index_of(g));
  for (int p = 0; p < n_points; ++p) {
    if (part.orbit_of[p] >= 0) continue;
    int id = static_cast<int>(part.orbits.size());
    std::vector<int> orb{p};
    part.orbit_of[p] = id;
    for (std::size_t h = 0; h < orb.size(); ++h) {
      for (int gi : gen_idx) {
        int q = apply(gi, orb[h]);
        if (part.orbit_of[q] < 0) {
          part.orbit_of[q] = id;
          orb.push_back(q);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    part.reps.push_back(orb.front());
    part.orbits.push_back(std::move(orb));
  }
  return part;
}

inline Subgroup stabilizer(const PermGroup& G, const PointAction& apply, int point) {
  Subgroup s;
  s.parent = &G;
  for (int g = 0; g < static_cast<int>(G.order()); ++g)
    if (apply(g, point) == point) s.members.push_back(g);
  return s;
}

struct ConjClasses {
  Subgroup grp;
  std::vector<int> class_of;             // indexed by member position
  std::vector<int> reps;                 // parent indices, minimal in class
  std::vector<long> sizes;
  std::vector<std::vector<int>> members; // parent indices per class

  std::size_t count() const { return reps.size(); }
  int class_of_element(int parent_idx) const {
    int pos = grp.pos_of(parent_idx);
    if (pos < 0) throw std::logic_error("class_of_element: not a member");
    return class_of[pos];
  }
};

/// Conjugacy classes of H, sorted by (element order, class size, minimal
/// element index). The identity class comes first.
inline ConjClasses conjugacy_classes(const Subgroup& H) {
  const PermGroup& G = *H.parent;
  ConjClasses cc;
  cc.grp = H;
  std::size_t n = H.members.size();
  std::vector<int> raw(n, -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (raw[pos] >= 0) continue;
    int cid = static_cast<int>(classes.size());
    int h = H.members[pos];
    std::vector<int> cls;
    for (int g : H.members) {
      int c = G.mult(G.mult(g, h), G.inverse(g));
      int cpos = H.pos_of(c);
      if (cpos < 0) throw std::logic_error("conjugacy_classes: subgroup not closed");
      if (raw[cpos] < 0) {
        raw[cpos] = cid;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::vector<int> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int oa = G.element_order(classes[a][0]), ob = G.element_order(classes[b][0]);
    if (oa != ob) return oa < ob;
    if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
    return classes[a][0] < classes[b][0];
  });
  std::vector<int> new_id(classes.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<int>(k);
  cc.class_of.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) cc.class_of[pos] = new_id[raw[pos]];
  for (int old : order) {
    cc.reps.push_back(classes[old][0]);
    cc.sizes.push_back(static_cast<long>(classes[old].size()));
    cc.members.push_back(classes[old]);
  }
  return cc;
}

inline ConjClasses conjugacy_classes(const PermGroup& G) {
  return conjugacy_classes(Subgroup::whole(G));
}

struct GroupMeta {
  std::size_t order;
  long exponent;
  bool abelian;
  std::vector<int> element_orders;
};

inline GroupMeta group_meta(const PermGroup& G) {
  GroupMeta m;
  m.order = G.order();
  m.exponent = 1;
  for (std::size_t i = 0; i < G.order(); ++i) {
    int o = G.element_order(static_cast<int>(i));
    m.element_orders.push_back(o);
    m.exponent = std::lcm(m.exponent, static_cast<long>(o));
  }
  m.abelian = true;
  for (const auto& a : G.generators()) {
    for (const auto& b : G.generators())
      if (a.compose(b) != b.compose(a)) {
        m.abelian = false;
        break;
      }
    if (!m.abelian) break;
  }
  return m;
}

inline long subgroup_exponent(const Subgroup& H) {
  long e = 1;
  for (int g : H.members) e = std::lcm(e, static_cast<long>(H.parent->element_order(g)));
  return e;
}

}  // namespace cgk
