#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "parthopf/core/error.hpp"

namespace parthopf {

using Index = std::size_t;

/// A subgroup as a sorted list of element indices of its parent group.
struct Subgroup {
  std::vector<Index> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Index g) const { return std::binary_search(elements.begin(), elements.end(), g); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() <=> b.elements.size();
    return a.elements <=> b.elements;
  }
};

/// A left coset gH: its least element (the representative) and the sorted
/// member list.
struct Coset {
  Index representative;
  std::vector<Index> elements;
};

/// Finite group given by a validated Cayley table.
class FiniteGroup {
 public:
  /// Validates that table is a group table: square, entries in range, Latin
  /// square, two-sided identity, associative. Throws StructuralError naming
  /// the first failing row, column, or triple.
  static FiniteGroup from_table(std::vector<std::vector<Index>> table,
                                std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw StructuralError("group table is empty");
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw StructuralError("group table row " + std::to_string(i) + " has length " +
                              std::to_string(table[i].size()) + ", expected " + std::to_string(n));
      }
      for (Index v : table[i]) {
        if (v >= n) throw StructuralError("group table entry " + std::to_string(v) + " out of range");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row(n, false);
      std::vector<bool> col(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[table[i][j]]) throw StructuralError("not a Latin square: row " + std::to_string(i) + " repeats an entry");
        if (col[table[j][i]]) throw StructuralError("not a Latin square: column " + std::to_string(i) + " repeats an entry");
        row[table[i][j]] = true;
        col[table[j][i]] = true;
      }
    }
    Index identity = n;
    for (Index e = 0; e < n && identity == n; ++e) {
      bool ok = true;
      for (Index g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
      if (ok) identity = e;
    }
    if (identity == n) throw StructuralError("group table has no two-sided identity");
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw StructuralError("group table is not associative at triple (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (names.empty()) {
      for (Index g = 0; g < n; ++g) names.push_back("g" + std::to_string(g));
    }
    if (names.size() != n) throw StructuralError("group names list has the wrong length");
    FiniteGroup grp;
    grp.table_ = std::move(table);
    grp.names_ = std::move(names);
    grp.identity_ = identity;
    grp.inverse_.assign(n, n);
    for (Index g = 0; g < n; ++g) {
      for (Index h = 0; h < n; ++h) {
        if (grp.table_[g][h] == identity) grp.inverse_[g] = h;
      }
    }
    return grp;
  }

  std::size_t order() const { return table_.size(); }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[a][b]; }
  Index inv(Index a) const { return inverse_[a]; }
  const std::vector<std::vector<Index>>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index g) const { return names_.at(g); }

  Index find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw StructuralError("group has no element named '" + name + "'");
    return static_cast<Index>(it - names_.begin());
  }

  bool is_abelian() const {
    for (Index a = 0; a < order(); ++a)
      for (Index b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Smallest subgroup containing the given elements.
  Subgroup closure(const std::vector<Index>& generators) const {
    std::set<Index> s{identity_};
    std::vector<Index> frontier{identity_};
    while (!frontier.empty()) {
      std::vector<Index> next;
      for (Index x : frontier) {
        for (Index g : generators) {
          Index y = mul(x, g);
          if (s.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return Subgroup{{s.begin(), s.end()}};
  }

  bool is_subgroup(const std::vector<Index>& elements) const {
    std::vector<Index> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    Subgroup s{sorted};
    if (!s.contains(identity_)) return false;
    for (Index a : sorted) {
      if (!s.contains(inv(a))) return false;
      for (Index b : sorted) {
        if (!s.contains(mul(a, b))) return false;
      }
    }
    return true;
  }

  Subgroup subgroup(std::vector<Index> elements) const {
    if (!is_subgroup(elements)) throw RejectedError("element set is not a subgroup");
    std::sort(elements.begin(), elements.end());
    return Subgroup{std::move(elements)};
  }

  Subgroup whole() const {
    std::vector<Index> all(order());
    std::iota(all.begin(), all.end(), Index{0});
    return Subgroup{all};
  }

  Subgroup trivial_subgroup() const { return Subgroup{{identity_}}; }

  /// Every subgroup exactly once, ordered by (order, element list).
  /// Grows the lattice by adjoining one element at a time to known subgroups.
  std::vector<Subgroup> enumerate_subgroups() const {
    std::set<Subgroup> found{trivial_subgroup()};
    std::vector<Subgroup> frontier{trivial_subgroup()};
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const auto& s : frontier) {
        for (Index g = 0; g < order(); ++g) {
          if (s.contains(g)) continue;
          std::vector<Index> gens = s.elements;
          gens.push_back(g);
          Subgroup t = closure(gens);
          if (found.insert(t).second) next.push_back(std::move(t));
        }
      }
      frontier = std::move(next);
    }
    return {found.begin(), found.end()};
  }

  /// Left cosets gH. The coset of the identity comes first; the rest follow
  /// in order of their least element.
  std::vector<Coset> left_cosets(const Subgroup& h) const {
    std::vector<int> assigned(order(), -1);
    std::vector<Coset> cosets;
    auto add = [&](Index g) {
      std::vector<Index> members;
      for (Index x : h.elements) members.push_back(mul(g, x));
      std::sort(members.begin(), members.end());
      for (Index m : members) assigned[m] = static_cast<int>(cosets.size());
      cosets.push_back({members.front(), members});
    };
    add(identity_);
    for (Index g = 0; g < order(); ++g) {
      if (assigned[g] < 0) add(g);
    }
    cosets.front().representative = identity_;
    return cosets;
  }

  /// t H t^{-1}.
  Subgroup conjugate(const Subgroup& h, Index t) const {
    std::vector<Index> out;
    for (Index x : h.elements) out.push_back(mul(mul(t, x), inv(t)));
    std::sort(out.begin(), out.end());
    return Subgroup{out};
  }

  /// Left multiplication on left cosets: result[g][i] = j when g c_i = c_j,
  /// with cosets indexed as in left_cosets(h).
  std::vector<std::vector<std::size_t>> coset_action(const Subgroup& h) const {
    auto cosets = left_cosets(h);
    std::vector<std::size_t> which(order());
    for (std::size_t i = 0; i < cosets.size(); ++i)
      for (Index m : cosets[i].elements) which[m] = i;
    std::vector<std::vector<std::size_t>> perm(order(), std::vector<std::size_t>(cosets.size()));
    for (Index g = 0; g < order(); ++g)
      for (std::size_t i = 0; i < cosets.size(); ++i)
        perm[g][i] = which[mul(g, cosets[i].representative)];
    return perm;
  }

  /// Is the set tH equal to sH (same left coset)?
  bool same_left_coset(Index t, Index s, const Subgroup& h) const { return h.contains(mul(inv(t), s)); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

  // Builders ---------------------------------------------------------------

  static FiniteGroup trivial() { return from_table({{0}}, {"e"}); }

  /// C_n = <t>, element i is t^i.
  static FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw StructuralError("cyclic group of order 0");
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : (i == 1 ? "t" : "t^" + std::to_string(i)));
      for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return from_table(std::move(t), std::move(names));
  }

  /// A x B with element (a, b) at index a * |B| + b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order() * b.order();
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i) {
      names.push_back("(" + a.name(i / b.order()) + "," + b.name(i % b.order()) + ")");
      for (Index j = 0; j < n; ++j) {
        t[i][j] = a.mul(i / b.order(), j / b.order()) * b.order() + b.mul(i % b.order(), j % b.order());
      }
    }
    return from_table(std::move(t), std::move(names));
  }

  /// S_n on {1..n}, elements in lexicographic order of their one-line form
  /// (identity first), named in cycle notation; (s t)(i) = s(t(i)).
  static FiniteGroup symmetric(std::size_t n) {
    if (n == 0 || n > 5) throw StructuralError("symmetric group builder supports 1 <= n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
      return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Index>> t(perms.size(), std::vector<Index>(perms.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      names.push_back(cycle_name(perms[i]));
      for (std::size_t j = 0; j < perms.size(); ++j) {
        std::vector<std::size_t> c(n);
        for (std::size_t k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
        t[i][j] = index_of(c);
      }
    }
    return from_table(std::move(t), std::move(names));
  }

  /// Builders by short name: C<n>, S<n>, C2xC2 (Klein four), trivial.
  static FiniteGroup by_name(const std::string& name) {
    if (name == "trivial" || name == "C1") return trivial();
    if (name == "C2xC2" || name == "V4") return direct_product(cyclic(2), cyclic(2));
    if (name.size() > 1 && (name[0] == 'C' || name[0] == 'S')) {
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(name.substr(1), &used);
        if (used != name.size() - 1) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n > 0) return name[0] == 'C' ? cyclic(n) : symmetric(n);
    }
    throw StructuralError("unknown group name '" + name + "'");
  }

 private:
  FiniteGroup() = default;

  static std::string cycle_name(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (seen[s] || p[s] == s) continue;
      out += "(";
      for (std::size_t k = s; !seen[k]; k = p[k]) {
        seen[k] = true;
        out += std::to_string(k + 1);
      }
      out += ")";
    }
    return out.empty() ? "e" : out;
  }

  std::vector<std::vector<Index>> table_;
  std::vector<std::string> names_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

}  // namespace parthopf
