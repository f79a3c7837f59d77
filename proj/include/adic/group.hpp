#pragma once

#include <string>
#include <vector>

#include "adic/error.hpp"

namespace adic {

/// A finite group given by an explicit multiplication table. Elements are
/// dense indices into the table; named constructions all compile down to
/// tables so that every group can be checked and scanned the same way.
///
/// Construction validates closure, a two-sided identity, inverses and
/// associativity (exhaustively up to order 64, by deterministic sampling
/// with at least 10*order^2 triples above that).
class FiniteGroup {
 public:
  using Element = int;

  FiniteGroup();  // trivial group

  static FiniteGroup from_table(int order, std::vector<int> table,
                                std::vector<std::string> names = {});
  /// Z_n with op(i,j) = (i+j) mod n.
  static FiniteGroup cyclic(int n);
  /// S_n; elements are the permutations of {1..n} in lexicographic order of
  /// their one-line notation, named by cycle notation. Composition applies
  /// the right factor first: op(p,q) maps x to p(q(x)).
  static FiniteGroup symmetric(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// normal x| acting, where action[j] is the permutation of the normal
  /// subgroup's elements by which acting-element j acts (must be a group
  /// automorphism, and j -> action[j] a homomorphism).
  /// Multiplication: (h1,j1)*(h2,j2) = (h1 * action[j1](h2), j1*j2).
  static FiniteGroup semidirect_product(const FiniteGroup& normal,
                                        const FiniteGroup& acting,
                                        const std::vector<std::vector<int>>& action);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element op(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, long long k) const;
  bool abelian() const;

  const std::string& name(Element a) const;
  /// Lookup by display name ("(12)", "3", ...); throws element-out-of-range.
  Element element(const std::string& name) const;

  /// Left-to-right fold of the group operation; the empty word is the identity.
  Element evaluate_word(const std::vector<Element>& word) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  void check(Element a) const;
  void validate_structure() const;

  int order_ = 1;
  std::vector<int> table_{0};  // row-major: table_[a*order_+b] = a*b
  Element identity_ = 0;
  std::vector<int> inverse_{0};
  std::vector<std::string> names_{"0"};
};

/// True iff s * t^-1 * s^-1 == t * s^-1 * t^-1.
bool check_odometer_relation(const FiniteGroup& g, FiniteGroup::Element s,
                             FiniteGroup::Element t);

}  // namespace adic
