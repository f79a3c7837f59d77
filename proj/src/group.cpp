#include "adic/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace adic {

namespace {

std::string default_name(int i) { return std::to_string(i); }

// Cycle notation over symbols 1..n; identity prints as "()".
std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << (n > 9 ? "," : "");
      out << (x + 1);
      first = false;
      x = perm[x];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace

FiniteGroup::FiniteGroup() = default;

void FiniteGroup::check(Element a) const {
  if (a < 0 || a >= order_)
    throw Error("element-out-of-range",
                "element " + std::to_string(a) + " not in group of order " +
                    std::to_string(order_));
}

FiniteGroup::Element FiniteGroup::op(Element a, Element b) const {
  check(a);
  check(b);
  return table_[static_cast<std::size_t>(a) * order_ + b];
}

FiniteGroup::Element FiniteGroup::inverse(Element a) const {
  check(a);
  return inverse_[a];
}

FiniteGroup::Element FiniteGroup::power(Element a, long long k) const {
  check(a);
  if (k < 0) return power(inverse(a), -k);
  Element acc = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) acc = op(acc, base);
    base = op(base, base);
    k >>= 1;
  }
  return acc;
}

bool FiniteGroup::abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

const std::string& FiniteGroup::name(Element a) const {
  check(a);
  return names_[a];
}

FiniteGroup::Element FiniteGroup::element(const std::string& name) const {
  for (Element a = 0; a < order_; ++a)
    if (names_[a] == name) return a;
  throw Error("element-out-of-range", "no element named '" + name + "'");
}

FiniteGroup::Element FiniteGroup::evaluate_word(
    const std::vector<Element>& word) const {
  Element acc = identity_;
  for (Element w : word) acc = op(acc, w);
  return acc;
}

void FiniteGroup::validate_structure() const {
  const int n = order_;
  for (int v : table_)
    if (v < 0 || v >= n)
      throw Error("invalid-table", "entry " + std::to_string(v) +
                                       " outside [0," + std::to_string(n) + ")");
  // two-sided identity
  for (int b = 0; b < n; ++b)
    if (table_[static_cast<std::size_t>(identity_) * n + b] != b ||
        table_[static_cast<std::size_t>(b) * n + identity_] != b)
      throw Error("invalid-table", "identity is not two-sided");
  for (int a = 0; a < n; ++a) {
    int inv = inverse_[a];
    if (table_[static_cast<std::size_t>(a) * n + inv] != identity_ ||
        table_[static_cast<std::size_t>(inv) * n + a] != identity_)
      throw Error("invalid-table", "inverse of " + std::to_string(a) + " wrong");
  }
  auto mul = [&](int a, int b) {
    return table_[static_cast<std::size_t>(a) * n + b];
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("invalid-table", "associativity fails at (" +
                                             std::to_string(a) + "," +
                                             std::to_string(b) + "," +
                                             std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<unsigned>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    const long long samples = 10LL * n * n;
    for (long long i = 0; i < samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw Error("invalid-table", "associativity fails at (" +
                                         std::to_string(a) + "," +
                                         std::to_string(b) + "," +
                                         std::to_string(c) + ")");
    }
  }
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table,
                                    std::vector<std::string> names) {
  if (order <= 0) throw Error("invalid-order", "group order must be positive");
  if (static_cast<long long>(table.size()) !=
      static_cast<long long>(order) * order)
    throw Error("invalid-table", "expected " + std::to_string(order) + "^2 = " +
                                     std::to_string(1LL * order * order) +
                                     " entries, got " +
                                     std::to_string(table.size()));
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  // locate the two-sided identity
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int b = 0; b < order && ok; ++b)
      ok = g.table_[static_cast<std::size_t>(e) * order + b] == b &&
           g.table_[static_cast<std::size_t>(b) * order + e] == b;
    if (ok) id = e;
  }
  if (id < 0) throw Error("invalid-table", "no two-sided identity");
  g.identity_ = id;
  g.inverse_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.table_[static_cast<std::size_t>(a) * order + b] == id &&
          g.table_[static_cast<std::size_t>(b) * order + a] == id) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0)
      throw Error("invalid-table", "element " + std::to_string(a) +
                                       " has no two-sided inverse");
  }
  if (names.empty()) {
    names.reserve(order);
    for (int i = 0; i < order; ++i) names.push_back(default_name(i));
  } else if (static_cast<int>(names.size()) != order) {
    throw Error("invalid-table", "name count does not match order");
  }
  g.names_ = std::move(names);
  g.validate_structure();
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw Error("invalid-order", "cyclic group needs n >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return from_table(n, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n <= 0) throw Error("invalid-order", "symmetric group needs n >= 1");
  if (n > 8) throw Error("capacity", "S_n table supported only for n <= 8");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::vector<int> index_of(order);
  // perms are in lexicographic order, so a composed permutation can be found
  // by binary search
  auto find = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<int>(it - perms.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      table[static_cast<std::size_t>(a) * order + b] = find(comp);
    }
  }
  std::vector<std::string> names;
  names.reserve(order);
  for (const auto& q : perms) names.push_back(cycle_notation(q));
  return from_table(order, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.op(x1, x2), b.op(y1, y2));
  std::vector<std::string> names(n);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      names[idx(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
  return from_table(n, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::semidirect_product(
    const FiniteGroup& normal, const FiniteGroup& acting,
    const std::vector<std::vector<int>>& action) {
  const int nh = normal.order();
  const int nj = acting.order();
  if (static_cast<int>(action.size()) != nj)
    throw Error("invalid-table", "need one automorphism per acting element");
  for (int j = 0; j < nj; ++j) {
    const auto& phi = action[j];
    if (static_cast<int>(phi.size()) != nh)
      throw Error("invalid-table", "automorphism " + std::to_string(j) +
                                       " has wrong size");
    std::vector<bool> hit(nh, false);
    for (int h : phi) {
      if (h < 0 || h >= nh || hit[h])
        throw Error("invalid-table",
                    "automorphism " + std::to_string(j) + " is not a bijection");
      hit[h] = true;
    }
    for (int x = 0; x < nh; ++x)
      for (int y = 0; y < nh; ++y)
        if (phi[normal.op(x, y)] != normal.op(phi[x], phi[y]))
          throw Error("invalid-table", "action of " + std::to_string(j) +
                                           " is not an automorphism");
  }
  for (int j1 = 0; j1 < nj; ++j1)
    for (int j2 = 0; j2 < nj; ++j2)
      for (int x = 0; x < nh; ++x)
        if (action[acting.op(j1, j2)][x] != action[j1][action[j2][x]])
          throw Error("invalid-table", "action is not a homomorphism");

  const int n = nh * nj;
  auto idx = [&](int h, int j) { return h * nj + j; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int j1 = 0; j1 < nj; ++j1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int j2 = 0; j2 < nj; ++j2)
          table[static_cast<std::size_t>(idx(h1, j1)) * n + idx(h2, j2)] =
              idx(normal.op(h1, action[j1][h2]), acting.op(j1, j2));
  std::vector<std::string> names(n);
  for (int h = 0; h < nh; ++h)
    for (int j = 0; j < nj; ++j)
      names[idx(h, j)] = "(" + normal.name(h) + ";" + acting.name(j) + ")";
  return from_table(n, std::move(table), std::move(names));
}

bool check_odometer_relation(const FiniteGroup& g, FiniteGroup::Element s,
                             FiniteGroup::Element t) {
  const auto lhs = g.op(g.op(s, g.inverse(t)), g.inverse(s));
  const auto rhs = g.op(g.op(t, g.inverse(s)), g.inverse(t));
  return lhs == rhs;
}

}  // namespace adic
