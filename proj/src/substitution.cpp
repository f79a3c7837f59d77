#include "adic/substitution.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adic {

Substitution::Substitution(std::vector<std::string> letters,
                           std::vector<std::vector<int>> images)
    : letters_(std::move(letters)), images_(std::move(images)) {
  if (letters_.empty()) throw Error("invalid-substitution", "empty alphabet");
  if (images_.size() != letters_.size())
    throw Error("invalid-substitution", "need one image per letter");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty())
      throw Error("invalid-substitution", "image of '" + letters_[a] + "' is empty");
    for (int x : images_[a])
      if (x < 0 || x >= alphabet_size())
        throw Error("invalid-substitution",
                    "image of '" + letters_[a] + "' uses an unknown letter");
  }
}

int Substitution::letter(const std::string& name) const {
  for (int a = 0; a < alphabet_size(); ++a)
    if (letters_[a] == name) return a;
  throw Error("argument", "unknown letter '" + name + "'");
}

Substitution power(const Substitution& s, int k) {
  if (k < 1) throw Error("argument", "substitution power needs k >= 1");
  std::vector<std::vector<int>> images;
  for (int a = 0; a < s.alphabet_size(); ++a) images.push_back({a});
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<int>> next(s.alphabet_size());
    for (int a = 0; a < s.alphabet_size(); ++a)
      for (int x : images[a])
        next[a].insert(next[a].end(), s.image(x).begin(), s.image(x).end());
    images = std::move(next);
  }
  return Substitution(s.letter_names(), std::move(images));
}

std::vector<std::vector<long long>> substitution_matrix(const Substitution& s) {
  const int n = s.alphabet_size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int b = 0; b < n; ++b)
    for (int a : s.image(b)) ++m[a][b];
  return m;
}

bool check_primitive(const Substitution& s) {
  const int n = s.alphabet_size();
  const auto m = substitution_matrix(s);
  std::vector<std::vector<bool>> pow(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pow[i][j] = m[i][j] > 0;
  const int bound = (n - 1) * (n - 1) + 1;
  for (int k = 1; k <= bound; ++k) {
    bool all = true;
    for (int i = 0; i < n && all; ++i)
      for (int j = 0; j < n && all; ++j) all = pow[i][j];
    if (all) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (pow[i][l])
          for (int j = 0; j < n; ++j)
            if (m[l][j] > 0) next[i][j] = true;
    pow = std::move(next);
  }
  return false;
}

namespace {

bool stabilizes_to_constant(std::vector<int> f) {
  const int n = static_cast<int>(f.size());
  // image of f^k shrinks monotonically; 2n iterations are plenty
  std::vector<int> g(n);
  for (int x = 0; x < n; ++x) g[x] = x;
  for (int k = 0; k < 2 * n; ++k) {
    for (int x = 0; x < n; ++x) g[x] = f[g[x]];
    bool constant = true;
    for (int x = 1; x < n && constant; ++x) constant = g[x] == g[0];
    if (constant) return true;
  }
  return false;
}

}  // namespace

bool check_proper(const Substitution& s) {
  const int n = s.alphabet_size();
  std::vector<int> first(n), last(n);
  for (int a = 0; a < n; ++a) {
    first[a] = s.image(a).front();
    last[a] = s.image(a).back();
  }
  return stabilizes_to_constant(first) && stabilizes_to_constant(last);
}

std::optional<int> constant_length(const Substitution& s) {
  const int len = static_cast<int>(s.image(0).size());
  for (int a = 1; a < s.alphabet_size(); ++a)
    if (static_cast<int>(s.image(a).size()) != len) return std::nullopt;
  return len;
}

OrderedBratteliDiagram diagram_from_substitution(const Substitution& s, int depth) {
  if (depth < 2) throw Error("argument", "substitution diagram needs depth >= 2");
  const int n = s.alphabet_size();
  BratteliDiagram d;
  {
    std::vector<Edge> root_edges(n);
    for (int a = 0; a < n; ++a) root_edges[a] = Edge{0, a};
    d.add_level(n, std::move(root_edges));
  }
  std::vector<Edge> block;
  for (int b = 0; b < n; ++b)
    for (int a : s.image(b)) block.push_back(Edge{a, b});
  for (int level = 2; level <= depth; ++level) d.add_level(n, block);
  d.set_stationary(true);
  // declaration order groups edges by range with positions ascending, which
  // is exactly the linear order
  return OrderedBratteliDiagram(std::move(d));
}

Labelling stationary_edge_labelling(const Substitution& s,
                                    const StationaryLabelling& lab,
                                    const BratteliDiagram& d) {
  const int n = s.alphabet_size();
  if (static_cast<int>(lab.values.size()) != n)
    throw Error("labelling-incomplete", "need stationary labels for every letter");
  for (int b = 0; b < n; ++b)
    if (lab.values[b].size() != s.image(b).size())
      throw Error("labelling-incomplete",
                  "stationary labels of '" + s.letter_name(b) +
                      "' do not cover positions 1.." +
                      std::to_string(s.image(b).size()));
  Labelling out(lab.group);
  out.set_level_values(1, std::vector<int>(n, lab.group.identity()));
  std::vector<int> block;
  for (int b = 0; b < n; ++b)
    for (std::size_t k = 0; k < s.image(b).size(); ++k)
      block.push_back(lab.values[b][k]);
  for (int level = 2; level <= d.depth(); ++level) out.set_level_values(level, block);
  return out;
}

Substitution skew_substitution(const Substitution& s, const StationaryLabelling& lab) {
  const FiniteGroup& g = lab.group;
  const int go = g.order();
  const int n = s.alphabet_size();
  for (int b = 0; b < n; ++b)
    if (lab.values[b].size() != s.image(b).size())
      throw Error("labelling-incomplete", "stationary labels incomplete");
  std::vector<std::string> letters;
  letters.reserve(static_cast<std::size_t>(n) * go);
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < go; ++h)
      letters.push_back(s.letter_name(a) + "_" + g.name(h));
  std::vector<std::vector<int>> images(static_cast<std::size_t>(n) * go);
  for (int b = 0; b < n; ++b) {
    for (int h = 0; h < go; ++h) {
      auto& word = images[static_cast<std::size_t>(b) * go + h];
      for (std::size_t k = 0; k < s.image(b).size(); ++k) {
        const int a = s.image(b)[k];
        word.push_back(a * go + g.op(h, lab.values[b][k]));
      }
    }
  }
  return Substitution(std::move(letters), std::move(images));
}

TripleSubstitution triple_substitution(const Substitution& s) {
  using Triple = std::array<int, 3>;
  // Admissible triples are the length-3 factors of the iterated images. A
  // window of three letters in the image of a word touches at most three
  // consecutive letters of that word, so the factor sets of length <= 3
  // close under a single image step; iterate them to stability.
  std::set<std::vector<int>> factors;
  for (int a = 0; a < s.alphabet_size(); ++a) factors.insert({a});
  bool growing = true;
  while (growing) {
    growing = false;
    std::set<std::vector<int>> next = factors;
    for (const auto& f : factors) {
      std::vector<int> image;
      for (int a : f)
        image.insert(image.end(), s.image(a).begin(), s.image(a).end());
      for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t len = 1; len <= 3 && i + len <= image.size(); ++len) {
          std::vector<int> sub(image.begin() + i, image.begin() + i + len);
          if (next.insert(std::move(sub)).second) growing = true;
        }
      }
    }
    factors = std::move(next);
  }
  std::set<Triple> triples;
  for (const auto& f : factors)
    if (f.size() == 3) triples.insert({f[0], f[1], f[2]});
  auto image_of = [&](const Triple& t) {
    const auto& wb = s.image(t[1]);
    const int left = s.image(t[0]).back();
    const int right = s.image(t[2]).front();
    std::vector<Triple> word;
    if (wb.size() == 1) {
      word.push_back({left, wb[0], right});
      return word;
    }
    word.push_back({left, wb[0], wb[1]});
    for (std::size_t i = 0; i + 2 < wb.size(); ++i)
      word.push_back({wb[i], wb[i + 1], wb[i + 2]});
    word.push_back({wb[wb.size() - 2], wb.back(), right});
    return word;
  };
  // monotone closure under the image rule
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<Triple> found = triples;
    for (const Triple& t : triples)
      for (const Triple& u : image_of(t))
        if (found.insert(u).second) changed = true;
    triples = std::move(found);
  }

  TripleSubstitution out;
  out.triples.assign(triples.begin(), triples.end());  // set order = lex order
  std::map<Triple, int> index;
  for (std::size_t i = 0; i < out.triples.size(); ++i)
    index[out.triples[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  std::vector<std::vector<int>> images;
  for (const Triple& t : out.triples) {
    names.push_back("[" + s.letter_name(t[0]) + "," + s.letter_name(t[1]) + "," +
                    s.letter_name(t[2]) + "]");
    std::vector<int> word;
    for (const Triple& u : image_of(t)) {
      auto it = index.find(u);
      if (it == index.end())
        throw Error("invalid-substitution",
                    "triple closure produced a letter outside the closed set");
      word.push_back(it->second);
    }
    images.push_back(std::move(word));
  }
  for (int b = 0; b < s.alphabet_size(); ++b)
    if (s.image(b).size() == 1) out.degenerate_images = true;
  out.sub = Substitution(std::move(names), std::move(images));
  return out;
}

std::vector<int> fixed_point_window(const Substitution& s, int seed, int length) {
  if (seed < 0 || seed >= s.alphabet_size())
    throw Error("argument", "seed letter out of range");
  if (length < 0) throw Error("argument", "window length must be >= 0");
  if (length == 0) return {};
  Substitution sub = s;
  if (s.image(seed).front() != seed) {
    // look for a power whose first-letter map fixes the seed
    int k = -1;
    int x = seed;
    for (int step = 1; step <= s.alphabet_size(); ++step) {
      x = s.image(x).front();
      if (x == seed) {
        k = step;
        break;
      }
    }
    if (k < 0)
      throw Error("seed", "no substitution power starts the image of '" +
                              s.letter_name(seed) + "' with itself");
    sub = power(s, k);
  }
  std::vector<int> word{seed};
  while (static_cast<int>(word.size()) < length) {
    std::vector<int> next;
    next.reserve(word.size() * 2);
    for (int a : word) {
      next.insert(next.end(), sub.image(a).begin(), sub.image(a).end());
      if (static_cast<int>(next.size()) >= length) break;
    }
    if (next.size() <= word.size())
      throw Error("seed", "fixed point does not grow past " +
                              std::to_string(word.size()) + " letters");
    word = std::move(next);
  }
  word.resize(length);
  return word;
}

ToeplitzReport toeplitz_window_check(const std::vector<int>& sequence,
                                     int period_bound) {
  const int len = static_cast<int>(sequence.size());
  if (len < 2 * period_bound)
    throw Error("argument", "window must be at least twice the period bound");
  ToeplitzReport report;
  report.period_bound = period_bound;
  report.least_period.assign(len, -1);
  for (int m = 0; m < len; ++m) {
    for (int p = 1; p <= period_bound; ++p) {
      bool ok = true;
      for (int i = m + p; i < len && ok; i += p) ok = sequence[i] == sequence[m];
      for (int i = m - p; i >= 0 && ok; i -= p) ok = sequence[i] == sequence[m];
      if (ok) {
        report.least_period[m] = p;
        break;
      }
    }
  }
  report.all_periodic =
      std::all_of(report.least_period.begin(), report.least_period.end(),
                  [](int p) { return p > 0; });
  for (int p = 1; p <= period_bound; ++p) {
    bool global = true;
    for (int m = 0; m + p < len && global; ++m)
      global = sequence[m] == sequence[m + p];
    if (global) {
      report.global_period = p;
      break;
    }
  }
  return report;
}

}  // namespace adic
