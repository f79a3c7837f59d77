#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "adic/labelling.hpp"
#include "adic/ordering.hpp"

namespace adic {

/// A substitution on a finite alphabet; every image is a non-empty word.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::vector<std::string> letters, std::vector<std::vector<int>> images);

  int alphabet_size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter_name(int a) const { return letters_[a]; }
  const std::vector<std::string>& letter_names() const { return letters_; }
  const std::vector<int>& image(int a) const { return images_[a]; }
  int letter(const std::string& name) const;  // throws on unknown name

  bool operator==(const Substitution&) const = default;

 private:
  std::vector<std::string> letters_;
  std::vector<std::vector<int>> images_;
};

Substitution power(const Substitution& s, int k);

/// M[a][b] = occurrences of a in the image of b.
std::vector<std::vector<long long>> substitution_matrix(const Substitution& s);

/// Some power of the incidence matrix is entrywise positive; the power is
/// bounded by (|A|-1)^2 + 1.
bool check_primitive(const Substitution& s);
/// First-letter and last-letter self-maps both stabilize to constants.
bool check_proper(const Substitution& s);
std::optional<int> constant_length(const Substitution& s);

/// The stationary ordered diagram of a substitution: levels >= 1 carry the
/// alphabet; level n >= 2 has one edge per (letter position) with the order
/// given by position; level 1 has exactly one root edge per letter.
OrderedBratteliDiagram diagram_from_substitution(const Substitution& s, int depth);

/// Group values per (range letter, position); positions are 1-based.
struct StationaryLabelling {
  FiniteGroup group;
  std::vector<std::vector<int>> values;  // [letter][position-1]
};

/// The stationary labelling as an edge labelling of the substitution diagram;
/// the root-level edges carry the identity.
Labelling stationary_edge_labelling(const Substitution& s,
                                    const StationaryLabelling& lab,
                                    const BratteliDiagram& d);

/// The substitution on A x G whose k-th letter of the image of (b,h) is
/// (a, h*label(b,k)) where a is the k-th letter of the image of b. Its
/// stationary diagram equals the skew product of the stationary diagram.
Substitution skew_substitution(const Substitution& s, const StationaryLabelling& lab);

struct TripleSubstitution {
  Substitution sub;                       // over the admissible triples
  std::vector<std::array<int, 3>> triples;  // letter index -> base triple
  bool degenerate_images = false;         // some base image had length 1
};

/// Admissible consecutive triples and the induced substitution: the image of
/// (a,b,c) runs through the image word of b with the last letter of the image
/// of a prepended as left context and the first letter of the image of c as
/// right context. The triple set is the least fixed point of seeding with
/// in-image triples and closing under the image rule.
TripleSubstitution triple_substitution(const Substitution& s);

/// First `length` letters of the one-sided fixed point grown from seed.
/// If the image of seed does not start with seed, the least power of the
/// substitution fixing the seed's first letter is used instead; throws
/// "seed" when none exists or the fixed point cannot reach the length.
std::vector<int> fixed_point_window(const Substitution& s, int seed, int length);

struct ToeplitzReport {
  int period_bound = 0;
  std::vector<int> least_period;  // per position; -1 = none within bound
  bool all_periodic = false;
  /// A single p <= bound makes the whole window periodic; such a window can
  /// never witness a Toeplitz sequence, which must be non-periodic.
  std::optional<int> global_period;
};

/// For each position m, the least p <= bound with seq[m] == seq[m + k*p] for
/// every k keeping the index inside the window.
ToeplitzReport toeplitz_window_check(const std::vector<int>& sequence,
                                     int period_bound);

}  // namespace adic
