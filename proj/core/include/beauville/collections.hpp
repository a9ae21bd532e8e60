#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beauville/surface.hpp"

namespace beauville {

/// A point (i, j) of the K-lattice, standing for K(i,j) with trivial character.
struct Bidegree {
  int i = 0;
  int j = 0;

  LineBundleClass bundle() const { return LineBundleClass::K(i, j); }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.i - b.i, a.j - b.j}; }
  friend Bidegree operator-(Bidegree a) { return {-a.i, -a.j}; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Closed rectangle [i_min, i_max] x [j_min, j_max] of bidegrees. Empty when
/// either interval is.
struct BidegreeBox {
  int i_min = -5;
  int i_max = 7;
  int j_min = -5;
  int j_max = 7;

  bool empty() const { return i_min > i_max || j_min > j_max; }
  bool contains(Bidegree d) const {
    return d.i >= i_min && d.i <= i_max && d.j >= j_min && d.j <= j_max;
  }
  /// "imin:imax,jmin:jmax"; throws ParseError.
  static BidegreeBox parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BidegreeBox&, const BidegreeBox&) = default;
};

/// Characters chi with chi not occurring in [H^*(T, K(i,j))]. K(i,j)(chi) is
/// acyclic iff -chi lies in the set.
struct AcyclicSet {
  Bidegree bidegree;
  std::set<Character> characters;
};

AcyclicSet acyclic_set(const Surface& surface, Bidegree bidegree);

/// Raised when a bidegree box cannot certify that every acyclic line bundle
/// lies inside it.
class RangeTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest n0 >= 2 such that H^0(curve, K(n)) contains all 25 characters for
/// every n >= n0. Multiplication by the invariant section X^5 embeds
/// H^0(K(n)) into H^0(K(n+5)), so five consecutive full degrees suffice;
/// by Serre duality H^1(K(n)) is then full for n <= 2 - n0.
int full_support_threshold(const CurveAction& curve, const FaultPlan& faults = {});

/// All non-empty acyclic sets of K(i,j), with a completeness guarantee:
/// outside the lattice lines i = 1 and j = 1 the Euler characteristic is
/// non-zero, and on those lines the full-support thresholds bound the other
/// coordinate.
class AcyclicSupport {
 public:
  /// Throws RangeTooSmall if `box` misses part of the certified region.
  static AcyclicSupport compute(const Surface& surface, const BidegreeBox& box = {});

  const std::map<Bidegree, std::set<Character>>& sets() const { return sets_; }
  bool contains(Bidegree d) const { return sets_.count(d) != 0; }
  bool contains(Bidegree d, Character chi) const;
  const std::set<Character>& at(Bidegree d) const;
  /// Number of acyclic line bundle classes K(i,j)(chi).
  std::size_t bundle_count() const;

 private:
  std::map<Bidegree, std::set<Character>> sets_;
};

/// Every acyclic L(chi) = K(i,j)(-a), a in A(K(i,j)), in canonical order.
std::vector<LineBundleClass> enumerate_acyclic_bundles(const Surface& surface, const BidegreeBox& box = {});

enum class Family { I, II, III, IV };

/// Numerical type X_c of a sequence O, L1, L2, L3. I_0 = III_0 and
/// II_0 = IV_0 are always reported as I_0 and II_0.
struct NumericalType {
  Family family = Family::I;
  int c = 0;

  /// "I_1", "IV_-1", "II_0".
  std::string label() const;
  static std::optional<NumericalType> parse(std::string_view label);

  friend bool operator==(const NumericalType&, const NumericalType&) = default;
  friend auto operator<=>(const NumericalType&, const NumericalType&) = default;
};

/// Bidegrees of L1, L2, L3 for type X_c with L0 = O.
std::array<Bidegree, 3> type_bidegrees(NumericalType type);

/// Four line bundles E0..E3.
struct Collection {
  std::array<LineBundleClass, 4> entries;

  /// K-basis collection O, K(d1)(chi1), K(d2)(chi2), K(d3)(chi3).
  static Collection from_k(std::array<Bidegree, 3> bidegrees, std::array<Character, 3> characters = {});

  /// "O, K(-1,0), K(0,-1), K(-1,-1)" with E0 written as O when trivial.
  std::string to_string() const;

  friend bool operator==(const Collection&, const Collection&) = default;
  friend auto operator<=>(const Collection&, const Collection&) = default;
};

/// Common twist removed (E0 becomes O) and entries written in the K-basis.
Collection normalize(const Surface& surface, const Collection& collection);

/// chi(E_j, E_i) = 0 for all j > i.
bool is_numerically_exceptional(const Collection& collection);

/// The type of the collection after removing the common twist, or nullopt
/// when it is not numerically exceptional.
std::optional<NumericalType> numerical_type(const Collection& collection);

/// One of the six membership conditions for O, L1(chi1), L2(chi2), L3(chi3).
struct MembershipWitness {
  std::string condition;    ///< e.g. "chi2-chi1 in A(L1*L2^)"
  Bidegree bidegree;        ///< the difference class K(i,j)
  Character character;      ///< the character that must lie in its acyclic set
  std::set<Character> acyclic_set;
  bool holds = false;
};

std::array<MembershipWitness, 6> membership_witnesses(const Surface& surface, const Collection& collection);

/// Ext^*(E_j, E_i) = H^*(E_i (x) E_j^*) for j > i.
struct VanishingWitness {
  int from = 0;  ///< j
  int to = 0;    ///< i
  LineBundleClass bundle;
  CohomologyRanks ranks;
};

std::array<VanishingWitness, 6> vanishing_witnesses(const Surface& surface, const Collection& collection);

/// Exceptionality through acyclic-set membership of the six characters.
bool is_exceptional(const Surface& surface, const Collection& collection);

/// Exceptionality checked directly: all backward Ext groups vanish.
bool is_exceptional_direct(const Surface& surface, const Collection& collection);

/// Entries, type, the six membership witnesses and the six cohomology
/// triples of the direct check, as JSON.
nlohmann::json certificate(const Surface& surface, const Collection& collection);

/// Every character assignment lifting O, K(d1), K(d2), K(d3) to an
/// exceptional collection.
std::vector<Collection> lifts(const Surface& surface, const AcyclicSupport& support,
                              const std::array<Bidegree, 3>& bidegrees);

struct SearchOptions {
  BidegreeBox box;
  unsigned threads = 1;
};

/// All length-4 exceptional collections of line bundles up to a common twist.
/// Every difference class must have a non-empty acyclic set, so only triples
/// drawn from the (negated) acyclic support are enumerated. Results are
/// normalized and sorted by (type, bidegrees, characters); the output does not
/// depend on the thread count.
std::vector<Collection> search_collections(const Surface& surface, const SearchOptions& options = {});

/// Spire (E1, E2, E3, E0 (x) omega^-1), renormalized.
Collection successor(const Surface& surface, const Collection& collection);

/// Helix of period 4 with E_{i-4k} = E_i (x) omega^k.
class Helix {
 public:
  static constexpr int kPeriod = 4;

  Helix(const Surface& surface, const Collection& base);

  const Collection& base() const { return base_; }
  /// E_n for any integer n.
  LineBundleClass element(int n) const;
  /// Normalized spires base, successor(base), ... up to the first repeat.
  const std::vector<Collection>& spires() const { return spires_; }
  /// Types of spires(), followed by the base type again to close the cycle.
  std::vector<std::string> spire_sequence() const;

  bool contains_spire(const Collection& normalized) const;

 private:
  Collection base_;
  LineBundleClass omega_;
  std::vector<Collection> spires_;
};

/// Partitions exceptional collections into helices. The base spire of each
/// helix minimizes (family, c < 0, |c|); helices are ordered by spire count
/// (descending), then base. Throws std::invalid_argument on a collection that
/// is not exceptional.
std::vector<Helix> group_into_helices(const Surface& surface, std::span<const Collection> collections);

/// sum_l dim Ext^l(E_a, E_b) q^l.
CohomologyRanks ext_dims(const Surface& surface, const Helix& helix, int a, int b);

using ExtMatrix = std::array<std::array<CohomologyRanks, 4>, 4>;

/// M_{i,j} = ext_dims(i, i + j), 0 <= i, j <= 3.
ExtMatrix ext_matrix(const Surface& surface, const Helix& helix);

/// Plain Ext table (Ext^*(E_i, E_j))_{i,j} of a single collection.
ExtMatrix ext_table(const Surface& surface, const Collection& collection);

/// delta = e(E_a0,E_a1) + ... + e(E_a(k-1),E_ak) + 1 - k, or nullopt if some
/// step has no non-vanishing Ext.
std::optional<int> chain_delta(const Surface& surface, const Helix& helix, std::span<const int> chain);

/// Minimum of chain_delta over a0 in 0..3 and all chains a0 < ... < a0 + 4.
int anticanonical_height(const Surface& surface, const Helix& helix);

/// True if some two consecutive helix elements have no Ext in either direction.
bool has_orthogonal_neighbours(const Surface& surface, const Helix& helix);

struct ReportLine {
  std::string quantity;
  std::string value;
  bool computed = false;  ///< false: quoted from a known theorem
  std::string basis;
};

/// K_0, Hochschild homology and HH^0 of the orthogonal complement A of a helix.
struct QuasiPhantomReport {
  int anticanonical_height = 0;
  int k0_torsion_order = 0;       ///< |Pic(S)_tors|
  int k0_free_rank = 0;           ///< rank of K_0(S)/tors
  int hochschild_homology_dim = 0;
  bool hh0_isomorphism = false;   ///< HH^0(S) -> HH^0(A) is an isomorphism
  long long hh0_dim = 0;
  std::vector<ReportLine> lines;
};

QuasiPhantomReport quasi_phantom_report(const Surface& surface, const Helix& helix);

/// Every entry lies in the subgroup generated by K(1,0) and K(0,1), torsion included.
bool lattice_span_check(const Surface& surface, std::span<const Collection> collections);

}  // namespace beauville
