#include "beauville/collections.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

namespace beauville {
namespace {

LineBundleClass power(const LineBundleClass& l, int k) {
  return {k * l.a, k * l.b, static_cast<long long>(k) * l.chi, l.basis};
}

Bidegree bidegree_of(const LineBundleClass& l) { return {l.a, l.b}; }

int family_rank(Family f) { return static_cast<int>(f); }

// Preference for the base spire of a helix: type I before II..., c >= 0
// before c < 0, then small |c|.
std::tuple<int, int, int> base_key(const Collection& c) {
  const auto type = numerical_type(c);
  if (!type) return {4, 0, 0};
  return {family_rank(type->family), type->c < 0 ? 1 : 0, std::abs(type->c)};
}

int parse_int(std::string_view text, std::size_t offset) {
  int value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(offset, "expected an integer but found '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

BidegreeBox BidegreeBox::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError(0, "expected 'imin:imax,jmin:jmax'");
  auto interval = [&](std::string_view part, std::size_t offset) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw ParseError(offset, "expected 'min:max'");
    return std::pair{parse_int(part.substr(0, colon), offset),
                     parse_int(part.substr(colon + 1), offset + colon + 1)};
  };
  const auto [i_min, i_max] = interval(text.substr(0, comma), 0);
  const auto [j_min, j_max] = interval(text.substr(comma + 1), comma + 1);
  return {i_min, i_max, j_min, j_max};
}

std::string BidegreeBox::to_string() const {
  return std::to_string(i_min) + ":" + std::to_string(i_max) + "," + std::to_string(j_min) + ":" +
         std::to_string(j_max);
}

AcyclicSet acyclic_set(const Surface& surface, Bidegree bidegree) {
  const std::set<Character> support = surface.kunneth_poly(bidegree.bundle()).character_support();
  AcyclicSet out{bidegree, {}};
  for (const Character chi : Character::all()) {
    if (support.count(chi) == 0) out.characters.insert(chi);
  }
  return out;
}

int full_support_threshold(const CurveAction& curve, const FaultPlan& faults) {
  constexpr int kSearchLimit = 200;
  int run = 0;
  for (int n = 2; n < kSearchLimit; ++n) {
    const auto support = k_cohomology_poly(curve, n, faults).degree_part(0).character_support();
    run = support.size() == 25 ? run + 1 : 0;
    if (run == kGroupExponent) return n - kGroupExponent + 1;
  }
  throw std::logic_error("no full-support degree found for curve " + curve.name());
}

AcyclicSupport AcyclicSupport::compute(const Surface& surface, const BidegreeBox& box) {
  const int first = full_support_threshold(surface.first_curve(), surface.faults());
  const int second = full_support_threshold(surface.second_curve(), surface.faults());
  // Acyclic sets can only be non-empty on i = 1 with 3 - second <= j < second,
  // or on j = 1 with 3 - first <= i < first.
  const BidegreeBox needed{3 - first, first - 1, 3 - second, second - 1};
  const bool covered = box.contains({needed.i_min, 1}) && box.contains({needed.i_max, 1}) &&
                       box.contains({1, needed.j_min}) && box.contains({1, needed.j_max});
  if (!covered) {
    throw RangeTooSmall("bidegree range " + box.to_string() + " cannot certify completeness; it must contain i in [" +
                        std::to_string(needed.i_min) + "," + std::to_string(needed.i_max) + "] on j = 1 and j in [" +
                        std::to_string(needed.j_min) + "," + std::to_string(needed.j_max) + "] on i = 1");
  }
  AcyclicSupport out;
  for (int i = box.i_min; i <= box.i_max; ++i) {
    for (int j = box.j_min; j <= box.j_max; ++j) {
      if (euler_char(LineBundleClass::K(i, j)) != 0) continue;
      AcyclicSet set = acyclic_set(surface, {i, j});
      if (!set.characters.empty()) out.sets_.emplace(set.bidegree, std::move(set.characters));
    }
  }
  return out;
}

bool AcyclicSupport::contains(Bidegree d, Character chi) const {
  const auto it = sets_.find(d);
  return it != sets_.end() && it->second.count(chi) != 0;
}

const std::set<Character>& AcyclicSupport::at(Bidegree d) const {
  static const std::set<Character> kEmpty;
  const auto it = sets_.find(d);
  return it == sets_.end() ? kEmpty : it->second;
}

std::size_t AcyclicSupport::bundle_count() const {
  std::size_t n = 0;
  for (const auto& entry : sets_) n += entry.second.size();
  return n;
}

std::vector<LineBundleClass> enumerate_acyclic_bundles(const Surface& surface, const BidegreeBox& box) {
  const AcyclicSupport support = AcyclicSupport::compute(surface, box);
  std::vector<LineBundleClass> out;
  for (const auto& [d, chars] : support.sets()) {
    for (const Character a : chars) out.push_back(LineBundleClass::K(d.i, d.j, -a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string NumericalType::label() const {
  static constexpr const char* kNames[] = {"I", "II", "III", "IV"};
  return std::string(kNames[family_rank(family)]) + "_" + std::to_string(c);
}

std::optional<NumericalType> NumericalType::parse(std::string_view label) {
  const auto underscore = label.find('_');
  if (underscore == std::string_view::npos) return std::nullopt;
  const std::string_view name = label.substr(0, underscore);
  NumericalType out;
  if (name == "I") out.family = Family::I;
  else if (name == "II") out.family = Family::II;
  else if (name == "III") out.family = Family::III;
  else if (name == "IV") out.family = Family::IV;
  else return std::nullopt;
  try {
    out.c = parse_int(label.substr(underscore + 1), underscore + 1);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  return out;
}

std::array<Bidegree, 3> type_bidegrees(NumericalType type) {
  const int c = type.c;
  switch (type.family) {
    case Family::I: return {{{-1, 0}, {c - 1, -1}, {c - 2, -1}}};
    case Family::II: return {{{0, -1}, {-1, c - 1}, {-1, c - 2}}};
    case Family::III: return {{{-1, c}, {-1, c - 1}, {-2, -1}}};
    case Family::IV: return {{{c, -1}, {c - 1, -1}, {-1, -2}}};
  }
  return {};
}

Collection Collection::from_k(std::array<Bidegree, 3> bidegrees, std::array<Character, 3> characters) {
  Collection out;
  out.entries[0] = LineBundleClass::K(0, 0);
  for (std::size_t k = 0; k < 3; ++k) {
    out.entries[k + 1] = LineBundleClass::K(bidegrees[k].i, bidegrees[k].j, characters[k]);
  }
  return out;
}

std::string Collection::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += (e.a == 0 && e.b == 0 && e.chi.is_zero()) ? std::string("O") : e.to_string();
  }
  return out;
}

Collection normalize(const Surface& surface, const Collection& collection) {
  const LineBundleClass shift = surface.to_K_basis(collection.entries[0]).dual();
  Collection out;
  for (std::size_t k = 0; k < 4; ++k) out.entries[k] = surface.to_K_basis(collection.entries[k]) * shift;
  return out;
}

bool is_numerically_exceptional(const Collection& collection) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& ei = collection.entries[i];
      const auto& ej = collection.entries[j];
      if (euler_char(LineBundleClass::O(ei.a - ej.a, ei.b - ej.b)) != 0) return false;
    }
  }
  return true;
}

std::optional<NumericalType> numerical_type(const Collection& collection) {
  if (!is_numerically_exceptional(collection)) return std::nullopt;
  const Bidegree origin = bidegree_of(collection.entries[0]);
  const std::array<Bidegree, 3> d = {bidegree_of(collection.entries[1]) - origin,
                                     bidegree_of(collection.entries[2]) - origin,
                                     bidegree_of(collection.entries[3]) - origin};
  // I before III and II before IV, so I_0 = III_0 reads I_0 and II_0 = IV_0 reads II_0.
  const std::array<NumericalType, 4> candidates = {{
      {Family::I, d[1].i + 1},
      {Family::II, d[1].j + 1},
      {Family::III, d[0].j},
      {Family::IV, d[0].i},
  }};
  for (const NumericalType& t : candidates) {
    if (type_bidegrees(t) == d) return t;
  }
  return std::nullopt;
}

std::array<MembershipWitness, 6> membership_witnesses(const Surface& surface, const Collection& collection) {
  const Collection n = normalize(surface, collection);
  const std::array<Bidegree, 3> d = {bidegree_of(n.entries[1]), bidegree_of(n.entries[2]),
                                     bidegree_of(n.entries[3])};
  const std::array<Character, 3> chi = {n.entries[1].chi, n.entries[2].chi, n.entries[3].chi};
  struct Condition {
    const char* text;
    Bidegree bidegree;
    Character character;
  };
  const std::array<Condition, 6> conditions = {{
      {"chi1 in A(L1^*)", -d[0], chi[0]},
      {"chi2 in A(L2^*)", -d[1], chi[1]},
      {"chi3 in A(L3^*)", -d[2], chi[2]},
      {"chi2-chi1 in A(L1*L2^*)", d[0] - d[1], chi[1] - chi[0]},
      {"chi3-chi1 in A(L1*L3^*)", d[0] - d[2], chi[2] - chi[0]},
      {"chi3-chi2 in A(L2*L3^*)", d[1] - d[2], chi[2] - chi[1]},
  }};
  std::array<MembershipWitness, 6> out;
  for (std::size_t k = 0; k < conditions.size(); ++k) {
    auto& w = out[k];
    w.condition = conditions[k].text;
    w.bidegree = conditions[k].bidegree;
    w.character = conditions[k].character;
    w.acyclic_set = acyclic_set(surface, w.bidegree).characters;
    w.holds = w.acyclic_set.count(w.character) != 0;
  }
  return out;
}

std::array<VanishingWitness, 6> vanishing_witnesses(const Surface& surface, const Collection& collection) {
  const Collection n = normalize(surface, collection);
  std::array<VanishingWitness, 6> out;
  std::size_t k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      auto& w = out[k++];
      w.from = j;
      w.to = i;
      w.bundle = n.entries[static_cast<std::size_t>(i)] * n.entries[static_cast<std::size_t>(j)].dual();
      w.ranks = surface.cohomology(w.bundle);
    }
  }
  return out;
}

bool is_exceptional(const Surface& surface, const Collection& collection) {
  const auto witnesses = membership_witnesses(surface, collection);
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.holds; });
}

bool is_exceptional_direct(const Surface& surface, const Collection& collection) {
  const auto witnesses = vanishing_witnesses(surface, collection);
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.ranks.is_zero(); });
}

nlohmann::json certificate(const Surface& surface, const Collection& collection) {
  const Collection n = normalize(surface, collection);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : n.entries) entries.push_back(e.to_string());
  const auto type = numerical_type(n);

  nlohmann::json membership = nlohmann::json::array();
  bool all_members = true;
  for (const auto& w : membership_witnesses(surface, n)) {
    nlohmann::json set = nlohmann::json::array();
    for (const Character chi : w.acyclic_set) set.push_back(chi.to_string());
    membership.push_back({{"condition", w.condition},
                          {"bundle", w.bidegree.bundle().to_string()},
                          {"character", w.character.to_string()},
                          {"acyclic_set", std::move(set)},
                          {"holds", w.holds}});
    all_members = all_members && w.holds;
  }

  nlohmann::json oracle = nlohmann::json::array();
  bool all_vanish = true;
  for (const auto& w : vanishing_witnesses(surface, n)) {
    oracle.push_back({{"ext", "Ext^*(E" + std::to_string(w.from) + ",E" + std::to_string(w.to) + ")"},
                      {"bundle", w.bundle.to_string()},
                      {"h0", w.ranks.h0},
                      {"h1", w.ranks.h1},
                      {"h2", w.ranks.h2}});
    all_vanish = all_vanish && w.ranks.is_zero();
  }

  return {{"entries", std::move(entries)},
          {"numerical_type", type ? nlohmann::json(type->label()) : nlohmann::json(nullptr)},
          {"membership", std::move(membership)},
          {"direct_oracle", std::move(oracle)},
          {"exceptional_by_membership", all_members},
          {"exceptional_by_oracle", all_vanish}};
}

std::vector<Collection> lifts(const Surface& surface, const AcyclicSupport& support,
                              const std::array<Bidegree, 3>& bidegrees) {
  (void)surface;
  const auto& [d1, d2, d3] = bidegrees;
  std::vector<Collection> out;
  for (const Character c1 : support.at(-d1)) {
    for (const Character c2 : support.at(-d2)) {
      if (!support.contains(d1 - d2, c2 - c1)) continue;
      for (const Character c3 : support.at(-d3)) {
        if (support.contains(d1 - d3, c3 - c1) && support.contains(d2 - d3, c3 - c2)) {
          out.push_back(Collection::from_k(bidegrees, {c1, c2, c3}));
        }
      }
    }
  }
  return out;
}

std::vector<Collection> search_collections(const Surface& surface, const SearchOptions& options) {
  const AcyclicSupport support = AcyclicSupport::compute(surface, options.box);
  // L_k^* must have a non-empty acyclic set, so L_k ranges over the negated support.
  std::vector<Bidegree> candidates;
  for (const auto& entry : support.sets()) candidates.push_back(-entry.first);
  std::sort(candidates.begin(), candidates.end());

  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<Collection>> partial(threads);
  auto work = [&](unsigned worker) {
    for (std::size_t a = worker; a < candidates.size(); a += threads) {
      const Bidegree d1 = candidates[a];
      for (const Bidegree d2 : candidates) {
        if (!support.contains(d1 - d2)) continue;
        for (const Bidegree d3 : candidates) {
          if (!support.contains(d1 - d3) || !support.contains(d2 - d3)) continue;
          for (auto& c : lifts(surface, support, {d1, d2, d3})) partial[worker].push_back(std::move(c));
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<Collection> out;
  for (auto& part : partial) {
    for (auto& c : part) out.push_back(normalize(surface, c));
  }
  auto key = [](const Collection& c) {
    const auto type = numerical_type(c);
    return std::tuple{type.has_value() ? 0 : 1, type.value_or(NumericalType{}), c};
  };
  std::sort(out.begin(), out.end(), [&](const Collection& x, const Collection& y) { return key(x) < key(y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Collection successor(const Surface& surface, const Collection& collection) {
  const Collection n = normalize(surface, collection);
  const LineBundleClass anticanonical = surface.canonical_class(Basis::K).dual();
  Collection next;
  next.entries = {n.entries[1], n.entries[2], n.entries[3], n.entries[0] * anticanonical};
  return normalize(surface, next);
}

Helix::Helix(const Surface& surface, const Collection& base)
    : base_(normalize(surface, base)), omega_(surface.canonical_class(Basis::K)) {
  Collection spire = base_;
  do {
    spires_.push_back(spire);
    spire = successor(surface, spire);
  } while (spire != base_ && spires_.size() < static_cast<std::size_t>(kPeriod));
}

LineBundleClass Helix::element(int n) const {
  // n = i + 4m with 0 <= i < 4, and E_{i+4m} = E_i (x) omega^{-m}.
  const int m = (n >= 0 ? n : n - (kPeriod - 1)) / kPeriod;
  const int i = n - kPeriod * m;
  return base_.entries[static_cast<std::size_t>(i)] * power(omega_, -m);
}

std::vector<std::string> Helix::spire_sequence() const {
  std::vector<std::string> out;
  for (const auto& s : spires_) {
    const auto type = numerical_type(s);
    out.push_back(type ? type->label() : "?");
  }
  out.push_back(out.front());
  return out;
}

bool Helix::contains_spire(const Collection& normalized) const {
  return std::find(spires_.begin(), spires_.end(), normalized) != spires_.end();
}

std::vector<Helix> group_into_helices(const Surface& surface, std::span<const Collection> collections) {
  std::vector<Collection> pending;
  for (const auto& c : collections) {
    if (!is_exceptional(surface, c)) {
      throw std::invalid_argument("collection is not exceptional: " + c.to_string());
    }
    pending.push_back(normalize(surface, c));
  }
  std::vector<Helix> out;
  for (const auto& c : pending) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Helix& h) { return h.contains_spire(c); });
    if (seen) continue;
    const Helix orbit(surface, c);
    const auto& spires = orbit.spires();
    const auto best = std::min_element(spires.begin(), spires.end(), [](const Collection& x, const Collection& y) {
      return std::tuple{base_key(x), x} < std::tuple{base_key(y), y};
    });
    out.emplace_back(surface, *best);
  }
  std::sort(out.begin(), out.end(), [](const Helix& x, const Helix& y) {
    const auto kx = std::tuple{-static_cast<long>(x.spires().size()), base_key(x.base()), x.base()};
    const auto ky = std::tuple{-static_cast<long>(y.spires().size()), base_key(y.base()), y.base()};
    return kx < ky;
  });
  return out;
}

CohomologyRanks ext_dims(const Surface& surface, const Helix& helix, int a, int b) {
  return surface.cohomology(helix.element(b) * helix.element(a).dual());
}

ExtMatrix ext_matrix(const Surface& surface, const Helix& helix) {
  ExtMatrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ext_dims(surface, helix, i, i + j);
    }
  }
  return m;
}

ExtMatrix ext_table(const Surface& surface, const Collection& collection) {
  const Collection n = normalize(surface, collection);
  ExtMatrix m{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = surface.cohomology(n.entries[j] * n.entries[i].dual());
  }
  return m;
}

std::optional<int> chain_delta(const Surface& surface, const Helix& helix, std::span<const int> chain) {
  if (chain.size() < 2 || chain.back() - chain.front() != Helix::kPeriod) {
    throw std::invalid_argument("chain must run from a0 to a0 + 4");
  }
  int total = 0;
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    if (chain[t + 1] <= chain[t]) throw std::invalid_argument("chain must be strictly increasing");
    const int e = ext_dims(surface, helix, chain[t], chain[t + 1]).lowest_degree();
    if (e < 0) return std::nullopt;
    total += e;
  }
  const int steps = static_cast<int>(chain.size()) - 1;
  return total + 1 - steps;
}

int anticanonical_height(const Surface& surface, const Helix& helix) {
  std::optional<int> best;
  for (int a0 = 0; a0 < Helix::kPeriod; ++a0) {
    // Each subset of the three interior points a0+1..a0+3 gives one chain.
    for (int mask = 0; mask < (1 << (Helix::kPeriod - 1)); ++mask) {
      std::vector<int> chain = {a0};
      for (int k = 1; k < Helix::kPeriod; ++k) {
        if (mask & (1 << (k - 1))) chain.push_back(a0 + k);
      }
      chain.push_back(a0 + Helix::kPeriod);
      const auto delta = chain_delta(surface, helix, chain);
      if (delta && (!best || *delta < *best)) best = delta;
    }
  }
  if (!best) throw std::logic_error("helix has no chain with non-vanishing Ext");
  return *best;
}

bool has_orthogonal_neighbours(const Surface& surface, const Helix& helix) {
  for (int n = 0; n < Helix::kPeriod; ++n) {
    const bool forward = ext_dims(surface, helix, n, n + 1).is_zero();
    const bool backward = surface.cohomology(helix.element(n) * helix.element(n + 1).dual()).is_zero();
    if (forward && backward) return true;
  }
  return false;
}

QuasiPhantomReport quasi_phantom_report(const Surface& surface, const Helix& helix) {
  constexpr int kSurfaceDimension = 2;
  QuasiPhantomReport r;
  r.anticanonical_height = anticanonical_height(surface, helix);
  r.k0_torsion_order = static_cast<int>(Character::all().size());
  // K_0(S) = Z^2 (+) Pic(S) and Pic(S) / tors has rank 2 (the hyperbolic plane
  // spanned by O(1,0), O(0,1)).
  const long long gram_det = intersection(LineBundleClass::O(1, 0), LineBundleClass::O(1, 0)) *
                                 intersection(LineBundleClass::O(0, 1), LineBundleClass::O(0, 1)) -
                             intersection(LineBundleClass::O(1, 0), LineBundleClass::O(0, 1)) *
                                 intersection(LineBundleClass::O(0, 1), LineBundleClass::O(1, 0));
  const int pic_rank = gram_det != 0 ? 2 : 0;
  r.k0_free_rank = 2 + pic_rank;
  r.hochschild_homology_dim = kTotalBettiNumber - Helix::kPeriod;
  r.hh0_isomorphism = r.anticanonical_height + (kSurfaceDimension - 2) >= 0;
  r.hh0_dim = r.hh0_isomorphism ? surface.hochschild_cohomology()[0] : -1;

  const int free_left = r.k0_free_rank - Helix::kPeriod;
  std::string k0 = free_left > 0 ? "Z^" + std::to_string(free_left) + " + " : "";
  k0 += r.k0_torsion_order == 25 ? "(Z/5)^2" : "torsion of order " + std::to_string(r.k0_torsion_order);

  r.lines = {
      {"anticanonical height h", std::to_string(r.anticanonical_height), true, "minimum over chains of the helix"},
      {"Pic(S)_tors", "(Z/5)^2, order " + std::to_string(r.k0_torsion_order), false,
       "H_1(S, Z) = (Z/5)^2; equals the character group of G"},
      {"K_0(S)", "Z^" + std::to_string(r.k0_free_rank) + " + (Z/5)^2", false,
       "K_0 = Z^2 + Pic for CH_0 = Z (Riemann-Roch without denominators, Bloch conjecture)"},
      {"K_0(A)", k0, true, "K_0(S) minus the Z^4 spanned by the 4 exceptional objects"},
      {"HH_*(A)", std::to_string(r.hochschild_homology_dim), true,
       "additivity: dim H^*(S) = " + std::to_string(kTotalBettiNumber) + " minus helix period " +
           std::to_string(Helix::kPeriod)},
      {"HH^0(A)", r.hh0_isomorphism ? (r.hh0_dim == 1 ? std::string("C") : "C^" + std::to_string(r.hh0_dim)) : "unknown",
       true, "HH^k(S) -> HH^k(A) is an isomorphism for k <= h + dim S - 2"},
  };
  return r;
}

bool lattice_span_check(const Surface& surface, std::span<const Collection> collections) {
  for (const auto& c : collections) {
    for (const auto& e : c.entries) {
      if (!surface.to_K_basis(e).chi.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace beauville
