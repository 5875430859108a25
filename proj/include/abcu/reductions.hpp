#ifndef ABCU_REDUCTIONS_HPP
#define ABCU_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "abcu/model.hpp"
#include "abcu/rules.hpp"

namespace abcu {

using Triple = std::array<int, 3>;

/// Exact cover by 3-sets over the universe {0, .., universe-1}.
struct X3CInstance {
  int universe = 0;  // 3q
  std::vector<Triple> sets;

  int q() const noexcept { return universe / 3; }
};

/// One-in-three positive 3SAT over elements {0, .., elements-1}.
struct OneInThreeInstance {
  int elements = 0;
  std::vector<Triple> clauses;
};

struct GadgetOutput {
  PartialProfile profile;
  CandidateSet target;
  int k = 0;
  ScoringFunction rule = ScoringFunction::av();
};

namespace detail {

inline void require_triple(const Triple& t, int range, const char* what) {
  for (int i = 0; i < 3; ++i) {
    if (t[i] < 0 || t[i] >= range) throw Error(ErrorKind::invalid_argument, std::string(what) + " element out of range");
    for (int j = 0; j < i; ++j) {
      if (t[i] == t[j]) throw Error(ErrorKind::invalid_argument, std::string(what) + " has a repeated element");
    }
  }
}

inline bool contains(const Triple& t, int x) { return t[0] == x || t[1] == x || t[2] == x; }

} // namespace detail

inline void validate(const X3CInstance& inst) {
  if (inst.universe < 3 || inst.universe % 3 != 0)
    throw Error(ErrorKind::invalid_argument, "X3C universe size must be a positive multiple of 3");
  for (const auto& e : inst.sets) detail::require_triple(e, inst.universe, "X3C set");
}

inline void validate(const OneInThreeInstance& inst) {
  if (inst.elements < 0) throw Error(ErrorKind::invalid_argument, "negative element count");
  for (const auto& s : inst.clauses) detail::require_triple(s, inst.elements, "clause");
}

/// CC, k = 2, 3VA: one candidate per clause plus w1, w2. Each element voter
/// approves the clauses avoiding it and chooses between w1 and w2; six fixed
/// voters calibrate the scores. {w1, w2} is possible iff a one-in-three
/// assignment exists.
inline GadgetOutput build_cc_3va(const OneInThreeInstance& inst) {
  validate(inst);
  const int clauses = static_cast<int>(inst.clauses.size());
  if (clauses + 2 > kMaxCandidates) throw Error(ErrorKind::too_large, "too many clauses for a 64-candidate profile");
  std::vector<std::string> names;
  for (int i = 0; i < clauses; ++i) names.push_back("S" + std::to_string(i + 1));
  names.emplace_back("w1");
  names.emplace_back("w2");
  const int m = clauses + 2;
  const CandidateId w1 = clauses;
  const CandidateId w2 = clauses + 1;
  const CandidateSet all_clauses = CandidateSet::all(clauses);

  PartialProfile p{CandidateRegistry(std::move(names)), {}};
  for (int x = 0; x < inst.elements; ++x) {
    CandidateSet hit;
    for (int i = 0; i < clauses; ++i) {
      if (detail::contains(inst.clauses[static_cast<std::size_t>(i)], x)) hit.insert(i);
    }
    p.ballots.push_back(PartialBallot::make(m, all_clauses - hit, CandidateSet{w1, w2}, hit));
  }
  for (int i = 0; i < 3; ++i) p.ballots.push_back(PartialBallot::complete(m, all_clauses));
  for (int i = 0; i < 2; ++i) p.ballots.push_back(PartialBallot::complete(m, CandidateSet{w1}));
  p.ballots.push_back(PartialBallot::complete(m, CandidateSet{w2}));
  return {std::move(p), CandidateSet{w1, w2}, 2, ScoringFunction::cc()};
}

/// Thiele rule with w(1) = 1, w(2) = 1 + x, k = 2, linear model: one voter per
/// set ranking the set's elements above c, plus a fixed block chosen by
/// whether x <= 1. {c, d} is possible iff an exact cover exists.
inline GadgetOutput build_linear_x3c(const X3CInstance& inst, const Score& x) {
  validate(inst);
  if (x <= 0) throw Error(ErrorKind::invalid_argument, "x must be positive");
  const int q = inst.q();
  const int u = inst.universe;
  if (u + 3 > kMaxCandidates) throw Error(ErrorKind::too_large, "universe too large for a 64-candidate profile");

  std::vector<std::string> names;
  for (int i = 0; i < u; ++i) names.push_back("u" + std::to_string(i + 1));
  names.emplace_back("c");
  names.emplace_back("d");
  names.emplace_back("z");
  const int m = u + 3;
  const CandidateId c = u, d = u + 1, z = u + 2;
  const CandidateSet universe = CandidateSet::all(u);

  PartialProfile p{CandidateRegistry(std::move(names)), {}};
  for (const auto& e : inst.sets) {
    CandidateSet middle{e[0], e[1], e[2], c};
    std::vector<std::pair<CandidateId, CandidateId>> chain;
    std::vector<CandidateId> order = CandidateSet{e[0], e[1], e[2]}.ids();
    order.push_back(c);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) chain.emplace_back(order[i], order[i + 1]);
    p.ballots.push_back(PartialBallot::make(m, CandidateSet{}, middle, CandidateSet::all(m) - middle, chain));
  }

  auto add = [&](std::int64_t count, CandidateSet approved) {
    for (std::int64_t i = 0; i < count; ++i) p.ballots.push_back(PartialBallot::complete(m, approved));
  };
  if (x <= 1) {
    if (q % 2 != 0) throw Error(ErrorKind::divisibility_violated, "q must be even when x <= 1");
    const int half = q / 2;
    add(half, CandidateSet{z});
    add(half, universe | CandidateSet{z});
    add(half, CandidateSet{d});
    add(half, universe | CandidateSet{d});
  } else {
    const Score ratio = Score(q) / x;
    if (ratio.denominator() != 1) throw Error(ErrorKind::divisibility_violated, "q / x must be an integer when x > 1");
    add(ratio.numerator(), CandidateSet{d, z});
    add(ratio.numerator(), universe);
  }
  add(1, CandidateSet{c, d, z});

  auto rule = ScoringFunction::thiele(WeightFunction::table({Score(0), Score(1), Score(1) + x}));
  return {std::move(p), CandidateSet{c, d}, 2, std::move(rule)};
}

/// Every voter additionally approves t fresh candidates in its top.
inline PartialProfile pad_profile(const PartialProfile& p, int t) {
  if (t < 0) throw Error(ErrorKind::invalid_argument, "padding must be non-negative");
  const int m = p.candidates();
  if (m + t > kMaxCandidates) throw Error(ErrorKind::too_many_candidates, "padding exceeds 64 candidates");
  std::vector<std::string> names = p.registry.names();
  for (int i = 1; i <= t; ++i) {
    std::string name = "d" + std::to_string(i);
    while (p.registry.find(name)) name += "'";
    names.push_back(name);
  }
  const int padded_m = m + t;
  const CandidateSet fresh = CandidateSet::all(padded_m) - CandidateSet::all(m);
  PartialProfile out{CandidateRegistry(std::move(names)), {}};
  for (const auto& b : p.ballots) {
    out.ballots.push_back(PartialBallot::make(padded_m, b.top() | fresh, b.middle(), b.bottom(), b.pairs()));
  }
  return out;
}

/// The padded candidates appended by pad_profile.
inline CandidateSet padding_set(int original_m, int t) {
  return CandidateSet::all(original_m + t) - CandidateSet::all(original_m);
}

/// w1(x) == q * (w2(x + t) - w2(t)) for every x in 0..k.
inline bool verify_weight_relation(const WeightFunction& w1, const WeightFunction& w2, const Score& q, int t, int k) {
  if (q <= 0 || t < 0 || k < 0) throw Error(ErrorKind::invalid_argument, "need q > 0, t >= 0, k >= 0");
  const Score base = w2(t);
  for (int x = 0; x <= k; ++x) {
    if (w1(x) != q * (w2(x + t) - base)) return false;
  }
  return true;
}

inline constexpr int kMaxSourceSize = 20;

inline bool solve_x3c_brute(const X3CInstance& inst) {
  validate(inst);
  if (inst.sets.size() > static_cast<std::size_t>(kMaxSourceSize))
    throw Error(ErrorKind::too_large, "more than 20 sets");
  const std::size_t count = inst.sets.size();
  const std::uint64_t full = (std::uint64_t{1} << inst.universe) - 1;
  std::vector<std::uint64_t> masks;
  for (const auto& e : inst.sets) masks.push_back((std::uint64_t{1} << e[0]) | (std::uint64_t{1} << e[1]) | (std::uint64_t{1} << e[2]));
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << count); ++pick) {
    std::uint64_t covered = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < count && disjoint; ++i) {
      if (!((pick >> i) & 1U)) continue;
      disjoint = (covered & masks[i]) == 0;
      covered |= masks[i];
    }
    if (disjoint && covered == full) return true;
  }
  return false;
}

inline bool solve_one_in_three_brute(const OneInThreeInstance& inst) {
  validate(inst);
  if (inst.elements > kMaxSourceSize) throw Error(ErrorKind::too_large, "more than 20 elements");
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << inst.elements); ++b) {
    bool ok = true;
    for (const auto& s : inst.clauses) {
      const int hits = static_cast<int>(((b >> s[0]) & 1U) + ((b >> s[1]) & 1U) + ((b >> s[2]) & 1U));
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace detail {

// First number is the universe/element count; then triples, 1-based.
// '#' starts a comment.
inline std::pair<int, std::vector<Triple>> parse_triples(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::vector<long> numbers;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
      try {
        std::size_t used = 0;
        numbers.push_back(std::stol(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorKind::syntax, "instance file: not an integer: '" + token + "'");
      }
    }
  }
  if (numbers.empty()) throw Error(ErrorKind::syntax, "instance file is empty");
  if ((numbers.size() - 1) % 3 != 0) throw Error(ErrorKind::syntax, "instance file: sets must have exactly 3 elements");
  std::vector<Triple> triples;
  for (std::size_t i = 1; i < numbers.size(); i += 3) {
    triples.push_back({static_cast<int>(numbers[i] - 1), static_cast<int>(numbers[i + 1] - 1),
                       static_cast<int>(numbers[i + 2] - 1)});
  }
  return {static_cast<int>(numbers[0]), std::move(triples)};
}

inline std::string format_triples(int size, const std::vector<Triple>& triples) {
  std::string out = std::to_string(size) + "\n";
  for (const auto& t : triples)
    out += std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1) + "\n";
  return out;
}

} // namespace detail

inline X3CInstance parse_x3c(const std::string& text) {
  auto [size, triples] = detail::parse_triples(text);
  X3CInstance inst{size, std::move(triples)};
  validate(inst);
  return inst;
}

inline OneInThreeInstance parse_one_in_three(const std::string& text) {
  auto [size, triples] = detail::parse_triples(text);
  OneInThreeInstance inst{size, std::move(triples)};
  validate(inst);
  return inst;
}

inline std::string format_instance(const X3CInstance& inst) { return detail::format_triples(inst.universe, inst.sets); }
inline std::string format_instance(const OneInThreeInstance& inst) {
  return detail::format_triples(inst.elements, inst.clauses);
}

} // namespace abcu

#endif // ABCU_REDUCTIONS_HPP
