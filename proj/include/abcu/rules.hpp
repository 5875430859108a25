#ifndef ABCU_RULES_HPP
#define ABCU_RULES_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "abcu/candidate_set.hpp"
#include "abcu/error.hpp"
#include "abcu/model.hpp"

namespace abcu {

// Exact score. Every quantity compared by a decision procedure is one of these.
using Score = boost::rational<std::int64_t>;

inline std::string to_string(const Score& s) {
  if (s.denominator() == 1) return std::to_string(s.numerator());
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

/// Parse "p/q" or an integer. Negative values are accepted by the parser;
/// callers enforce sign constraints.
inline Score parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw Error(ErrorKind::bad_rule, "not a rational number: '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Score(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::bad_rule, "zero denominator in '" + std::string(text) + "'");
  return Score(parse_int(text.substr(0, slash)), den);
}

class WeightFunction {
public:
  enum class Kind { av, cc, pav, binary, table };

  static WeightFunction av() { return WeightFunction(Kind::av); }
  static WeightFunction cc() { return WeightFunction(Kind::cc); }
  static WeightFunction pav() { return WeightFunction(Kind::pav); }

  static WeightFunction binary(int threshold) {
    if (threshold < 1) throw Error(ErrorKind::bad_rule, "binary threshold must be a positive integer");
    WeightFunction w(Kind::binary);
    w.threshold_ = threshold;
    return w;
  }

  /// values[x] = w(x). Requires w(0) = 0 and non-decreasing values.
  static WeightFunction table(std::vector<Score> values) {
    if (values.empty() || values[0] != Score(0)) throw Error(ErrorKind::bad_rule, "weight table must start with w(0) = 0");
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] < values[i - 1]) throw Error(ErrorKind::bad_rule, "weight table must be non-decreasing");
    }
    WeightFunction w(Kind::table);
    w.table_ = std::move(values);
    return w;
  }

  Kind kind() const noexcept { return kind_; }
  /// Threshold t for binary weights (CC is t = 1); 0 otherwise.
  int binary_threshold() const noexcept {
    if (kind_ == Kind::cc) return 1;
    if (kind_ == Kind::binary) return threshold_;
    return 0;
  }
  const std::vector<Score>& values() const noexcept { return table_; }

  Score operator()(int x) const {
    if (x < 0) throw Error(ErrorKind::invalid_argument, "negative weight index");
    switch (kind_) {
    case Kind::av: return Score(x);
    case Kind::cc: return Score(x >= 1 ? 1 : 0);
    case Kind::pav: {
      Score h(0);
      for (int i = 1; i <= x; ++i) h += Score(1, i);
      return h;
    }
    case Kind::binary: return Score(x >= threshold_ ? 1 : 0);
    case Kind::table:
      if (static_cast<std::size_t>(x) >= table_.size())
        throw Error(ErrorKind::table_out_of_range,
                    "weight table has no entry for x = " + std::to_string(x));
      return table_[static_cast<std::size_t>(x)];
    }
    return Score(0);
  }

  std::string spec() const {
    switch (kind_) {
    case Kind::av: return "av";
    case Kind::cc: return "cc";
    case Kind::pav: return "pav";
    case Kind::binary: return "binary:" + std::to_string(threshold_);
    case Kind::table: {
      std::string s = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + to_string(table_[i]);
      return s;
    }
    }
    return {};
  }

private:
  explicit WeightFunction(Kind k) : kind_(k) {}

  Kind kind_;
  int threshold_ = 0;
  std::vector<Score> table_;
};

inline Score eval_weight(const WeightFunction& w, int x) { return w(x); }

// General ABC scoring function f(|A ∩ S|, |A|).
class ScoringFunction {
public:
  enum class Kind { thiele, sav, custom };

  static ScoringFunction thiele(WeightFunction w) {
    ScoringFunction f(Kind::thiele);
    f.weight_ = std::move(w);
    return f;
  }
  static ScoringFunction av() { return thiele(WeightFunction::av()); }
  static ScoringFunction cc() { return thiele(WeightFunction::cc()); }
  static ScoringFunction pav() { return thiele(WeightFunction::pav()); }
  static ScoringFunction binary(int t) { return thiele(WeightFunction::binary(t)); }
  static ScoringFunction sav() { return ScoringFunction(Kind::sav); }

  /// table[y][x] = f(x, y). Each row must be non-decreasing in x.
  static ScoringFunction custom(std::vector<std::vector<Score>> table) {
    for (const auto& row : table) {
      for (std::size_t x = 1; x < row.size(); ++x) {
        if (row[x] < row[x - 1]) throw Error(ErrorKind::bad_rule, "scoring table must be non-decreasing in x");
      }
    }
    ScoringFunction f(Kind::custom);
    f.custom_ = std::move(table);
    return f;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_thiele() const noexcept { return kind_ == Kind::thiele; }
  const WeightFunction& weight() const noexcept { return weight_; }

  bool is_av() const noexcept { return is_thiele() && weight_.kind() == WeightFunction::Kind::av; }
  int binary_threshold() const noexcept { return is_thiele() ? weight_.binary_threshold() : 0; }

  /// Score of one ballot with `hits` approved committee members and `approved` approvals.
  Score operator()(int hits, int approved) const {
    switch (kind_) {
    case Kind::thiele: return weight_(hits);
    case Kind::sav: return approved == 0 ? Score(0) : Score(hits, approved);
    case Kind::custom:
      if (static_cast<std::size_t>(approved) >= custom_.size() ||
          static_cast<std::size_t>(hits) >= custom_[static_cast<std::size_t>(approved)].size())
        throw Error(ErrorKind::table_out_of_range, "scoring table has no entry for (" + std::to_string(hits) + ", " +
                                                       std::to_string(approved) + ")");
      return custom_[static_cast<std::size_t>(approved)][static_cast<std::size_t>(hits)];
    }
    return Score(0);
  }

  std::string spec() const {
    switch (kind_) {
    case Kind::thiele: return weight_.spec();
    case Kind::sav: return "sav";
    case Kind::custom: return "custom";
    }
    return {};
  }

private:
  explicit ScoringFunction(Kind k) : kind_(k), weight_(WeightFunction::av()) {}

  Kind kind_;
  WeightFunction weight_;
  std::vector<std::vector<Score>> custom_;
};

/// Rule specifier grammar: av | cc | pav | sav | binary:<t> | table:<r0,r1,...>
inline ScoringFunction parse_rule(std::string_view spec) {
  if (spec == "av") return ScoringFunction::av();
  if (spec == "cc") return ScoringFunction::cc();
  if (spec == "pav") return ScoringFunction::pav();
  if (spec == "sav") return ScoringFunction::sav();
  if (spec.starts_with("binary:")) {
    const auto arg = spec.substr(7);
    int t = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), t);
    if (ec != std::errc{} || ptr != arg.data() + arg.size())
      throw Error(ErrorKind::bad_rule, "bad threshold in '" + std::string(spec) + "'");
    return ScoringFunction::binary(t);
  }
  if (spec.starts_with("table:")) {
    std::vector<Score> values;
    std::string_view rest = spec.substr(6);
    while (true) {
      const auto comma = rest.find(',');
      values.push_back(parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return ScoringFunction::thiele(WeightFunction::table(std::move(values)));
  }
  throw Error(ErrorKind::bad_rule, "unknown rule '" + std::string(spec) + "'");
}

inline Score ballot_score(const ScoringFunction& f, CandidateSet approved, CandidateSet committee) {
  return f((approved & committee).size(), approved.size());
}

inline Score profile_score(const ScoringFunction& f, const ApprovalProfile& profile, CandidateSet committee) {
  Score total(0);
  for (CandidateSet a : profile.ballots) total += ballot_score(f, a, committee);
  return total;
}

inline void require_committee_size(int k, int m) {
  if (k < 1 || k > m)
    throw Error(ErrorKind::bad_k, "committee size " + std::to_string(k) + " outside 1.." + std::to_string(m));
}

inline void require_committee(CandidateSet w, int k, int m) {
  require_committee_size(k, m);
  if (!w.subset_of(CandidateSet::all(m))) throw Error(ErrorKind::unknown_candidate, "committee member out of range");
  if (w.size() != k)
    throw Error(ErrorKind::bad_k, "committee has " + std::to_string(w.size()) + " members, expected " + std::to_string(k));
}

/// All size-k committees attaining the maximum score, ascending by bitmask.
inline std::vector<CandidateSet> winning_committees(const ScoringFunction& f, const ApprovalProfile& profile, int k) {
  require_committee_size(k, profile.candidates());
  std::vector<CandidateSet> best;
  Score best_score(0);
  for_each_subset_of_size(profile.registry.all(), k, [&](CandidateSet s) {
    const Score score = profile_score(f, profile, s);
    if (best.empty() || score > best_score) {
      best_score = score;
      best.assign(1, s);
    } else if (score == best_score) {
      best.push_back(s);
    }
    return true;
  });
  return best;
}

inline bool is_winning_committee(const ScoringFunction& f, const ApprovalProfile& profile, CandidateSet w) {
  const int k = w.size();
  require_committee(w, k, profile.candidates());
  const Score target = profile_score(f, profile, w);
  return for_each_subset_of_size(profile.registry.all(), k,
                                 [&](CandidateSet s) { return profile_score(f, profile, s) <= target; });
}

/// W strictly outscores every size-k committee containing c.
inline bool defeats(const ScoringFunction& f, const ApprovalProfile& profile, CandidateSet w, CandidateId c) {
  const int m = profile.candidates();
  require_committee(w, w.size(), m);
  if (c < 0 || c >= m) throw Error(ErrorKind::unknown_candidate, "candidate id out of range");
  if (w.contains(c)) throw Error(ErrorKind::c_in_w, "candidate belongs to the committee");
  const Score target = profile_score(f, profile, w);
  CandidateSet others = profile.registry.all();
  others.erase(c);
  return for_each_subset_of_size(others, w.size() - 1, [&](CandidateSet rest) {
    rest.insert(c);
    return profile_score(f, profile, rest) < target;
  });
}

/// Some winning committee contains c.
inline bool is_winning_member(const ScoringFunction& f, const ApprovalProfile& profile, CandidateId c, int k) {
  const auto winners = winning_committees(f, profile, k);
  return std::any_of(winners.begin(), winners.end(), [c](CandidateSet w) { return w.contains(c); });
}

} // namespace abcu

#endif // ABCU_RULES_HPP
