#include "mgl/grigorchuk.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mgl {
namespace grig {

OracleTriple triple_for_symbol(int symbol) {
  switch (symbol) {
    case 0: return OracleTriple{{true, true, false}};   // (a, a, 1)
    case 1: return OracleTriple{{true, false, true}};   // (a, 1, a)
    case 2: return OracleTriple{{false, true, true}};   // (1, a, a)
    default: throw std::invalid_argument("oracle symbol must be 0, 1 or 2");
  }
}

OracleSeq OracleSeq::parse(const std::string& text) {
  OracleSeq seq;
  std::size_t i = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '2')
    seq.prefix.push_back(static_cast<std::uint8_t>(text[i++] - '0'));
  if (seq.prefix.empty()) throw std::invalid_argument("oracle sequence needs a nonempty prefix");
  if (i == text.size()) {
    seq.tail = seq.prefix.back();
    return seq;
  }
  // tail marker "(k)*"
  if (i + 4 == text.size() && text[i] == '(' && text[i + 2] == ')' && text[i + 3] == '*' &&
      text[i + 1] >= '0' && text[i + 1] <= '2') {
    seq.tail = static_cast<std::uint8_t>(text[i + 1] - '0');
    return seq;
  }
  throw std::invalid_argument("bad oracle sequence: " + text);
}

std::string OracleSeq::str() const {
  std::string s;
  for (std::uint8_t p : prefix) s.push_back(static_cast<char>('0' + p));
  s += "(";
  s.push_back(static_cast<char>('0' + tail));
  s += ")*";
  return s;
}

Word gamma_reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter x : raw) {
    int i = x > 0 ? x : -x;
    if (i < 1 || i > kAlphabet) throw std::invalid_argument("letter outside {a,b,c,d}");
    Letter cur = static_cast<Letter>(i);  // rule (i): x^-1 -> x
    for (;;) {
      if (stack.empty()) {
        stack.push_back(cur);
        break;
      }
      Letter top = stack.back();
      if (top == cur) {  // rule (ii): xx -> 1
        stack.pop_back();
        break;
      }
      if (top >= 2 && cur >= 2) {  // rule (iii): xy -> z on {b,c,d}
        stack.pop_back();
        cur = static_cast<Letter>(9 - top - cur);
        continue;
      }
      stack.push_back(cur);
      break;
    }
  }
  return Word::from_reduced(std::move(stack));
}

Word gamma_reduce(const Word& w) { return gamma_reduce(w.letters()); }

Word phi(const Word& w, int i, const OracleTriple& t) {
  if (i != 0 && i != 1) throw std::invalid_argument("branch index must be 0 or 1");
  int a_count = 0;
  for (Letter x : w.letters()) {
    if (x < 1 || x > kAlphabet) throw std::invalid_argument("phi needs a positive word");
    if (x == 1) ++a_count;
  }
  if (a_count % 2 != 0) throw std::invalid_argument("phi needs an even number of a's");
  std::vector<Letter> out;
  out.reserve((w.size() + 1) / 2);
  int preceding_a = 0;
  for (Letter x : w.letters()) {
    if (x == 1) {
      ++preceding_a;
      continue;  // a always drops
    }
    if (preceding_a % 2 == i % 2) {
      if (t.to_a[x - 2]) out.push_back(1);
      // image 1 contributes nothing
    } else {
      out.push_back(x);
    }
  }
  return Word::reduce(out);
}

namespace {

bool member_rec(const Word& w, const OracleSeq& omega, int depth, int parent,
                MembershipVerdict& verdict) {
  int node_index = static_cast<int>(verdict.nodes.size());
  verdict.nodes.push_back({w, depth, MembershipVerdict::Rule::split, parent, false});
  long long a_sum = 0;
  for (Letter x : w.letters()) {
    if (x == 1) ++a_sum;
    if (x == -1) --a_sum;
  }
  auto settle = [&](MembershipVerdict::Rule rule, bool accepted) {
    verdict.nodes[node_index].rule = rule;
    verdict.nodes[node_index].accepted = accepted;
    return accepted;
  };
  if (a_sum % 2 != 0) return settle(MembershipVerdict::Rule::odd_exponent_sum, false);
  Word r = gamma_reduce(w);
  if (r.empty()) return settle(MembershipVerdict::Rule::reduced_to_identity, true);
  if (r.size() == 1) return settle(MembershipVerdict::Rule::single_letter, false);
  OracleTriple t = omega.triple(depth);
  bool ok0 = member_rec(phi(r, 0, t), omega, depth + 1, node_index, verdict);
  bool ok1 = member_rec(phi(r, 1, t), omega, depth + 1, node_index, verdict);
  return settle(MembershipVerdict::Rule::split, ok0 && ok1);
}

}  // namespace

MembershipVerdict member(const Word& w, const OracleSeq& omega) {
  check_alphabet(w.letters(), kAlphabet);
  MembershipVerdict verdict{false, {}};
  verdict.accepted = member_rec(w, omega, 1, -1, verdict);
  return verdict;
}

BallFingerprint fingerprint_S(const OracleSeq& omega, int L, std::uint64_t budget, int threads) {
  return ball_membership_fingerprint(
      kAlphabet, L, [&omega](const Word& w) { return member(w, omega).accepted; }, budget,
      threads);
}

namespace {

// Smallest word (canonical order) on which the two oracles disagree, up to
// radius `max_len`; searches length by length with early exit.
std::optional<Word> first_disagreement(const OracleSeq& o1, const OracleSeq& o2, int max_len,
                                       std::uint64_t budget) {
  std::uint64_t total = ball_size(kAlphabet, max_len);
  if (total > budget) throw budget_error(total, budget);
  std::optional<Word> found;
  std::vector<Letter> prefix;
  auto differs = [&](const Word& w) {
    return member(w, o1).accepted != member(w, o2).accepted;
  };
  // depth-first over reduced words of length exactly `len`
  auto walk = [&](auto&& self, int len) -> bool {
    if (static_cast<int>(prefix.size()) == len) {
      Word w = Word::from_reduced(prefix);
      if (differs(w)) {
        found = w;
        return true;
      }
      return false;
    }
    Letter last = prefix.empty() ? 0 : prefix.back();
    for (int rank = 0; rank < 2 * kAlphabet; ++rank) {
      Letter x = letter_from_rank(rank);
      if (last != 0 && x == inverse(last)) continue;
      prefix.push_back(x);
      bool hit = self(self, len);
      prefix.pop_back();
      if (hit) return true;
    }
    return false;
  };
  for (int len = 1; len <= max_len && !found; ++len) walk(walk, len);
  return found;
}

}  // namespace

Prop62Report verify_prop62(const OracleSeq& omega1, const OracleSeq& omega2, int n,
                           std::uint64_t budget, int threads) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Prop62Report rep{};
  rep.n = n;
  rep.agree_prefix = 0;
  while (rep.agree_prefix < n &&
         omega1.symbol(rep.agree_prefix + 1) == omega2.symbol(rep.agree_prefix + 1))
    ++rep.agree_prefix;
  if (rep.agree_prefix == n) {
    rep.part_i_applies = true;
    rep.checked_radius = 1 << n;
    std::uint64_t need = ball_size(kAlphabet, rep.checked_radius);
    if (need > budget) throw budget_error(need, budget);
    BallFingerprint f1 = fingerprint_S(omega1, rep.checked_radius, budget, threads);
    BallFingerprint f2 = fingerprint_S(omega2, rep.checked_radius, budget, threads);
    rep.fingerprints_equal = (f1 == f2);
  } else {
    rep.part_ii_applies = true;
    int target = 1 << (n + 2);
    // shrink to what the budget affords, never beyond the target
    int radius = 0;
    for (int L = 1; L <= target; ++L) {
      if (ball_size(kAlphabet, L) > budget) break;
      radius = L;
    }
    rep.search_radius = radius;
    rep.search_complete = (radius == target);
    auto w = first_disagreement(omega1, omega2, radius, budget);
    rep.separated = w.has_value();
    rep.separating_word = w;
  }
  return rep;
}

CoverEstimate covering_estimate_B(int n, std::uint64_t budget, int threads) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  CoverEstimate est{};
  est.n = n;
  est.bound = 1;
  for (int i = 0; i < n; ++i) est.bound *= 3;
  est.radius = 1 << n;
  est.observed = -1;
  // omega constant from the n-th coordinate: free prefix of length n-1
  // plus the constant tail symbol.
  std::uint64_t prefixes = 1;
  for (int i = 0; i + 1 < n; ++i) prefixes *= 3;
  est.centers = n == 0 ? 3 : prefixes * 3;
  if (ball_size(kAlphabet, est.radius) > budget) return est;
  std::unordered_set<std::string> distinct;
  std::uint64_t count = n == 0 ? 1 : prefixes;
  for (std::uint64_t p = 0; p < count; ++p) {
    std::uint64_t code = p;
    std::vector<std::uint8_t> pre;
    for (int i = 0; i + 1 < n; ++i) {
      pre.push_back(static_cast<std::uint8_t>(code % 3));
      code /= 3;
    }
    for (int tail = 0; tail < 3; ++tail) {
      OracleSeq omega;
      omega.prefix = pre;
      omega.prefix.push_back(static_cast<std::uint8_t>(tail));
      omega.tail = static_cast<std::uint8_t>(tail);
      distinct.insert(fingerprint_S(omega, est.radius, budget, threads).key());
    }
  }
  est.observed = static_cast<std::int64_t>(distinct.size());
  return est;
}

}  // namespace grig
}  // namespace mgl
