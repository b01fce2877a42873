#include "mgl/dehn.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgl {

namespace {

// Effective relator with its exact replacement threshold thr_num/thr_den:
// a subword qualifies when len * thr_den > thr_num.
struct EnginePattern {
  std::vector<Letter> base;      // effective relator R
  std::vector<Letter> base_inv;  // R^-1
  std::int64_t thr_num;
  std::int64_t thr_den;
};

std::vector<Letter> to_letters(const Word& w) {
  return {w.letters().begin(), w.letters().end()};
}

std::vector<Letter> power_letters(const Word& root, int q) {
  std::vector<Letter> out;
  out.reserve(root.size() * q);
  for (int i = 0; i < q; ++i)
    out.insert(out.end(), root.letters().begin(), root.letters().end());
  return out;
}

std::vector<Letter> invert(const std::vector<Letter>& w) {
  std::vector<Letter> inv(w.rbegin(), w.rend());
  for (Letter& x : inv) x = inverse(x);
  return inv;
}

std::vector<EnginePattern> engine_patterns(const Presentation& p) {
  std::vector<EnginePattern> out;
  if (const auto* sc = std::get_if<SmallCancelMode>(&p.mode)) {
    for (const Word& r : p.relators) {
      std::int64_t len = static_cast<std::int64_t>(r.size());
      // threshold (1 - 3*lambda) * |r|
      out.push_back({to_letters(r), invert(to_letters(r)),
                     (sc->lambda.den - 3 * sc->lambda.num) * len, sc->lambda.den});
    }
  } else {
    const auto& pw = std::get<OneRelatorPowerMode>(p.mode);
    const Word& root = p.relators.front();
    auto base = power_letters(root, pw.q);
    // threshold (q - 1) * |root|
    out.push_back({base, invert(base),
                   static_cast<std::int64_t>(pw.q - 1) * static_cast<std::int64_t>(root.size()),
                   1});
  }
  return out;
}

bool qualifies(std::int64_t len, const EnginePattern& pat) {
  return len * pat.thr_den > pat.thr_num;
}

struct Match {
  std::size_t len = 0;
  std::size_t pos = 0;
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t offset = 0;
  bool found = false;
};

// Longest qualifying match of a subword of w against a cyclic conjugate of
// some pattern; leftmost, then lowest relator index, then the pattern
// itself before its inverse, then lowest offset.
Match best_match(const Word& w, const std::vector<EnginePattern>& pats) {
  Match best;
  std::span<const Letter> s = w.letters();
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    for (std::size_t j = 0; j < pats.size(); ++j) {
      const auto& pat = pats[j];
      std::size_t cap = std::min(s.size() - pos, pat.base.size());
      for (int inv = 0; inv < 2; ++inv) {
        const auto& c = inv ? pat.base_inv : pat.base;
        for (std::size_t o = 0; o < c.size(); ++o) {
          std::size_t l = 0;
          while (l < cap && s[pos + l] == c[(o + l) % c.size()]) ++l;
          if (!qualifies(static_cast<std::int64_t>(l), pat)) continue;
          if (l > best.len) {
            best = {l, pos, j, inv != 0, o, true};
          }
        }
      }
    }
  }
  return best;
}

Word apply_match(const Word& w, const std::vector<EnginePattern>& pats, const Match& m) {
  const auto& pat = pats[m.relator];
  const auto& c = m.inverted ? pat.base_inv : pat.base;
  std::vector<Letter> next;
  next.reserve(w.size() + c.size());
  std::span<const Letter> s = w.letters();
  next.insert(next.end(), s.begin(), s.begin() + m.pos);
  // c = s' u cyclically with s' the matched prefix; replace s' by u^-1.
  for (std::size_t i = c.size(); i > m.len; --i)
    next.push_back(inverse(c[(m.offset + i - 1) % c.size()]));
  next.insert(next.end(), s.begin() + m.pos + m.len, s.end());
  return Word::reduce(next);
}

void validate_presentation(const Presentation& p) {
  if (p.relators.empty()) throw std::invalid_argument("presentation needs a relator");
  for (const Word& r : p.relators) {
    check_alphabet(r.letters(), p.m);
    if (r.empty() || !r.cyclically_reduced())
      throw std::invalid_argument("relators must be nonempty and cyclically reduced");
  }
}

}  // namespace

Presentation Presentation::small_cancellation(int m, std::vector<Word> relators,
                                              Rational lambda) {
  Presentation p{m, std::move(relators), SmallCancelMode{lambda}};
  validate_presentation(p);
  if (lambda.num <= 0 || Rational(1, 6) < lambda)
    throw std::invalid_argument("small-cancellation mode requires lambda in (0, 1/6]");
  CPrimeReport rep = check_c_prime(p.relators, lambda);
  if (!rep.ok)
    throw std::invalid_argument("relators violate C'(" + lambda.str() + "): piece " +
                                format_word(rep.witness));
  return p;
}

Presentation Presentation::one_relator_power(int m, Word root, int q) {
  if (q < 2) throw std::invalid_argument("power relator needs q >= 2");
  Presentation p{m, {std::move(root)}, OneRelatorPowerMode{q}};
  validate_presentation(p);
  return p;
}

DehnResult dehn_member(const Word& w, const Presentation& p) {
  check_alphabet(w.letters(), p.m);
  auto pats = engine_patterns(p);
  DehnResult res{false, {}};
  Word cur = w;
  while (!cur.empty()) {
    Match m = best_match(cur, pats);
    if (!m.found) break;
    res.steps.push_back({static_cast<std::uint32_t>(m.pos), static_cast<std::uint32_t>(m.relator),
                         static_cast<std::uint32_t>(m.offset +
                                                    (m.inverted ? pats[m.relator].base.size() : 0)),
                         static_cast<std::uint32_t>(m.len)});
    Word next = apply_match(cur, pats, m);
    // Each replacement is strictly shortening; guards the loop.
    if (next.size() >= cur.size()) throw std::logic_error("non-shortening replacement");
    cur = next;
  }
  res.member = cur.empty();
  return res;
}

DehnResult newman_member(const Word& w, const Word& root, int q) {
  int m = 0;
  for (Letter x : root.letters()) m = std::max(m, x > 0 ? int(x) : int(-x));
  for (Letter x : w.letters()) m = std::max(m, x > 0 ? int(x) : int(-x));
  return dehn_member(w, Presentation::one_relator_power(std::max(m, 1), root, q));
}

bool replay_trace(const Word& w, const Presentation& p, const std::vector<DehnStep>& steps) {
  auto pats = engine_patterns(p);
  Word cur = w;
  for (const DehnStep& st : steps) {
    if (st.relator >= pats.size()) return false;
    const auto& pat = pats[st.relator];
    std::size_t L = pat.base.size();
    if (st.conjugate_offset >= 2 * L) return false;
    bool inv = st.conjugate_offset >= L;
    std::size_t offset = st.conjugate_offset - (inv ? L : 0);
    if (st.replaced_length > L || st.position + st.replaced_length > cur.size()) return false;
    if (!qualifies(st.replaced_length, pat)) return false;
    const auto& c = inv ? pat.base_inv : pat.base;
    for (std::size_t l = 0; l < st.replaced_length; ++l)
      if (cur[st.position + l] != c[(offset + l) % L]) return false;
    cur = apply_match(cur, pats, {st.replaced_length, st.position, st.relator, inv, offset, true});
  }
  return cur.empty();
}

BallFingerprint closure_fingerprint(const Presentation& p, int n, std::uint64_t budget,
                                    int threads) {
  return ball_membership_fingerprint(
      p.m, n, [&p](const Word& w) { return dehn_member(w, p).member; }, budget, threads);
}

}  // namespace mgl
