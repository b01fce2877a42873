// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's code paths: pieces are found by exhaustive substring
// scans, closure members by BFS over conjugate products, packings by the
// greedy pairwise construction.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mgl/dehn.hpp"
#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"
#include "mgl/lattice.hpp"
#include "mgl/word.hpp"

namespace oracle {

inline std::string rot_canonical(const std::string& s) {
  std::string best = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::string r = s.substr(i) + s.substr(0, i);
    if (r < best) best = r;
  }
  return best;
}

inline std::string word_string(const mgl::Word& w) {
  return {w.letters().begin(), w.letters().end()};
}

// Distinct cyclic words among {w, w^-1}.
inline std::vector<std::string> family_patterns(const mgl::Word& w) {
  std::string fwd = word_string(w), inv = word_string(w.inverse());
  std::vector<std::string> pats{fwd};
  if (rot_canonical(fwd) != rot_canonical(inv)) pats.push_back(inv);
  return pats;
}

// Occurrence key: full-turn reads of the same pattern cover every cyclic
// position, so they collapse to one slot.
inline std::pair<int, int> occurrence_key(int pattern, std::size_t offset, std::size_t len,
                                          std::size_t pattern_len) {
  return {pattern, len == pattern_len ? -1 : static_cast<int>(offset)};
}

inline int max_piece(const mgl::Word& u, const mgl::Word& v) {
  auto fu = family_patterns(u), fv = family_patterns(v);
  std::set<std::string> cu, cv;
  for (const auto& p : fu) cu.insert(rot_canonical(p));
  for (const auto& p : fv) cv.insert(rot_canonical(p));
  bool self = (cu == cv);
  int best = 0;
  if (self) {
    std::size_t L = fu[0].size();
    for (std::size_t len = 1; len <= L; ++len) {
      std::map<std::string, std::set<std::pair<int, int>>> occ;
      for (std::size_t p = 0; p < fu.size(); ++p)
        for (std::size_t o = 0; o < L; ++o) {
          std::string s;
          for (std::size_t i = 0; i < len; ++i) s.push_back(fu[p][(o + i) % L]);
          occ[s].insert(occurrence_key(static_cast<int>(p), o, len, L));
        }
      for (const auto& [s, where] : occ)
        if (where.size() >= 2) best = static_cast<int>(len);
    }
  } else {
    std::size_t top = std::min(fu[0].size(), fv[0].size());
    for (std::size_t len = 1; len <= top; ++len) {
      std::set<std::string> su;
      for (const auto& p : fu)
        for (std::size_t o = 0; o < p.size(); ++o) {
          std::string s;
          for (std::size_t i = 0; i < len; ++i) s.push_back(p[(o + i) % p.size()]);
          su.insert(s);
        }
      bool hit = false;
      for (const auto& p : fv)
        for (std::size_t o = 0; o < p.size() && !hit; ++o) {
          std::string s;
          for (std::size_t i = 0; i < len; ++i) s.push_back(p[(o + i) % p.size()]);
          hit = su.count(s) > 0;
        }
      if (hit) best = static_cast<int>(len);
    }
  }
  return best;
}

// Members of <<relators>> reachable as products of at most `factors`
// conjugates g r^{+-1} g^{-1} with |g| <= conj_len, kept up to `max_len`.
inline std::set<mgl::Word, mgl::WordLess> bfs_closure(const std::vector<mgl::Word>& relators,
                                                      int m, int conj_len, int factors,
                                                      std::size_t max_len,
                                                      std::size_t keep_len = 0) {
  if (keep_len == 0) keep_len = max_len;
  std::vector<mgl::Word> conjugates;
  mgl::Ball ball = mgl::enumerate_ball(m, conj_len);
  for (const mgl::Word& g : ball.words) {
    for (const mgl::Word& r : relators) {
      conjugates.push_back(g * r * g.inverse());
      conjugates.push_back(g * r.inverse() * g.inverse());
    }
  }
  std::set<mgl::Word, mgl::WordLess> layer{mgl::Word{}};
  std::set<mgl::Word, mgl::WordLess> all{mgl::Word{}};
  for (int f = 0; f < factors; ++f) {
    std::set<mgl::Word, mgl::WordLess> next;
    for (const mgl::Word& w : layer)
      for (const mgl::Word& c : conjugates) {
        mgl::Word prod = w * c;
        if (prod.size() <= max_len) next.insert(prod);
      }
    for (const mgl::Word& w : next) all.insert(w);
    layer = std::move(next);
  }
  std::set<mgl::Word, mgl::WordLess> out;
  for (const mgl::Word& w : all)
    if (w.size() <= keep_len) out.insert(w);
  return out;
}

// Greedy packing count: points pairwise farther apart than 2^-n.
inline std::uint64_t greedy_packing(const std::vector<mgl::BallFingerprint>& family, int n) {
  std::vector<const mgl::BallFingerprint*> chosen;
  for (const auto& f : family) {
    bool separated = true;
    for (const auto* c : chosen) {
      mgl::Valuation v = mgl::valuation(f, *c);
      bool close = v.agree_through_probe ? v.probe >= n : v.value >= n;  // d <= 2^-n
      if (close) {
        separated = false;
        break;
      }
    }
    if (separated) chosen.push_back(&f);
  }
  return chosen.size();
}

// Span membership for small integer combinations of the generators.
inline bool in_span(const std::vector<mgl::LatticePoint>& gens, const mgl::LatticePoint& p,
                    int coeff_bound) {
  std::vector<std::int64_t> coeff(gens.size(), -coeff_bound);
  for (;;) {
    mgl::LatticePoint acc(p.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t c = 0; c < p.size(); ++c) acc[c] += coeff[i] * gens[i][c];
    if (acc == p) return true;
    std::size_t slot = 0;
    while (slot < coeff.size() && coeff[slot] == coeff_bound) coeff[slot++] = -coeff_bound;
    if (slot == coeff.size()) return false;
    ++coeff[slot];
  }
}

}  // namespace oracle
