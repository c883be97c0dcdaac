#pragma once

// Generator words for the subcategory of extended maps (f,U) with U' = U
// and U u f([p]) = [q].  It is monoidally generated by the codegeneracies
// sigma_i, the coinert maps nu^co_{a,b} and the composites
// nu^co_{a,b} . delta_a.  Membership is re-derived here by a bounded
// breadth-first search over generator words; there is no a-priori bound on
// the word length, so failures are reported explicitly.

#include <deque>
#include <map>

#include "necklace.hpp"

namespace neckcat {

inline Necklace necklace_segment(const Necklace& t, int a, int b) {
  return Necklace(b - a, (t.joints >> a) & mask_range(0, b - a));
}

// All single-generator wedges id v gen v id out of the necklace x.
inline std::vector<ExtNecklaceMap> barminus_steps(const Necklace& x, int rank_cap) {
  std::vector<ExtNecklaceMap> out;
  auto js = x.joint_list();
  for (size_t bi = 0; bi + 1 < js.size(); ++bi) {
    int a = js[bi], b = js[bi + 1], len = b - a;
    Necklace pre = necklace_segment(x, 0, a);
    Necklace post = necklace_segment(x, b, x.p);
    auto wedge3 = [&](const ExtNecklaceMap& mid) {
      ExtNecklaceMap m = ExtNecklaceMap::identity(pre).wedge(mid).wedge(ExtNecklaceMap::identity(post));
      return m;
    };
    for (int i = 0; i < len; ++i)
      out.push_back(wedge3(ExtNecklaceMap(necklace_sigma(len - 1, i))));
    for (int c = 1; c < len; ++c)
      out.push_back(wedge3(necklace_nu_co(Necklace::simplex(len), c)));
    if (x.p + 1 <= rank_cap)
      for (int c = 1; c <= len; ++c)
        out.push_back(wedge3(barminus_split_generator(c, len + 1 - c)));
  }
  return out;
}

struct WordSearchResult {
  bool found = false;
  int explored = 0;
  std::vector<ExtNecklaceMap> word;  // applied left to right, composes to the target
};

inline WordSearchResult barminus_generator_word(const ExtNecklaceMap& target, int rank_cap = -1,
                                                int state_cap = 200000) {
  WordSearchResult res;
  if (!target.in_barminus()) return res;
  if (rank_cap < 0) rank_cap = std::max(target.src.p, target.dst.p) + 1;
  struct Key {
    Necklace dst;
    std::vector<int> fv;
    Mask marker;
    auto operator<=>(const Key&) const = default;
  };
  auto key_of = [](const ExtNecklaceMap& m) { return Key{m.dst, m.f.values, m.marker}; };
  std::map<Key, int> seen;
  std::vector<std::pair<ExtNecklaceMap, int>> nodes;  // (map, parent)
  std::vector<ExtNecklaceMap> last_step;
  std::deque<int> q;
  ExtNecklaceMap start = ExtNecklaceMap::identity(target.src);
  nodes.push_back({start, -1});
  last_step.push_back(start);
  seen[key_of(start)] = 0;
  q.push_back(0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    const ExtNecklaceMap m = nodes[size_t(cur)].first;
    if (key_of(m) == key_of(target)) {
      // reconstruct
      std::vector<ExtNecklaceMap> w;
      for (int at = cur; nodes[size_t(at)].second >= 0; at = nodes[size_t(at)].second)
        w.push_back(last_step[size_t(at)]);
      std::reverse(w.begin(), w.end());
      res.found = true;
      res.word = w;
      res.explored = int(nodes.size());
      return res;
    }
    for (auto& step : barminus_steps(m.dst, rank_cap)) {
      ExtNecklaceMap nxt = ext_compose(m, step);
      Key k = key_of(nxt);
      if (seen.count(k)) continue;
      if (int(nodes.size()) >= state_cap) { res.explored = state_cap; return res; }
      seen[k] = int(nodes.size());
      nodes.push_back({nxt, cur});
      last_step.push_back(step);
      q.push_back(int(nodes.size()) - 1);
    }
  }
  res.explored = int(nodes.size());
  return res;
}

}  // namespace neckcat
