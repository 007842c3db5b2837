#include "sl2lab/word_search.hpp"

#include <algorithm>

#include "sl2lab/subgroups.hpp"

namespace sl2lab {

std::optional<uint32_t> shortest_relation(const Element& a, const Element& b,
                                          const GroupTable& table, uint32_t cap) {
  return relation_length(a, b, table, cap);
}

namespace {

// Ball of radius n_max in word length over the canonical support order:
// one (shortest, lexicographically least) word per distinct evaluation.
struct WordBall {
  std::vector<GeneratorWord> words;  // sorted by (length, letters)
};

WordBall enumerate_ball(const GeneratorSet& S, uint32_t n_max, const GroupTable& table) {
  std::vector<Element> support;
  for (const auto& atom : S.atoms()) support.push_back(atom.element);
  std::sort(support.begin(), support.end(), [&](const Element& x, const Element& y) {
    return table.index_of(x) < table.index_of(y);
  });

  std::vector<char> seen(table.size(), 0);
  WordBall ball;
  GeneratorWord root;
  root.evaluation = identity(table.modulus());
  seen[0] = 1;
  ball.words.push_back(root);

  size_t level_begin = 0;
  for (uint32_t len = 1; len <= n_max; ++len) {
    const size_t level_end = ball.words.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      const GeneratorWord cur = ball.words[i];  // copy: push_back may reallocate
      for (uint8_t l = 0; l < support.size(); ++l) {
        const Element eval = mul(support[l], cur.evaluation);
        const uint32_t idx = table.index_of(eval);
        if (seen[idx]) continue;
        seen[idx] = 1;
        GeneratorWord w;
        w.letters = cur.letters;
        w.letters.push_back(l);
        w.evaluation = eval;
        ball.words.push_back(std::move(w));
      }
    }
    level_begin = level_end;
    if (level_end == ball.words.size()) break;  // closure of <S> exhausted
  }
  return ball;
}

}  // namespace

SearchReport find_generating_pair(const GeneratorSet& S, uint32_t n_max,
                                  const GroupTable& table) {
  SearchReport rep;
  rep.generator_fingerprint = S.fingerprint();
  rep.n_max = n_max;

  const WordBall ball = enumerate_ball(S, n_max, table);
  for (uint32_t n = 1; n <= n_max && !rep.found; ++n) {
    for (const auto& w1 : ball.words) {
      if (w1.length() > n || rep.found) break;
      for (const auto& w2 : ball.words) {
        if (w2.length() > n) break;
        if (std::max(w1.length(), w2.length()) != n) continue;
        if (generates_pair(w1.evaluation, w2.evaluation, table)) {
          rep.found = true;
          rep.w1 = w1;
          rep.w2 = w2;
          rep.n_reached = n;
          rep.closure_size = table.size();
          rep.shortest_relation_length =
              relation_length(w1.evaluation, w2.evaluation, table, girth_ceiling(table.size()));
          break;
        }
      }
    }
  }
  if (!rep.found) {
    std::vector<Element> support;
    for (const auto& atom : S.atoms()) support.push_back(atom.element);
    rep.n_reached = n_max;
    rep.closure_size = closure_full(support, table).order();
  }
  return rep;
}

SearchReport max_girth_pair(const GeneratorSet& S, uint32_t n_max, uint32_t L,
                            const GroupTable& table) {
  SearchReport rep;
  rep.generator_fingerprint = S.fingerprint();
  rep.n_max = n_max;
  rep.girth_threshold = L;
  rep.girth_ceiling_hint = girth_ceiling(table.size());

  const WordBall ball = enumerate_ball(S, n_max, table);
  uint32_t best = 0;
  for (size_t i = 0; i < ball.words.size(); ++i) {
    for (size_t j = i; j < ball.words.size(); ++j) {
      const auto girth = relation_length(ball.words[i].evaluation, ball.words[j].evaluation,
                                         table, rep.girth_ceiling_hint);
      const uint32_t value = girth.value_or(rep.girth_ceiling_hint + 1);
      if (!rep.found || value > best) {
        best = value;
        rep.found = true;
        rep.w1 = ball.words[i];
        rep.w2 = ball.words[j];
      }
    }
  }
  if (rep.found) {
    rep.shortest_relation_length = best;
    rep.n_reached = (uint32_t)std::max(rep.w1.length(), rep.w2.length());
    const Element pair_elems[2] = {rep.w1.evaluation, rep.w2.evaluation};
    rep.closure_size = closure_full(pair_elems, table).order();
    rep.sufficient = best > L;
  }
  return rep;
}

}  // namespace sl2lab
