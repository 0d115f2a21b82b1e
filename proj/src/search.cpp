#include "stvb/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "stvb/invariants.hpp"

namespace stvb {

namespace {

bool braid_side(Alphabet tag) {
  return tag == Alphabet::braid || tag == Alphabet::braid_group;
}

std::string encode(const std::vector<Letter>& letters) {
  std::string key;
  key.reserve(letters.size() * 3);
  for (Letter a : letters) {
    key += static_cast<char>(a.kind);
    key += static_cast<char>(a.i);
    key += static_cast<char>(a.j);
  }
  return key;
}

bool matches_at(const std::vector<Letter>& w, const std::vector<Letter>& side,
                std::size_t pos) {
  if (pos + side.size() > w.size()) return false;
  return std::equal(side.begin(), side.end(), w.begin() + pos);
}

std::vector<Letter> splice(const std::vector<Letter>& w, std::size_t pos,
                           std::size_t drop, const std::vector<Letter>& insert) {
  std::vector<Letter> out;
  out.reserve(w.size() - drop + insert.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), w.begin() + pos + drop, w.end());
  return out;
}

}  // namespace

Word apply_step(const Presentation& p, const Word& w, const DerivationStep& step) {
  if (step.relation >= p.relations.size()) throw std::invalid_argument("bad relation index");
  const Relation& r = p.relations[step.relation];
  const auto& from = step.reverse ? r.rhs.letters() : r.lhs.letters();
  const auto& to = step.reverse ? r.lhs.letters() : r.rhs.letters();
  if (step.pos > w.size() || !matches_at(w.letters(), from, step.pos)) {
    throw std::invalid_argument("derivation step does not match at position "
                                + std::to_string(step.pos));
  }
  return Word(w.tag(), w.strands(), splice(w.letters(), step.pos, from.size(), to));
}

Word replay(const Presentation& p, Word start, const Derivation& d) {
  for (const DerivationStep& step : d.steps) start = apply_step(p, start, step);
  return start;
}

namespace {

struct Node {
  std::vector<Letter> letters;
  std::int64_t parent;  // -1 at the root
  DerivationStep step;  // step that produced this node from parent
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> visited;
  std::vector<std::size_t> frontier;
};

// Chain of steps from the root down to node `id`, in application order.
std::vector<DerivationStep> chain(const Side& side, std::size_t id) {
  std::vector<DerivationStep> steps;
  for (std::int64_t at = static_cast<std::int64_t>(id);
       side.nodes[at].parent >= 0; at = side.nodes[at].parent) {
    steps.push_back(side.nodes[at].step);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Derivation stitch(const Side& from_u, std::size_t meet_u, const Side& from_v,
                  std::size_t meet_v) {
  Derivation d;
  d.steps = chain(from_u, meet_u);
  auto back = chain(from_v, meet_v);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    d.steps.push_back(DerivationStep{it->pos, it->relation, !it->reverse});
  }
  return d;
}

}  // namespace

EqualResult bfs_equal(const Presentation& p, const Word& u, const Word& v,
                      std::size_t budget, std::size_t maxlen) {
  if (u.tag() != p.tag || v.tag() != p.tag || u.strands() != p.n || v.strands() != p.n) {
    throw std::invalid_argument("bfs_equal: alphabet mismatch with the presentation");
  }
  if (braid_side(p.tag)) {
    std::string component = first_difference(invariant_vector(u), invariant_vector(v));
    if (!component.empty()) {
      return EqualResult{EqualStatus::refuted, {}, component, 0};
    }
  }
  if (u == v) return EqualResult{EqualStatus::equivalent, {}, "", 0};

  Side sides[2];
  const Word* roots[2] = {&u, &v};
  for (int s = 0; s < 2; ++s) {
    sides[s].nodes.push_back(Node{roots[s]->letters(), -1, {}});
    sides[s].visited.emplace(encode(roots[s]->letters()), 0);
    sides[s].frontier.push_back(0);
  }
  std::size_t states = 2;

  while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
    int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& mine = sides[s];
    Side& other = sides[1 - s];
    std::vector<std::size_t> next;
    for (std::size_t id : mine.frontier) {
      std::vector<Letter> w = mine.nodes[id].letters;  // copy: nodes vector reallocates
      for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
        const Relation& r = p.relations[ri];
        for (int rev = 0; rev < 2; ++rev) {
          const auto& from = rev ? r.rhs.letters() : r.lhs.letters();
          const auto& to = rev ? r.lhs.letters() : r.rhs.letters();
          if (from.size() > w.size() || w.size() - from.size() + to.size() > maxlen) {
            continue;
          }
          for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
            if (!matches_at(w, from, pos)) continue;
            std::vector<Letter> next_word = splice(w, pos, from.size(), to);
            if (next_word.size() > maxlen) continue;
            std::string key = encode(next_word);
            if (mine.visited.count(key)) continue;
            if (states >= budget) {
              return EqualResult{EqualStatus::unknown, {}, "", states};
            }
            std::size_t nid = mine.nodes.size();
            mine.nodes.push_back(
                Node{next_word, static_cast<std::int64_t>(id),
                     DerivationStep{pos, ri, rev != 0}});
            mine.visited.emplace(std::move(key), nid);
            ++states;
            auto hit = other.visited.find(encode(next_word));
            if (hit != other.visited.end()) {
              Derivation d = s == 0 ? stitch(sides[0], nid, sides[1], hit->second)
                                    : stitch(sides[0], hit->second, sides[1], nid);
              return EqualResult{EqualStatus::equivalent, std::move(d), "", states};
            }
            next.push_back(nid);
          }
        }
      }
    }
    mine.frontier = std::move(next);
  }
  return EqualResult{EqualStatus::unknown, {}, "", states};
}

EqualResult bfs_equal(const Presentation& p, const Word& u, const Word& v,
                      std::size_t budget) {
  return bfs_equal(p, u, v, budget, std::max(u.size(), v.size()) + 8);
}

nlohmann::json derivation_to_json(const Presentation& p, const Word& u, const Derivation& d) {
  nlohmann::json steps = nlohmann::json::array();
  nlohmann::json words = nlohmann::json::array();
  Word at = u;
  words.push_back(format_word(at));
  for (const DerivationStep& step : d.steps) {
    const Relation& r = p.relations[step.relation];
    steps.push_back({{"pos", step.pos},
                     {"label", r.label},
                     {"indices", binding_string(r.binding)},
                     {"dir", step.reverse ? "rl" : "lr"}});
    at = apply_step(p, at, step);
    words.push_back(format_word(at));
  }
  return {{"steps", steps}, {"words", words}};
}

namespace {

std::vector<Letter> alphabet_letters(Alphabet tag, int n) {
  std::vector<Letter> pool;
  for (int kind = 0; kind < 12; ++kind) {
    for (int i = 1; i <= n; ++i) {
      Letter a{static_cast<GenKind>(kind), static_cast<std::uint8_t>(i)};
      if (letter_valid(a, tag, n)) pool.push_back(a);
      for (int j = 1; j <= n; ++j) {
        Letter b{static_cast<GenKind>(kind), static_cast<std::uint8_t>(i),
                 static_cast<std::uint8_t>(j)};
        if (letter_valid(b, tag, n)) pool.push_back(b);
      }
    }
  }
  return pool;
}

}  // namespace

Word random_word(int n, std::size_t length, Alphabet tag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pool = alphabet_letters(tag, n);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    letters.push_back(pool[rng() % pool.size()]);
  }
  return Word(tag, n, std::move(letters));
}

Word random_kernel_word(int n, std::size_t length, Hom h, std::uint64_t seed,
                        const Transversal& t) {
  Word prefix = random_word(n, length, Alphabet::braid, seed);
  const TransversalElement& tail = t.by_image(eval_hom(prefix, h).inverse());
  return concat(prefix, tail.word);
}

}  // namespace stvb
