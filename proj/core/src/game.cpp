#include "qmg/game.hpp"

#include <stdexcept>

namespace qmg {

namespace {

QuestionList list_with_lone(Question lone, int player) {
  const Question other = lone == Question::X ? Question::Z : Question::X;
  QuestionList l{{other, other, other, other}};
  l.questions[player - 1] = lone;
  return l;
}

std::array<TaggedList, 8> make_chart() {
  std::array<TaggedList, 8> chart{};
  for (int p = 1; p <= 4; ++p) {
    chart[p - 1] = {list_with_lone(Question::X, p), GameKind::Minority};
    chart[p + 3] = {list_with_lone(Question::Z, p), GameKind::AntiMinority};
  }
  return chart;
}

}  // namespace

std::string QuestionList::str() const {
  std::string s;
  for (const Question q : questions) s.push_back(question_letter(q));
  return s;
}

const std::array<TaggedList, 8>& all_question_lists() {
  static const std::array<TaggedList, 8> chart = make_chart();
  return chart;
}

GameKind classify(const QuestionList& list) {
  int x_count = 0;
  for (const Question q : list.questions) {
    if (q == Question::X) ++x_count;
  }
  if (x_count == 1) return GameKind::Minority;
  if (x_count == 3) return GameKind::AntiMinority;
  throw std::invalid_argument("question list " + list.str() +
                              " is outside the referee's promise");
}

PayoffVector payoff(const QuestionList& list, const AnswerProfile& answers) {
  const GameKind kind = classify(list);
  int plus_count = 0;
  for (const int a : answers.answers) {
    if (a == 1) ++plus_count;
  }
  PayoffVector out{};
  if (kind == GameKind::Minority) {
    // Exactly one player differs from the other three.
    if (plus_count == 1 || plus_count == 3) {
      const int lone = plus_count == 1 ? 1 : -1;
      for (int i = 0; i < 4; ++i) {
        if (answers.answers[i] == lone) out.v[i] = 1.0;
      }
    }
  } else {
    // 4-0 or 2-2 split: no lone dissenter.
    if (plus_count % 2 == 0) {
      out.v = {0.25, 0.25, 0.25, 0.25};
    }
  }
  return out;
}

int win_condition_product(GameKind kind) {
  return kind == GameKind::Minority ? -1 : 1;
}

QuestionList referee_sample(Rng& rng) {
  return all_question_lists()[rng.uniform_int(8)].list;
}

Posterior posterior(Question q) {
  // A single X question leaves 1 minority list and 3 anti-minority lists
  // alive; a Z question reverses that.
  return q == Question::X ? Posterior{0.25, 0.75} : Posterior{0.75, 0.25};
}

}  // namespace qmg
