#pragma once

#include <array>

#include "qmg/quantum.hpp"
#include "qmg/rng.hpp"

namespace qmg {

enum class GameKind : std::uint8_t { Minority, AntiMinority };

// One of the referee's question assignments. Only lists with exactly one X
// (minority game) or exactly one Z (anti-minority game) are valid.
struct QuestionList {
  std::array<Question, 4> questions;

  Question question_for(int player) const { return questions.at(player - 1); }
  std::string str() const;
  bool operator==(const QuestionList&) const = default;
};

struct TaggedList {
  QuestionList list;
  GameKind kind;
};

// The 8 valid lists in chart order: the four minority lists (X in slot
// 1..4), then the four anti-minority lists (Z in slot 1..4).
const std::array<TaggedList, 8>& all_question_lists();

// Throws std::invalid_argument for lists outside the referee's promise.
GameKind classify(const QuestionList& list);

struct PayoffVector {
  std::array<double, 4> v{};

  double total() const { return v[0] + v[1] + v[2] + v[3]; }
};

// Referee's scoring. Minority: the lone dissenter (if any) gets 1. Anti-
// minority: everyone gets 1/4 when there is no lone dissenter. Identity of
// the winner never depends on who got which question.
PayoffVector payoff(const QuestionList& list, const AnswerProfile& answers);

// -1 for Minority, +1 for AntiMinority: a profile wins the game iff the
// product of its answers equals this value.
int win_condition_product(GameKind kind);

// Uniform draw over the 8 valid lists.
QuestionList referee_sample(Rng& rng);

struct Posterior {
  double minority;
  double anti;
};

// Probability of each game given the question a single player received.
Posterior posterior(Question q);

}  // namespace qmg
