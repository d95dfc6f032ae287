// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 7 is data-dependent and reports SKIP when the external
// dataset is not present.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "oie/baseline.hpp"
#include "oie/iaa.hpp"
#include "oie/ingest.hpp"
#include "oie/model.hpp"
#include "oie/report.hpp"
#include "oie/scorer.hpp"
#include "oie/text.hpp"

using namespace oie;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
  if (!ok) ++g_failures;
}

void skip(int id, const std::string& name, const std::string& why) {
  std::printf("[SKIP] criterion %d: %s (%s)\n", id, name.c_str(), why.c_str());
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

Token plain(const std::string& text) { return Token{text, std::nullopt, false}; }

Part make_part(Slot slot, std::vector<Token> tokens) {
  Part p;
  p.slot = slot;
  p.tokens = std::move(tokens);
  return p;
}

// ---------------------------------------------------------------------------
// Criterion 2 oracle: an independent implementation of "repeatedly remove the
// maximum-F1 candidate pair", built on std::multiset bags and a full rescan
// of the score matrix every round.
namespace oracle {

using Bag = std::multiset<std::string>;

Bag bag_of(const Part* part, bool include_inferred) {
  Bag bag;
  if (part == nullptr) return bag;
  for (const auto& token : part->tokens)
    if (include_inferred || !token.inferred) bag.insert(token.text);
  return bag;
}

int overlap(const Bag& a, Bag b) {
  int shared = 0;
  for (const auto& word : a) {
    auto it = b.find(word);
    if (it != b.end()) {
      ++shared;
      b.erase(it);
    }
  }
  return shared;
}

bool candidate(const TupleRecord& t, const TupleRecord& g) {
  for (Slot slot : {Slot::arg1, Slot::rel, Slot::arg2}) {
    const Bag gold_bag = bag_of(g.part(slot), false);
    if (gold_bag.empty()) continue;
    if (overlap(bag_of(t.part(slot), true), gold_bag) == 0) return false;
  }
  return true;
}

int length(const TupleRecord& t, bool include_inferred) {
  int n = 0;
  for (int s = 0; s < 6; ++s)
    n += static_cast<int>(
        bag_of(t.part(static_cast<Slot>(s)), include_inferred).size());
  return n;
}

std::vector<std::pair<int, int>> greedy(const std::vector<TupleRecord>& preds,
                                        const std::vector<TupleRecord>& golds) {
  std::vector<bool> used_pred(preds.size(), false);
  std::vector<bool> used_gold(golds.size(), false);
  std::vector<std::pair<int, int>> sequence;
  for (;;) {
    bool found = false;
    int best_pred = -1;
    int best_gold = -1;
    int best_shared = 0;
    double best_f1 = 0.0;
    for (size_t pi = 0; pi < preds.size(); ++pi) {
      if (used_pred[pi]) continue;
      for (size_t gi = 0; gi < golds.size(); ++gi) {
        if (used_gold[gi]) continue;
        if (!candidate(preds[pi], golds[gi])) continue;
        int shared = 0;
        for (int s = 0; s < 6; ++s)
          shared += overlap(bag_of(preds[pi].part(static_cast<Slot>(s)), true),
                            bag_of(golds[gi].part(static_cast<Slot>(s)), false));
        const int len_t = length(preds[pi], true);
        const int len_g = length(golds[gi], false);
        const double p = len_t > 0 ? static_cast<double>(shared) / len_t : 0.0;
        const double r = len_g > 0 ? static_cast<double>(shared) / len_g : 0.0;
        const double f1 = p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
        const bool better =
            !found || f1 > best_f1 ||
            (f1 == best_f1 &&
             (shared > best_shared ||
              (shared == best_shared &&
               (static_cast<int>(gi) < best_gold ||
                (static_cast<int>(gi) == best_gold &&
                 static_cast<int>(pi) < best_pred)))));
        if (better) {
          found = true;
          best_pred = static_cast<int>(pi);
          best_gold = static_cast<int>(gi);
          best_shared = shared;
          best_f1 = f1;
        }
      }
    }
    if (!found) break;
    used_pred[best_pred] = true;
    used_gold[best_gold] = true;
    sequence.emplace_back(best_pred, best_gold);
  }
  return sequence;
}

}  // namespace oracle

TupleRecord random_tuple(std::mt19937& rng, bool gold) {
  std::uniform_int_distribution<int> vocab(0, 7);
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution inferred(0.2);
  std::bernoulli_distribution with_arg2(0.8);
  std::bernoulli_distribution with_arg3(0.3);

  TupleRecord t;
  t.sentence_id = "s";
  for (Slot slot : {Slot::arg1, Slot::rel, Slot::arg2, Slot::arg3}) {
    if (slot == Slot::arg2 && !with_arg2(rng)) continue;
    if (slot == Slot::arg3 && (!t.part(Slot::arg2) || !with_arg3(rng))) continue;
    Part p;
    p.slot = slot;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Token token = plain("w" + std::to_string(vocab(rng)));
      if (gold) token.inferred = inferred(rng);
      p.tokens.push_back(std::move(token));
    }
    t.parts[slot] = std::move(p);
  }
  return t;
}

// Ten 12-token sentences; every gold tuple covers at most half the tokens.
GoldSet synthetic_corpus() {
  GoldSet gold;
  for (int si = 0; si < 10; ++si) {
    std::vector<std::string> words;
    for (int wi = 0; wi < 12; ++wi) {
      char buffer[16];
      std::snprintf(buffer, sizeof(buffer), "s%dw%02d", si, wi);
      words.push_back(buffer);
    }
    Sentence s;
    s.doc_id = "C";
    s.sentence_id = "c" + std::to_string(si);
    s.text = join_tokens(words);
    s.tokens = tokenize(s.text);

    auto at = [&](int i) { return Token{words[i], i, false}; };
    TupleRecord first;
    first.sentence_id = s.sentence_id;
    first.parts[Slot::arg1] = make_part(Slot::arg1, {at(0), at(1)});
    first.parts[Slot::rel] = make_part(Slot::rel, {at(2)});
    first.parts[Slot::arg2] = make_part(Slot::arg2, {at(3), at(4)});
    TupleRecord second;
    second.sentence_id = s.sentence_id;
    second.parts[Slot::arg1] = make_part(Slot::arg1, {at(5)});
    second.parts[Slot::rel] = make_part(Slot::rel, {at(6)});
    second.parts[Slot::arg2] = make_part(Slot::arg2, {at(7), at(8)});

    gold.sentences.push_back(std::move(s));
    gold.tuples.push_back(std::move(first));
    gold.tuples.push_back(std::move(second));
  }
  return gold;
}

// A small reference with inferred tokens and anaphora.
GoldSet inferred_corpus() {
  const char* text = R"({
    "documents": [{
      "doc_id": "D",
      "sentences": [
        {
          "sentence_id": "m1",
          "text": "His parents had to flee from Hungary during the war.",
          "tuples": [
            {"parts": {
              "arg1": {"tokens": [{"text": "his", "index": 0},
                                  {"text": "parents", "index": 1}],
                       "resolved_text": "Victor Keel's parents"},
              "rel": {"tokens": [{"text": "fled", "index": "inf"},
                                 {"text": "from", "index": 5}]},
              "arg2": {"tokens": [{"text": "hungary", "index": 6}]}
            }},
            {"parts": {
              "arg1": {"tokens": [{"text": "victor", "index": "inf"},
                                  {"text": "keel", "index": "inf"}]},
              "rel": {"tokens": [{"text": "has", "index": "inf"}]},
              "arg2": {"tokens": [{"text": "parents", "index": 1}]}
            }}
          ]
        },
        {
          "sentence_id": "m2",
          "text": "Timo Soini is the deputy head.",
          "tuples": [
            {"parts": {
              "arg1": {"tokens": [{"text": "timo", "index": 0},
                                  {"text": "soini", "index": 1}]},
              "rel": {"tokens": [{"text": "is", "index": 2}]},
              "arg2": {"tokens": [{"text": "the", "index": 3},
                                  {"text": "deputy", "index": 4},
                                  {"text": "head", "index": 5}]}
            }}
          ]
        }
      ]
    }]
  })";
  return parse_gold(nlohmann::json::parse(text));
}

TokenGrid blank_grid(int tokens) {
  TokenGrid grid;
  grid.sentence_id = "g";
  grid.cells.assign(tokens, {});
  return grid;
}

TokenGrid flipped_grid(int tokens, int flipped) {
  TokenGrid grid = blank_grid(tokens);
  int remaining = flipped;
  for (int row = 0; row < tokens && remaining > 0; ++row)
    for (int col = 0; col < kGridClasses && remaining > 0; ++col) {
      grid.cells[row][col] = true;
      --remaining;
    }
  return grid;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const char* text = R"({
    "documents": [{
      "doc_id": "D",
      "sentences": [{
        "sentence_id": "s1",
        "text": "His parents had to flee from Hungary during the war.",
        "tuples": [{"parts": {
          "arg1": {"tokens": [{"text": "his", "index": 0},
                              {"text": "parents", "index": 1}]},
          "rel": {"tokens": [{"text": "had", "index": 2},
                             {"text": "to", "index": 3},
                             {"text": "flee", "index": 4},
                             {"text": "from", "index": 5}]},
          "arg2": {"tokens": [{"text": "hungary", "index": 6}]},
          "arg3": {"tokens": [{"text": "during", "index": 7},
                              {"text": "the", "index": 8},
                              {"text": "war", "index": 9}]}
        }}]
      }]
    }]
  })";
  const GoldSet gold = parse_gold(nlohmann::json::parse(text));

  const PredictionSet preds = parse_uniform(
      nlohmann::json::parse(R"([{"sentence_id": "s1", "arg1": "his parents",
        "rel": "had to flee from", "arg2": "Hungary"}])"),
      "hand");

  const PairScore score = pair_score(preds.tuples[0], gold.tuples[0]);
  const bool ok = score.precision == 1.0 &&
                  near(score.recall, 0.7, 1e-12) &&
                  near(score.f1, 14.0 / 17.0, 1e-9);
  criterion(1, "pairwise score of the complement-dropping fixture "
               "(P 1.0, R 0.7, F1 14/17)", ok);
}

void criterion_2() {
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> size(0, 5);
  bool ok = true;
  for (int iter = 0; iter < 200 && ok; ++iter) {
    std::vector<TupleRecord> preds;
    std::vector<TupleRecord> golds;
    const int np = size(rng);
    const int ng = size(rng);
    for (int i = 0; i < np; ++i) preds.push_back(random_tuple(rng, false));
    for (int i = 0; i < ng; ++i) golds.push_back(random_tuple(rng, true));

    std::vector<const TupleRecord*> pred_ptrs;
    std::vector<const TupleRecord*> gold_ptrs;
    for (const auto& t : preds) pred_ptrs.push_back(&t);
    for (const auto& g : golds) gold_ptrs.push_back(&g);

    const Matching matching = greedy_match(pred_ptrs, gold_ptrs);
    std::vector<std::pair<int, int>> sequence;
    for (const auto& pair : matching.pairs)
      sequence.emplace_back(pair.pred_id, pair.gold_id);

    if (sequence != oracle::greedy(preds, golds)) ok = false;
  }
  criterion(2, "greedy matching equals the brute-force max-F1 oracle on 200 "
               "random instances", ok);
}

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();

  const GoldSet gold = synthetic_corpus();
  const PredictionSet munchkin = munchkin_predictions(gold);
  const ScoreReport munchkin_report = system_scores(gold, munchkin);
  const ScoreReport honest_report =
      system_scores(gold, gold_as_predictions(gold));

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  const bool ok = munchkin_report.precision <= 0.55 &&
                  honest_report.f1 == 1.0 &&
                  munchkin_report.f1 < honest_report.f1 &&
                  elapsed.count() < 1000;
  criterion(3, "full-sentence splits score precision <= 0.55 and strictly "
               "below the honest extractor", ok);
}

void criterion_4() {
  // Identity on the explicit corpus.
  const GoldSet explicit_gold = synthetic_corpus();
  const ScoreReport self =
      system_scores(explicit_gold, gold_as_predictions(explicit_gold));
  const bool identity =
      self.precision == 1.0 && self.recall == 1.0 &&
      self.exact_matches == static_cast<long long>(explicit_gold.tuples.size());

  // With inferred gold tokens the materialized self-run still recalls every
  // scorable word and matches every tuple exactly.
  const GoldSet inferred_gold = inferred_corpus();
  const ScoreReport materialized =
      system_scores(inferred_gold, gold_as_predictions(inferred_gold));
  const bool with_inferred =
      materialized.recall == 1.0 &&
      materialized.exact_matches ==
          static_cast<long long>(inferred_gold.tuples.size());

  criterion(4, "self-score identity (P = R = 1.0, every tuple exact)",
            identity && with_inferred);
}

void criterion_5() {
  bool ok = true;
  auto check_cells = [&](int tokens, int agreeing, double expected) {
    const int cells = tokens * kGridClasses;
    const double agreement = grid_agreement(
        blank_grid(tokens), flipped_grid(tokens, cells - agreeing));
    if (!near(round1(agreement), expected, 1e-9)) ok = false;
  };

  check_cells(24, 81, 84.4);
  check_cells(24, 87, 90.6);
  check_cells(24, 90, 93.8);
  check_cells(19, 75, 98.7);
  check_cells(19, 75, 98.7);
  check_cells(19, 76, 100.0);
  check_cells(33, 103, 78.0);
  check_cells(33, 120, 90.9);
  check_cells(33, 113, 85.6);

  const std::pair<int, double> rows[] = {{24, 84.4}, {19, 98.7}, {33, 78.0}};
  if (!near(round1(corpus_agreement(rows)), 85.2, 1e-9)) ok = false;

  criterion(5, "agreement grid arithmetic and the token-wise average", ok);
}

void criterion_6() {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> pad_count(1, 3);
  std::uniform_int_distribution<int> pick_slot(0, 2);
  bool verbosity_ok = true;
  bool duplication_ok = true;
  bool inferred_ok = true;
  bool boundary_ok = true;

  for (int iter = 0; iter < 200; ++iter) {
    // Verbosity: padding a predicted part with words foreign to the gold
    // tuple never increases pairwise precision, never changes shared.
    {
      TupleRecord g = random_tuple(rng, false);  // explicit gold
      TupleRecord t = g;
      const PairScore before = pair_score(t, g);
      const Slot slot = static_cast<Slot>(pick_slot(rng));
      Part& target = t.parts[slot];
      target.slot = slot;
      const int n = pad_count(rng);
      for (int i = 0; i < n; ++i)
        target.tokens.push_back(plain("zz" + std::to_string(iter) + "_" +
                                      std::to_string(i)));
      const PairScore after = pair_score(t, g);
      if (after.precision > before.precision || after.shared != before.shared)
        verbosity_ok = false;
    }

    // One-to-one: duplicating predictions cannot raise recall.
    {
      GoldSet gold;
      PredictionSet preds;
      preds.system_name = "dup";
      for (int si = 0; si < 3; ++si) {
        const std::string id = "s" + std::to_string(si);
        Sentence s;
        s.doc_id = "D";
        s.sentence_id = id;
        gold.sentences.push_back(s);
        for (int i = 0; i < 2; ++i) {
          TupleRecord g = random_tuple(rng, false);
          g.sentence_id = id;
          gold.tuples.push_back(g);
          preds.tuples.push_back(g);  // covering prediction set
        }
      }
      const double base = system_scores(gold, preds).recall;
      PredictionSet doubled = preds;
      for (const auto& t : preds.tuples) doubled.tuples.push_back(t);
      const double duped = system_scores(gold, doubled).recall;
      if (base != 1.0 || duped != 1.0 || duped > base) duplication_ok = false;
    }

    // Inferred-token exclusion: new inferred gold words change no pairwise
    // score, only the exact-match status.
    {
      TupleRecord g = random_tuple(rng, false);
      TupleRecord t = g;
      const PairScore before = pair_score(t, g);
      std::uniform_int_distribution<int> vocab(0, 7);
      const int n = pad_count(rng);
      for (int i = 0; i < n; ++i) {
        Part& target = g.parts[static_cast<Slot>(pick_slot(rng))];
        Token token = plain("w" + std::to_string(vocab(rng)));
        token.inferred = true;
        std::uniform_int_distribution<size_t> at(0, target.tokens.size());
        target.tokens.insert(target.tokens.begin() + at(rng), std::move(token));
      }
      const PairScore after = pair_score(t, g);
      if (after.shared != before.shared ||
          after.precision != before.precision || after.recall != before.recall)
        inferred_ok = false;
      if (exact_match(t, g, true)) inferred_ok = false;  // new words required
      if (!exact_match(t, g, false)) inferred_ok = false;
    }

    // Slot boundary: moving complement tokens into the predicted arg2 loses
    // their shared credit.
    {
      TupleRecord g;
      g.sentence_id = "s";
      g.parts[Slot::arg1] = make_part(Slot::arg1, {plain("a1"), plain("a2")});
      g.parts[Slot::rel] = make_part(Slot::rel, {plain("r1")});
      g.parts[Slot::arg2] = make_part(Slot::arg2, {plain("b1"), plain("b2")});
      const int complement = pad_count(rng);
      Part arg3;
      arg3.slot = Slot::arg3;
      for (int i = 0; i < complement; ++i)
        arg3.tokens.push_back(plain("c" + std::to_string(i)));
      g.parts[Slot::arg3] = arg3;

      TupleRecord t = g;
      const PairScore before = pair_score(t, g);
      Part& arg2 = t.parts[Slot::arg2];
      for (const auto& token : t.parts[Slot::arg3].tokens)
        arg2.tokens.push_back(token);
      t.parts.erase(Slot::arg3);
      const PairScore after = pair_score(t, g);
      if (after.shared != before.shared - complement) boundary_ok = false;
    }
  }

  criterion(6, "verbosity, one-to-one, inferred-exclusion and slot-boundary "
               "properties over randomized tuples",
            verbosity_ok && duplication_ok && inferred_ok && boundary_ok);
}

struct ExpectedRow {
  long long extractions, matches, exact;
  double match_p, match_r, precision, recall, f1;
};

void criterion_7() {
  const char* gold_env = std::getenv("OIE_WIRE_GOLD");
  if (gold_env == nullptr) {
    skip(7, "released-dataset reproduction", "external dataset not present");
    return;
  }

  bool ok = true;
  const GoldSet gold = load_gold(gold_env);
  const StatsReport stats = resource_stats(gold);
  ok = ok && stats.tuples == 343 && stats.with_anaphora == 196 &&
       stats.with_inferred == 186 && stats.hallucinated == 135 &&
       stats.arity_histogram[2] == 254 && stats.arity_histogram[3] == 72 &&
       stats.arity_histogram[4] == 16 && stats.arity_histogram[5] == 1 &&
       stats.inferred_tokens == 347 && stats.total_tokens == 2597;

  const std::map<std::string, ExpectedRow> expected = {
      {"reverb", {79, 54, 13, .83, .77, .569, .121, .200}},
      {"ollie", {145, 74, 8, .73, .81, .347, .175, .239}},
      {"clausie", {223, 121, 24, .74, .84, .401, .298, .342}},
      {"stanford", {371, 99, 2, .79, .65, .210, .188, .198}},
      {"openie4", {101, 74, 5, .68, .84, .501, .182, .267}},
      {"props", {184, 69, 0, .59, .80, .222, .162, .187}},
      {"minie", {252, 134, 10, .75, .83, .400, .323, .358}},
  };

  if (const char* systems_env = std::getenv("OIE_WIRE_SYSTEMS")) {
    for (const auto& entry :
         std::filesystem::directory_iterator(systems_env)) {
      const std::string stem = entry.path().stem().string();
      const auto it = expected.find(stem);
      if (it == expected.end()) continue;
      const PredictionSet preds = load_predictions(
          entry.path().string(), PredictionFormat::uniform, stem);
      const ScoreReport report = system_scores(gold, preds);
      const ExpectedRow& row = it->second;
      ok = ok && report.extractions == row.extractions &&
           report.matches == row.matches &&
           report.exact_matches == row.exact &&
           near(report.precision, row.precision, 0.005) &&
           near(report.recall, row.recall, 0.005) &&
           near(report.f1, row.f1, 0.005);
    }
  }
  criterion(7, "released-dataset reproduction", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
