#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "oie/ingest.hpp"

using namespace oie;
using namespace oie::test;
using nlohmann::json;

namespace {

const char* kMinimalGold = R"({
  "documents": [
    {
      "doc_id": "D",
      "sentences": [
        {
          "sentence_id": "x1",
          "text": "Tokyo is the capital of Japan.",
          "tuples": [
            {
              "parts": {
                "arg1": {"tokens": [{"text": "Tokyo", "index": 0}]},
                "rel": {"tokens": [{"text": "is", "index": 1},
                                   {"text": "the", "index": 2},
                                   {"text": "capital", "index": 3},
                                   {"text": "of", "index": 4}]},
                "arg2": {"tokens": [{"text": "Japan", "index": 5}]}
              }
            }
          ]
        }
      ]
    }
  ]
})";

}  // namespace

TEST_CASE("minimal gold file parses into one sentence and one tuple") {
  const GoldSet gold = parse_gold(json::parse(kMinimalGold));
  REQUIRE(gold.sentences.size() == 1);
  REQUIRE(gold.tuples.size() == 1);
  CHECK(gold.sentences[0].tokens.size() == 7);
  CHECK(gold.tuples[0].part(Slot::arg1)->tokens[0].text == "tokyo");
  CHECK(gold.tuples[0].part(Slot::arg1)->tokens[0].index == 0);
}

TEST_CASE("gold fixture loads with provenance intact") {
  const GoldSet gold = load_gold(data_path("mini_gold.json"));
  CHECK(gold.sentences.size() == 4);
  CHECK(gold.tuples.size() == 4);
  CHECK(validate_gold(gold).empty());
}

TEST_CASE("gold round-trips through its serialization") {
  const GoldSet gold = load_gold(data_path("mini_gold.json"));
  const GoldSet again = parse_gold(gold_to_json(gold));
  CHECK(gold == again);
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(load_gold(data_path("nonexistent.json")), IoError);
  CHECK_THROWS_AS(load_gold(data_path("malformed.json")), ParseError);
  CHECK_THROWS_AS(load_gold(data_path("bad_index.json")), IntegrityError);
  CHECK_THROWS_AS(load_gold(data_path("mismatch.json")), IntegrityError);
  // a sixth argument is not expressible in the schema
  CHECK_THROWS_AS(load_gold(data_path("arg6.json")), ParseError);
}

TEST_CASE("duplicate sentence ids are rejected") {
  json root = json::parse(kMinimalGold);
  root["documents"][0]["sentences"].push_back(
      root["documents"][0]["sentences"][0]);
  CHECK_THROWS_AS(parse_gold(root), ParseError);
}

TEST_CASE("a gold token must be a single token") {
  json root = json::parse(kMinimalGold);
  root["documents"][0]["sentences"][0]["tuples"][0]["parts"]["rel"]["tokens"] =
      json::array({json{{"text", "is in"}, {"index", "inf"}}});
  CHECK_THROWS_AS(parse_gold(root), IntegrityError);
}

TEST_CASE("validate_gold flags an empty relation") {
  const GoldSet gold = load_gold(data_path("empty_rel.json"));
  const auto issues = validate_gold(gold);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == Severity::error);
  CHECK(issues[0].message.find("relation") != std::string::npos);
}

TEST_CASE("validate_gold flags non-contiguous argument slots") {
  GoldSet gold;
  gold.sentences.push_back(sentence("s1", "a b c d"));
  TupleRecord t = tuple3("s1", "a", "b", "c");
  t.parts[Slot::arg4] = word_part(Slot::arg4, "d");  // arg4 without arg3
  gold.tuples.push_back(t);
  const auto issues = validate_gold(gold);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].message.find("arg4") != std::string::npos);
}

TEST_CASE("validate_gold warns when a resolved span equals the raw span") {
  GoldSet gold;
  gold.sentences.push_back(sentence("s1", "a b c"));
  TupleRecord t = tuple3("s1", "a", "b", "c");
  t.parts[Slot::arg1].resolved_text = "a";
  gold.tuples.push_back(t);
  const auto issues = validate_gold(gold);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == Severity::warning);
}

TEST_CASE("uniform prediction record becomes a six-token tuple") {
  const json root = json::parse(R"([
    {"sentence_id": "x1", "arg1": "Tokyo", "rel": "is the capital of",
     "arg2": "Japan", "confidence": 0.9}
  ])");
  const PredictionSet preds = parse_uniform(root, "sys");
  REQUIRE(preds.tuples.size() == 1);
  CHECK(tuple_length(preds.tuples[0], true) == 6);
  CHECK(preds.tuples[0].confidence == 0.9);
}

TEST_CASE("uniform confidence defaults to 1.0 and clamps") {
  const json root = json::parse(R"([
    {"sentence_id": "a", "arg1": "x", "rel": "y"},
    {"sentence_id": "a", "arg1": "x", "rel": "y", "confidence": 3.7},
    {"sentence_id": "a", "arg1": "x", "rel": "y", "confidence": -0.5}
  ])");
  const PredictionSet preds = parse_uniform(root, "sys");
  CHECK(preds.tuples[0].confidence == 1.0);
  CHECK(preds.tuples[1].confidence == 1.0);
  CHECK(preds.tuples[2].confidence == 0.0);
}

TEST_CASE("extra uniform args fill arg3..arg5 and fold into arg5") {
  const json root = json::parse(R"([
    {"sentence_id": "a", "arg1": "x", "rel": "y", "arg2": "z",
     "args": ["p q", "r", "s", "t u"]}
  ])");
  const PredictionSet preds = parse_uniform(root, "sys");
  const TupleRecord& t = preds.tuples[0];
  REQUIRE(t.part(Slot::arg3) != nullptr);
  REQUIRE(t.part(Slot::arg4) != nullptr);
  REQUIRE(t.part(Slot::arg5) != nullptr);
  CHECK(t.part(Slot::arg3)->tokens.size() == 2);
  CHECK(t.part(Slot::arg4)->tokens.size() == 1);
  // "s" plus the folded "t u"
  CHECK(t.part(Slot::arg5)->tokens.size() == 3);
  CHECK(tuple_length(t, true) == 9);
}

TEST_CASE("tsv prediction parsing") {
  const GoldSet gold = load_gold(data_path("mini_gold.json"));
  const PredictionSet preds =
      load_predictions(data_path("preds.tsv"), PredictionFormat::tsv);
  CHECK(preds.system_name == "preds");
  REQUIRE(preds.tuples.size() == 3);
  CHECK(preds.tuples[0].confidence == 0.9);
  // row without a confidence column
  CHECK(preds.tuples[1].confidence == 1.0);
  CHECK(preds.tuples[1].part(Slot::arg1)->tokens.size() == 2);
  // unary row
  CHECK(preds.tuples[2].confidence == 0.7);
  CHECK(preds.tuples[2].part(Slot::arg2) == nullptr);
  CHECK(unknown_sentence_issues(preds, gold).empty());
}

TEST_CASE("uniform loader takes the system name from the extractor field") {
  const PredictionSet preds = load_predictions(data_path("preds_uniform.json"),
                                               PredictionFormat::uniform);
  CHECK(preds.system_name == "toy");
  REQUIRE(preds.tuples.size() == 3);
}

TEST_CASE("unknown sentence ids are warnings, tuples kept") {
  const GoldSet gold = load_gold(data_path("mini_gold.json"));
  const PredictionSet preds = load_predictions(data_path("preds_uniform.json"),
                                               PredictionFormat::uniform);
  const auto issues = unknown_sentence_issues(preds, gold);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == Severity::warning);
  CHECK(issues[0].location.find("s9") != std::string::npos);
}

TEST_CASE("predictions round-trip through the uniform writer") {
  const PredictionSet preds = load_predictions(data_path("preds_uniform.json"),
                                               PredictionFormat::uniform, "toy");
  const PredictionSet again = parse_uniform(predictions_to_json(preds), "toy");
  CHECK(preds == again);
}

TEST_CASE("resource stats over the fixture") {
  const StatsReport stats = resource_stats(load_gold(data_path("mini_gold.json")));
  CHECK(stats.tuples == 4);
  CHECK(stats.with_anaphora == 1);
  CHECK(stats.with_inferred == 1);
  CHECK(stats.hallucinated == 1);
  CHECK(stats.arity_histogram[1] == 1);
  CHECK(stats.arity_histogram[2] == 2);
  CHECK(stats.arity_histogram[3] == 1);
  CHECK(stats.inferred_tokens == 2);
  CHECK(stats.total_tokens == 23);

  int histogram_total = 0;
  for (int n : stats.arity_histogram) histogram_total += n;
  CHECK(histogram_total == stats.tuples);
}

TEST_CASE("resource stats of an empty set are all zero") {
  const StatsReport stats = resource_stats(GoldSet{});
  CHECK(stats.tuples == 0);
  CHECK(stats.with_anaphora == 0);
  CHECK(stats.with_inferred == 0);
  CHECK(stats.hallucinated == 0);
  CHECK(stats.total_tokens == 0);
}

TEST_CASE("resource stats of a single explicit binary tuple") {
  GoldSet gold;
  gold.sentences.push_back(sentence("s1", "cats chase mice"));
  TupleRecord t;
  t.sentence_id = "s1";
  t.parts[Slot::arg1] = part(Slot::arg1, {tok_at("cats", 0)});
  t.parts[Slot::rel] = part(Slot::rel, {tok_at("chase", 1)});
  t.parts[Slot::arg2] = part(Slot::arg2, {tok_at("mice", 2)});
  gold.tuples.push_back(t);

  const StatsReport stats = resource_stats(gold);
  CHECK(stats.tuples == 1);
  CHECK(stats.arity_histogram[2] == 1);
  CHECK(stats.with_anaphora == 0);
  CHECK(stats.with_inferred == 0);
  CHECK(stats.hallucinated == 0);
}

TEST_CASE("gold_as_predictions materializes inferred tokens") {
  const GoldSet gold = load_gold(data_path("mini_gold.json"));
  const PredictionSet self = gold_as_predictions(gold);
  CHECK(self.system_name == "self");
  REQUIRE(self.tuples.size() == gold.tuples.size());
  for (const auto& t : self.tuples) {
    CHECK(t.confidence == 1.0);
    for (const auto& [slot, p] : t.parts)
      for (const auto& token : p.tokens) {
        CHECK_FALSE(token.inferred);
        CHECK_FALSE(token.index.has_value());
      }
  }
  // the fully inferred relation of s2's second tuple is now plain text
  CHECK(tuple_length(self.tuples[2], false) == 4);
}
