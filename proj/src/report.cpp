#include "oie/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "oie/text.hpp"
#include "oie/version.hpp"

namespace oie {

using nlohmann::json;

namespace {

std::string fmt(const char* format, ...) {
  char buffer[2048];
  va_list args;
  va_start(args, format);
  vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

std::string banner() {
  return fmt("# oie-eval %s | normalization %s\n",
             std::string(kVersion).c_str(),
             std::string(kNormalizationId).c_str());
}

}  // namespace

double round1(double value) { return std::round(value * 10.0) / 10.0; }

std::string render_score_table(std::span<const ScoreReport> reports) {
  size_t width = 6;
  for (const auto& r : reports) width = std::max(width, r.system_name.size());

  std::string out = banner();
  out += fmt("%-*s  %11s  %7s  %13s  %16s  %17s  %6s  %6s  %6s\n",
             static_cast<int>(width), "System", "Extractions", "Matches",
             "Exact matches", "Prec. of matches", "Recall of matches", "Prec.",
             "Recall", "F1");
  for (const auto& r : reports) {
    out += fmt("%-*s  %11lld  %7lld  %13lld  %16.2f  %17.2f  %6.3f  %6.3f  %6.3f%s\n",
               static_cast<int>(width), r.system_name.c_str(), r.extractions,
               r.matches, r.exact_matches, r.matches_precision,
               r.matches_recall, r.precision, r.recall, r.f1,
               r.no_extractions ? "  [no extractions]" : "");
  }
  return out;
}

json score_report_json(const ScoreReport& r) {
  return json{{"system", r.system_name},
              {"extractions", r.extractions},
              {"gold_tuples", r.gold_tuples},
              {"matches", r.matches},
              {"exact_matches", r.exact_matches},
              {"matches_precision", r.matches_precision},
              {"matches_recall", r.matches_recall},
              {"matches_precision_weighted", r.matches_precision_weighted},
              {"matches_recall_weighted", r.matches_recall_weighted},
              {"precision", r.precision},
              {"recall", r.recall},
              {"f1", r.f1},
              {"no_extractions", r.no_extractions}};
}

std::string render_stats_table(const StatsReport& s) {
  const double total = s.tuples > 0 ? s.tuples : 1;
  auto pct = [&](long long n) { return 100.0 * n / total; };

  std::string out = banner();
  out += fmt("%-28s  %9s  %6s\n", "Phenomenon", "N", "%");
  out += fmt("%-28s  %9d  %6.1f\n", "All tuples", s.tuples,
             s.tuples > 0 ? 100.0 : 0.0);
  out += fmt("%-28s  %9d  %6.1f\n", "Anaphora", s.with_anaphora,
             pct(s.with_anaphora));
  out += fmt("%-28s  %9d  %6.1f\n", "Contains inferred words", s.with_inferred,
             pct(s.with_inferred));
  out += fmt("%-28s  %9d  %6.1f\n", "Hallucinated relations", s.hallucinated,
             pct(s.hallucinated));
  if (s.arity_histogram[0] > 0)
    out += fmt("%-28s  %9d  %6.1f\n", "No arguments", s.arity_histogram[0],
               pct(s.arity_histogram[0]));
  if (s.arity_histogram[1] > 0)
    out += fmt("%-28s  %9d  %6.1f\n", "Unary relations", s.arity_histogram[1],
               pct(s.arity_histogram[1]));
  out += fmt("%-28s  %9d  %6.1f\n", "Binary relations", s.arity_histogram[2],
             pct(s.arity_histogram[2]));
  out += fmt("%-28s  %9d  %6.1f\n", "n-ary, n = 3", s.arity_histogram[3],
             pct(s.arity_histogram[3]));
  out += fmt("%-28s  %9d  %6.1f\n", "n-ary, n = 4", s.arity_histogram[4],
             pct(s.arity_histogram[4]));
  out += fmt("%-28s  %9d  %6.1f\n", "n-ary, n = 5", s.arity_histogram[5],
             pct(s.arity_histogram[5]));

  const std::string ratio =
      std::to_string(s.inferred_tokens) + "/" + std::to_string(s.total_tokens);
  const double inferred_pct =
      s.total_tokens > 0 ? 100.0 * s.inferred_tokens / s.total_tokens : 0.0;
  out += fmt("%-28s  %9s  %6.1f\n", "Inferred words", ratio.c_str(),
             inferred_pct);
  return out;
}

json stats_json(const StatsReport& s) {
  return json{
      {"tuples", s.tuples},
      {"anaphora", s.with_anaphora},
      {"contains_inferred", s.with_inferred},
      {"hallucinated_relations", s.hallucinated},
      {"arity_histogram",
       {{"0", s.arity_histogram[0]},
        {"1", s.arity_histogram[1]},
        {"2", s.arity_histogram[2]},
        {"3", s.arity_histogram[3]},
        {"4", s.arity_histogram[4]},
        {"5", s.arity_histogram[5]}}},
      {"inferred_tokens", s.inferred_tokens},
      {"total_tokens", s.total_tokens},
      {"inferred_ratio",
       s.total_tokens > 0
           ? static_cast<double>(s.inferred_tokens) / s.total_tokens
           : 0.0},
      {"notes",
       "anaphora counts tuples with at least one coreference-resolved part"}};
}

std::string render_iaa_table(const IaaReport& r) {
  const bool with_ref = r.avg_a_ref.has_value();

  std::string out = banner();
  if (with_ref)
    out += fmt("%-16s  %8s  %7s  %7s  %7s\n", "Sentence", "# tokens", "1<->2",
               "1<->R", "2<->R");
  else
    out += fmt("%-16s  %8s  %7s\n", "Sentence", "# tokens", "1<->2");

  for (const auto& row : r.rows) {
    if (with_ref)
      out += fmt("%-16s  %8d  %7.1f  %7.1f  %7.1f\n", row.sentence_id.c_str(),
                 row.tokens, round1(row.a_b), round1(*row.a_ref),
                 round1(*row.b_ref));
    else
      out += fmt("%-16s  %8d  %7.1f\n", row.sentence_id.c_str(), row.tokens,
                 round1(row.a_b));
  }
  if (with_ref)
    out += fmt("%-16s  %8s  %7.1f  %7.1f  %7.1f\n", "Average", "",
               round1(r.avg_a_b), round1(*r.avg_a_ref), round1(*r.avg_b_ref));
  else
    out += fmt("%-16s  %8s  %7.1f\n", "Average", "", round1(r.avg_a_b));
  return out;
}

json iaa_json(const IaaReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json node = {{"sentence_id", row.sentence_id},
                 {"tokens", row.tokens},
                 {"agreement_1_2", row.a_b}};
    if (row.a_ref) node["agreement_1_ref"] = *row.a_ref;
    if (row.b_ref) node["agreement_2_ref"] = *row.b_ref;
    rows.push_back(std::move(node));
  }
  json out = {{"sentences", std::move(rows)},
              {"average_1_2", r.avg_a_b},
              {"average_computed", "token-wise"}};
  if (r.avg_a_ref) out["average_1_ref"] = *r.avg_a_ref;
  if (r.avg_b_ref) out["average_2_ref"] = *r.avg_b_ref;
  return out;
}

std::string render_sweep_table(std::span<const SweepPoint> points) {
  std::string out = banner();
  out += fmt("%9s  %11s  %6s  %6s\n", "Threshold", "Extractions", "Prec.",
             "Recall");
  for (const auto& p : points)
    out += fmt("%9.3f  %11lld  %6.3f  %6.3f\n", p.threshold, p.extractions,
               p.precision, p.recall);
  return out;
}

json sweep_json(std::span<const SweepPoint> points) {
  json out = json::array();
  for (const auto& p : points)
    out.push_back({{"threshold", p.threshold},
                   {"extractions", p.extractions},
                   {"precision", p.precision},
                   {"recall", p.recall}});
  return out;
}

}  // namespace oie
