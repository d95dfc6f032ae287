#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "oie/iaa.hpp"
#include "oie/ingest.hpp"
#include "oie/scorer.hpp"

namespace oie {

// Percentage rounded to one decimal for display.
double round1(double value);

std::string render_score_table(std::span<const ScoreReport> reports);
nlohmann::json score_report_json(const ScoreReport& report);

std::string render_stats_table(const StatsReport& stats);
nlohmann::json stats_json(const StatsReport& stats);

std::string render_iaa_table(const IaaReport& report);
nlohmann::json iaa_json(const IaaReport& report);

std::string render_sweep_table(std::span<const SweepPoint> points);
nlohmann::json sweep_json(std::span<const SweepPoint> points);

}  // namespace oie
