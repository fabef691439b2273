// Serialization and rendering: plan and sheet JSON, ASCII and SVG boards,
// CSV tables, the folded quarter view, and structural diffs.
#pragma once

#include <string>

#include <json.hpp>

#include "chessland/plans.hpp"
#include "chessland/solvers.hpp"

namespace chessland {

using Json = nlohmann::ordered_json;

struct RenderSpec {
    enum class Format { Ascii, Svg, Json, Csv } format = Format::Ascii;
    bool paper_compat = false;  // render AutoTrapped and Untrappable as "0"
    bool show_colors = false;
    bool quarter = false;  // paper-style top quarter of an answer sheet
};

Json plan_to_json(const SurveyPlan& plan);
SurveyPlan plan_from_json(const Json& j);
Json sheet_to_json(const AnswerSheet& sheet);
AnswerSheet sheet_from_json(const Json& j);

// Refuses plans whose moves are illegal; throws std::invalid_argument.
std::string render_plan(const SurveyPlan& plan, const RenderSpec& spec);
std::string render_sheet(const AnswerSheet& sheet, const RenderSpec& spec);

struct ReportDiff {
    bool match = true;
    std::string details;  // one line per mismatching path
};

ReportDiff diff_report(const Json& computed, const Json& golden);

}  // namespace chessland
