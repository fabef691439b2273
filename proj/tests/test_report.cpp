#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "chessland/report.hpp"

using namespace chessland;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

// Minimal well-formedness scan: tags balance and a single root element.
bool svg_well_formed(const std::string& doc) {
    int depth = 0, roots = 0;
    size_t pos = 0;
    while ((pos = doc.find('<', pos)) != std::string::npos) {
        size_t end = doc.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = doc.substr(pos, end - pos + 1);
        pos = end + 1;
        if (tag.rfind("<?", 0) == 0) continue;
        if (tag.rfind("</", 0) == 0) {
            if (--depth < 0) return false;
            if (depth == 0) ++roots;
        } else if (tag.rfind("/>", tag.size() - 2) != std::string::npos) {
            if (depth == 0) ++roots;
        } else {
            ++depth;
        }
    }
    return depth == 0 && roots >= 1;
}

}  // namespace

TEST_CASE("plan rendering") {
    SurveyPlan k7 = *knight_plan(7);
    RenderSpec ascii;
    std::string grid = render_plan(k7, ascii);
    CHECK(count_occurrences(grid, "\n") == 7);
    CHECK(grid.find("11") != std::string::npos);
    CHECK(grid.find("10") != std::string::npos);
    // Byte-stable.
    CHECK(render_plan(k7, ascii) == grid);

    RenderSpec json;
    json.format = RenderSpec::Format::Json;
    CHECK(render_plan(rook_plan(3), json) ==
          R"({"piece":"rook","n":3,"path":[[1,1],[2,1],[3,1]]})");

    RenderSpec svg;
    svg.format = RenderSpec::Format::Svg;
    std::string doc = render_plan(king_straight_plan(9), svg);
    CHECK(svg_well_formed(doc));
    CHECK(count_occurrences(doc, "<text") == 25);

    SurveyPlan bad{Piece::Knight, 4, {{1, 1}, {2, 2}}};
    CHECK_THROWS_AS(render_plan(bad, ascii), std::invalid_argument);
}

TEST_CASE("plan json round-trip is lossless") {
    const SurveyPlan plans[] = {*knight_plan(9), rook_plan(6), bishop_plan(7, Color::White),
                                queen_plan9(), king_zigzag_plan(11).plan};
    for (const SurveyPlan& p : plans) {
        Json j = plan_to_json(p);
        SurveyPlan back = plan_from_json(j);
        CHECK(back.piece == p.piece);
        CHECK(back.n == p.n);
        CHECK(back.path == p.path);
        CHECK(plan_to_json(back) == j);
    }
}

TEST_CASE("sheet rendering") {
    AnswerSheet bishop7 = answer_sheet(7, Piece::Bishop);
    RenderSpec quarter;
    quarter.quarter = true;
    quarter.paper_compat = true;
    std::string q = render_sheet(bishop7, quarter);
    std::istringstream lines(q);
    std::string legend, first;
    std::getline(lines, legend);
    std::getline(lines, first);
    CHECK(first == "0 5 4 3 4 5 0");

    AnswerSheet queen4 = answer_sheet(4, Piece::Queen);
    RenderSpec compat;
    compat.paper_compat = true;
    std::string full = render_sheet(queen4, compat);
    CHECK(full.find("2 2 2 2") != std::string::npos);
    CHECK(full.find("2 0 0 2") != std::string::npos);

    // Outside paper-compat, auto-trapped and untrappable stay distinct.
    AnswerSheet knight3 = answer_sheet(3, Piece::Knight);
    RenderSpec csv;
    csv.format = RenderSpec::Format::Csv;
    std::string table = render_sheet(knight3, csv);
    CHECK(table.find("-") != std::string::npos);   // center: no legal moves
    CHECK(table.find("2") != std::string::npos);
    AnswerSheet queen3 = answer_sheet(3, Piece::Queen);
    CHECK(render_sheet(queen3, csv).find("X") != std::string::npos);

    // paper_compat only relabels the zeros, never the counts.
    AnswerSheet knight9 = answer_sheet(9, Piece::Knight);
    CHECK(knight9.at({1, 1}).count == 1);
    CHECK(knight9.at({5, 5}).count == 4);
    for (auto [piece, n] : {std::pair{Piece::King, 6}, {Piece::Queen, 4}, {Piece::Knight, 3}}) {
        AnswerSheet s = answer_sheet(n, piece);
        RenderSpec plain;
        std::string a = render_sheet(s, plain);
        for (char& ch : a)
            if (ch == 'X' || ch == '-') ch = '0';
        RenderSpec pc;
        pc.paper_compat = true;
        std::string b = render_sheet(s, pc);
        CHECK(b.substr(b.find('\n') + 1) == a);  // identical after the legend
    }
}

TEST_CASE("sheet json round-trip is lossless") {
    for (auto [piece, n] : {std::pair{Piece::Queen, 4}, {Piece::Bishop, 6}, {Piece::Knight, 3}}) {
        AnswerSheet s = answer_sheet(n, piece);
        Json j = sheet_to_json(s);
        CHECK(sheet_to_json(sheet_from_json(j)) == j);
    }
}

TEST_CASE("diff reports") {
    AnswerSheet s = answer_sheet(5, Piece::Rook);
    CHECK(diff_report(sheet_to_json(s), sheet_to_json(s)).match);

    Json computed = Json::array();
    for (int n = 1; n <= 15; ++n) computed.push_back(king_zigzag_days(n).G);
    Json table3 = Json::array({1, 1, 1, 4, 7, 10, 14, 18, 23, 29, 34, 40, 48, 55, 62});
    CHECK(diff_report(computed, table3).match);

    Json sf = Json::array();
    for (int n = 1; n <= 15; ++n) sf.push_back(shoelace_formula_days(n));
    Json sf_row = Json::array({-1, 1, 3, 5, 7, 9, 11, 27, 31, 35, 39, 43, 47, 52, 83});
    CHECK(diff_report(sf, sf_row).match);

    Json broken = table3;
    broken[8] = 24;
    ReportDiff d = diff_report(computed, broken);
    CHECK(!d.match);
    CHECK(d.details.find("/8") != std::string::npos);
}
