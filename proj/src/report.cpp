#include "chessland/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chessland {

namespace {

Piece parse_piece(const std::string& s) {
    Piece p;
    if (!piece_from_name(s, p)) throw std::invalid_argument("unknown piece: " + s);
    return p;
}

std::string cell_text(const TrapVerdict& v, bool paper_compat) {
    switch (v.kind) {
        case TrapVerdict::Kind::Trapped: return std::to_string(v.count);
        case TrapVerdict::Kind::Untrappable: return paper_compat ? "0" : "X";
        case TrapVerdict::Kind::AutoTrapped: return paper_compat ? "0" : "-";
    }
    return "?";
}

int sheet_cell_width(const AnswerSheet& sheet) {
    int w = 1;
    for (const TrapVerdict& v : sheet.cells)
        if (v.kind == TrapVerdict::Kind::Trapped)
            w = std::max(w, static_cast<int>(std::to_string(v.count).size()));
    return w;
}

void pad_to(std::string& line, const std::string& text, int width) {
    for (int i = static_cast<int>(text.size()); i < width; ++i) line += ' ';
    line += text;
}

}  // namespace

Json plan_to_json(const SurveyPlan& plan) {
    Json j;
    j["piece"] = piece_name(plan.piece);
    j["n"] = plan.n;
    Json path = Json::array();
    for (const Square& s : plan.path) path.push_back(Json::array({s.file, s.rank}));
    j["path"] = std::move(path);
    return j;
}

SurveyPlan plan_from_json(const Json& j) {
    SurveyPlan plan;
    plan.piece = parse_piece(j.at("piece").get<std::string>());
    plan.n = j.at("n").get<int>();
    for (const Json& sq : j.at("path")) plan.path.push_back({sq.at(0).get<int>(), sq.at(1).get<int>()});
    return plan;
}

Json sheet_to_json(const AnswerSheet& sheet) {
    Json j;
    j["piece"] = piece_name(sheet.piece);
    j["n"] = sheet.n;
    Json rows = Json::array();
    for (int r = 1; r <= sheet.n; ++r) {
        Json row = Json::array();
        for (int f = 1; f <= sheet.n; ++f) {
            const TrapVerdict& v = sheet.at({f, r});
            Json cell;
            switch (v.kind) {
                case TrapVerdict::Kind::AutoTrapped: cell["status"] = "auto_trapped"; break;
                case TrapVerdict::Kind::Untrappable: cell["status"] = "untrappable"; break;
                case TrapVerdict::Kind::Trapped: {
                    cell["status"] = "trapped";
                    cell["count"] = v.count;
                    Json w = Json::array();
                    for (const Square& s : v.witness.squares(sheet.n))
                        w.push_back(Json::array({s.file, s.rank}));
                    cell["witness"] = std::move(w);
                    break;
                }
            }
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    return j;
}

AnswerSheet sheet_from_json(const Json& j) {
    AnswerSheet sheet;
    sheet.piece = parse_piece(j.at("piece").get<std::string>());
    sheet.n = j.at("n").get<int>();
    sheet.cells.resize(sheet.n * sheet.n);
    const Json& rows = j.at("cells");
    for (int r = 1; r <= sheet.n; ++r) {
        for (int f = 1; f <= sheet.n; ++f) {
            const Json& cell = rows.at(r - 1).at(f - 1);
            TrapVerdict v;
            std::string status = cell.at("status").get<std::string>();
            if (status == "auto_trapped") v.kind = TrapVerdict::Kind::AutoTrapped;
            else if (status == "untrappable") v.kind = TrapVerdict::Kind::Untrappable;
            else if (status == "trapped") {
                v.kind = TrapVerdict::Kind::Trapped;
                v.count = cell.at("count").get<int>();
                for (const Json& sq : cell.at("witness"))
                    v.witness.set(square_index(sheet.n, {sq.at(0).get<int>(), sq.at(1).get<int>()}));
            } else {
                throw std::invalid_argument("unknown cell status: " + status);
            }
            sheet.cells[square_index(sheet.n, {f, r})] = v;
        }
    }
    return sheet;
}

namespace {

std::string plan_ascii(const SurveyPlan& plan) {
    int n = plan.n;
    std::vector<int> day(n * n, 0);
    for (int i = 0; i < plan.days(); ++i) day[square_index(n, plan.path[i])] = i + 1;
    int width = static_cast<int>(std::to_string(plan.days()).size());
    std::string out;
    for (int r = n; r >= 1; --r) {
        std::string line;
        for (int f = 1; f <= n; ++f) {
            if (f > 1) line += ' ';
            int d = day[square_index(n, {f, r})];
            pad_to(line, d == 0 ? "." : std::to_string(d), width);
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string plan_csv(const SurveyPlan& plan) {
    std::string out = "day,file,rank\n";
    for (int i = 0; i < plan.days(); ++i)
        out += std::to_string(i + 1) + "," + std::to_string(plan.path[i].file) + "," +
               std::to_string(plan.path[i].rank) + "\n";
    return out;
}

std::string plan_svg(const SurveyPlan& plan, const RenderSpec& spec) {
    constexpr int kCell = 40;
    int n = plan.n;
    int side = n * kCell;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    for (int r = 1; r <= n; ++r) {
        for (int f = 1; f <= n; ++f) {
            int x = (f - 1) * kCell, y = (n - r) * kCell;
            bool dark = spec.show_colors && square_color({f, r}) == Color::Black;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\" fill=\"" << (dark ? "#cccccc" : "#ffffff")
                << "\" stroke=\"#000000\"/>\n";
        }
    }
    svg << "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"2\" points=\"";
    for (int i = 0; i < plan.days(); ++i) {
        if (i) svg << ' ';
        int cx = (plan.path[i].file - 1) * kCell + kCell / 2;
        int cy = (n - plan.path[i].rank) * kCell + kCell / 2;
        svg << cx << ',' << cy;
    }
    svg << "\"/>\n";
    for (int i = 0; i < plan.days(); ++i) {
        int cx = (plan.path[i].file - 1) * kCell + kCell / 2;
        int cy = (n - plan.path[i].rank) * kCell + kCell / 2 + 6;
        svg << "<text x=\"" << cx << "\" y=\"" << cy
            << "\" font-size=\"16\" text-anchor=\"middle\">" << (i + 1) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string sheet_ascii(const AnswerSheet& sheet, const RenderSpec& spec) {
    int width = sheet_cell_width(sheet);
    std::string out;
    if (spec.paper_compat) out += "# legend: 0 = untrappable or no legal moves\n";
    for (int r = sheet.n; r >= 1; --r) {
        std::string line;
        for (int f = 1; f <= sheet.n; ++f) {
            if (f > 1) line += ' ';
            pad_to(line, cell_text(sheet.at({f, r}), spec.paper_compat), width);
        }
        out += line;
        out += '\n';
    }
    return out;
}

// Folded top quarter: rank r keeps the files f with r >= max(f, n+1-f);
// each row indents by the skipped files.
std::string sheet_quarter(const AnswerSheet& sheet, const RenderSpec& spec) {
    int n = sheet.n;
    int width = sheet_cell_width(sheet);
    std::string out;
    if (spec.paper_compat) out += "# legend: 0 = untrappable or no legal moves\n";
    for (int r = n; 2 * r >= n + 1; --r) {
        std::string line;
        for (int f = 1; f <= n; ++f) {
            if (f > 1) line += ' ';
            if (r >= std::max(f, n + 1 - f))
                pad_to(line, cell_text(sheet.at({f, r}), spec.paper_compat), width);
            else
                pad_to(line, "", width);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string sheet_csv(const AnswerSheet& sheet, const RenderSpec& spec) {
    std::string out;
    if (spec.paper_compat) out += "# legend: 0 = untrappable or no legal moves\n";
    out += "rank";
    for (int f = 1; f <= sheet.n; ++f) out += ",f" + std::to_string(f);
    out += "\n";
    for (int r = sheet.n; r >= 1; --r) {
        out += std::to_string(r);
        for (int f = 1; f <= sheet.n; ++f) out += "," + cell_text(sheet.at({f, r}), spec.paper_compat);
        out += "\n";
    }
    return out;
}

std::string sheet_svg(const AnswerSheet& sheet, const RenderSpec& spec) {
    constexpr int kCell = 40;
    int n = sheet.n;
    int side = n * kCell;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    for (int r = 1; r <= n; ++r) {
        for (int f = 1; f <= n; ++f) {
            int x = (f - 1) * kCell, y = (n - r) * kCell;
            const TrapVerdict& v = sheet.at({f, r});
            bool shaded = !spec.paper_compat && v.kind != TrapVerdict::Kind::Trapped;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\" fill=\"" << (shaded ? "#dddddd" : "#ffffff")
                << "\" stroke=\"#000000\"/>\n";
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int f = 1; f <= n; ++f) {
            int cx = (f - 1) * kCell + kCell / 2;
            int cy = (n - r) * kCell + kCell / 2 + 6;
            svg << "<text x=\"" << cx << "\" y=\"" << cy
                << "\" font-size=\"16\" text-anchor=\"middle\">"
                << cell_text(sheet.at({f, r}), spec.paper_compat) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_plan(const SurveyPlan& plan, const RenderSpec& spec) {
    PlanDiagnostics d = validate_plan(plan);
    if (!d.legal) {
        throw std::invalid_argument("illegal plan: step " +
                                    std::to_string(d.first_bad_step.value_or(-1)) +
                                    " is not a legal move");
    }
    switch (spec.format) {
        case RenderSpec::Format::Ascii: return plan_ascii(plan);
        case RenderSpec::Format::Csv: return plan_csv(plan);
        case RenderSpec::Format::Json: return plan_to_json(plan).dump();
        case RenderSpec::Format::Svg: return plan_svg(plan, spec);
    }
    throw std::logic_error("unreachable");
}

std::string render_sheet(const AnswerSheet& sheet, const RenderSpec& spec) {
    if (spec.quarter && spec.format != RenderSpec::Format::Json &&
        spec.format != RenderSpec::Format::Svg)
        return sheet_quarter(sheet, spec);
    switch (spec.format) {
        case RenderSpec::Format::Ascii: return sheet_ascii(sheet, spec);
        case RenderSpec::Format::Csv: return sheet_csv(sheet, spec);
        case RenderSpec::Format::Json: return sheet_to_json(sheet).dump();
        case RenderSpec::Format::Svg: return sheet_svg(sheet, spec);
    }
    throw std::logic_error("unreachable");
}

namespace {

void diff_walk(const Json& a, const Json& b, const std::string& path, std::string& out,
               int& count) {
    if (a.type() != b.type()) {
        out += path + ": type " + std::string(a.type_name()) + " != " + b.type_name() + "\n";
        ++count;
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) {
                out += path + "/" + it.key() + ": missing in golden\n";
                ++count;
            } else {
                diff_walk(it.value(), b.at(it.key()), path + "/" + it.key(), out, count);
            }
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key())) {
                out += path + "/" + it.key() + ": missing in computed\n";
                ++count;
            }
        return;
    }
    if (a.is_array()) {
        size_t common = std::min(a.size(), b.size());
        for (size_t i = 0; i < common; ++i)
            diff_walk(a.at(i), b.at(i), path + "/" + std::to_string(i), out, count);
        if (a.size() != b.size()) {
            out += path + ": length " + std::to_string(a.size()) + " != " +
                   std::to_string(b.size()) + "\n";
            ++count;
        }
        return;
    }
    if (a != b) {
        out += path + ": " + a.dump() + " != " + b.dump() + "\n";
        ++count;
    }
}

}  // namespace

ReportDiff diff_report(const Json& computed, const Json& golden) {
    ReportDiff d;
    int count = 0;
    diff_walk(computed, golden, "", d.details, count);
    d.match = count == 0;
    return d;
}

}  // namespace chessland
