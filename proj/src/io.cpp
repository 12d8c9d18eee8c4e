#include "zd/io.hpp"

#include "zd/common.hpp"

#include <json.hpp>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace zd {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& path, int line, const std::string& tok) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (trim(tok.substr(pos)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(path, line, "not a number: '" + tok + "'");
}

std::string fmt17(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

ParseError::ParseError(const std::string& path, int line_, const std::string& what)
    : std::runtime_error(path + (line_ > 0 ? ":" + std::to_string(line_) : "") + ": " + what),
      line(line_) {}

ZeroSequence load_zero_sequence(const std::string& path) {
    const std::string text = read_file(path);
    // JSON array form.
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_array()) throw ParseError(path, 0, "expected a JSON array");
        std::vector<std::complex<double>> pts;
        pts.reserve(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& e = j[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError(path, 0,
                                 "entry " + std::to_string(i) + " is not an [re, im] pair");
            pts.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        try {
            return ZeroSequence(std::move(pts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, 0, e.what());
        }
    }

    // CSV form with header re,im.
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(path, 0, "empty file");
    std::size_t start = 0;
    if (trim(lines[0]) == "re,im") start = 1;
    std::vector<std::complex<double>> pts;
    for (std::size_t i = start; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(path, static_cast<int>(i + 1), "expected 're,im'");
        const double re = parse_double(path, static_cast<int>(i + 1), line.substr(0, comma));
        const double im = parse_double(path, static_cast<int>(i + 1), line.substr(comma + 1));
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError(path, static_cast<int>(i + 1), "non-finite point");
        if (re == 0.0 && im == 0.0)
            throw ParseError(path, static_cast<int>(i + 1), "point at the origin");
        pts.emplace_back(re, im);
    }
    return ZeroSequence(std::move(pts));
}

void save_zero_sequence_csv(const ZeroSequence& z, const std::string& path) {
    std::ostringstream os;
    os << "re,im\n";
    for (const auto& p : z.points()) os << fmt17(p.real()) << "," << fmt17(p.imag()) << "\n";
    write_text_atomic(path, os.str());
}

GrowthFunction load_growth_function(const std::string& path) {
    const auto lines = split_lines(read_file(path));
    if (lines.empty()) throw ParseError(path, 0, "empty file");
    GrowthKind kind = GrowthKind::d_like;
    bool have_kind = false;
    std::vector<std::pair<double, double>> samples;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("kind=Q") != std::string::npos) {
                kind = GrowthKind::q_like;
                have_kind = true;
            } else if (line.find("kind=d") != std::string::npos) {
                kind = GrowthKind::d_like;
                have_kind = true;
            }
            continue;
        }
        if (line == "x,value") continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(path, static_cast<int>(i + 1), "expected 'x,value'");
        samples.emplace_back(
            parse_double(path, static_cast<int>(i + 1), line.substr(0, comma)),
            parse_double(path, static_cast<int>(i + 1), line.substr(comma + 1)));
    }
    if (!have_kind)
        throw ParseError(path, 0, "missing declaration line '# kind=Q ...' or '# kind=d ...'");
    try {
        return GrowthFunction(kind, std::move(samples));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 0, e.what());
    }
}

void save_growth_function_csv(const GrowthFunction& g, const std::string& path) {
    std::ostringstream os;
    os << "# kind=" << (g.kind() == GrowthKind::q_like ? "Q" : "d") << " tail="
       << (g.kind() == GrowthKind::q_like ? "linear-slope" : "constant") << "\n"
       << "x,value\n";
    for (const auto& [x, v] : g.samples()) os << fmt17(x) << "," << fmt17(v) << "\n";
    write_text_atomic(path, os.str());
}

std::string report_to_json(const CriterionReport& rep,
                           const std::vector<std::pair<std::string, std::string>>& config) {
    nlohmann::ordered_json j;
    j["tool"] = "zdist";
    j["version"] = kVersion;
    j["criterion_id"] = rep.criterion_id;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.parameters) params[k] = v;
    j["parameters"] = params;
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (const auto& w : rep.windows) grid.push_back({w.r, w.R});
    j["grid"] = grid;
    j["excess"] = rep.excess;
    j["sup_excess"] = rep.sup_excess;
    j["fitted_c"] = rep.fitted_c;
    j["trend"] = rep.trend;
    j["tol"] = rep.tol;
    j["thresholds"] = {{"bounded_trend", rep.thresholds.bounded_trend},
                       {"divergent_trend", rep.thresholds.divergent_trend}};
    j["verdict"] = to_string(rep.verdict);
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string report_surface_csv(const CriterionReport& rep) {
    std::ostringstream os;
    os << "r,R,lhs,rhs,excess\n";
    for (std::size_t i = 0; i < rep.windows.size(); ++i)
        os << fmt17(rep.windows[i].r) << "," << fmt17(rep.windows[i].R) << ","
           << fmt17(rep.lhs[i]) << "," << fmt17(rep.rhs[i]) << "," << fmt17(rep.excess[i])
           << "\n";
    return os.str();
}

std::string log_sum_table_csv(const std::vector<LogSumRow>& rows) {
    std::ostringstream os;
    os << "r,R,l_rh,l_lh,l\n";
    for (const auto& row : rows)
        os << fmt17(row.r) << "," << fmt17(row.R) << "," << fmt17(row.l_rh) << ","
           << fmt17(row.l_lh) << "," << fmt17(row.l) << "\n";
    return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename to " + path + " failed: " + std::strerror(errno));
}

} // namespace zd
