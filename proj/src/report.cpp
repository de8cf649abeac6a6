#include "gridwlp/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gridwlp {

namespace {

// Field elements are printed as integers whenever they are integers.
Json scalar(const std::string& text) {
    long long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec == std::errc() && ptr == end) return value;
    return text;
}

Json scalars(const std::vector<std::string>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(scalar(x));
    return out;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        std::int64_t v = 0;
        const auto* end = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
        if (ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string grid_line(const GridSummary& g) {
    auto list = [](const std::vector<std::string>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
        return s;
    };
    return std::to_string(g.a) + "x" + std::to_string(g.b) + " grid  u=" + list(g.u) + "  v=" + list(g.v);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + name + "' (table, json, csv)");
}

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec spec;
    if (trim(text).starts_with('{')) {
        const auto doc = Json::parse(text);
        spec.u = doc.at("u").get<std::vector<std::int64_t>>();
        spec.v = doc.at("v").get<std::vector<std::int64_t>>();
        if (doc.contains("prime")) spec.prime = doc.at("prime").get<std::uint64_t>();
        if (doc.contains("a") && doc.at("a").get<int>() != spec.a()) throw std::invalid_argument("grid JSON: a != |u|");
        if (doc.contains("b") && doc.at("b").get<int>() != spec.b()) throw std::invalid_argument("grid JSON: b != |v|");
        return spec;
    }
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--params expects u=...;v=...");
        const auto key = trim(part.substr(0, eq));
        if (key == "u") {
            spec.u = parse_int_list(part.substr(eq + 1));
        } else if (key == "v") {
            spec.v = parse_int_list(part.substr(eq + 1));
        } else {
            throw std::invalid_argument("unknown grid parameter '" + key + "'");
        }
    }
    if (spec.u.empty() || spec.v.empty()) throw std::invalid_argument("--params needs both u and v");
    return spec;
}

Json to_json(const GridSpec& spec) {
    return Json{{"a", spec.a()}, {"b", spec.b()}, {"u", spec.u}, {"v", spec.v}, {"prime", spec.prime}};
}

Json to_json(const GridSummary& grid) {
    return Json{{"a", grid.a}, {"b", grid.b}, {"u", scalars(grid.u)}, {"v", scalars(grid.v)}};
}

Json to_json(const MultMapReport& r) {
    Json j{{"t", r.t}, {"dimFrom", r.dim_from}, {"dimTo", r.dim_to}, {"rank", r.rank},
           {"ker", r.kernel}, {"coker", r.coker}, {"maximal", r.maximal}};
    if (r.power != 1) j["power"] = r.power;
    return j;
}

Json to_json(const WlpReport& r) {
    Json degrees = Json::array();
    for (const auto& m : r.degrees) degrees.push_back(to_json(m));
    Json j{{"grid", to_json(r.grid)}, {"d", r.d}, {"prime", r.prime}, {"trials", r.trials}};
    if (r.power != 1) j["power"] = r.power;
    j["degrees"] = std::move(degrees);
    j["verdict"] = r.verdict;
    j["failing"] = r.failing;
    return j;
}

Json to_json(const ProbeReport& r) {
    Json degrees = Json::array();
    for (const auto& p : r.degrees) {
        Json j = to_json(p.special);
        j["genericRank"] = p.generic_rank;
        j["critical"] = p.critical;
        degrees.push_back(std::move(j));
    }
    return Json{{"grid", to_json(r.grid)}, {"d", r.d},           {"locus", r.locus},
                {"prime", r.prime},        {"trials", r.trials}, {"degrees", std::move(degrees)},
                {"inLocus", r.in_locus()}, {"failing", r.failing}};
}

Json to_json(const BxSequence& s) {
    return Json{{"a", s.a}, {"b", s.b}, {"dMax", s.d_max}, {"bits", s.to_string()}};
}

Json to_json(const HilbertTable& h) {
    Json rows = Json::array();
    for (int t = h.first; t <= h.last(); ++t) {
        Json row{{"t", t}, {"dim", h.at(t)}};
        if (h.quotient || t > h.first) {
            row["delta"] = h.delta(t);
        } else {
            row["delta"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return Json{{"kind", h.quotient ? "quotient" : "ideal"}, {"rows", std::move(rows)}};
}

std::string to_csv(const WlpReport& r) {
    std::ostringstream out;
    out << "t,dimFrom,dimTo,rank,ker,coker,maximal\n";
    for (const auto& m : r.degrees) {
        out << m.t << ',' << m.dim_from << ',' << m.dim_to << ',' << m.rank << ',' << m.kernel << ',' << m.coker
            << ',' << (m.maximal ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string to_csv(const ProbeReport& r) {
    std::ostringstream out;
    out << "t,dimFrom,dimTo,genericRank,rank,ker,coker,maximal,critical\n";
    for (const auto& p : r.degrees) {
        const auto& m = p.special;
        out << m.t << ',' << m.dim_from << ',' << m.dim_to << ',' << p.generic_rank << ',' << m.rank << ','
            << m.kernel << ',' << m.coker << ',' << (m.maximal ? "true" : "false") << ','
            << (p.critical ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string to_table(const WlpReport& r) {
    std::ostringstream out;
    out << grid_line(r.grid) << "\n";
    out << "d=" << r.d;
    if (r.power != 1) out << "  power=" << r.power;
    out << "  " << (r.prime ? "p=" + std::to_string(r.prime) : std::string("QQ")) << "  trials=" << r.trials << "\n";
    out << std::setw(4) << "t" << std::setw(9) << "dimFrom" << std::setw(9) << "dimTo" << std::setw(8) << "rank"
        << std::setw(7) << "ker" << std::setw(7) << "coker" << "  maximal\n";
    for (const auto& m : r.degrees) {
        out << std::setw(4) << m.t << std::setw(9) << m.dim_from << std::setw(9) << m.dim_to << std::setw(8) << m.rank
            << std::setw(7) << m.kernel << std::setw(7) << m.coker << "  " << (m.maximal ? "yes" : "NO") << "\n";
    }
    out << "verdict: " << (r.verdict ? "WLP holds" : "WLP fails");
    if (!r.failing.empty()) out << " (failing degrees " << join(r.failing) << ")";
    out << "\n";
    return out.str();
}

std::string to_table(const ProbeReport& r) {
    std::ostringstream out;
    out << grid_line(r.grid) << "\n";
    out << "d=" << r.d << "  locus=" << r.locus << "  "
        << (r.prime ? "p=" + std::to_string(r.prime) : std::string("QQ")) << "  trials=" << r.trials << "\n";
    out << std::setw(4) << "t" << std::setw(9) << "dimFrom" << std::setw(9) << "dimTo" << std::setw(9) << "generic"
        << std::setw(8) << "rank" << std::setw(7) << "coker" << "  status\n";
    for (const auto& p : r.degrees) {
        const auto& m = p.special;
        out << std::setw(4) << m.t << std::setw(9) << m.dim_from << std::setw(9) << m.dim_to << std::setw(9)
            << p.generic_rank << std::setw(8) << m.rank << std::setw(7) << m.coker << "  "
            << (p.keeps_generic_rank() ? "ok" : "DROPS") << (p.critical ? "  (critical)" : "") << "\n";
    }
    out << (r.in_locus() ? "in the non-Lefschetz locus (degrees " + join(r.failing) + ")"
                         : std::string("not in the non-Lefschetz locus"))
        << "\n";
    return out.str();
}

std::string to_table(const HilbertTable& h) {
    std::ostringstream out;
    out << std::setw(4) << "t" << std::setw(10) << "dim" << std::setw(10) << "delta" << "\n";
    for (int t = h.first; t <= h.last(); ++t) {
        out << std::setw(4) << t << std::setw(10) << h.at(t);
        if (h.quotient || t > h.first) out << std::setw(10) << h.delta(t);
        out << "\n";
    }
    return out.str();
}

}  // namespace gridwlp
