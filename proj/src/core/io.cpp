#include "phaserank/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <regex>

#include "phaserank/errors.hpp"

namespace phaserank::io {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == sep) {
            out.push_back(trim(s.substr(start, k - start)));
            start = k + 1;
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw DomainError("");
        return v;
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + s + "'");
    }
}

// "p/q", "p" or a decimal, in units of pi.
Angle pi_units(const json& v) {
    if (v.is_number()) return Angle(kPi * v.get<double>());
    if (!v.is_string()) throw DomainError("angles_pi entries must be numbers or \"p/q\" strings");
    const std::string s = trim(v.get<std::string>());
    const auto slash = s.find('/');
    if (slash != std::string::npos)
        return Angle::from_pi_fraction(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
    if (s.find_first_of(".eE") == std::string::npos) return Angle::from_pi_fraction(parse_int(s), 1);
    try {
        std::size_t used = 0;
        const double d = std::stod(s, &used);
        if (used != s.size()) throw DomainError("");
        return Angle(kPi * d);
    } catch (const std::exception&) {
        throw DomainError("bad angle '" + s + "'");
    }
}

template <class F>
PhaseMatrix grid(const json& rows, F&& entry) {
    if (!rows.is_array() || rows.empty()) throw DomainError("matrix must be a nonempty array of rows");
    const std::size_t cols = rows.front().is_array() ? rows.front().size() : 0;
    if (cols == 0) throw DomainError("matrix rows must be nonempty arrays");
    std::vector<Angle> e;
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != cols) throw DomainError("ragged matrix rows");
        for (const auto& v : r) e.push_back(entry(v));
    }
    return PhaseMatrix(rows.size(), cols, std::move(e));
}

}  // namespace

PhaseMatrix phase_matrix_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("phase matrix JSON must be an object");
    const int kinds = static_cast<int>(j.contains("angles")) + static_cast<int>(j.contains("angles_pi")) +
                      static_cast<int>(j.contains("signs"));
    if (kinds != 1) throw DomainError("phase matrix JSON needs exactly one of angles, angles_pi, signs");
    PhaseMatrix m = [&] {
        if (j.contains("angles")) {
            return grid(j["angles"], [](const json& v) {
                if (!v.is_number()) throw DomainError("angles entries must be numbers (radians)");
                return Angle(v.get<double>());
            });
        }
        if (j.contains("angles_pi")) return grid(j["angles_pi"], pi_units);
        return grid(j["signs"], [](const json& v) {
            if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
                throw DomainError("signs entries must be 1 or -1");
            return v.get<int>() == 1 ? Angle{} : Angle(kPi);
        });
    }();
    if (j.contains("rows") && j["rows"] != m.rows()) throw DomainError("rows does not match the grid");
    if (j.contains("cols") && j["cols"] != m.cols()) throw DomainError("cols does not match the grid");
    return m;
}

PhaseMatrix parse_phase_matrix(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    return phase_matrix_from_json(j);
}

Angle parse_phase_literal(std::string_view text) {
    static const std::regex exp_form(R"(^e\^\{\s*(-?)\s*i\s*(-?\d+)?\s*\*?\s*(pi|π)\s*(?:/\s*(\d+))?\s*\}$)");
    std::string s = trim(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    bool negate = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negate = s[0] == '-';
        s.erase(0, 1);
    }
    Angle a;
    std::smatch mt;
    if (s == "1") {
        a = Angle{};
    } else if (s == "i") {
        a = Angle::from_pi_fraction(1, 2);
    } else if (std::regex_match(s, mt, exp_form)) {
        std::int64_t p = mt[2].matched ? parse_int(mt[2].str()) : 1;
        const std::int64_t q = mt[4].matched ? parse_int(mt[4].str()) : 1;
        if (mt[1].length() > 0) p = -p;
        a = Angle::from_pi_fraction(p, q);
    } else {
        throw DomainError("unrecognized phase literal '" + std::string(text) +
                          "'; expected 1, -1, i, -i or e^{i p pi/q}");
    }
    return negate ? a + Angle(kPi) : a;
}

PhaseMatrix parse_inline_matrix(std::string_view text) {
    const auto rows = split(text, ';');
    std::vector<Angle> e;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        const auto items = split(r, ',');
        if (cols == 0) cols = items.size();
        if (items.size() != cols) throw DomainError("ragged inline matrix rows");
        for (const auto& it : items) e.push_back(parse_phase_literal(it));
    }
    return PhaseMatrix(rows.size(), cols, std::move(e));
}

PhaseMatrix MatrixTemplate::fill(const std::vector<double>& values) const {
    if (values.size() != slot_count) throw DomainError("template needs " + std::to_string(slot_count) + " values");
    std::vector<Angle> e = fixed;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (slot[k] >= 0) e[k] = Angle(values[static_cast<std::size_t>(slot[k])]);
    return PhaseMatrix(rows, cols, std::move(e));
}

MatrixTemplate parse_template(std::string_view text) {
    // Every cell is kept as JSON: a string literal (inline form or JSON string) or a number.
    std::vector<std::vector<json>> cells;
    const std::string s = trim(text);
    const bool json_form = !s.empty() && s.front() == '{';
    if (json_form) {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::parse_error& e) {
            throw DomainError(std::string("invalid JSON: ") + e.what());
        }
        if (!j.contains("angles_pi") || !j["angles_pi"].is_array()) throw DomainError("template JSON needs angles_pi");
        for (const auto& r : j["angles_pi"]) {
            if (!r.is_array()) throw DomainError("template rows must be arrays");
            cells.emplace_back(r.begin(), r.end());
        }
    } else {
        for (const auto& r : split(s, ';')) {
            cells.emplace_back();
            for (const auto& c : split(r, ',')) cells.back().emplace_back(c);
        }
    }
    if (cells.empty() || cells.front().empty()) throw DomainError("empty template");

    MatrixTemplate t;
    t.rows = cells.size();
    t.cols = cells.front().size();
    int max_slot = -1;
    for (const auto& r : cells) {
        if (r.size() != t.cols) throw DomainError("ragged template rows");
        for (const auto& c : r) {
            const std::string name = c.is_string() ? trim(c.get<std::string>()) : std::string();
            if (name == "t1" || name == "t2" || name == "t3") {
                const int k = name[1] - '1';
                t.slot.push_back(k);
                t.fixed.emplace_back();
                max_slot = std::max(max_slot, k);
            } else {
                t.slot.push_back(-1);
                t.fixed.push_back(json_form ? pi_units(c) : parse_phase_literal(name));
            }
        }
    }
    t.slot_count = static_cast<std::size_t>(max_slot + 1);
    for (std::size_t k = 0; k < t.slot_count; ++k)
        if (std::find(t.slot.begin(), t.slot.end(), static_cast<int>(k)) == t.slot.end())
            throw DomainError("template slots must be numbered t1, t2, ... without gaps");
    return t;
}

json to_json(const PhaseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Angle a : m.row(i)) r.push_back(a.radians());
        rows.push_back(r);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"angles", rows}};
}

json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(r);
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
        throw DomainError("complex matrix must be a nonempty array of rows");
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j.front().size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j.front().size()) throw DomainError("ragged complex matrix rows");
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            const auto& z = j[i][k];
            if (!z.is_array() || z.size() != 2) throw DomainError("complex entries must be [re, im]");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {z[0].get<double>(), z[1].get<double>()};
        }
    }
    return m;
}

json to_json(const ScalingVector& y) {
    json out = json::array();
    for (const auto& s : y.scalars) out.push_back(s ? json(s->radians()) : json(nullptr));
    return out;
}

double round_half_even(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    const double v = x * scale;
    double r = std::nearbyint(v);  // default rounding mode is to nearest, ties to even
    // Ties that are exact in decimal but not in binary: treat |v - floor(v) - 0.5| < 1e-9 as a tie.
    const double fl = std::floor(v);
    if (std::fabs(v - fl - 0.5) < 1e-9) r = std::fmod(fl, 2.0) == 0.0 ? fl : fl + 1.0;
    return r / scale;
}

}  // namespace phaserank::io
