#include "stratmorse/report.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stratmorse {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string mult_text(const std::optional<unsigned long>& m) {
    return m ? std::to_string(*m) : "inf";
}

}  // namespace

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "f = " << report.f << "\n";
    out << "l = " << (report.l.empty() ? "(none)" : report.l) << "\n";
    if (report.oracle) {
        out << "oracle mu = " << report.oracle->value
            << (report.oracle->agrees ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    out << "stratum dim mult_f mult_l m_V checks\n";
    for (const auto& s : report.strata) {
        out << s.name << " " << s.dim << " " << mult_text(s.mult_f) << " "
            << mult_text(s.mult_l) << " "
            << (s.morse_number ? std::to_string(*s.morse_number) : "-");
        std::string failed;
        for (const auto& c : s.checks)
            if (!c.passed) failed += (failed.empty() ? "" : ",") + c.name;
        out << " " << (failed.empty() ? "ok" : "FAIL(" + failed + ")");
        if (s.error) out << " [" << *s.error << "]";
        out << "\n";
    }
    bool complete = !report.strata.empty();
    for (const auto& s : report.strata)
        if (!s.morse_number) complete = false;
    if (complete) {
        out << "M(f) = {";
        bool first = true;
        for (const auto& s : report.strata) {
            if (!first) out << ", ";
            out << "(" << s.name << ", " << *s.morse_number << ")";
            first = false;
        }
        out << "}\n";
    }
    if (report.error) out << "error: " << *report.error << "\n";
    return out.str();
}

std::string render_checks_text(const Report& report) {
    std::ostringstream out;
    out << "l = " << (report.l.empty() ? "(none)" : report.l) << "\n";
    for (const auto& s : report.strata)
        for (const auto& c : s.checks)
            out << s.name << " " << c.name << " " << (c.passed ? "pass" : "FAIL") << " ("
                << c.detail << ")\n";
    if (report.error) out << "error: " << *report.error << "\n";
    return out.str();
}

std::string render_structured(const Report& report) {
    ordered_json doc;
    doc["variables"] = report.variables;
    doc["f"] = report.f;
    doc["l"] = report.l;
    doc["seed"] = report.seed;
    ordered_json strata = ordered_json::object();
    for (const auto& s : report.strata) {
        ordered_json js;
        js["dim"] = s.dim;
        js["polar_generators"] = s.polar_generators;
        if (s.mult_f)
            js["mult_f"] = *s.mult_f;
        else
            js["mult_f"] = "infinite";
        if (s.mult_l)
            js["mult_l"] = *s.mult_l;
        else
            js["mult_l"] = "infinite";
        if (s.morse_number)
            js["morse_number"] = *s.morse_number;
        else
            js["morse_number"] = nullptr;
        ordered_json checks = ordered_json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        js["checks"] = checks;
        if (s.error) js["error"] = *s.error;
        strata[s.name] = js;
    }
    doc["strata"] = strata;
    if (report.oracle)
        doc["oracle"] = {{"value", report.oracle->value}, {"agrees", report.oracle->agrees}};
    doc["all_ok"] = report.all_ok;
    if (report.error) doc["error"] = *report.error;
    return doc.dump(2) + "\n";
}

Report parse_structured(const std::string& text) {
    ordered_json doc = ordered_json::parse(text);
    Report r;
    r.variables = doc.at("variables").get<std::vector<std::string>>();
    r.f = doc.at("f").get<std::string>();
    r.l = doc.at("l").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& [name, js] : doc.at("strata").items()) {
        ReportStratum s;
        s.name = name;
        s.dim = js.at("dim").get<std::size_t>();
        s.polar_generators = js.at("polar_generators").get<std::vector<std::string>>();
        if (js.at("mult_f").is_number())
            s.mult_f = js.at("mult_f").get<unsigned long>();
        if (js.at("mult_l").is_number())
            s.mult_l = js.at("mult_l").get<unsigned long>();
        if (js.at("morse_number").is_number())
            s.morse_number = js.at("morse_number").get<unsigned long>();
        for (const auto& jc : js.at("checks"))
            s.checks.push_back(ReportCheck{jc.at("name").get<std::string>(),
                                           jc.at("passed").get<bool>(),
                                           jc.at("detail").get<std::string>()});
        if (js.contains("error")) s.error = js.at("error").get<std::string>();
        r.strata.push_back(std::move(s));
    }
    if (doc.contains("oracle"))
        r.oracle = OracleReport{doc.at("oracle").at("value").get<unsigned long>(),
                                doc.at("oracle").at("agrees").get<bool>()};
    r.all_ok = doc.at("all_ok").get<bool>();
    if (doc.contains("error")) r.error = doc.at("error").get<std::string>();
    return r;
}

std::string render_report(const Report& report, const std::string& format) {
    if (format == "text") return render_text(report);
    if (format == "structured") return render_structured(report);
    throw std::invalid_argument("unknown output format '" + format + "'");
}

}  // namespace stratmorse
