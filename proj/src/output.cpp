#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "udw/errors.hpp"
#include "udw/runner.hpp"

namespace udw {

using nlohmann::ordered_json;

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// the JSON numbers carry the same 12 digits as the CSV
double rounded(double x) { return std::stod(num(x)); }

ordered_json table_json(const SweepTable& t) {
    ordered_json j;
    j["meta"] = ordered_json::object();
    for (const auto& [k, v] : t.meta) {
        if (j["meta"].contains(k))
            j["meta"][k] = j["meta"][k].get<std::string>() + "; " + v;
        else
            j["meta"][k] = v;
    }
    bool oracle = t.with_oracle();
    j["rows"] = ordered_json::array();
    for (const Row& r : t.rows) {
        ordered_json row = {{"eta", rounded(r.eta)}, {"v1", rounded(r.v1)}, {"neg_v2", rounded(r.neg_v2)},
                            {"total", rounded(r.total)}};
        if (oracle) {
            row["oracle_total"] = rounded(r.oracle_total);
            row["abs_diff"] = rounded(r.abs_diff);
            row["rel_diff"] = rounded(r.rel_diff);
        }
        j["rows"].push_back(row);
    }
    j["errors"] = ordered_json::array();
    for (const auto& e : t.errors)
        j["errors"].push_back({{"eta", rounded(e.eta)}, {"exit_code", e.exit_code}, {"message", e.message}});
    if (t.summary)
        j["summary"] = {{"max_abs_diff", rounded(t.summary->max_abs_diff)},
                        {"max_rel_diff", rounded(t.summary->max_rel_diff)},
                        {"pass", t.summary->pass}};
    return j;
}

template <class E>
E pick(const std::string& key, const std::string& v, std::initializer_list<std::pair<const char*, E>> opts) {
    for (auto& [n, e] : opts)
        if (v == n) return e;
    throw DomainError("config: bad value '" + v + "' for " + key);
}

}  // namespace

void write_csv(std::ostream& os, const SweepTable& t) {
    for (const auto& [k, v] : t.meta) os << "# " << k << "=" << v << "\n";
    bool oracle = t.with_oracle();
    os << "eta,v1,neg_v2,total" << (oracle ? ",oracle_total,abs_diff,rel_diff" : "") << "\n";
    for (const Row& r : t.rows) {
        os << num(r.eta) << "," << num(r.v1) << "," << num(r.neg_v2) << "," << num(r.total);
        if (oracle) os << "," << num(r.oracle_total) << "," << num(r.abs_diff) << "," << num(r.rel_diff);
        os << "\n";
    }
    for (const auto& e : t.errors)
        os << "# error eta=" << num(e.eta) << " exit_code=" << e.exit_code << " message=" << e.message << "\n";
    if (t.summary)
        os << "# summary max_abs_diff=" << num(t.summary->max_abs_diff)
           << " max_rel_diff=" << num(t.summary->max_rel_diff) << " pass=" << (t.summary->pass ? "true" : "false")
           << "\n";
}

void write_json(std::ostream& os, const std::vector<SweepTable>& tables) {
    ordered_json j;
    if (tables.size() == 1)
        j = table_json(tables[0]);
    else {
        j = ordered_json::array();
        for (const auto& t : tables) j.push_back(table_json(t));
    }
    os << j.dump(2) << "\n";
}

void write_tables(std::ostream& os, const std::vector<SweepTable>& tables, Format f) {
    if (f == Format::Json) return write_json(os, tables);
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i) os << "\n";
        write_csv(os, tables[i]);
    }
}

std::string render_validation(const ValidationReport& r, Format f) {
    std::ostringstream os;
    if (f == Format::Json) {
        ordered_json j = {{"ok", r.ok()}, {"violations", ordered_json::array()}};
        for (const auto& v : r.violations)
            j["violations"].push_back({{"code", to_string(v.code)},
                                       {"severity", v.hard ? "error" : "warning"},
                                       {"message", v.message},
                                       {"value", rounded(v.value)}});
        os << j.dump(2) << "\n";
        return os.str();
    }
    os << "# ok=" << (r.ok() ? "true" : "false") << "\n";
    os << "code,severity,value,message\n";
    for (const auto& v : r.violations)
        os << to_string(v.code) << "," << (v.hard ? "error" : "warning") << "," << num(v.value) << ",\""
           << v.message << "\"\n";
    return os.str();
}

std::vector<Row> read_csv_rows(std::istream& is) {
    std::vector<Row> rows;
    std::string line;
    bool header = false, oracle = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            oracle = line.find("oracle_total") != std::string::npos;
            continue;
        }
        std::vector<double> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(std::stod(cell));
        if (f.size() != (oracle ? 7u : 4u)) throw DomainError("csv: malformed row '" + line + "'");
        Row r;
        r.eta = f[0], r.v1 = f[1], r.neg_v2 = f[2], r.total = f[3];
        if (oracle) r.has_oracle = true, r.oracle_total = f[4], r.abs_diff = f[5], r.rel_diff = f[6];
        rows.push_back(r);
    }
    return rows;
}

RunConfig config_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config: top level must be an object");
    static const std::set<std::string> known = {
        "command", "traj",    "a",       "v",           "omega",          "lambda0",         "m0",
        "hbar",    "observable", "eta",  "eta_start",   "eta_stop",       "eta_count",       "eta_spacing",
        "oracle",  "prefactor", "v2_form", "kappa_max", "tol",            "rel_tol",         "max_subdivisions",
        "compare_abs_tol", "compare_rel_tol", "format", "output", "jobs", "figure", "renorm_offsets"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) throw DomainError("config: unknown key '" + it.key() + "'");

    RunConfig c;
    try {
        if (j.contains("command"))
            c.command = pick<Command>("command", j["command"], {{"eval", Command::Eval},
                                                                 {"sweep", Command::Sweep},
                                                                 {"compare", Command::Compare},
                                                                 {"figure", Command::Figure},
                                                                 {"validate", Command::Validate}});
        if (j.contains("traj")) c.inertial = pick<bool>("traj", j["traj"], {{"uad", false}, {"inertial", true}});
        if (j.contains("a")) c.a = j["a"];
        if (j.contains("v")) c.v = j["v"];
        if (j.contains("omega")) c.omega = j["omega"];
        if (j.contains("lambda0")) c.lambda0 = j["lambda0"];
        if (j.contains("m0")) c.m0 = j["m0"];
        if (j.contains("hbar")) c.hbar = j["hbar"];
        if (j.contains("observable"))
            c.observable = pick<Observable>("observable", j["observable"], {{"qq", Observable::QQ}, {"pp", Observable::PP}});
        if (j.contains("eta")) c.eta = j["eta"].get<double>();
        if (j.contains("eta_start")) c.range.start = j["eta_start"];
        if (j.contains("eta_stop")) c.range.stop = j["eta_stop"];
        if (j.contains("eta_count")) c.range.count = j["eta_count"];
        if (j.contains("eta_spacing"))
            c.range.spacing = pick<Spacing>("eta_spacing", j["eta_spacing"], {{"log", Spacing::Log}, {"linear", Spacing::Linear}});
        if (j.contains("oracle")) c.oracle = j["oracle"];
        if (j.contains("prefactor"))
            c.correlator.prefactor = pick<Prefactor>("prefactor", j["prefactor"],
                                                     {{"maintext", Prefactor::MainText}, {"appendixd", Prefactor::AppendixD}});
        if (j.contains("v2_form"))
            c.correlator.v2_form = pick<V2Form>("v2_form", j["v2_form"],
                                                {{"published", V2Form::Published}, {"partial-fraction", V2Form::PartialFraction}});
        if (j.contains("kappa_max")) c.quadrature.kappa_max = j["kappa_max"];
        if (j.contains("tol")) c.quadrature.abs_tol = j["tol"];
        if (j.contains("rel_tol")) c.quadrature.rel_tol = j["rel_tol"];
        if (j.contains("max_subdivisions")) c.quadrature.max_subdivisions = j["max_subdivisions"];
        if (j.contains("compare_abs_tol")) c.compare_abs_tol = j["compare_abs_tol"];
        if (j.contains("compare_rel_tol")) c.compare_rel_tol = j["compare_rel_tol"];
        if (j.contains("format")) c.format = pick<Format>("format", j["format"], {{"csv", Format::Csv}, {"json", Format::Json}});
        if (j.contains("output")) c.output = j["output"];
        if (j.contains("jobs")) c.jobs = j["jobs"];
        if (j.contains("figure")) c.figure = j["figure"];
        if (j.contains("renorm_offsets")) {
            const auto& r = j["renorm_offsets"];
            c.correlator.include_renorm_offsets = true;
            auto& o = c.correlator.offsets;
            o.lambda0 = r.value("lambda0", 0.0);
            o.lambda1 = r.value("lambda1", 0.0);
            o.lambda0_v2 = r.value("lambda0_v2", 0.0);
            o.lambda0_tilde = r.value("lambda0_tilde", 0.0);
            o.lambda0_tilde_v2 = r.value("lambda0_tilde_v2", 0.0);
            o.lambda0_tilde_v = r.value("lambda0_tilde_v", 0.0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

}  // namespace udw
