#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udw/closed.hpp"
#include "udw/model.hpp"
#include "udw/oracle.hpp"

namespace udw {

inline constexpr const char* version = "1.0.0";

enum class Command { Eval, Sweep, Compare, Figure, Validate };
enum class Observable { QQ, PP };
enum class Spacing { Linear, Log };
enum class Format { Csv, Json };

struct EtaRange {
    double start = 1;
    double stop = 5000;
    int count = 50;
    Spacing spacing = Spacing::Log;
};

struct RunConfig {
    Command command = Command::Eval;
    bool inertial = false;
    double a = 0.1;
    double v = 0;
    double omega = 1;
    double lambda0 = 0.1;
    double m0 = 1;
    double hbar = 1;
    Observable observable = Observable::QQ;
    std::optional<double> eta;  // single point, overrides the range
    EtaRange range;
    std::vector<double> extra_eta;  // merged into the range grid (reference nodes of a figure)
    std::string label;              // curve name, figures only
    bool oracle = false;
    CorrelatorOptions correlator;
    QuadratureConfig quadrature;
    double compare_abs_tol = 2e-4;
    double compare_rel_tol = 1e-3;
    Format format = Format::Csv;
    std::string output;  // empty means stdout
    int jobs = 1;
    std::string figure;
};

struct Row {
    double eta = 0;
    double v1 = 0, neg_v2 = 0, total = 0;
    bool has_oracle = false;
    double oracle_v1 = 0, oracle_neg_v2 = 0, oracle_total = 0, oracle_error = 0;
    double abs_diff = 0, rel_diff = 0;
};

struct PointError {
    double eta;
    int exit_code;  // 1 domain, 2 quadrature
    std::string message;
};

struct CompareSummary {
    double max_abs_diff = 0;
    double max_rel_diff = 0;
    bool pass = true;
};

struct SweepTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Row> rows;  // ascending eta
    std::vector<PointError> errors;
    std::optional<CompareSummary> summary;
    bool with_oracle() const;
    int exit_code() const;
};

DetectorParams resolve_params(const RunConfig& c);
Trajectory resolve_trajectory(const RunConfig& c);
std::vector<double> eta_grid(const EtaRange& r);

// closed form (and optionally oracle) at one eta; throws on failure
Row evaluate_point(const RunConfig& c, double eta);

SweepTable run_eval(const RunConfig& c);
SweepTable run_sweep(const RunConfig& c);
SweepTable run_compare(const RunConfig& c);
std::vector<SweepTable> run_figure(const RunConfig& c);
ValidationReport run_validate(const RunConfig& c);

// one config per curve of a figure; throws UnknownFigure
std::vector<RunConfig> figure_curves(const std::string& id, const RunConfig& base);
std::vector<std::string> figure_ids();

void write_csv(std::ostream& os, const SweepTable& t);
void write_json(std::ostream& os, const std::vector<SweepTable>& tables);
void write_tables(std::ostream& os, const std::vector<SweepTable>& tables, Format f);
std::string render_validation(const ValidationReport& r, Format f);

// read back what write_csv produced (rows only)
std::vector<Row> read_csv_rows(std::istream& is);

// JSON document with the same keys as the CLI flags (underscored)
RunConfig load_config(const std::string& path);
RunConfig config_from_json_text(const std::string& text);

}  // namespace udw
