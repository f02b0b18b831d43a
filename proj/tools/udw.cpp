// udw: vacuum-fluctuation correlators of an Unruh-DeWitt detector
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "udw/errors.hpp"
#include "udw/runner.hpp"

using namespace udw;

namespace {

struct Flags {
    std::optional<std::string> config, traj, observable, spacing, prefactor, v2_form, format, output, figure;
    std::optional<double> a, v, omega, lambda0, m0, hbar, eta, eta_start, eta_stop, kappa_max, tol;
    std::optional<int> eta_count, jobs;
    bool oracle = false;
};

void add_flags(CLI::App* s, Flags& f, bool figure) {
    s->add_option("--config", f.config, "JSON config file; flags override it")->check(CLI::ExistingFile);
    if (figure) {
        s->add_option("id", f.figure, "figure id")->required();
    } else {
        s->add_option("--traj", f.traj)->check(CLI::IsMember({"uad", "inertial"}));
        s->add_option("--a", f.a, "proper acceleration");
        s->add_option("--v", f.v, "inertial velocity");
        s->add_option("--omega", f.omega);
        s->add_option("--lambda0", f.lambda0);
        s->add_option("--m0", f.m0);
        s->add_option("--hbar", f.hbar);
        s->add_option("--observable", f.observable)->check(CLI::IsMember({"qq", "pp"}));
        s->add_option("--eta", f.eta);
        s->add_option("--eta-start", f.eta_start);
        s->add_option("--eta-stop", f.eta_stop);
        s->add_option("--eta-count", f.eta_count);
        s->add_option("--eta-spacing", f.spacing)->check(CLI::IsMember({"log", "linear"}));
    }
    s->add_flag("--oracle", f.oracle, "also run the kappa-integral oracle");
    s->add_option("--prefactor", f.prefactor)->check(CLI::IsMember({"maintext", "appendixd"}));
    s->add_option("--v2-form", f.v2_form)->check(CLI::IsMember({"published", "partial-fraction"}));
    s->add_option("--kappa-max", f.kappa_max);
    s->add_option("--tol", f.tol, "oracle absolute tolerance");
    s->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--output", f.output);
    s->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber);
}

RunConfig resolve(Command cmd, const Flags& f) {
    RunConfig c = f.config ? load_config(*f.config) : RunConfig{};
    c.command = cmd;
    if (cmd == Command::Figure && !(f.config && c.range.count != EtaRange{}.count)) c.range.count = 100;
    if (f.traj) c.inertial = *f.traj == "inertial";
    if (f.a) c.a = *f.a;
    if (f.v) c.v = *f.v;
    if (f.omega) c.omega = *f.omega;
    if (f.lambda0) c.lambda0 = *f.lambda0;
    if (f.m0) c.m0 = *f.m0;
    if (f.hbar) c.hbar = *f.hbar;
    if (f.observable) c.observable = *f.observable == "pp" ? Observable::PP : Observable::QQ;
    if (f.eta) c.eta = *f.eta;
    if (f.eta_start) c.range.start = *f.eta_start;
    if (f.eta_stop) c.range.stop = *f.eta_stop;
    if (f.eta_count) c.range.count = *f.eta_count;
    if (f.spacing) c.range.spacing = *f.spacing == "log" ? Spacing::Log : Spacing::Linear;
    if (f.oracle) c.oracle = true;
    if (f.prefactor) c.correlator.prefactor = *f.prefactor == "maintext" ? Prefactor::MainText : Prefactor::AppendixD;
    if (f.v2_form) c.correlator.v2_form = *f.v2_form == "published" ? V2Form::Published : V2Form::PartialFraction;
    if (f.kappa_max) c.quadrature.kappa_max = *f.kappa_max;
    if (f.tol) c.quadrature.abs_tol = *f.tol;
    if (f.format) c.format = *f.format == "json" ? Format::Json : Format::Csv;
    if (f.output) c.output = *f.output;
    if (f.jobs) c.jobs = *f.jobs;
    if (f.figure) c.figure = *f.figure;
    return c;
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) throw DomainError("cannot write " + c.output);
    out << text;
}

int run(Command cmd, const Flags& f) {
    RunConfig c = resolve(cmd, f);
    std::ostringstream os;
    int code = 0;
    switch (cmd) {
        case Command::Validate: {
            ValidationReport r = run_validate(c);
            emit(c, render_validation(r, c.format));
            return r.ok() ? 0 : 1;
        }
        case Command::Figure: {
            auto tables = run_figure(c);
            write_tables(os, tables, c.format);
            for (const auto& t : tables) code = std::max(code, t.exit_code());
            break;
        }
        default: {
            SweepTable t = cmd == Command::Eval ? run_eval(c) : cmd == Command::Sweep ? run_sweep(c) : run_compare(c);
            write_tables(os, {t}, c.format);
            code = t.exit_code();
        }
    }
    emit(c, os.str());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unruh-DeWitt detector vacuum correlators <Q^2>_v and <Qdot^2>_v"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    Flags f;
    std::map<CLI::App*, Command> cmds;
    cmds[app.add_subcommand("eval", "one eta")] = Command::Eval;
    cmds[app.add_subcommand("sweep", "eta grid")] = Command::Sweep;
    cmds[app.add_subcommand("compare", "closed forms against the quadrature oracle")] = Command::Compare;
    cmds[app.add_subcommand("figure", "curves of a reference figure: A_m B C A_PB B_PB C_PB impro VD VD_PB")] =
        Command::Figure;
    cmds[app.add_subcommand("validate", "check the parameter regime")] = Command::Validate;
    for (auto& [s, cmd] : cmds) add_flags(s, f, cmd == Command::Figure);

    CLI11_PARSE(app, argc, argv);

    Command cmd = Command::Eval;
    for (auto& [s, c] : cmds)
        if (s->parsed()) cmd = c;
    try {
        return run(cmd, f);
    } catch (const QuadratureFailure& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
