#include <algorithm>
#include <functional>
#include <map>

#include "udw/errors.hpp"
#include "udw/runner.hpp"

namespace udw {

namespace {

struct Figure {
    bool inertial;
    Observable obs;
    double eta_stop;
    std::vector<double> nodes;  // reference values quoted for the curves
    std::function<std::vector<RunConfig>(RunConfig)> curves;
};

RunConfig with(RunConfig c, const std::string& label, std::function<void(RunConfig&)> f) {
    f(c);
    c.label = label;
    return c;
}

const std::map<std::string, Figure>& table() {
    static const std::map<std::string, Figure> figs = {
        {"A_m",
         {false, Observable::QQ, 5000, {30, 50, 5000}, [](RunConfig c) {
              c.omega = 1, c.lambda0 = 0.3;
              return std::vector{with(c, "a=0.1", [](RunConfig& r) { r.a = 0.1; }),
                                 with(c, "a=0.001", [](RunConfig& r) { r.a = 0.001; })};
          }}},
        {"B",
         {false, Observable::QQ, 5000, {50, 5000}, [](RunConfig c) {
              c.omega = 1, c.a = 0.001;
              return std::vector{with(c, "gamma=0.000398", [](RunConfig& r) { r.lambda0 = 0.1; }),
                                 with(c, "gamma=0.00358", [](RunConfig& r) { r.lambda0 = 0.3; })};
          }}},
        {"C",
         {false, Observable::QQ, 5000, {5000}, [](RunConfig c) {
              c.a = 0.001, c.lambda0 = 0.1;
              return std::vector{with(c, "omega=2.3", [](RunConfig& r) { r.omega = 2.3; }),
                                 with(c, "omega=1", [](RunConfig& r) { r.omega = 1; })};
          }}},
        {"A_PB",
         {false, Observable::PP, 7000, {11, 7000}, [](RunConfig c) {
              c.omega = 1, c.lambda0 = 0.1;
              return std::vector{with(c, "a=0.1", [](RunConfig& r) { r.a = 0.1; }),
                                 with(c, "a=0.001", [](RunConfig& r) { r.a = 0.001; })};
          }}},
        {"B_PB",
         {false, Observable::PP, 8000, {20, 8000}, [](RunConfig c) {
              c.omega = 1, c.a = 0.1;
              return std::vector{with(c, "gamma=0.000398", [](RunConfig& r) { r.lambda0 = 0.1; }),
                                 with(c, "gamma=0.00358", [](RunConfig& r) { r.lambda0 = 0.3; })};
          }}},
        {"C_PB",
         {false, Observable::PP, 5000, {}, [](RunConfig c) {
              c.a = 0.1, c.lambda0 = 0.1;
              return std::vector{with(c, "omega=1", [](RunConfig& r) { r.omega = 1; }),
                                 with(c, "omega=2.3", [](RunConfig& r) { r.omega = 2.3; })};
          }}},
        // the curve family is labelled <Q^2> but ambiguous; the Q^2 observable is used
        {"impro",
         {false, Observable::QQ, 5000, {50}, [](RunConfig c) {
              c.a = 0.001, c.omega = 2.3;
              return std::vector{
                  with(c, "gamma=0.1", [](RunConfig& r) { r.lambda0 = lambda0_for_gamma(0.1, r.m0); }),
                  with(c, "gamma=0.000398", [](RunConfig& r) { r.lambda0 = 0.1; })};
          }}},
        {"VD",
         {true, Observable::QQ, 5000, {}, [](RunConfig c) {
              c.omega = 1, c.lambda0 = 0.1;
              return std::vector{with(c, "inertial", [](RunConfig&) {})};
          }}},
        {"VD_PB",
         {true, Observable::PP, 5000, {}, [](RunConfig c) {
              c.omega = 1, c.lambda0 = 0.1;
              return std::vector{with(c, "inertial", [](RunConfig&) {})};
          }}},
    };
    return figs;
}

}  // namespace

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, _] : table()) ids.push_back(k);
    return ids;
}

std::vector<RunConfig> figure_curves(const std::string& id, const RunConfig& base) {
    auto it = table().find(id);
    if (it == table().end()) throw UnknownFigure("unknown figure id '" + id + "'");
    const Figure& f = it->second;
    RunConfig c = base;
    c.command = Command::Figure;
    c.inertial = f.inertial;
    c.observable = f.obs;
    c.m0 = 1;
    c.hbar = 1;
    c.eta.reset();
    c.range.start = 1;
    c.range.stop = f.eta_stop;
    c.range.spacing = Spacing::Log;
    c.extra_eta = f.nodes;
    return f.curves(c);
}

}  // namespace udw
