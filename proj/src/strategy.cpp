#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "perfect/solve.hpp"

namespace perfect {

namespace {

std::string format_fraction(double f) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", f);
    return buf;
}

double parse_fraction(std::string_view s) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || !(v > 0.0 && v < 1.0))
        throw std::invalid_argument("termination fraction must be a number in (0,1): '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string format_strategy(const StrategyConfig& cfg) {
    std::string out;
    switch (cfg.termination.mode) {
        case Termination::Mode::One: out = "one"; break;
        case Termination::Mode::All: out = "all"; break;
        case Termination::Mode::Percentage: out = "pct" + format_fraction(cfg.termination.fraction); break;
    }
    if (cfg.heuristic_on_candidates) out += "+hc";
    if (cfg.heuristic_on_nodes) out += cfg.node_interval == 10 ? "+hr" : "+hr" + std::to_string(cfg.node_interval);
    if (cfg.add_all_initial) out += "+addall";
    return out;
}

StrategyConfig parse_strategy(std::string_view text) {
    StrategyConfig cfg;
    bool first = true;
    while (true) {
        const auto plus = text.find('+');
        const auto tok = text.substr(0, plus);
        if (first) {
            if (tok == "all" || tok == "base") {
                cfg.termination = {Termination::Mode::All, 0.0};
            } else if (tok == "one") {
                cfg.termination = {Termination::Mode::One, 0.0};
            } else if (tok.starts_with("pct")) {
                cfg.termination = {Termination::Mode::Percentage, parse_fraction(tok.substr(3))};
            } else {
                throw std::invalid_argument("unknown termination '" + std::string(tok) + "' (expected all, one or pct<f>)");
            }
            first = false;
        } else if (tok == "hc") {
            cfg.heuristic_on_candidates = true;
        } else if (tok.starts_with("hr")) {
            cfg.heuristic_on_nodes = true;
            if (tok.size() > 2) {
                int v = 0;
                auto rest = tok.substr(2);
                auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
                if (ec != std::errc() || end != rest.data() + rest.size() || v < 1)
                    throw std::invalid_argument("bad node interval in '" + std::string(tok) + "'");
                cfg.node_interval = v;
            }
        } else if (tok == "addall") {
            cfg.add_all_initial = true;
        } else {
            throw std::invalid_argument("unknown strategy token '" + std::string(tok) + "'");
        }
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
    }
    return cfg;
}

}  // namespace perfect
