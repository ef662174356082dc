#include "cis/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <vector>

extern char** environ;

namespace cis {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& key, const std::string& value, int lo, int hi) {
    std::size_t used = 0;
    int parsed = 0;
    try {
        parsed = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer for " + key + ": " + value);
    }
    if (used != value.size()) throw std::invalid_argument("bad integer for " + key + ": " + value);
    if (parsed < lo || parsed > hi)
        throw std::invalid_argument(key + " out of range " + std::to_string(lo) + ".." +
                                    std::to_string(hi));
    return parsed;
}

double parse_rate(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double parsed = 0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number for " + key + ": " + value);
    }
    if (used != value.size() || !std::isfinite(parsed) || parsed < 0.0 || parsed > 1.0)
        throw std::invalid_argument(key + " must be a fraction in [0,1]");
    return parsed;
}

void apply(Config& cfg, const std::string& key, const std::string& value) {
    if (key == "enum_cap")
        cfg.enum_cap = parse_int(key, value, 1, 8);
    else if (key == "oracle_cap")
        cfg.oracle_cap = parse_int(key, value, 1, 24);
    else if (key == "workers")
        cfg.workers = parse_int(key, value, 0, 1024);
    else if (key == "audit_rate")
        cfg.audit_rate = parse_rate(key, value);
    else if (key == "out_dir")
        cfg.out_dir = value.empty() ? "." : value;
    else
        throw std::invalid_argument("unknown config key: " + key);
}

}  // namespace

Config config_load(const std::string& file_path, bool use_env) {
    Config cfg;

    std::string path = file_path;
    if (path.empty() && use_env)
        if (const char* env = std::getenv("CIS_CONFIG")) path = env;

    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file: " + path);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const std::string text = trim(line);
            if (text.empty() || text[0] == '#') continue;
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            " is not key=value");
            apply(cfg, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
        }
    }

    if (use_env) {
        static const std::vector<std::string> known = {
            "CIS_CONFIG", "CIS_ENUM_CAP", "CIS_ORACLE_CAP",
            "CIS_WORKERS", "CIS_AUDIT_RATE", "CIS_OUT_DIR",
        };
        for (char** entry = environ; entry && *entry; ++entry) {
            const std::string var(*entry);
            if (var.rfind("CIS_", 0) != 0) continue;
            const std::string name = var.substr(0, var.find('='));
            bool ok = false;
            for (const std::string& k : known) ok = ok || name == k;
            if (!ok) throw std::invalid_argument("unknown environment variable: " + name);
        }
        const auto from_env = [&cfg](const char* var, const char* key) {
            if (const char* value = std::getenv(var)) apply(cfg, key, value);
        };
        from_env("CIS_ENUM_CAP", "enum_cap");
        from_env("CIS_ORACLE_CAP", "oracle_cap");
        from_env("CIS_WORKERS", "workers");
        from_env("CIS_AUDIT_RATE", "audit_rate");
        from_env("CIS_OUT_DIR", "out_dir");
    }
    return cfg;
}

int effective_workers(const Config& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t audit_period_from_rate(double rate) {
    if (rate <= 0.0) return 0;
    const double period = 1.0 / rate;
    return period >= 1e18 ? 0 : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(period)));
}

}  // namespace cis
