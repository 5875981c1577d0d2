#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dissipa/dissipativity.hpp"
#include "dissipa/numfmt.hpp"

namespace dissipa {

/// Flat "key value" configuration text with dotted sections and '#' comments.
using Config = std::map<std::string, std::string>;

Config parse_config(const std::string& text);
Config load_config(const std::string& path);
std::string canonical_config(const Config& cfg);  // sorted "key value" lines

/// FNV-1a 64 over the canonical form, as fixed-width hex.
std::string config_hash(const Config& cfg);

double config_double(const Config& cfg, const std::string& key, double fallback);
int config_int(const Config& cfg, const std::string& key, int fallback);
std::string config_string(const Config& cfg, const std::string& key,
                          const std::string& fallback);

/// Sweep CSV: xi_1..xi_d, radius, re_lambda_1..n, im_lambda_1..n, max_re, theta.
std::string sweep_csv(const std::vector<SweepRecord>& records, int d, int n);

/// Decay CSV: t, norm, fitted_rate_running.
std::string decay_csv(const std::vector<double>& times, const std::vector<double>& norms,
                      const std::vector<double>& running_rate);

void write_file(const std::string& path, const std::string& content);

}  // namespace dissipa
