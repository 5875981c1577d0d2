#include "dissipa/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dissipa {

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, value, extra;
    if (!(ls >> key)) continue;
    if (!(ls >> value))
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": key '" + key + "' without value");
    if (ls >> extra)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": trailing token '" + extra + "'");
    cfg[key] = value;
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string canonical_config(const Config& cfg) {
  std::string out;
  for (const auto& [k, v] : cfg) out += k + " " + v + "\n";
  return out;
}

std::string config_hash(const Config& cfg) {
  const std::string canon = canonical_config(cfg);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double config_double(const Config& cfg, const std::string& key, double fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  auto v = parse_double(it->second);
  if (!v) throw std::invalid_argument("config key '" + key + "': bad number '" + it->second + "'");
  return *v;
}

int config_int(const Config& cfg, const std::string& key, int fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  auto v = parse_int(it->second);
  if (!v) throw std::invalid_argument("config key '" + key + "': bad integer '" + it->second + "'");
  return static_cast<int>(*v);
}

std::string config_string(const Config& cfg, const std::string& key,
                          const std::string& fallback) {
  auto it = cfg.find(key);
  return it == cfg.end() ? fallback : it->second;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, int d, int n) {
  std::string out;
  for (int k = 1; k <= d; ++k) out += "xi_" + std::to_string(k) + ",";
  out += "radius";
  for (int k = 1; k <= n; ++k) out += ",re_lambda_" + std::to_string(k);
  for (int k = 1; k <= n; ++k) out += ",im_lambda_" + std::to_string(k);
  out += ",max_re,theta\n";
  for (const SweepRecord& r : records) {
    for (int k = 0; k < d; ++k) out += format_double(r.at.xi[k]) + ",";
    out += format_double(r.at.radius);
    for (int k = 0; k < n; ++k)
      out += "," + (r.ok ? format_double(r.eigenvalues[k].real()) : std::string("nan"));
    for (int k = 0; k < n; ++k)
      out += "," + (r.ok ? format_double(r.eigenvalues[k].imag()) : std::string("nan"));
    out += "," + (r.ok ? format_double(r.max_re) : std::string("nan"));
    out += "," + (r.theta ? format_double(*r.theta) : std::string(""));
    out += "\n";
  }
  return out;
}

std::string decay_csv(const std::vector<double>& times, const std::vector<double>& norms,
                      const std::vector<double>& running_rate) {
  std::string out = "t,norm,fitted_rate_running\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out += format_double(times[i]) + "," + format_double(norms[i]) + "," +
           format_double(running_rate[i]) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dissipa
