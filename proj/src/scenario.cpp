#include "rreed/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace rreed {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || std::isnan(out)) {
    throw ConfigError(key, "expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t parse_uint(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + std::string(v) + "'");
}

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(key, what);
}

using Setter = std::function<void(ScenarioConfig&, const std::string&, std::string_view)>;

Setter real(double ScenarioConfig::*field) {
  return [field](ScenarioConfig& c, const std::string& k, std::string_view v) {
    c.*field = parse_double(k, v);
  };
}

Setter flag(bool ScenarioConfig::*field) {
  return [field](ScenarioConfig& c, const std::string& k, std::string_view v) {
    c.*field = parse_bool(k, v);
  };
}

template <typename T>
Setter integer(T ScenarioConfig::*field) {
  return [field](ScenarioConfig& c, const std::string& k, std::string_view v) {
    c.*field = static_cast<T>(parse_uint(k, v));
  };
}

const std::unordered_map<std::string, Setter>& setters() {
  static const std::unordered_map<std::string, Setter> table = {
      {"seed", integer(&ScenarioConfig::seed)},
      {"duration", real(&ScenarioConfig::duration)},
      {"alpha", [](ScenarioConfig& c, const std::string& k,
                   std::string_view v) { c.weights.alpha = parse_double(k, v); }},
      {"beta", [](ScenarioConfig& c, const std::string& k,
                  std::string_view v) { c.weights.beta = parse_double(k, v); }},
      {"gamma", [](ScenarioConfig& c, const std::string& k,
                   std::string_view v) { c.weights.gamma = parse_double(k, v); }},
      {"node_count", integer(&ScenarioConfig::node_count)},
      {"packet_size", integer(&ScenarioConfig::packet_size)},
      {"initial_energy", real(&ScenarioConfig::initial_energy)},
      {"queue_capacity", integer(&ScenarioConfig::queue_capacity)},
      {"prr_window", integer(&ScenarioConfig::prr_window)},
      {"predictive_drop", flag(&ScenarioConfig::predictive_drop)},
      {"include_service_time", flag(&ScenarioConfig::include_service_time)},
      {"rate_smoothing", real(&ScenarioConfig::rate_smoothing)},
      {"timeline_interval", real(&ScenarioConfig::timeline_interval)},
      {"grid.width", real(&ScenarioConfig::grid_width)},
      {"grid.height", real(&ScenarioConfig::grid_height)},
      {"sink.x", [](ScenarioConfig& c, const std::string& k,
                    std::string_view v) { c.sink.x = parse_double(k, v); }},
      {"sink.y", [](ScenarioConfig& c, const std::string& k,
                    std::string_view v) { c.sink.y = parse_double(k, v); }},
      {"radio.e_elec", real(&ScenarioConfig::e_elec_nj)},
      {"radio.eps_fs", real(&ScenarioConfig::eps_fs_pj)},
      {"radio.eps_amp", real(&ScenarioConfig::eps_amp_pj)},
      {"radio.bandwidth", real(&ScenarioConfig::bandwidth)},
      {"radio.range",
       [](ScenarioConfig& c, const std::string& k, std::string_view v) {
         c.radio_range = parse_double(k, v);
         require(c.radio_range > 0.0, "radio.range", "must be > 0");
       }},
      {"traffic.rt_rate", real(&ScenarioConfig::rt_rate)},
      {"traffic.nrt_rate", real(&ScenarioConfig::nrt_rate)},
      {"traffic.rt_deadline", real(&ScenarioConfig::rt_deadline)},
      {"traffic.nrt_deadline", real(&ScenarioConfig::nrt_deadline)},
      {"traffic.sources",
       [](ScenarioConfig& c, const std::string& k, std::string_view v) {
         c.sources.clear();
         if (v == "all") return;
         for (std::string_view part : split(v, ',')) {
           c.sources.push_back(static_cast<NodeId>(parse_uint(k, trim(part))));
         }
       }},
      {"link.loss", real(&ScenarioConfig::link_loss)},
  };
  return table;
}

// node.<id>.x, node.<id>.y, link.loss.<from>.<to>
bool apply_indexed(ScenarioConfig& c, const std::string& key, std::string_view value) {
  const auto parts = split(key, '.');
  if (parts.size() == 3 && parts[0] == "node" && (parts[2] == "x" || parts[2] == "y")) {
    const auto id = static_cast<NodeId>(parse_uint(key, parts[1]));
    if (id == 0) throw ConfigError(key, "node 0 is the sink; use sink.x / sink.y");
    auto& pos = c.positions[id];
    (parts[2] == "x" ? pos.x : pos.y) = parse_double(key, value);
    return true;
  }
  if (parts.size() == 4 && parts[0] == "link" && parts[1] == "loss") {
    const auto from = static_cast<NodeId>(parse_uint(key, parts[2]));
    const auto to = static_cast<NodeId>(parse_uint(key, parts[3]));
    c.link_loss_overrides[{from, to}] = parse_double(key, value);
    return true;
  }
  return false;
}

}  // namespace

energy::RadioParams ScenarioConfig::radio() const {
  return {e_elec_nj * 1e-9, eps_fs_pj * 1e-12, eps_amp_pj * 1e-12, bandwidth};
}

double ScenarioConfig::loss_probability(NodeId from, NodeId to) const {
  const auto it = link_loss_overrides.find({from, to});
  return it == link_loss_overrides.end() ? link_loss : it->second;
}

bool ScenarioConfig::is_source(NodeId id) const {
  if (id == 0 || id >= node_count) return false;
  if (sources.empty()) return true;
  return std::binary_search(sources.begin(), sources.end(), id);
}

void finalize(ScenarioConfig& c) {
  require(c.grid_width > 0.0 && std::isfinite(c.grid_width), "grid.width", "must be > 0");
  require(c.grid_height > 0.0 && std::isfinite(c.grid_height), "grid.height", "must be > 0");
  require(c.node_count >= 2, "node_count", "must be >= 2");
  auto inside = [&](const geometry::Position& p) {
    return p.x >= 0.0 && p.x <= c.grid_width && p.y >= 0.0 && p.y <= c.grid_height;
  };
  require(inside(c.sink), "sink.x", "sink must lie inside the grid");
  for (const auto& [id, pos] : c.positions) {
    const std::string key = "node." + std::to_string(id);
    if (id >= c.node_count) throw ConfigError(key, "node id out of range");
    if (!inside(pos)) throw ConfigError(key, "position outside the grid");
  }

  require(c.e_elec_nj > 0.0, "radio.e_elec", "must be > 0");
  require(c.eps_fs_pj > 0.0, "radio.eps_fs", "must be > 0");
  require(c.eps_amp_pj > 0.0, "radio.eps_amp", "must be > 0");
  require(c.bandwidth > 0.0 && std::isfinite(c.bandwidth), "radio.bandwidth", "must be > 0");
  if (c.radio_range == 0.0) c.radio_range = energy::crossover_distance(c.radio());
  require(c.radio_range > 0.0 && std::isfinite(c.radio_range), "radio.range", "must be > 0");

  require(c.initial_energy > 0.0 && std::isfinite(c.initial_energy), "initial_energy",
          "must be > 0");
  require(c.packet_size > 0, "packet_size", "must be > 0");

  require(c.rt_rate >= 0.0 && std::isfinite(c.rt_rate), "traffic.rt_rate", "must be >= 0");
  require(c.nrt_rate >= 0.0 && std::isfinite(c.nrt_rate), "traffic.nrt_rate", "must be >= 0");
  require(c.rt_deadline > 0.0, "traffic.rt_deadline", "must be > 0");
  require(c.nrt_deadline > 0.0, "traffic.nrt_deadline", "must be > 0");
  std::sort(c.sources.begin(), c.sources.end());
  c.sources.erase(std::unique(c.sources.begin(), c.sources.end()), c.sources.end());
  for (NodeId s : c.sources) {
    require(s != 0 && s < c.node_count, "traffic.sources", "ids must be in 1..node_count-1");
  }

  require(c.weights.alpha >= 0.0, "alpha", "must be >= 0");
  require(c.weights.beta >= 0.0, "beta", "must be >= 0");
  require(c.weights.gamma >= 0.0, "gamma", "must be >= 0");
  require(c.weights.alpha + c.weights.beta + c.weights.gamma > 0.0, "alpha",
          "weights must not all be zero");
  require(c.rate_smoothing > 0.0 && c.rate_smoothing <= 1.0, "rate_smoothing",
          "must be in (0, 1]");

  require(c.prr_window >= 1, "prr_window", "must be >= 1");
  require(c.queue_capacity >= 1, "queue_capacity", "must be >= 1");
  require(c.link_loss >= 0.0 && c.link_loss <= 1.0, "link.loss", "must be in [0, 1]");
  for (const auto& [link, p] : c.link_loss_overrides) {
    const std::string key =
        "link.loss." + std::to_string(link.first) + "." + std::to_string(link.second);
    if (link.first >= c.node_count || link.second >= c.node_count || link.first == link.second) {
      throw ConfigError(key, "invalid link endpoints");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(key, "must be in [0, 1]");
  }

  require(c.duration >= 0.0 && std::isfinite(c.duration), "duration", "must be >= 0");
  require(c.timeline_interval > 0.0 && std::isfinite(c.timeline_interval),
          "timeline_interval", "must be > 0");
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
    if (value.empty()) throw ConfigError(key, "missing value");

    const auto& table = setters();
    if (const auto it = table.find(key); it != table.end()) {
      it->second(c, key, value);
    } else if (!apply_indexed(c, key, value)) {
      throw ConfigError(key, "unknown key");
    }
  }
  finalize(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "seed = " << c.seed << '\n'
     << "duration = " << fmt(c.duration) << '\n'
     << "alpha = " << fmt(c.weights.alpha) << '\n'
     << "beta = " << fmt(c.weights.beta) << '\n'
     << "gamma = " << fmt(c.weights.gamma) << '\n'
     << "node_count = " << c.node_count << '\n'
     << "packet_size = " << c.packet_size << '\n'
     << "initial_energy = " << fmt(c.initial_energy) << '\n'
     << "queue_capacity = " << c.queue_capacity << '\n'
     << "prr_window = " << c.prr_window << '\n'
     << "predictive_drop = " << (c.predictive_drop ? "true" : "false") << '\n'
     << "include_service_time = " << (c.include_service_time ? "true" : "false") << '\n'
     << "rate_smoothing = " << fmt(c.rate_smoothing) << '\n'
     << "timeline_interval = " << fmt(c.timeline_interval) << '\n'
     << "grid.width = " << fmt(c.grid_width) << '\n'
     << "grid.height = " << fmt(c.grid_height) << '\n'
     << "sink.x = " << fmt(c.sink.x) << '\n'
     << "sink.y = " << fmt(c.sink.y) << '\n'
     << "radio.e_elec = " << fmt(c.e_elec_nj) << '\n'
     << "radio.eps_fs = " << fmt(c.eps_fs_pj) << '\n'
     << "radio.eps_amp = " << fmt(c.eps_amp_pj) << '\n'
     << "radio.bandwidth = " << fmt(c.bandwidth) << '\n'
     << "radio.range = " << fmt(c.radio_range) << '\n'
     << "traffic.rt_rate = " << fmt(c.rt_rate) << '\n'
     << "traffic.nrt_rate = " << fmt(c.nrt_rate) << '\n'
     << "traffic.rt_deadline = " << fmt(c.rt_deadline) << '\n'
     << "traffic.nrt_deadline = " << fmt(c.nrt_deadline) << '\n';
  os << "traffic.sources = ";
  if (c.sources.empty()) {
    os << "all";
  } else {
    for (std::size_t i = 0; i < c.sources.size(); ++i) os << (i ? "," : "") << c.sources[i];
  }
  os << '\n' << "link.loss = " << fmt(c.link_loss) << '\n';
  for (const auto& [link, p] : c.link_loss_overrides) {
    os << "link.loss." << link.first << '.' << link.second << " = " << fmt(p) << '\n';
  }
  for (const auto& [id, pos] : c.positions) {
    os << "node." << id << ".x = " << fmt(pos.x) << '\n';
    os << "node." << id << ".y = " << fmt(pos.y) << '\n';
  }
  return os.str();
}

}  // namespace rreed
