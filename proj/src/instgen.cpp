#include "hangar/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hangar/geometry.hpp"

namespace hangar::instgen {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

StreamRng::StreamRng(std::uint64_t master_seed, std::uint64_t stream_id)
    : engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id))) {}

std::uint64_t StreamRng::next() { return engine_(); }

double StreamRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double StreamRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

long StreamRng::uniform_int(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps every value equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<long>(v % range);
}

bool StreamRng::bernoulli(double p) { return uniform01() < p; }

void GeneratorConfig::validate(const HangarConfig& hangar) const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw InvalidConfig("generator: " + what);
  };
  require(time_horizon_factor >= 0, "time_horizon_factor must be >= 0");
  require(serv_range.first > 0 && serv_range.first <= serv_range.second,
          "serv_range must satisfy 0 < lo <= hi");
  require(buffer_time_range.first >= 0 &&
              buffer_time_range.first <= buffer_time_range.second,
          "buffer_time_range must satisfy 0 <= lo <= hi");
  require(vip_prob >= 0 && vip_prob <= 1, "vip_prob must lie in [0, 1]");
  require(p_rej_vip.first >= 0 && p_rej_vip.first <= p_rej_vip.second,
          "p_rej_vip range is empty");
  require(p_rej_normal.first >= 0 && p_rej_normal.first <= p_rej_normal.second,
          "p_rej_normal range is empty");
  require(!model_catalog.empty(), "model_catalog is empty");
  require(!congestion || (*congestion > 0 && *congestion <= 1),
          "congestion factor must lie in (0, 1]");
  require(high_rejection_factor > 0, "high_rejection_factor must be > 0");
  for (const auto& m : model_catalog) {
    if (!(m.width > 0 && m.length > 0) ||
        m.width + 2 * hangar.buffer > hangar.hw + kTolerance ||
        m.length + 2 * hangar.buffer > hangar.hl + kTolerance) {
      throw CatalogDoesNotFit("model " + std::to_string(m.width) + " x " +
                              std::to_string(m.length) +
                              " does not fit the buffered hangar");
    }
  }
}

std::vector<double> compress_arrivals(const std::vector<double>& etas,
                                      double factor) {
  if (etas.empty()) return {};
  const double first = *std::min_element(etas.begin(), etas.end());
  std::vector<double> out;
  out.reserve(etas.size());
  for (double e : etas) out.push_back(first + factor * (e - first));
  return out;
}

namespace {

std::string make_id(char prefix, std::size_t index, std::size_t count) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(count).size());
  std::string digits = std::to_string(index + 1);
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

/// Smallest x + y grid position (ties: smaller y) clear of every rectangle in
/// `placed`, or nullopt.
std::optional<std::pair<double, double>> greedy_spot(const Footprint& fp,
                                                     const std::vector<Rect>& placed,
                                                     const HangarConfig& h) {
  const double step = h.grid_step;
  const long nx = static_cast<long>(
      std::floor((h.hw - 2 * h.buffer - fp.width) / step + kTolerance));
  const long ny = static_cast<long>(
      std::floor((h.hl - 2 * h.buffer - fp.length) / step + kTolerance));
  if (nx < 0 || ny < 0) return std::nullopt;
  for (long s = 0; s <= nx + ny; ++s) {
    for (long j = std::max(0L, s - nx); j <= std::min(s, ny); ++j) {
      const double x = h.buffer + static_cast<double>(s - j) * step;
      const double y = h.buffer + static_cast<double>(j) * step;
      const Rect r{x, y, fp.width, fp.length};
      const bool clear = std::all_of(placed.begin(), placed.end(), [&](const Rect& o) {
        return separated(r, o, h.buffer);
      });
      if (clear) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace

Instance generate(const GeneratorConfig& config, const HangarConfig& hangar) {
  hangar.validate();
  config.validate(hangar);

  const std::size_t n = config.n;
  const std::uint64_t seed = config.seed;
  StreamRng eta_rng(seed, static_cast<std::uint64_t>(Stream::Eta));
  StreamRng service_rng(seed, static_cast<std::uint64_t>(Stream::Service));
  StreamRng slack_rng(seed, static_cast<std::uint64_t>(Stream::ScheduleBuffer));
  StreamRng model_rng(seed, static_cast<std::uint64_t>(Stream::Model));
  StreamRng vip_rng(seed, static_cast<std::uint64_t>(Stream::Vip));
  StreamRng rej_rng(seed, static_cast<std::uint64_t>(Stream::RejectionPenalty));

  const double eta_max = static_cast<double>(n) * config.time_horizon_factor;
  const long last_model = static_cast<long>(config.model_catalog.size()) - 1;

  std::vector<double> etas(n), services(n), slacks(n);
  std::vector<long> models(n);
  std::vector<bool> vips(n);
  std::vector<long> rejections(n);
  for (std::size_t i = 0; i < n; ++i) etas[i] = eta_rng.uniform(0.0, eta_max);
  for (std::size_t i = 0; i < n; ++i) {
    services[i] = service_rng.uniform(config.serv_range.first, config.serv_range.second);
  }
  for (std::size_t i = 0; i < n; ++i) {
    slacks[i] = slack_rng.uniform(config.buffer_time_range.first,
                                  config.buffer_time_range.second);
  }
  for (std::size_t i = 0; i < n; ++i) models[i] = model_rng.uniform_int(0, last_model);
  for (std::size_t i = 0; i < n; ++i) vips[i] = vip_rng.bernoulli(config.vip_prob);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& range = vips[i] ? config.p_rej_vip : config.p_rej_normal;
    rejections[i] = rej_rng.uniform_int(range.first, range.second);
  }
  if (config.congestion) etas = compress_arrivals(etas, *config.congestion);

  Instance instance;
  instance.hangar = hangar;
  instance.label = "Inst-" + std::to_string(n) + "-" + std::to_string(seed);
  if (config.congestion) instance.label += "-C";
  if (config.high_rejection) instance.label += "+";

  for (std::size_t i = 0; i < n; ++i) {
    const auto& fp = config.model_catalog[static_cast<std::size_t>(models[i])];
    const auto& delay = vips[i] ? config.delay_penalties_vip
                                : config.delay_penalties_normal;
    AircraftSpec f;
    f.id = make_id('F', i, n);
    f.kind = AircraftKind::Future;
    f.width = fp.width;
    f.length = fp.length;
    f.eta = etas[i];
    f.service = services[i];
    f.etd = etas[i] + services[i] + slacks[i];
    double p_rej = static_cast<double>(rejections[i]);
    if (config.high_rejection) p_rej *= config.high_rejection_factor;
    f.p_rej = p_rej;
    f.p_arr = delay.first;
    f.p_dep = delay.second;
    f.vip = vips[i];
    instance.future.push_back(std::move(f));
  }

  if (config.n_current > 0) {
    StreamRng c_service(seed, static_cast<std::uint64_t>(Stream::CurrentService));
    StreamRng c_slack(seed, static_cast<std::uint64_t>(Stream::CurrentScheduleBuffer));
    StreamRng c_model(seed, static_cast<std::uint64_t>(Stream::CurrentModel));
    StreamRng c_vip(seed, static_cast<std::uint64_t>(Stream::CurrentVip));
    std::vector<Rect> placed;
    for (std::size_t i = 0; i < config.n_current; ++i) {
      const double service =
          c_service.uniform(config.serv_range.first, config.serv_range.second);
      const double slack = c_slack.uniform(config.buffer_time_range.first,
                                           config.buffer_time_range.second);
      const auto& fp =
          config.model_catalog[static_cast<std::size_t>(c_model.uniform_int(0, last_model))];
      const bool vip = c_vip.bernoulli(config.vip_prob);
      auto spot = greedy_spot(fp, placed, hangar);
      if (!spot) {
        throw PlacementImpossible("cannot place current aircraft " +
                                  std::to_string(i + 1) + " of " +
                                  std::to_string(config.n_current));
      }
      placed.push_back(Rect{spot->first, spot->second, fp.width, fp.length});
      AircraftSpec c;
      c.id = make_id('C', i, config.n_current);
      c.kind = AircraftKind::Current;
      c.width = fp.width;
      c.length = fp.length;
      c.eta = 0.0;
      c.service = service;
      c.etd = service + slack;
      c.p_dep = vip ? config.delay_penalties_vip.second
                    : config.delay_penalties_normal.second;
      c.x_init = spot->first;
      c.y_init = spot->second;
      c.vip = vip;
      instance.current.push_back(std::move(c));
    }
  }
  validate_instance(instance);
  return instance;
}

}  // namespace hangar::instgen
