#ifndef HANGAR_INSTGEN_HPP
#define HANGAR_INSTGEN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hangar/core.hpp"

namespace hangar::instgen {

class CatalogDoesNotFit : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "CatalogDoesNotFit"; }
};

class PlacementImpossible : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PlacementImpossible"; }
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidConfig"; }
};

struct Footprint {
  double width;
  double length;
};

/// Eight aircraft models, regional to wide-body (W x L in meters).
inline const std::vector<Footprint> kDefaultCatalog = {
    {24, 22}, {26, 24}, {28, 26}, {30, 30},
    {34, 34}, {36, 38}, {40, 42}, {45, 48},
};

struct GeneratorConfig {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  double time_horizon_factor = 80.0;  // hours per future aircraft
  std::pair<double, double> serv_range{100.0, 400.0};
  std::pair<double, double> buffer_time_range{24.0, 72.0};
  double vip_prob = 0.2;
  std::pair<int, int> p_rej_vip{1500, 2000};
  std::pair<int, int> p_rej_normal{700, 1200};
  std::pair<double, double> delay_penalties_normal{10.0, 20.0};  // (P^Arr, P^Dep)
  std::pair<double, double> delay_penalties_vip{30.0, 60.0};
  std::vector<Footprint> model_catalog = kDefaultCatalog;
  /// Inter-arrival gaps are scaled by this factor when set; (0, 1].
  std::optional<double> congestion;
  std::size_t n_current = 0;
  bool high_rejection = false;
  double high_rejection_factor = 10.0;

  /// Throws InvalidConfig or CatalogDoesNotFit.
  void validate(const HangarConfig& hangar) const;
};

/// One mt19937_64 sub-stream per parameter type, each seeded from the master
/// seed through splitmix64. The engine's output sequence is fixed by the
/// standard; the distributions below are written out by hand because the
/// <random> distribution algorithms differ between standard libraries.
class StreamRng {
 public:
  StreamRng(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next();
  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  long uniform_int(long lo, long hi);      // {lo, ..., hi}
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Sub-stream ids; values are part of the reproducibility contract and must
/// never be renumbered.
enum class Stream : std::uint64_t {
  Eta = 1,
  Service = 2,
  ScheduleBuffer = 3,
  Model = 4,
  Vip = 5,
  RejectionPenalty = 6,
  CurrentService = 7,
  CurrentScheduleBuffer = 8,
  CurrentModel = 9,
  CurrentVip = 10,
};

/// Deterministic instance for (config, hangar); labelled Inst-<N>-<seed>
/// with "-C" for congested and "+" for high-rejection variants.
Instance generate(const GeneratorConfig& config, const HangarConfig& hangar = {});

/// Scales sorted inter-arrival gaps by `factor`, keeping the earliest ETA.
std::vector<double> compress_arrivals(const std::vector<double>& etas, double factor);

}  // namespace hangar::instgen

#endif  // HANGAR_INSTGEN_HPP
