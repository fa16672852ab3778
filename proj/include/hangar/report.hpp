#ifndef HANGAR_REPORT_HPP
#define HANGAR_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "hangar/core.hpp"
#include "hangar/geometry.hpp"

namespace hangar::report {

class InfeasibleSolution : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InfeasibleSolution"; }
};

enum class Status { Static, Arriving, PreDeparture };

struct FrameAircraft {
  std::string id;
  Rect rect;
  Status status = Status::Static;
};

struct FrameSpec {
  double time = 0.0;
  std::vector<FrameAircraft> parked;  // instance order
  std::vector<std::string> arriving;
  std::vector<std::string> departing;
};

/// Frames at t = 0 and at every distinct movement-event time of an accepted
/// aircraft (future roll-ins and all roll-outs). An aircraft is drawn in a
/// frame when roll_in <= t <= roll_out; it is "arriving" in its roll-in
/// frame and "pre-departure" in its roll-out frame.
std::vector<FrameSpec> build_frames(const Instance& instance, const Solution& solution);

/// SVG 1.1 document for one frame. Geometry is drawn in hangar meters with
/// the origin bottom-left and the open front at the top.
std::string frame_svg(const Instance& instance, const FrameSpec& frame);

/// File name `frame_<kkk>_<time>.svg` with time in hours to 2 decimals.
std::string frame_file_name(std::size_t index, double time);

/// Writes one SVG per frame into out_dir (created if needed). Throws
/// InfeasibleSolution when the validator rejects the solution.
std::vector<std::filesystem::path> render_frames(const Instance& instance,
                                                 const Solution& solution,
                                                 const std::filesystem::path& out_dir);

/// Self-contained HTML: cost summary, accepted and rejected tables, frame
/// gallery (feasible solutions only) and a presence timeline.
std::string report_html(const Instance& instance, const Solution& solution,
                        const CostBreakdown& cost);

void render_report(const Instance& instance, const Solution& solution,
                   const CostBreakdown& cost, const std::filesystem::path& out_file);

}  // namespace hangar::report

#endif  // HANGAR_REPORT_HPP
