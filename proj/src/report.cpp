#include "hangar/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hangar/io.hpp"
#include "hangar/validator.hpp"

namespace hangar::report {

namespace {

constexpr const char* kStaticColor = "#1f77b4";
constexpr const char* kArrivingColor = "#2ca02c";
constexpr const char* kDepartingColor = "#d62728";

std::string f2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string f4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 0.00005 ? 0.0 : v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* color(Status s) {
  switch (s) {
    case Status::Static: return kStaticColor;
    case Status::Arriving: return kArrivingColor;
    case Status::PreDeparture: return kDepartingColor;
  }
  return kStaticColor;
}

bool near(double a, double b) { return std::abs(a - b) <= kTolerance; }

}  // namespace

std::vector<FrameSpec> build_frames(const Instance& instance, const Solution& solution) {
  const auto aligned = align_assignments(instance, solution);
  std::vector<double> times{0.0};
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& a = *aligned[i];
    if (!a.accept) continue;
    if (instance.at(i).is_future()) times.push_back(a.roll_in);
    times.push_back(a.roll_out);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(), near), times.end());

  std::vector<FrameSpec> frames;
  for (double t : times) {
    FrameSpec frame;
    frame.time = t;
    for (std::size_t i = 0; i < instance.size(); ++i) {
      const auto& spec = instance.at(i);
      const auto& a = *aligned[i];
      if (!a.accept) continue;
      if (t < a.roll_in - kTolerance || t > a.roll_out + kTolerance) continue;
      FrameAircraft fa{a.aircraft_id, footprint(spec, a), Status::Static};
      if (near(t, a.roll_out)) {
        fa.status = Status::PreDeparture;
        frame.departing.push_back(a.aircraft_id);
      } else if (spec.is_future() && near(t, a.roll_in)) {
        fa.status = Status::Arriving;
        frame.arriving.push_back(a.aircraft_id);
      }
      frame.parked.push_back(std::move(fa));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::string frame_file_name(std::size_t index, double time) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "frame_%03zu_%s.svg", index, f2(time).c_str());
  return buf;
}

std::string frame_svg(const Instance& instance, const FrameSpec& frame) {
  const auto& h = instance.hangar;
  const double pad = 8.0;
  const double top = 14.0;
  const double scale = 8.0;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << f2((h.hw + 2 * pad) * scale) << "\" height=\"" << f2((h.hl + pad + top) * scale)
    << "\" viewBox=\"" << f2(-pad) << ' ' << f2(-top) << ' ' << f2(h.hw + 2 * pad) << ' '
    << f2(h.hl + pad + top) << "\">\n";
  s << "  <title>" << escape(instance.label) << " t=" << f2(frame.time) << " h</title>\n";
  s << "  <text x=\"0.00\" y=\"-7.00\" font-family=\"sans-serif\" font-size=\"4\">t = "
    << f2(frame.time) << " h</text>\n";
  s << "  <text x=\"" << f2(h.hw) << "\" y=\"-2.00\" font-family=\"sans-serif\" "
       "font-size=\"3\" text-anchor=\"end\" fill=\"#d62728\">exit</text>\n";
  s << "  <g id=\"hangar\" transform=\"matrix(1 0 0 -1 0 " << f2(h.hl) << ")\">\n";
  s << "    <rect class=\"hangar\" x=\"0.00\" y=\"0.00\" width=\"" << f2(h.hw)
    << "\" height=\"" << f2(h.hl) << "\" fill=\"#f4f4f4\" stroke=\"#000000\" "
       "stroke-width=\"0.4\"/>\n";
  s << "    <line class=\"exit\" x1=\"0.00\" y1=\"" << f2(h.hl) << "\" x2=\"" << f2(h.hw)
    << "\" y2=\"" << f2(h.hl)
    << "\" stroke=\"#d62728\" stroke-width=\"0.8\" stroke-dasharray=\"2 1\"/>\n";
  for (const auto& a : frame.parked) {
    const Rect& r = a.rect;
    s << "    <rect class=\"halo\" x=\"" << f2(r.x - h.buffer / 2) << "\" y=\""
      << f2(r.y - h.buffer / 2) << "\" width=\"" << f2(r.w + h.buffer) << "\" height=\""
      << f2(r.l + h.buffer) << "\" fill=\"" << color(a.status)
      << "\" fill-opacity=\"0.12\" stroke=\"" << color(a.status)
      << "\" stroke-width=\"0.2\" stroke-dasharray=\"1 1\"/>\n";
    s << "    <rect class=\"aircraft\" data-id=\"" << a.id << "\" x=\"" << f2(r.x)
      << "\" y=\"" << f2(r.y) << "\" width=\"" << f2(r.w) << "\" height=\"" << f2(r.l)
      << "\" fill=\"" << color(a.status) << "\" fill-opacity=\"0.7\" stroke=\"#000000\" "
         "stroke-width=\"0.2\"/>\n";
  }
  s << "  </g>\n";
  for (const auto& a : frame.parked) {
    const Rect& r = a.rect;
    s << "  <text x=\"" << f2(r.x + r.w / 2) << "\" y=\"" << f2(h.hl - (r.y + r.l / 2))
      << "\" font-family=\"sans-serif\" font-size=\"3\" text-anchor=\"middle\">" << a.id
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::vector<std::filesystem::path> render_frames(const Instance& instance,
                                                 const Solution& solution,
                                                 const std::filesystem::path& out_dir) {
  const auto report = validator::validate(instance, solution);
  if (!report.feasible) {
    throw InfeasibleSolution("cannot render an infeasible solution:\n" +
                             validator::explain(report));
  }
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  const auto frames = build_frames(instance, solution);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const auto path = out_dir / frame_file_name(k, frames[k].time);
    io::write_file(path, frame_svg(instance, frames[k]));
    written.push_back(path);
  }
  return written;
}

namespace {

std::string gantt_svg(const Instance& instance,
                      const std::vector<const Assignment*>& aligned) {
  double horizon = 1.0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (!aligned[i]->accept) continue;
    rows.push_back(i);
    horizon = std::max(horizon, aligned[i]->roll_out);
  }
  const double left = 60.0;
  const double width = 800.0;
  const double bar = 14.0;
  const double height = 30.0 + bar * 1.5 * static_cast<double>(rows.size());
  const double scale = width / horizon;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << f2(left + width + 20) << "\" height=\"" << f2(height) << "\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = horizon * k / 4.0;
    const double x = left + t * scale;
    s << "  <line x1=\"" << f2(x) << "\" y1=\"0.00\" x2=\"" << f2(x) << "\" y2=\""
      << f2(height - 16) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    s << "  <text x=\"" << f2(x) << "\" y=\"" << f2(height - 4)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << f2(t)
      << " h</text>\n";
  }
  double y = 4.0;
  for (std::size_t i : rows) {
    const auto& a = *aligned[i];
    const bool future = instance.at(i).is_future();
    s << "  <text x=\"" << f2(left - 6) << "\" y=\"" << f2(y + bar - 3)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
      << a.aircraft_id << "</text>\n";
    s << "  <rect x=\"" << f2(left + a.roll_in * scale) << "\" y=\"" << f2(y)
      << "\" width=\"" << f2((a.roll_out - a.roll_in) * scale) << "\" height=\"" << f2(bar)
      << "\" fill=\"" << (future ? kArrivingColor : kStaticColor)
      << "\" fill-opacity=\"0.7\"/>\n";
    y += bar * 1.5;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

std::string report_html(const Instance& instance, const Solution& solution,
                        const CostBreakdown& cost) {
  const auto aligned = align_assignments(instance, solution);
  const auto check = validator::validate(instance, solution);
  std::ostringstream s;
  s << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
    << "<title>Hangar plan " << escape(instance.label) << "</title>\n"
    << "<style>\nbody{font-family:sans-serif;margin:2em;}\n"
       "table{border-collapse:collapse;margin-bottom:1.5em;}\n"
       "td,th{border:1px solid #999;padding:2px 8px;text-align:right;}\n"
       "th{background:#eee;}\n.frames svg{width:320px;height:auto;margin:4px;"
       "border:1px solid #ddd;}\n</style>\n</head>\n<body>\n";
  s << "<h1>Hangar plan " << escape(instance.label) << "</h1>\n";
  s << "<p>Provenance: " << to_string(solution.provenance) << ". Validator: "
    << (check.feasible ? "feasible"
                       : "infeasible (" + std::to_string(check.violations.size()) +
                             " violations)")
    << ".</p>\n";

  s << "<h2>Cost summary</h2>\n<table id=\"cost\">\n<tr><th>Term</th><th>Value</th></tr>\n";
  s << "<tr><td>Rejection</td><td>" << f4(cost.rejection) << "</td></tr>\n";
  s << "<tr><td>Arrival delay</td><td>" << f4(cost.arrival_delay) << "</td></tr>\n";
  s << "<tr><td>Departure delay</td><td>" << f4(cost.departure_delay) << "</td></tr>\n";
  s << "<tr><td>Positioning</td><td>" << f4(cost.positioning) << "</td></tr>\n";
  s << "<tr><th>Total</th><th>" << f4(cost.total) << "</th></tr>\n</table>\n";

  s << "<h2>Accepted aircraft</h2>\n<table id=\"accepted\">\n<tr><th>Id</th><th>Kind</th>"
       "<th>X (m)</th><th>Y (m)</th><th>W (m)</th><th>L (m)</th><th>Roll-in (h)</th>"
       "<th>Roll-out (h)</th><th>Arrival delay (h)</th><th>Departure delay (h)</th></tr>\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& spec = instance.at(i);
    const auto& a = *aligned[i];
    if (!a.accept) continue;
    s << "<tr><td>" << a.aircraft_id << "</td><td>" << to_string(spec.kind) << "</td><td>"
      << f2(a.x) << "</td><td>" << f2(a.y) << "</td><td>" << f2(spec.width) << "</td><td>"
      << f2(spec.length) << "</td><td>" << f2(a.roll_in) << "</td><td>" << f2(a.roll_out)
      << "</td><td>" << f2(spec.is_future() ? std::max(0.0, a.roll_in - spec.eta) : 0.0)
      << "</td><td>" << f2(std::max(0.0, a.roll_out - spec.etd)) << "</td></tr>\n";
  }
  s << "</table>\n";

  s << "<h2>Rejected aircraft</h2>\n<table id=\"rejected\">\n"
       "<tr><th>Id</th><th>Rejection penalty</th></tr>\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& spec = instance.at(i);
    if (aligned[i]->accept) continue;
    s << "<tr><td>" << spec.id << "</td><td>" << f2(spec.rejection_penalty())
      << "</td></tr>\n";
  }
  s << "</table>\n";

  s << "<h2>Timeline</h2>\n<div class=\"gantt\">\n" << gantt_svg(instance, aligned)
    << "</div>\n";

  s << "<h2>Frames</h2>\n";
  if (check.feasible) {
    s << "<div class=\"frames\">\n";
    for (const auto& frame : build_frames(instance, solution)) {
      s << frame_svg(instance, frame);
    }
    s << "</div>\n";
  } else {
    s << "<pre>" << escape(validator::explain(check)) << "</pre>\n";
  }
  s << "</body>\n</html>\n";
  return s.str();
}

void render_report(const Instance& instance, const Solution& solution,
                   const CostBreakdown& cost, const std::filesystem::path& out_file) {
  if (out_file.has_parent_path()) std::filesystem::create_directories(out_file.parent_path());
  io::write_file(out_file, report_html(instance, solution, cost));
}

}  // namespace hangar::report
