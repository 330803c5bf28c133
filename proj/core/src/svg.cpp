#include "svrpll/svg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace svrpll {
namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// World to SVG pixels with y pointing up.
struct Frame {
  Box box;
  double scale = 1.0;
  double margin = 30.0;

  double px(double x) const { return margin + (x - box.x0) * scale; }
  double py(double y) const { return margin + (box.y1 - y) * scale; }
};

void polyline(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
              const char* style) {
  os << "<polyline fill=\"none\" " << style << " points=\"";
  for (const auto& [x, y] : pts) os << x << ',' << y << ' ';
  os << "\"/>\n";
}

}  // namespace

Ellipse sigma_ellipse(const Eigen::Matrix2d& cov, double n_sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(0.5 * (cov + cov.transpose()));
  const Eigen::Vector2d vals = eig.eigenvalues().cwiseMax(0.0);
  const Eigen::Vector2d major = eig.eigenvectors().col(1);
  return {n_sigma * std::sqrt(vals[1]), n_sigma * std::sqrt(vals[0]),
          std::atan2(major[1], major[0])};
}

std::string trajectory_svg(const Trace& trace, int ellipse_every) {
  Frame f;
  for (const Point2& p : trace.waypoints) f.box.add(p.x, p.y);
  for (const Landmark& l : trace.landmarks) f.box.add(l.pos.x, l.pos.y);
  for (const TraceStep& s : trace.steps) {
    f.box.add(s.truth.x, s.truth.y);
    f.box.add(s.estimate.x, s.estimate.y);
  }
  if (!std::isfinite(f.box.x0)) f.box.add(0.0, 0.0);
  f.box.add(f.box.x0 + 1.0, f.box.y0 + 1.0);
  const double size = 700.0;
  f.scale = size / std::max(f.box.x1 - f.box.x0, f.box.y1 - f.box.y0);
  const double width = 2 * f.margin + (f.box.x1 - f.box.x0) * f.scale;
  const double height = 2 * f.margin + (f.box.y1 - f.box.y0) * f.scale;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<std::pair<double, double>> route;
  for (const Point2& p : trace.waypoints) route.emplace_back(f.px(p.x), f.py(p.y));
  polyline(os, route, "stroke=\"#999\" stroke-dasharray=\"4,3\"");

  std::vector<std::pair<double, double>> truth;
  std::vector<std::pair<double, double>> est;
  for (const TraceStep& s : trace.steps) {
    truth.emplace_back(f.px(s.truth.x), f.py(s.truth.y));
    est.emplace_back(f.px(s.estimate.x), f.py(s.estimate.y));
  }
  polyline(os, truth, "stroke=\"#1f77b4\" stroke-width=\"1.5\"");
  polyline(os, est, "stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"3,2\"");

  if (ellipse_every > 0) {
    for (size_t k = 0; k < trace.steps.size(); k += static_cast<size_t>(ellipse_every)) {
      const TraceStep& s = trace.steps[k];
      const Ellipse e = sigma_ellipse(s.position_cov);
      os << "<ellipse fill=\"none\" stroke=\"#2ca02c\" cx=\"" << f.px(s.estimate.x)
         << "\" cy=\"" << f.py(s.estimate.y) << "\" rx=\""
         << std::max(0.5, e.rx * f.scale) << "\" ry=\""
         << std::max(0.5, e.ry * f.scale) << "\" transform=\"rotate("
         << -e.angle * 180.0 / kPi << ' ' << f.px(s.estimate.x) << ' '
         << f.py(s.estimate.y) << ")\"/>\n";
    }
  }

  for (size_t i = 0; i < trace.waypoints.size(); ++i) {
    const Point2& p = trace.waypoints[i];
    os << "<circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y)
       << "\" r=\"4\" fill=\"black\"/>\n";
    if (i + 1 < trace.waypoints.size()) {
      os << "<text x=\"" << f.px(p.x) + 5 << "\" y=\"" << f.py(p.y) - 5
         << "\">WP-" << i + 1 << "</text>\n";
    }
  }
  for (const Landmark& l : trace.landmarks) {
    const double x = f.px(l.pos.x);
    const double y = f.py(l.pos.y);
    os << "<polygon fill=\"#ff7f0e\" points=\"" << x << ',' << y - 7 << ' '
       << x - 6 << ',' << y + 5 << ' ' << x + 6 << ',' << y + 5 << "\"/>\n";
    os << "<text x=\"" << x + 7 << "\" y=\"" << y + 4 << "\">LM " << l.site
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string error_svg(const Trace& trace, const ErrorReport& report) {
  const double panel_w = 760.0;
  const double panel_h = 180.0;
  const double left = 60.0;
  const double gap = 30.0;
  const char* names[3] = {"x error", "y error", "psi error"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << left + panel_w + 20 << "\" height=\"" << 3 * (panel_h + gap) + gap
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const size_t n = trace.steps.size();
  const double t_end = n > 0 ? std::max(trace.steps.back().t, 1e-9) : 1.0;
  for (int a = 0; a < 3; ++a) {
    const double top = gap + a * (panel_h + gap);
    double span = 1e-9;
    for (size_t k = 0; k < n; ++k) {
      span = std::max({span, std::abs(report.error[a][k]),
                       report.three_sigma[a][k]});
    }
    const auto px = [&](double t) { return left + t / t_end * panel_w; };
    const auto py = [&](double v) { return top + panel_h / 2 - v / span * panel_h / 2; };
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << panel_w
       << "\" height=\"" << panel_h << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    os << "<text x=\"" << left << "\" y=\"" << top - 5 << "\">" << names[a]
       << " (containment " << report.containment[a] << ")</text>\n";
    os << "<text x=\"5\" y=\"" << py(span) + 10 << "\">" << span << "</text>\n";
    std::vector<std::pair<double, double>> err;
    std::vector<std::pair<double, double>> hi;
    std::vector<std::pair<double, double>> lo;
    for (size_t k = 0; k < n; ++k) {
      const double t = trace.steps[k].t;
      err.emplace_back(px(t), py(report.error[a][k]));
      hi.emplace_back(px(t), py(report.three_sigma[a][k]));
      lo.emplace_back(px(t), py(-report.three_sigma[a][k]));
    }
    polyline(os, hi, "stroke=\"#d62728\"");
    polyline(os, lo, "stroke=\"#d62728\"");
    polyline(os, err, "stroke=\"#1f77b4\"");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace svrpll
