#include "patrolsim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "patrolsim/trace.hpp"

namespace patrolsim {

namespace {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> pts;  // (t, value); gaps split polylines upstream
};

constexpr double kW = 640, kH = 400;
constexpr double kL = 62, kR = 18, kT = 46, kB = 48;

double nice_step(double span) {
    if (span <= 0.0) return 1.0;
    double raw = span / 5.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (raw <= m * mag + 1e-12) return m * mag;
    return 10.0 * mag;
}

std::string svg_chart(const std::string& title, const std::vector<Series>& series) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    size_t npts = 0;
    for (const Series& s : series)
        for (auto [x, y] : s.pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
            ++npts;
        }
    if (npts == 0) throw InputError("plot: no data rows");
    if (ymin > 0.0) ymin = 0.0;  // distances read better anchored at zero
    if (xmax - xmin < 1e-9) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-9) ymax = ymin + 1.0;
    ymax += (ymax - ymin) * 0.06;

    const double sx = (kW - kL - kR) / (xmax - xmin);
    const double sy = (kH - kT - kB) / (ymax - ymin);
    auto X = [&](double x) { return kL + (x - xmin) * sx; };
    auto Y = [&](double y) { return kH - kB - (y - ymin) * sy; };
    auto num = [](double v) { return format_g6(v); };

    std::ostringstream ss;
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << " " << kH
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    ss << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    ss << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
       << title << "</text>\n";

    const double xstep = nice_step(xmax - xmin);
    const double ystep = nice_step(ymax - ymin);
    for (double gx = std::ceil(xmin / xstep) * xstep; gx <= xmax + 1e-9; gx += xstep) {
        ss << "<line x1=\"" << num(X(gx)) << "\" y1=\"" << kT << "\" x2=\"" << num(X(gx))
           << "\" y2=\"" << kH - kB << "\" stroke=\"#dddddd\"/>\n";
        ss << "<text x=\"" << num(X(gx)) << "\" y=\"" << kH - kB + 16
           << "\" text-anchor=\"middle\">" << num(gx) << "</text>\n";
    }
    for (double gy = std::ceil(ymin / ystep) * ystep; gy <= ymax + 1e-9; gy += ystep) {
        ss << "<line x1=\"" << kL << "\" y1=\"" << num(Y(gy)) << "\" x2=\"" << kW - kR
           << "\" y2=\"" << num(Y(gy)) << "\" stroke=\"#dddddd\"/>\n";
        ss << "<text x=\"" << kL - 6 << "\" y=\"" << num(Y(gy) + 4)
           << "\" text-anchor=\"end\">" << num(gy) << "</text>\n";
    }
    ss << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR
       << "\" height=\"" << kH - kT - kB << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    ss << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 10
       << "\" text-anchor=\"middle\">time (s)</text>\n";
    ss << "<text x=\"16\" y=\"" << (kT + kH - kB) / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (kT + kH - kB) / 2
       << ")\">meters</text>\n";

    double lx = kL + 8;
    for (const Series& s : series) {
        if (s.pts.size() > 1) {
            ss << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" "
               << "points=\"";
            for (auto [x, y] : s.pts) ss << num(X(x)) << "," << num(Y(y)) << " ";
            ss << "\"/>\n";
        }
        for (auto [x, y] : s.pts)
            ss << "<circle cx=\"" << num(X(x)) << "\" cy=\"" << num(Y(y))
               << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
        ss << "<line x1=\"" << num(lx) << "\" y1=\"32\" x2=\"" << num(lx + 18)
           << "\" y2=\"32\" stroke=\"" << s.color << "\" stroke-width=\"3\"/>\n";
        ss << "<text x=\"" << num(lx + 22) << "\" y=\"36\">" << s.label << "</text>\n";
        lx += 30 + 7.2 * s.label.size();
    }
    ss << "</svg>\n";
    return ss.str();
}

}  // namespace

std::string emit_plot_path(const std::vector<PathMetricsRow>& rows) {
    if (rows.empty()) throw InputError("plot: no path metrics rows");
    Series total{"total", "#1f77b4", {}};
    Series suggested{"suggested", "#d62728", {}};
    Series actual{"actual", "#2ca02c", {}};
    for (const PathMetricsRow& r : rows) {
        total.pts.push_back({r.time_s, r.total});
        suggested.pts.push_back({r.time_s, r.suggested});
        if (r.actual) actual.pts.push_back({r.time_s, *r.actual});
    }
    std::vector<Series> series{total, suggested};
    if (!actual.pts.empty()) series.push_back(actual);
    return svg_chart("Obstacle distances and suggested position", series);
}

std::string emit_plot_follow(const FollowMetrics& metrics) {
    if (metrics.rows.empty()) throw InputError("plot: no follow metrics rows");
    static const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#d62728"};
    std::vector<Series> series;
    series.push_back({"intruder displacement", "#ff7f0e", {}});
    for (size_t i = 0; i < metrics.follower_ids.size(); ++i)
        series.push_back({"robot " + std::to_string(metrics.follower_ids[i]),
                          kPalette[i % std::size(kPalette)], {}});
    for (const FollowMetricsRow& r : metrics.rows) {
        series[0].pts.push_back({r.time_s, r.displacement});
        for (size_t i = 0; i < r.distances.size() && i + 1 < series.size(); ++i)
            series[i + 1].pts.push_back({r.time_s, r.distances[i]});
    }
    return svg_chart("Intruder displacement and follower distances", series);
}

}  // namespace patrolsim
