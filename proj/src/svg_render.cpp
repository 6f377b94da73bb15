#include "rrts/svg_render.hpp"

#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

namespace rrts {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

const char* const kTreeColors[] = {"#2060c0", "#20a050", "#b06020", "#803090"};

struct Mapper {
  double x0, y0, sx, sy, height;

  double x(double wx) const { return kMargin + (wx - x0) * sx; }
  // world y grows upward, svg y downward
  double y(double wy) const { return height - kMargin - (wy - y0) * sy; }
};

void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  out += buf;
}

}  // namespace

std::string render_2d(const Environment& env,
                      std::span<const std::vector<Tree::SnapshotRow>> trees,
                      const PathSolution* sigma_f, std::uint64_t iteration,
                      std::optional<double> cost) {
  if (env.dim != 2) throw std::invalid_argument("render_2d: environment must be 2-D");

  const double wx = env.bounds.hi[0] - env.bounds.lo[0];
  const double wy = env.bounds.hi[1] - env.bounds.lo[1];
  const double scale = (kCanvas - 2.0 * kMargin) / (wx > 0.0 ? wx : 1.0);
  const double height = 2.0 * kMargin + wy * scale + 24.0;  // room for the caption
  const Mapper m{env.bounds.lo[0], env.bounds.lo[1], scale, scale, height};

  std::string svg;
  appendf(svg,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
          "viewBox=\"0 0 %.0f %.0f\">\n",
          kCanvas, height, kCanvas, height);
  appendf(svg, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
               "fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
          m.x(env.bounds.lo[0]), m.y(env.bounds.hi[1]), wx * scale, wy * scale);

  for (const Obstacle& obstacle : env.obstacles) {
    if (const Box* box = std::get_if<Box>(&obstacle)) {
      appendf(svg, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                   "fill=\"#707070\"/>\n",
              m.x(box->lo[0]), m.y(box->hi[1]), (box->hi[0] - box->lo[0]) * scale,
              (box->hi[1] - box->lo[1]) * scale);
    } else {
      const Ball& ball = std::get<Ball>(obstacle);
      appendf(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#707070\"/>\n",
              m.x(ball.center[0]), m.y(ball.center[1]), ball.radius * scale);
    }
  }

  std::size_t color = 0;
  for (const auto& rows : trees) {
    appendf(svg, "<g stroke=\"%s\" stroke-width=\"0.6\" fill=\"none\">\n",
            kTreeColors[color % 4]);
    for (const Tree::SnapshotRow& row : rows) {
      if (row.id == row.parent) continue;  // root
      const Config& child = row.coords;
      const Config& parent = rows[row.parent].coords;
      appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
              m.x(parent[0]), m.y(parent[1]), m.x(child[0]), m.y(child[1]));
    }
    appendf(svg, "</g>\n");
    ++color;
  }

  appendf(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#d02020\"/>\n",
          m.x(env.start[0]), m.y(env.start[1]));
  appendf(svg, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" "
               "stroke=\"#d02020\" stroke-width=\"1.5\"/>\n",
          m.x(env.goal.center[0]), m.y(env.goal.center[1]), env.goal.radius * scale);

  if (sigma_f && sigma_f->states.size() > 1) {
    svg += "<polyline fill=\"none\" stroke=\"#e01010\" stroke-width=\"2.5\" points=\"";
    for (std::size_t i = 0; i < sigma_f->states.size(); ++i) {
      appendf(svg, i == 0 ? "%.2f,%.2f" : " %.2f,%.2f", m.x(sigma_f->states[i][0]),
              m.y(sigma_f->states[i][1]));
    }
    svg += "\"/>\n";
  }

  appendf(svg, "<text x=\"%.2f\" y=\"%.2f\" font-family=\"monospace\" font-size=\"14\">",
          kMargin, height - 6.0);
  appendf(svg, "iteration %" PRIu64 ", cost ", iteration);
  if (cost) {
    appendf(svg, "%.5f", *cost);
  } else {
    svg += "-";
  }
  svg += "</text>\n</svg>\n";
  return svg;
}

}  // namespace rrts
