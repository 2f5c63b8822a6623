#include "bmw/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bmw {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '\'': out += "&apos;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void open_svg(std::ostringstream& out, double w, double h) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";
}

class ChartPainter {
 public:
  ChartPainter(const ChartGraph& g, const RenderSpec& s) : g_(g), s_(s) {}

  std::string paint() {
    const double w = s_.width, h = s_.height;
    open_svg(out_, w, h);
    out_ << "<rect class=\"frame\" x=\"" << num(s_.margin) << "\" y=\"" << num(s_.margin) << "\" width=\""
         << num(w - 2 * s_.margin) << "\" height=\"" << num(h - 2 * s_.margin)
         << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    for (const auto& e : g_.edges) edge(e);
    for (const auto& v : g_.vertices) vertex(v);
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double X(double x) const { return s_.margin + x * (s_.width - 2 * s_.margin); }
  double Y(double y) const { return s_.margin + (1 - y) * (s_.height - 2 * s_.margin); }

  std::vector<Point> polyline(const ChartEdge& e) const {
    if (!e.points.empty()) return e.points;
    std::vector<Point> out;
    for (const auto* end : {&e.from, &e.to}) {
      if (end->kind == EndKind::Vertex) {
        for (const auto& v : g_.vertices)
          if (v.id == end->id && v.pos) out.push_back(*v.pos);
      } else {
        std::size_t n = 0;
        for (const auto& f : g_.edges) n += (f.from.kind == end->kind) + (f.to.kind == end->kind);
        out.push_back({static_cast<double>(end->id + 1) / static_cast<double>(n + 1),
                       end->kind == EndKind::Bottom ? 0.0 : 1.0});
      }
    }
    return out;
  }

  void edge(const ChartEdge& e) {
    const auto pts = polyline(e);
    if (pts.size() < 2) return;
    const std::string& color = e.label == 'g' ? s_.g_color : s_.e_color;
    out_ << "<polyline class=\"edge " << e.label << "\" data-label=\"" << e.label << e.index
         << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(s_.stroke) << "\"";
    if (e.label == 'e') out_ << " stroke-dasharray=\"4 2\"";
    out_ << " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) out_ << (k ? " " : "") << num(X(pts[k].x)) << ',' << num(Y(pts[k].y));
    out_ << "\"/>\n";

    // Midpoint by arc length, used for the arrow and the label.
    double total = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      total += std::hypot(X(pts[k + 1].x) - X(pts[k].x), Y(pts[k + 1].y) - Y(pts[k].y));
    double walked = 0, mx = X(pts[0].x), my = Y(pts[0].y), dx = 0, dy = -1;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const double ax = X(pts[k].x), ay = Y(pts[k].y), bx = X(pts[k + 1].x), by = Y(pts[k + 1].y);
      const double len = std::hypot(bx - ax, by - ay);
      if (len > 0 && walked + len >= total / 2) {
        const double t = (total / 2 - walked) / len;
        mx = ax + t * (bx - ax), my = ay + t * (by - ay);
        dx = (bx - ax) / len, dy = (by - ay) / len;
        break;
      }
      walked += len;
    }
    if (e.label == 'g' && e.orientation != EdgeOrientation::None) {
      if (e.orientation == EdgeOrientation::Backward) dx = -dx, dy = -dy;
      const double a = 5, b = 3;
      out_ << "<polygon class=\"arrow\" fill=\"" << color << "\" points=\"" << num(mx + a * dx) << ','
           << num(my + a * dy) << ' ' << num(mx - a * dx - b * dy) << ',' << num(my - a * dy + b * dx) << ' '
           << num(mx - a * dx + b * dy) << ',' << num(my - a * dy - b * dx) << "\"/>\n";
    }
    if (s_.labels)
      out_ << "<text class=\"label\" x=\"" << num(mx + 6) << "\" y=\"" << num(my - 4) << "\" font-size=\""
           << num(s_.font_size) << "\" fill=\"" << color << "\">" << e.label << "<tspan baseline-shift=\"sub\">"
           << e.index << "</tspan></text>\n";
  }

  void vertex(const ChartVertex& v) {
    if (!v.pos) return;
    const double x = X(v.pos->x), y = Y(v.pos->y), r = 4;
    const std::string common = "data-type=\"" + escape(v.type) + "\" data-degree=\"" +
                               std::to_string(vertex_degree(g_, v.id)) + "\"";
    const auto& t = v.type;
    if (t == "a") {
      out_ << "<circle class=\"vertex black\" " << common << " cx=\"" << num(x) << "\" cy=\"" << num(y)
           << "\" r=\"" << num(r) << "\" fill=\"#000000\"/>\n";
    } else if (t == "c") {
      out_ << "<circle class=\"vertex white\" " << common << " cx=\"" << num(x) << "\" cy=\"" << num(y)
           << "\" r=\"" << num(r) << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    } else if (t == "b" || t == "f") {
      out_ << "<circle class=\"vertex crossing\" " << common << " cx=\"" << num(x) << "\" cy=\"" << num(y)
           << "\" r=\"1\" fill=\"#000000\"/>\n";
    } else if (t == "d" || t == "e" || t == "i" || t == "i'") {
      out_ << "<g class=\"vertex xmark\" " << common << " stroke=\"#000000\" stroke-width=\"1.5\">"
           << "<line x1=\"" << num(x - r) << "\" y1=\"" << num(y - r) << "\" x2=\"" << num(x + r) << "\" y2=\""
           << num(y + r) << "\"/><line x1=\"" << num(x - r) << "\" y1=\"" << num(y + r) << "\" x2=\"" << num(x + r)
           << "\" y2=\"" << num(y - r) << "\"/></g>\n";
    } else {
      out_ << "<rect class=\"vertex square\" " << common << " x=\"" << num(x - r) << "\" y=\"" << num(y - r)
           << "\" width=\"" << num(2 * r) << "\" height=\"" << num(2 * r)
           << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    }
  }

  const ChartGraph& g_;
  const RenderSpec& s_;
  std::ostringstream out_;
};

class StripPainter {
 public:
  StripPainter(const ChartMovie& m, const RenderSpec& s) : m_(m), s_(s) {}

  std::string paint() {
    const auto slices = movie_slices(m_);
    const double pw = s_.width, ph = s_.height;
    const double total_w = pw * static_cast<double>(slices.size());
    open_svg(out_, total_w, ph + 2 * s_.font_size);
    for (std::size_t k = 0; k < slices.size(); ++k) {
      out_ << "<g class=\"panel\" data-level=\"" << k << "\" data-word=\"" << escape(word_to_text(slices[k]))
           << "\">\n";
      panel(slices[k], pw * static_cast<double>(k), pw, ph);
      out_ << "<text class=\"caption\" x=\"" << num(pw * (static_cast<double>(k) + 0.5)) << "\" y=\""
           << num(ph + 1.5 * s_.font_size) << "\" font-size=\"" << num(s_.font_size)
           << "\" text-anchor=\"middle\">" << escape(word_to_text(slices[k])) << "</text>\n";
      if (k < m_.events.size())
        out_ << "<text class=\"event\" x=\"" << num(pw * static_cast<double>(k + 1)) << "\" y=\""
             << num(s_.font_size) << "\" font-size=\"" << num(s_.font_size * 0.8)
             << "\" text-anchor=\"middle\">" << escape(to_string(m_.events[k].kind)) << "</text>\n";
      out_ << "</g>\n";
    }
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  // Strand p (1-based) of the panel; word rows go bottom to top.
  void panel(const Word& w, double x0, double pw, double ph) {
    const int n = m_.degree;
    const double top = s_.margin, bottom = ph - s_.margin;
    const double step = (pw - 2 * s_.margin) / std::max(1, n - 1);
    auto sx = [&](int p) { return x0 + s_.margin + step * (p - 1); };
    const std::size_t rows = std::max<std::size_t>(1, w.size());
    const double rh = (bottom - top) / static_cast<double>(rows);
    const std::string stroke =
        "stroke=\"" + s_.g_color + "\" stroke-width=\"" + num(s_.stroke) + "\" fill=\"none\"";
    for (std::size_t r = 0; r < rows; ++r) {
      const double y0 = bottom - rh * static_cast<double>(r), y1 = y0 - rh;
      const Letter* l = r < w.size() ? &w[r] : nullptr;
      for (int p = 1; p <= n; ++p) {
        if (l && (p == l->index || p == l->index + 1)) continue;
        out_ << "<line class=\"strand\" x1=\"" << num(sx(p)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(sx(p))
             << "\" y2=\"" << num(y1) << "\" " << stroke << "/>\n";
      }
      if (!l) continue;
      const double a = sx(l->index), b = sx(l->index + 1), ym = (y0 + y1) / 2;
      if (l->is_hook()) {
        out_ << "<path class=\"hook\" d=\"M " << num(a) << ' ' << num(y0) << " Q " << num((a + b) / 2) << ' '
             << num(ym) << ' ' << num(b) << ' ' << num(y0) << " M " << num(a) << ' ' << num(y1) << " Q "
             << num((a + b) / 2) << ' ' << num(ym) << ' ' << num(b) << ' ' << num(y1) << "\" " << stroke << "/>\n";
      } else {
        // Positive: the strand from the lower left passes over.
        const bool over_from_left = l->sign() > 0;
        const double ox0 = over_from_left ? a : b, ox1 = over_from_left ? b : a;
        const double ux0 = over_from_left ? b : a, ux1 = over_from_left ? a : b;
        const double gap = 0.18;
        out_ << "<line class=\"crossing over\" x1=\"" << num(ox0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(ox1)
             << "\" y2=\"" << num(y1) << "\" " << stroke << "/>\n";
        out_ << "<path class=\"crossing under\" d=\"M " << num(ux0) << ' ' << num(y0) << " L "
             << num(ux0 + (ux1 - ux0) * (0.5 - gap)) << ' ' << num(y0 + (y1 - y0) * (0.5 - gap)) << " M "
             << num(ux0 + (ux1 - ux0) * (0.5 + gap)) << ' ' << num(y0 + (y1 - y0) * (0.5 + gap)) << " L "
             << num(ux1) << ' ' << num(y1) << "\" " << stroke << "/>\n";
      }
    }
  }

  const ChartMovie& m_;
  const RenderSpec& s_;
  std::ostringstream out_;
};

}  // namespace

std::string render_chart_svg(const ChartGraph& g, const RenderSpec& spec) {
  auto report = validate_chart_graph(g);
  if (!report.valid) throw ValidationError("cannot render invalid chart:\n" + to_string(report));
  return ChartPainter(with_layout(g), spec).paint();
}

std::string render_movie_svg(const ChartMovie& m, const RenderSpec& spec) {
  require_valid(m);
  return StripPainter(m, spec).paint();
}

std::string render_svg(const ChartMovie& m, const RenderSpec& spec) {
  if (spec.target == RenderTarget::MovieStrip) return render_movie_svg(m, spec);
  GraphOptions o;
  o.allow_e_caps = true;
  return render_chart_svg(movie_to_chart_graph(m, o), spec);
}

}  // namespace bmw
