#include "svg.hpp"

#include <algorithm>
#include <cstdio>

namespace dragonfold {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string points_attr(const std::vector<dragon_point>& pts) {
  std::string s;
  s.reserve(pts.size() * 24);
  for (const dragon_point& p : pts) {
    if (!s.empty()) s += ' ';
    s += num(p.x);
    s += ',';
    s += num(p.y);
  }
  return s;
}

}  // namespace

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
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

SvgDocument::SvgDocument(double min_x, double min_y, double max_x, double max_y,
                         double pixel_width)
    : pixel_width_(pixel_width) {
  const double pad = 0.03 * std::max(max_x - min_x, max_y - min_y);
  min_x_ = min_x - pad;
  min_y_ = min_y - pad;
  max_x_ = max_x + pad;
  max_y_ = max_y + pad;
  unit_per_px_ = (max_x_ - min_x_) / pixel_width_;
}

void SvgDocument::polyline(const std::vector<dragon_point>& pts, const std::string& cls,
                           const std::string& stroke, double stroke_px) {
  body_.push_back("<polyline class=\"" + escape_xml(cls) + "\" fill=\"none\" stroke=\"" + stroke +
                  "\" stroke-width=\"" + num(stroke_px * unit_per_px_) +
                  "\" stroke-linejoin=\"round\" points=\"" + points_attr(pts) + "\"/>");
}

void SvgDocument::closed_path(const std::vector<dragon_point>& pts, const std::string& cls,
                              const std::string& stroke, const std::string& fill,
                              double stroke_px) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += num(pts[i].x) + ',' + num(pts[i].y);
  }
  d += " Z";
  body_.push_back("<path class=\"" + escape_xml(cls) + "\" fill=\"" + fill + "\" stroke=\"" +
                  stroke + "\" stroke-width=\"" + num(stroke_px * unit_per_px_) + "\" d=\"" + d +
                  "\"/>");
}

void SvgDocument::marker(dragon_point at, const std::string& cls, const std::string& fill,
                         double radius_px) {
  body_.push_back("<circle class=\"" + escape_xml(cls) + "\" cx=\"" + num(at.x) + "\" cy=\"" +
                  num(at.y) + "\" r=\"" + num(radius_px * unit_per_px_) + "\" fill=\"" + fill +
                  "\"/>");
}

void SvgDocument::comment(const std::string& text) {
  std::string safe = text;
  for (std::size_t p; (p = safe.find("--")) != std::string::npos;) safe.replace(p, 2, "- ");
  body_.push_back("<!-- " + safe + " -->");
}

std::string SvgDocument::str() const {
  const double w = max_x_ - min_x_;
  const double h = max_y_ - min_y_;
  const double pixel_height = pixel_width_ * h / w;
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(pixel_width_) +
       "\" height=\"" + num(pixel_height) + "\" viewBox=\"" + num(min_x_) + ' ' + num(-max_y_) +
       ' ' + num(w) + ' ' + num(h) + "\">\n";
  s += "<g id=\"math\" transform=\"scale(1,-1)\">\n";
  for (const std::string& line : body_) {
    s += line;
    s += '\n';
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace dragonfold
