#pragma once

#include <string>
#include <vector>

#include "dragon/dragon.h"

namespace dragonfold {

// Minimal SVG 1.1 writer. Coordinates are in math orientation; the document
// flips y with a group transform so the drawing comes out upright.
class SvgDocument {
 public:
  SvgDocument(double min_x, double min_y, double max_x, double max_y, double pixel_width = 1000);

  void polyline(const std::vector<dragon_point>& pts, const std::string& cls,
                const std::string& stroke, double stroke_px);
  void closed_path(const std::vector<dragon_point>& pts, const std::string& cls,
                   const std::string& stroke, const std::string& fill, double stroke_px);
  void marker(dragon_point at, const std::string& cls, const std::string& fill, double radius_px);
  void comment(const std::string& text);

  std::string str() const;

 private:
  double min_x_, min_y_, max_x_, max_y_;
  double pixel_width_;
  double unit_per_px_;
  std::vector<std::string> body_;
};

std::string escape_xml(const std::string& s);

}  // namespace dragonfold
