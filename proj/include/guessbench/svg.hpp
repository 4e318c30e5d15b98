#pragma once

#include <string>
#include <utility>
#include <vector>

namespace guessbench::svg {

using Points = std::vector<std::pair<double, double>>;

// Minimal deterministic SVG writer; coordinates are printed with two decimals.
class Document {
 public:
  Document(double width, double height);

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& stroke = "none");
  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width = 1.0, const std::string& dash = "");
  void polyline(const Points& pts, const std::string& stroke, double width = 1.5,
                const std::string& dash = "");
  void polygon(const Points& pts, const std::string& fill, double opacity);
  void text(double x, double y, const std::string& s, double size = 12,
            const std::string& anchor = "start", const std::string& weight = "normal");

  std::string str() const;

 private:
  double width_, height_;
  std::string body_;
};

std::string escape(const std::string& s);

// Sequential white-to-red and diverging blue-white-red colour scales.
std::string sequential_color(double v, double lo, double hi);
std::string diverging_color(double v, double abs_max);

// Fixed categorical palette.
const std::string& palette(std::size_t i);

}  // namespace guessbench::svg
