#include "hkcones/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hkcones {

namespace {

constexpr double kWidth = 840;
constexpr double kHeight = 440;
constexpr double kCx = 320;
constexpr double kCy = 400;
constexpr double kRadius = 300;

constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                    "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
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

// Screen angle of a class: ample is straight up, the q-orthogonal direction
// clockwise of it points right.
struct Embedding {
  const HKModel* model;
  DivisorClass right;
  double up_scale;
  double right_scale;

  explicit Embedding(const HKModel& m) : model(&m) {
    const DivisorClass cov = m.lattice.degrees(m.ample);
    right = DivisorClass{-cov[1], cov[0]};
    if (cross(right, m.ample).sign() < 0) right = -right;
    up_scale = std::sqrt(m.square(m.ample).to_double());
    right_scale = std::sqrt(-m.square(right).to_double());
  }

  double angle(const DivisorClass& x) const {
    const double u = model->pairing(x, model->ample).to_double() / up_scale;
    const double r = -model->pairing(x, right).to_double() / right_scale;
    return std::atan2(u, r);
  }
};

std::string point_at(double theta, double radius) {
  return num(kCx + radius * std::cos(theta)) + " " + num(kCy - radius * std::sin(theta));
}

}  // namespace

std::string class_label(const HKModel& model, const DivisorClass& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar& c = x[i];
    if (c.is_zero()) continue;
    const std::string name = i < model.basis.size() ? model.basis[i] : "e" + std::to_string(i);
    if (!c.is_rational()) {
      out += (out.empty() ? "(" : "+(") + c.to_string() + ")" + name;
      continue;
    }
    const Rational& r = c.as_rational();
    if (!out.empty() && r.sign() > 0) out += "+";
    if (r == Rational(1)) {
      out += name;
    } else if (r == Rational(-1)) {
      out += "-" + name;
    } else {
      out += r.to_string() + name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string fan_svg(const HKModel& model, const std::vector<StabilityChamber>& chambers) {
  require_rank2(model, "fan diagram");
  const Embedding embed(model);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<text x=\"12\" y=\"20\" font-size=\"14\">" << escape(model.name) << "</text>\n";
  svg << "<g stroke=\"#999999\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kCx - kRadius - 10) << "\" y1=\"" << num(kCy) << "\" x2=\"" << num(kCx + kRadius + 10)
      << "\" y2=\"" << num(kCy) << "\"/>\n"
      << "<line x1=\"" << num(kCx) << "\" y1=\"" << num(kCy) << "\" x2=\"" << num(kCx) << "\" y2=\""
      << num(kCy - kRadius - 10) << "\"/>\n</g>\n";
  if (chambers.empty()) {
    svg << "</svg>\n";
    return svg.str();
  }

  // isotropic directions sit at 45 and 135 degrees in these coordinates
  svg << "<g stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\">\n";
  for (double theta : {M_PI / 4, 3 * M_PI / 4}) {
    svg << "<path d=\"M " << num(kCx) << " " << num(kCy) << " L " << point_at(theta, kRadius) << "\"/>\n";
  }
  svg << "</g>\n";

  std::vector<Ray> rays;
  svg << "<g stroke=\"none\" fill-opacity=\"0.85\">\n";
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    for (const auto& p : chambers[i].pieces) {
      for (const Ray* r : {&p.lo, &p.hi}) {
        if (std::find(rays.begin(), rays.end(), *r) == rays.end()) rays.push_back(*r);
      }
      const double a = embed.angle(p.lo.direction());
      const double b = embed.angle(p.hi.direction());
      if (p.lo == p.hi) {
        svg << "<path d=\"M " << num(kCx) << " " << num(kCy) << " L " << point_at(a, kRadius) << "\" stroke=\""
            << color << "\" stroke-width=\"5\"/>\n";
        continue;
      }
      svg << "<path d=\"M " << num(kCx) << " " << num(kCy) << " L " << point_at(a, kRadius) << " A " << num(kRadius)
          << " " << num(kRadius) << " 0 0 0 " << point_at(b, kRadius) << " Z\" fill=\"" << color << "\"/>\n";
      for (const auto& [included, theta] : {std::pair{p.include_lo, a}, std::pair{p.include_hi, b}}) {
        if (!included) continue;
        svg << "<path d=\"M " << num(kCx) << " " << num(kCy) << " L " << point_at(theta, kRadius) << "\" stroke=\""
            << color << "\" stroke-width=\"5\"/>\n";
      }
    }
  }
  svg << "</g>\n";

  std::sort(rays.begin(), rays.end(), [&](const Ray& x, const Ray& y) {
    return cross(x.direction(), y.direction()).sign() > 0;
  });
  svg << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
  for (const auto& r : rays) {
    svg << "<path d=\"M " << num(kCx) << " " << num(kCy) << " L " << point_at(embed.angle(r.direction()), kRadius)
        << "\"/>\n";
  }
  svg << "</g>\n<g fill=\"#000000\">\n";
  for (const auto& r : rays) {
    const double theta = embed.angle(r.direction());
    const char* anchor = theta < M_PI / 2 - 0.05 ? "start" : (theta > M_PI / 2 + 0.05 ? "end" : "middle");
    const std::string at = point_at(theta, kRadius + 8);
    svg << "<text x=\"" << at.substr(0, at.find(' ')) << "\" y=\"" << at.substr(at.find(' ') + 1)
        << "\" text-anchor=\"" << anchor << "\">" << escape(class_label(model, r.direction())) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<g>\n";
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const double y = 40 + 22 * static_cast<double>(i);
    std::string comps;
    for (const auto& c : chambers[i].components) {
      comps += (comps.empty() ? "" : ", ") + c.label + " (" + std::to_string(c.dim) + ")";
    }
    if (comps.empty()) comps = "empty";
    svg << "<rect x=\"640\" y=\"" << num(y - 11) << "\" width=\"14\" height=\"14\" fill=\""
        << kPalette[i % std::size(kPalette)] << "\" stroke=\"#333333\"/>\n";
    svg << "<text x=\"660\" y=\"" << num(y) << "\">" << escape(chambers[i].name + ": " + comps) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace hkcones
